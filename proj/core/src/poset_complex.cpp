#include "relxl/poset_complex.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include "relxl/coxeter.hpp"
#include "relxl/errors.hpp"

namespace relxl {

std::vector<std::string> tag_names(unsigned tags) {
  static const std::pair<unsigned, const char*> kNames[] = {
      {kTagEmpty, "empty"},
      {kTagPart, "part"},
      {kTagInterEdge, "inter-edge"},
      {kTagInterEdgeVertex, "inter-edge-vertex"},
      {kTagSpherical, "spherical"},
      {kTagPartSubset, "part-subset"},
  };
  std::vector<std::string> out;
  for (auto [bit, name] : kNames) {
    if (tags & bit) out.emplace_back(name);
  }
  return out;
}

void SubsetPoset::add(VertexSet set, unsigned tags) {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), set,
                             [](const PosetElement& e, VertexSet s) { return BySizeThenBits{}(e.set, s); });
  if (it != elements_.end() && it->set == set) {
    it->tags |= tags;
    return;
  }
  elements_.insert(it, PosetElement{set, tags});
}

void SubsetPoset::remove(VertexSet set) {
  if (auto i = index_of(set)) elements_.erase(elements_.begin() + static_cast<std::ptrdiff_t>(*i));
}

std::optional<std::size_t> SubsetPoset::index_of(VertexSet set) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), set,
                             [](const PosetElement& e, VertexSet s) { return BySizeThenBits{}(e.set, s); });
  if (it == elements_.end() || it->set != set) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

unsigned SubsetPoset::tags(VertexSet set) const {
  auto i = index_of(set);
  return i ? elements_[*i].tags : 0U;
}

std::vector<std::pair<std::size_t, std::size_t>> SubsetPoset::covering_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    for (std::size_t j = i + 1; j < elements_.size(); ++j) {
      if (!elements_[i].set.proper_subset_of(elements_[j].set)) continue;
      bool covered = true;
      for (std::size_t k = i + 1; k < j && covered; ++k) {
        covered = !(elements_[i].set.proper_subset_of(elements_[k].set) &&
                    elements_[k].set.proper_subset_of(elements_[j].set));
      }
      if (covered) out.emplace_back(i, j);
    }
  }
  return out;
}

SubsetPoset build_s_ell(const Instance& instance) {
  SubsetPoset p;
  p.add(VertexSet{}, kTagEmpty);
  for (VertexSet part : instance.family.parts()) p.add(part, kTagPart);
  for (const InterEdge& e : inter_edges(instance.graph, instance.family)) {
    p.add(e.vertices(), kTagInterEdge);
    p.add(VertexSet::single(e.edge.u), kTagInterEdgeVertex);
    p.add(VertexSet::single(e.edge.v), kTagInterEdgeVertex);
  }
  return p;
}

SubsetPoset build_s_f(const DefiningGraph& graph) {
  SubsetPoset p;
  for (VertexSet t : enumerate_spherical_subsets(graph)) p.add(t, t.empty() ? kTagEmpty | kTagSpherical : kTagSpherical);
  return p;
}

SubsetPoset build_s_bar(const Instance& instance) {
  SubsetPoset p = build_s_ell(instance);
  for (VertexSet part : instance.family.parts()) {
    // Every subset of the part, by iterating sub-masks.
    const std::uint64_t full = part.bits();
    std::uint64_t sub = full;
    while (true) {
      p.add(VertexSet(sub), sub == 0 ? kTagEmpty | kTagPartSubset : kTagPartSubset);
      if (sub == 0) break;
      sub = (sub - 1) & full;
    }
  }
  return p;
}

bool ChainLess::operator()(const Chain& a, const Chain& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), BySizeThenBits{});
}

DerivedComplex::DerivedComplex(std::vector<VertexSet> vertices, std::vector<Chain> simplices)
    : vertices_(std::move(vertices)), simplices_(std::move(simplices)) {
  std::sort(simplices_.begin(), simplices_.end(), ChainLess{});
}

bool DerivedComplex::contains(const Chain& c) const {
  return std::binary_search(simplices_.begin(), simplices_.end(), c, ChainLess{});
}

int DerivedComplex::dimension() const {
  if (simplices_.empty()) return -1;
  return static_cast<int>(simplices_.back().size()) - 1;
}

std::size_t DerivedComplex::count(int dim) const {
  return static_cast<std::size_t>(std::count_if(simplices_.begin(), simplices_.end(), [dim](const Chain& c) {
    return static_cast<int>(c.size()) == dim + 1;
  }));
}

std::vector<Chain> DerivedComplex::maximal_simplices() const {
  // A chain is maximal iff no vertex can be inserted anywhere in it.
  std::vector<Chain> out;
  for (const Chain& c : simplices_) {
    bool maximal = true;
    for (VertexSet v : vertices_) {
      if (std::find(c.begin(), c.end(), v) != c.end()) continue;
      Chain longer = c;
      auto pos = std::find_if(longer.begin(), longer.end(), [v](VertexSet t) { return v.proper_subset_of(t); });
      longer.insert(pos, v);
      if (contains(longer)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(c);
  }
  return out;
}

DerivedComplex derived_complex(const SubsetPoset& poset, std::size_t cap) {
  const auto& elems = poset.elements();
  std::vector<VertexSet> vertices;
  for (const auto& e : elems) vertices.push_back(e.set);
  std::vector<Chain> chains;
  Chain current;
  auto extend = [&](auto&& self, std::size_t from) -> void {
    chains.push_back(current);
    if (chains.size() > cap) throw ResourceLimitError("derived complex enumeration", chains.size());
    for (std::size_t j = from + 1; j < elems.size(); ++j) {
      if (current.back().proper_subset_of(elems[j].set)) {
        current.push_back(elems[j].set);
        self(self, j);
        current.pop_back();
      }
    }
  };
  for (std::size_t i = 0; i < elems.size(); ++i) {
    current = {elems[i].set};
    extend(extend, i);
  }
  return DerivedComplex(std::move(vertices), std::move(chains));
}

DimensionReport check_two_dimensional(const DerivedComplex& complex) {
  DimensionReport r;
  for (const Chain& c : complex.simplices()) {
    r.longest_chain = std::max(r.longest_chain, static_cast<int>(c.size()));
    if (c.size() >= 4 && !r.witness) r.witness = c;
  }
  r.two_dimensional = r.longest_chain <= 3;
  return r;
}

double value(EdgeLength l) {
  switch (l) {
    case EdgeLength::One: return 1.0;
    case EdgeLength::Sqrt2: return std::numbers::sqrt2;
    case EdgeLength::OnePlusSqrt2: return 1.0 + std::numbers::sqrt2;
    case EdgeLength::Sec3PiOver8: return 1.0 / std::cos(3.0 * std::numbers::pi / 8.0);
  }
  return 0.0;
}

std::string to_string(EdgeLength l) {
  switch (l) {
    case EdgeLength::One: return "1";
    case EdgeLength::Sqrt2: return "sqrt(2)";
    case EdgeLength::OnePlusSqrt2: return "1+sqrt(2)";
    case EdgeLength::Sec3PiOver8: return "sec(3pi/8)";
  }
  return "?";
}

namespace {

// Right triangle with right angle at {s}, leg [empty,{s}] = 1 and angle
// theta (pi/8 units) at the empty set.
MetricSimplex right_triangle(VertexSet s, VertexSet top, int theta, SimplexKind kind) {
  MetricSimplex m;
  m.vertices = {VertexSet{}, s, top};
  m.angles = {theta, 4, kPiUnits - 4 - theta};
  m.kind = kind;
  if (theta == 2) {
    m.lengths = {EdgeLength::One, EdgeLength::One, EdgeLength::Sqrt2};
  } else {
    m.lengths = {EdgeLength::One, EdgeLength::OnePlusSqrt2, EdgeLength::Sec3PiOver8};
  }
  return m;
}

}  // namespace

std::vector<MetricSimplex> assign_metric(const DerivedComplex& complex, const Instance& instance) {
  const auto edges = inter_edges(instance.graph, instance.family);
  std::vector<MetricSimplex> out;
  for (const Chain& c : complex.simplices()) {
    if (c.size() != 3) continue;
    const VertexSet s = c[1];
    const VertexSet top = c[2];
    if (!c[0].empty() || s.size() != 1) {
      throw std::invalid_argument("2-simplex " + instance.graph.format_set(c[0]) + "<" +
                                  instance.graph.format_set(s) + "<" + instance.graph.format_set(top) +
                                  " is not of the form [empty < {s} < T]");
    }
    auto edge = std::find_if(edges.begin(), edges.end(), [top](const InterEdge& e) { return e.vertices() == top; });
    if (edge != edges.end()) {
      // Inter-edge tag takes precedence for edge-shaped T.
      if (is_isolated_inter_edge(*edge, edges)) {
        out.push_back(right_triangle(s, top, 2, SimplexKind::DisjointInterEdge));
      } else {
        out.push_back(right_triangle(s, top, 3, SimplexKind::SharedInterEdge));
      }
      continue;
    }
    const auto& parts = instance.family.parts();
    if (std::find(parts.begin(), parts.end(), top) != parts.end()) {
      out.push_back(right_triangle(s, top, 2, SimplexKind::Part));
      continue;
    }
    throw std::invalid_argument("2-simplex top " + instance.graph.format_set(top) +
                                " is neither a part nor an inter-edge");
  }
  return out;
}

GluingReport check_gluing(const std::vector<MetricSimplex>& simplices) {
  std::map<std::pair<std::uint64_t, std::uint64_t>, SharedEdge> by_edge;
  static constexpr std::array<std::pair<int, int>, 3> kSides = {{{0, 1}, {1, 2}, {0, 2}}};
  for (const MetricSimplex& m : simplices) {
    for (std::size_t k = 0; k < kSides.size(); ++k) {
      const VertexSet a = m.vertices[static_cast<std::size_t>(kSides[k].first)];
      const VertexSet b = m.vertices[static_cast<std::size_t>(kSides[k].second)];
      auto& entry = by_edge[{a.bits(), b.bits()}];
      entry.a = a;
      entry.b = b;
      entry.lengths.push_back(m.lengths[k]);
    }
  }
  GluingReport r;
  for (auto& [key, entry] : by_edge) {
    if (entry.lengths.size() < 2) continue;
    entry.consistent = std::all_of(entry.lengths.begin(), entry.lengths.end(),
                                   [&](EdgeLength l) { return l == entry.lengths.front(); });
    r.consistent = r.consistent && entry.consistent;
    r.shared_edges.push_back(entry);
  }
  std::sort(r.shared_edges.begin(), r.shared_edges.end(), [](const SharedEdge& x, const SharedEdge& y) {
    return std::pair(x.a.bits(), x.b.bits()) < std::pair(y.a.bits(), y.b.bits());
  });
  return r;
}

std::optional<Chain> retract_maximal_chain(const Chain& chain, const Instance& instance) {
  if (chain.size() < 2 || !chain.front().empty()) return std::nullopt;
  const VertexSet top = chain.back();
  const auto edges = inter_edges(instance.graph, instance.family);
  const bool top_is_edge =
      std::any_of(edges.begin(), edges.end(), [top](const InterEdge& e) { return e.vertices() == top; });
  if (top_is_edge) {
    if (chain.size() == 3 && chain[1].size() == 1) return chain;
    return std::nullopt;
  }
  const auto& parts = instance.family.parts();
  if (std::find(parts.begin(), parts.end(), top) == parts.end()) return std::nullopt;
  if (chain[1] == top) return Chain{VertexSet{}, top};
  if (chain[1].size() != 1) return std::nullopt;
  const int s = chain[1].lowest();
  if (inter_edge_vertices(instance.graph, instance.family).contains(s)) return Chain{VertexSet{}, chain[1], top};
  return Chain{VertexSet{}, top};
}

RetractionReport retraction_map(const DerivedComplex& s_bar, const DerivedComplex& s_ell, const Instance& instance) {
  RetractionReport r;
  const auto& g = instance.graph;
  auto show = [&](const Chain& c) {
    std::string out = "[";
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? " < " : "") + g.format_set(c[i]);
    return out + "]";
  };
  std::vector<VertexSet> ell_vertices = s_ell.vertices();
  auto in_s_ell = [&](VertexSet v) {
    return std::find(ell_vertices.begin(), ell_vertices.end(), v) != ell_vertices.end();
  };

  // Kept-vertex set of every face, as seen from each maximal chain.
  std::map<Chain, Chain, ChainLess> face_image;
  for (const Chain& c : s_bar.maximal_simplices()) {
    auto image = retract_maximal_chain(c, instance);
    if (!image) {
      r.total = false;
      r.problems.push_back("no image for maximal chain " + show(c));
      continue;
    }
    r.maximal_images.emplace_back(c, *image);
    if (!s_ell.contains(*image)) {
      r.lands_in_s_ell = false;
      r.problems.push_back("image " + show(*image) + " is not a simplex of the S^l complex");
    }
    Chain kept;
    for (VertexSet v : c) {
      if (in_s_ell(v)) kept.push_back(v);
    }
    if (kept != *image) {
      r.compatible = false;
      r.problems.push_back("image of " + show(c) + " differs from its S^l vertices");
    }
    const std::size_t n = c.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      Chain face;
      Chain face_kept;
      for (std::size_t k = 0; k < n; ++k) {
        if (!((mask >> k) & 1U)) continue;
        face.push_back(c[k]);
        if (std::find(image->begin(), image->end(), c[k]) != image->end()) face_kept.push_back(c[k]);
      }
      auto [it, inserted] = face_image.emplace(face, face_kept);
      if (!inserted && it->second != face_kept) {
        r.compatible = false;
        r.problems.push_back("face " + show(face) + " retracts differently in adjacent maximal chains");
      }
    }
  }

  for (const Chain& f : s_ell.simplices()) {
    auto it = face_image.find(f);
    if (it == face_image.end() || it->second != f) {
      r.identity_on_s_ell = false;
      r.problems.push_back("S^l simplex " + show(f) + " is moved");
    }
  }
  for (const auto& [face, image] : face_image) {
    if (image.empty()) continue;
    auto it = face_image.find(image);
    if (it == face_image.end() || it->second != image) {
      r.idempotent = false;
      r.problems.push_back("retraction is not idempotent on " + show(face));
    }
  }
  return r;
}

}  // namespace relxl
