#include "relxl/link_builder.hpp"

#include <algorithm>
#include <stdexcept>

#include "relxl/errors.hpp"
#include "relxl/poset_complex.hpp"

namespace relxl {

std::string to_string(LinkCase c) {
  switch (c) {
    case LinkCase::Part: return "part";
    case LinkCase::Single: return "single";
    case LinkCase::InterEdge: return "inter-edge";
    case LinkCase::Empty: return "empty";
  }
  return "?";
}

int LinkGraph::add_vertex(LinkVertex v) {
  auto [it, inserted] = index_.emplace(v.id, static_cast<int>(vertices_.size()));
  if (inserted) {
    vertices_.push_back(std::move(v));
    adjacency_.emplace_back();
  }
  return it->second;
}

void LinkGraph::add_edge(int u, int v, int length) {
  if (u == v) throw std::logic_error("loop at link vertex " + vertices_.at(static_cast<std::size_t>(u)).id);
  for (auto [w, len] : adjacency_.at(static_cast<std::size_t>(u))) {
    if (w != v) continue;
    if (len != length) throw std::logic_error("link edge given two lengths");
    return;
  }
  edges_.push_back({std::min(u, v), std::max(u, v), length});
  adjacency_[static_cast<std::size_t>(u)].emplace_back(v, length);
  adjacency_[static_cast<std::size_t>(v)].emplace_back(u, length);
}

std::optional<int> LinkGraph::find(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool LinkGraph::respects_sides() const {
  return std::all_of(edges_.begin(), edges_.end(), [this](const LinkEdge& e) {
    return vertices_[static_cast<std::size_t>(e.u)].side != vertices_[static_cast<std::size_t>(e.v)].side;
  });
}

namespace {

std::optional<InterEdge> as_inter_edge(const std::vector<InterEdge>& all, VertexSet t) {
  for (const InterEdge& e : all) {
    if (e.vertices() == t) return e;
  }
  return std::nullopt;
}

std::string subset_id(const DefiningGraph& g, VertexSet t) { return "A_" + g.format_set(t); }

}  // namespace

int corner_units(const Instance& instance, VertexSet t) {
  const auto all = inter_edges(instance.graph, instance.family);
  if (auto e = as_inter_edge(all, t)) return is_isolated_inter_edge(*e, all) ? 2 : 1;
  return 2;
}

int base_units(const Instance& instance, VertexSet t) {
  return kPiUnits - kRightAngleUnits - corner_units(instance, t);
}

LinkGraph build_link_empty(const Instance& instance) {
  const DefiningGraph& g = instance.graph;
  LinkGraph link(LinkCase::Empty, "1");
  const auto all = inter_edges(g, instance.family);
  const VertexSet iev = inter_edge_vertices(g, instance.family);
  for (int s : iev.members()) {
    link.add_vertex({subset_id(g, VertexSet::single(s)), LinkVertexKind::Subset, subset_id(g, VertexSet::single(s)),
                     VertexSet::single(s), 0, false});
  }
  auto upper = [&](VertexSet t) {
    // A singleton part that is also {s} is one vertex, already on side 0.
    if (auto existing = link.find(subset_id(g, t))) return *existing;
    return link.add_vertex({subset_id(g, t), LinkVertexKind::Subset, subset_id(g, t), t, 1, false});
  };
  for (VertexSet part : instance.family.parts()) {
    const int p = upper(part);
    if (link.vertices()[static_cast<std::size_t>(p)].side == 0) continue;
    for (int s : (part & iev).members()) {
      link.add_edge(*link.find(subset_id(g, VertexSet::single(s))), p, base_units(instance, part));
    }
  }
  for (const InterEdge& e : all) {
    const int t = upper(e.vertices());
    for (int s : e.vertices().members()) {
      link.add_edge(*link.find(subset_id(g, VertexSet::single(s))), t, base_units(instance, e.vertices()));
    }
  }
  return link;
}

LinkGraph build_link_single(const Instance& instance, int s, int truncation_n) {
  const DefiningGraph& g = instance.graph;
  if (s < 0 || s >= g.size() || !inter_edge_vertices(g, instance.family).contains(s)) {
    throw InputError("vertex is not on an inter-edge");
  }
  if (truncation_n < 1) throw InputError("truncation must be at least 1");
  LinkGraph link(LinkCase::Single, subset_id(g, VertexSet::single(s)));
  std::vector<int> powers;
  for (int k = -truncation_n; k <= truncation_n; ++k) {
    const std::string label = k == 0 ? "1" : g.name(s) + "^" + std::to_string(k);
    powers.push_back(link.add_vertex({"p:" + std::to_string(k), LinkVertexKind::Power, label, VertexSet::single(s), 0,
                                      std::abs(k) == truncation_n}));
  }
  std::vector<int> uppers;
  const VertexSet part = instance.family.part(instance.family.part_of(s));
  if (part.size() > 1) {
    uppers.push_back(link.add_vertex({subset_id(g, part), LinkVertexKind::Subset, subset_id(g, part), part, 1, false}));
  }
  for (const InterEdge& e : inter_edges(g, instance.family)) {
    if (!e.vertices().contains(s)) continue;
    uppers.push_back(link.add_vertex(
        {subset_id(g, e.vertices()), LinkVertexKind::Subset, subset_id(g, e.vertices()), e.vertices(), 1, false}));
  }
  for (int p : powers) {
    for (int u : uppers) link.add_edge(p, u, kRightAngleUnits);
  }
  link.set_truncation(truncation_n);
  return link;
}

std::unique_ptr<WordProblemOracle> make_part_oracle(const Instance& instance, int part) {
  const DefiningGraph& g = instance.graph;
  const auto members = instance.family.part(part).members();
  std::vector<std::string> names;
  for (int v : members) names.push_back(g.name(v));
  bool edgeless = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) edgeless = edgeless && !g.adjacent(members[i], members[j]);
  }
  if (edgeless) return std::make_unique<FreeOracle>(FreeGroup(names));
  if (members.size() == 2) {
    return std::make_unique<DihedralOracle>(DihedralGroup(*g.label(members[0], members[1]), names[0], names[1]));
  }
  return nullptr;
}

namespace {

// Bipartite coset graph of a ball: elements on side 0, cosets of each
// cyclic generator subgroup on side 1.
LinkGraph develop(LinkGraph link, const WordProblemOracle& oracle, int generators, int radius, std::size_t cap,
                  int length) {
  if (!oracle.exact()) throw InputError("link development needs an exact word problem engine");
  if (radius < 1) throw InputError("development radius must be at least 1");
  const auto& names = oracle.names();
  for (const OracleBallEntry& entry : oracle.ball(radius, cap)) {
    const std::string word = entry.word.empty() ? "1" : format_word(entry.word, names);
    const bool edge_of_ball = entry.length == radius;
    const int e = link.add_vertex({"e:" + entry.key, LinkVertexKind::Element, word, {}, 0, edge_of_ball});
    for (int gen = 0; gen < generators; ++gen) {
      const std::string id = "c" + std::to_string(gen) + ":" + oracle.coset_key(entry.word, gen);
      const int c = link.add_vertex({id, LinkVertexKind::Coset, word + " <" + names[static_cast<std::size_t>(gen)] + ">",
                                     {}, 1, false});
      if (edge_of_ball) link.vertex(c).boundary = true;
      link.add_edge(e, c, length);
    }
  }
  link.set_truncation(radius);
  return link;
}

}  // namespace

LinkGraph develop_link_part(const Instance& instance, int part, const WordProblemOracle& oracle, int radius,
                            std::size_t cap) {
  const VertexSet s = instance.family.part(part);
  if (static_cast<int>(oracle.names().size()) != s.size()) {
    throw InputError("oracle rank does not match the part");
  }
  return develop(LinkGraph(LinkCase::Part, subset_id(instance.graph, s)), oracle, s.size(), radius, cap,
                 corner_units(instance, s));
}

LinkGraph develop_link_interedge(const Instance& instance, const InterEdge& edge, int radius, std::size_t cap) {
  const DefiningGraph& g = instance.graph;
  DihedralOracle oracle(DihedralGroup(edge.edge.label, g.name(edge.edge.u), g.name(edge.edge.v)));
  return develop(LinkGraph(LinkCase::InterEdge, subset_id(g, edge.vertices())), oracle, 2, radius, cap,
                 corner_units(instance, edge.vertices()));
}

}  // namespace relxl
