#include "relxl/acyl_checker.hpp"

#include <algorithm>

#include "relxl/coxeter.hpp"
#include "relxl/dihedral_garside.hpp"

namespace relxl {

std::string to_string(AcylStatus s) {
  switch (s) {
    case AcylStatus::ViaFreeProduct: return "acyl-hyperbolic-via-free-product";
    case AcylStatus::ViaWitness: return "acyl-hyperbolic-via-witness";
    case AcylStatus::Inapplicable: return "inapplicable";
  }
  return "?";
}

DeltaChecks check_delta(const DefiningGraph& graph, VertexSet delta) {
  DeltaChecks c;
  c.rank3 = delta.size() == 3;
  const auto v = delta.members();
  int edges = 0;
  bool big_label = false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (auto m = graph.label(v[i], v[j])) {
        ++edges;
        big_label = big_label || *m >= 3;
      }
    }
  }
  // Three vertices are connected iff they span at least two edges.
  c.connected = v.size() == 3 ? edges >= 2 : edges + 1 >= static_cast<int>(v.size());
  c.not_right_angled = big_label;
  if (!delta.empty()) {
    const CoxeterType t = classify_type(graph, delta);
    c.two_dimensional = t.kind != TypeClass::Finite;
    c.type = t.kind == TypeClass::Neither ? "neither" : t.name();
  }
  return c;
}

namespace {

std::string first_failure(const DeltaChecks& c) {
  if (!c.rank3) return "rank is not 3";
  if (!c.connected) return "triple is disconnected";
  if (!c.two_dimensional) return "triple is spherical (" + c.type + ")";
  if (!c.not_right_angled) return "triple is right-angled";
  return {};
}

}  // namespace

WitnessSearch find_witness(const Instance& instance) {
  const DefiningGraph& g = instance.graph;
  std::vector<InterEdge> candidates;
  for (const InterEdge& e : inter_edges(g, instance.family)) {
    if (e.edge.label >= 3) candidates.push_back(e);
  }
  auto names = [&](const InterEdge& e) {
    auto a = g.name(e.edge.u);
    auto b = g.name(e.edge.v);
    if (b < a) std::swap(a, b);
    return std::pair(a, b);
  };
  std::stable_sort(candidates.begin(), candidates.end(), [&](const InterEdge& x, const InterEdge& y) {
    if (x.edge.label != y.edge.label) return x.edge.label > y.edge.label;
    return names(x) < names(y);
  });
  std::vector<int> by_name(static_cast<std::size_t>(g.size()));
  for (int v = 0; v < g.size(); ++v) by_name[static_cast<std::size_t>(v)] = v;
  std::sort(by_name.begin(), by_name.end(), [&](int x, int y) { return g.name(x) < g.name(y); });

  WitnessSearch out;
  bool isolated_candidate = false;
  for (const InterEdge& e : candidates) {
    bool any_neighbour = false;
    for (int s : by_name) {
      if (s == e.edge.u || s == e.edge.v) continue;
      if (!g.adjacent(s, e.edge.u) && !g.adjacent(s, e.edge.v)) continue;
      any_neighbour = true;
      Witness w{e, s, e.vertices().with(s), {}};
      w.checks = check_delta(g, w.delta);
      if (w.checks.ok()) {
        out.witness = w;
        return out;
      }
      out.rejected.emplace_back(w, first_failure(w.checks));
    }
    isolated_candidate = isolated_candidate || !any_neighbour;
  }
  out.free_product = isolated_candidate;
  return out;
}

std::vector<GrowthRow> empirical_orbit_growth(int m, const std::vector<int>& radii, std::size_t cap) {
  std::vector<GrowthRow> rows;
  if (radii.empty()) return rows;
  const int top = *std::max_element(radii.begin(), radii.end());
  const DihedralGroup group(m);
  const auto ball = group.ball(top, cap);
  for (int r : radii) {
    GrowthRow row{r, 0, 0};
    for (const BallElement& b : ball) {
      if (b.length > r) continue;
      ++row.ball_size;
      row.max_syllables = std::max(row.max_syllables, b.geodesic_syllables);
    }
    rows.push_back(row);
  }
  return rows;
}

AcylVerdict check_hypotheses(const Instance& instance) {
  const DefiningGraph& g = instance.graph;
  AcylVerdict v;
  const auto edges = inter_edges(g, instance.family);
  if (instance.family.count() < 2) {
    v.reason = "the family has a single part";
    return v;
  }
  if (edges.empty()) {
    v.status = AcylStatus::ViaFreeProduct;
    v.reason = "no inter-edges: free product of the parts";
    return v;
  }
  if (g.size() < 3) {
    v.reason = "fewer than 3 vertices";
    return v;
  }
  if (std::all_of(edges.begin(), edges.end(), [](const InterEdge& e) { return e.edge.label == 2; })) {
    v.reason = "every inter-edge has label 2";
    return v;
  }
  if (!check_rel_prime(g, instance.family).holds) {
    v.reason = "the relative extra-large condition fails";
    return v;
  }
  v.status = AcylStatus::ViaWitness;
  v.reason = "hypotheses hold";
  return v;
}

AcylVerdict acyl_verdict(const Instance& instance, const std::vector<int>& growth_radii, std::size_t cap) {
  AcylVerdict v = check_hypotheses(instance);
  if (v.status != AcylStatus::ViaWitness) return v;
  WitnessSearch search = find_witness(instance);
  v.rejected = search.rejected;
  if (search.free_product) {
    v.status = AcylStatus::ViaFreeProduct;
    v.reason = "no vertex is adjacent to a candidate edge: free product along that edge";
    return v;
  }
  if (!search.witness) {
    v.status = AcylStatus::Inapplicable;
    v.reason = "no candidate triple passes the checks on A_Delta";
    return v;
  }
  v.witness = search.witness;
  v.reason = "witness triple found";
  v.growth = empirical_orbit_growth(search.witness->edge.edge.label, growth_radii, cap);
  const DefiningGraph& g = instance.graph;
  const std::string a = g.name(search.witness->edge.edge.u);
  const std::string b = g.name(search.witness->edge.edge.v);
  v.malnormality = "satisfied by citation: some g has A_{" + a + "," + b + "} ∩ g A_{" + a + "," + b +
                   "} g⁻¹ = {1}";
  return v;
}

}  // namespace relxl
