#include "relxl/defining_graph.hpp"

#include <algorithm>
#include <queue>

#include "relxl/coxeter.hpp"
#include "relxl/errors.hpp"

namespace relxl {

DefiningGraph DefiningGraph::create(std::vector<std::string> names, const std::vector<Edge>& edges) {
  DefiningGraph g;
  const auto n = names.size();
  if (n > static_cast<std::size_t>(kMaxVertices)) {
    throw InputError("at most " + std::to_string(kMaxVertices) + " vertices are supported");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (names[i].empty()) throw InputError("vertex names must be non-empty");
    if (!g.index_.emplace(names[i], static_cast<int>(i)).second) {
      throw InputError("duplicate vertex '" + names[i] + "'");
    }
  }
  g.names_ = std::move(names);
  g.labels_.assign(n * n, 0);
  g.adjacency_.assign(n, VertexSet{});
  const int size = static_cast<int>(n);
  for (Edge e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= size || e.v >= size) throw InputError("edge references unknown vertex");
    if (e.u == e.v) throw InputError("self-loop at '" + g.names_[static_cast<std::size_t>(e.u)] + "'");
    if (e.label < 2) {
      throw InputError("edge {" + g.names_[static_cast<std::size_t>(e.u)] + "," +
                       g.names_[static_cast<std::size_t>(e.v)] + "} has label " + std::to_string(e.label) +
                       " < 2");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    auto& slot = g.labels_[static_cast<std::size_t>(e.u) * n + static_cast<std::size_t>(e.v)];
    if (slot != 0) {
      throw InputError("parallel edge {" + g.names_[static_cast<std::size_t>(e.u)] + "," +
                       g.names_[static_cast<std::size_t>(e.v)] + "}");
    }
    slot = e.label;
    g.labels_[static_cast<std::size_t>(e.v) * n + static_cast<std::size_t>(e.u)] = e.label;
    g.adjacency_[static_cast<std::size_t>(e.u)] = g.adjacency_[static_cast<std::size_t>(e.u)].with(e.v);
    g.adjacency_[static_cast<std::size_t>(e.v)] = g.adjacency_[static_cast<std::size_t>(e.v)].with(e.u);
    g.edges_.push_back(e);
  }
  std::sort(g.edges_.begin(), g.edges_.end(),
            [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  return g;
}

std::optional<int> DefiningGraph::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> DefiningGraph::label(int u, int v) const {
  const auto n = names_.size();
  const int m = labels_.at(static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v));
  if (m == 0) return std::nullopt;
  return m;
}

DefiningGraph DefiningGraph::induced(VertexSet subset) const {
  const auto members = subset.members();
  std::vector<std::string> names;
  std::vector<int> position(names_.size(), -1);
  for (int v : members) {
    position[static_cast<std::size_t>(v)] = static_cast<int>(names.size());
    names.push_back(names_[static_cast<std::size_t>(v)]);
  }
  std::vector<Edge> edges;
  for (const Edge& e : edges_) {
    if (subset.contains(e.u) && subset.contains(e.v)) {
      edges.push_back({position[static_cast<std::size_t>(e.u)], position[static_cast<std::size_t>(e.v)], e.label});
    }
  }
  return create(std::move(names), edges);
}

std::string DefiningGraph::format_set(VertexSet s) const {
  std::string out = "{";
  bool first = true;
  for (int v : s.members()) {
    if (!first) out += ",";
    out += name(v);
    first = false;
  }
  return out + "}";
}

SubgraphFamily SubgraphFamily::create(const DefiningGraph& graph, std::vector<VertexSet> parts) {
  SubgraphFamily f;
  f.part_of_.assign(static_cast<std::size_t>(graph.size()), -1);
  VertexSet covered;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const VertexSet p = parts[i];
    if (p.empty()) throw InputError("family part " + std::to_string(i) + " is empty");
    if (!p.subset_of(graph.all())) throw InputError("family part references unknown vertex");
    if (p.intersects(covered)) {
      throw InputError("family parts are not disjoint: " + graph.format_set(p & covered) +
                       " appears twice");
    }
    covered = covered | p;
    for (int v : p.members()) f.part_of_[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  if (covered != graph.all()) {
    throw InputError("family does not cover " + graph.format_set(graph.all() - covered));
  }
  f.parts_ = std::move(parts);
  return f;
}

std::vector<InterEdge> inter_edges(const DefiningGraph& graph, const SubgraphFamily& family) {
  std::vector<InterEdge> out;
  for (const Edge& e : graph.edges()) {
    const int pu = family.part_of(e.u);
    const int pv = family.part_of(e.v);
    if (pu != pv) out.push_back({e, pu, pv});
  }
  return out;
}

VertexSet inter_edge_vertices(const DefiningGraph& graph, const SubgraphFamily& family) {
  VertexSet out;
  for (const InterEdge& e : inter_edges(graph, family)) out = out | e.vertices();
  return out;
}

bool is_isolated_inter_edge(const InterEdge& e, const std::vector<InterEdge>& all) {
  return std::none_of(all.begin(), all.end(), [&](const InterEdge& other) {
    return other.edge != e.edge && other.vertices().intersects(e.vertices());
  });
}

RelReport check_rel(const DefiningGraph& graph, const SubgraphFamily& family) {
  RelReport r;
  for (const InterEdge& e : inter_edges(graph, family)) {
    if (e.edge.label < 4) r.violators.push_back(e);
  }
  r.holds = r.violators.empty();
  return r;
}

RelReport check_rel_prime(const DefiningGraph& graph, const SubgraphFamily& family) {
  RelReport r;
  const auto all = inter_edges(graph, family);
  for (const InterEdge& e : all) {
    if (e.edge.label < 4 && !is_isolated_inter_edge(e, all)) r.violators.push_back(e);
  }
  r.holds = r.violators.empty();
  return r;
}

namespace {

bool complement_disconnected(const DefiningGraph& graph) {
  const int n = graph.size();
  if (n < 2) return false;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  int reached = 1;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int w = 0; w < n; ++w) {
      if (w == v || seen[static_cast<std::size_t>(w)] || graph.adjacent(v, w)) continue;
      seen[static_cast<std::size_t>(w)] = true;
      ++reached;
      q.push(w);
    }
  }
  return reached < n;
}

// Cliques of the defining graph, grown in increasing vertex order.
void for_each_clique(const DefiningGraph& graph, VertexSet current, int next, auto&& visit) {
  visit(current);
  for (int v = next; v < graph.size(); ++v) {
    bool joins = true;
    for (int u : current.members()) joins = joins && graph.adjacent(u, v);
    if (joins) for_each_clique(graph, current.with(v), v + 1, visit);
  }
}

}  // namespace

ClassifierReport classify_known(const DefiningGraph& graph) {
  ClassifierReport r;
  const VertexSet all = graph.all();
  const auto& edges = graph.edges();
  auto all_labels = [&](auto pred) {
    return std::all_of(edges.begin(), edges.end(), [&](const Edge& e) { return pred(e.label); });
  };
  r.large = all_labels([](int m) { return m >= 3; });
  r.extra_large = all_labels([](int m) { return m >= 4; });
  r.xxl = all_labels([](int m) { return m >= 5; });
  r.right_angled = all_labels([](int m) { return m == 2; });

  if (graph.size() == 0) {
    r.spherical = true;
    r.two_dimensional = true;
    r.fc_type = true;
    return r;
  }

  const CoxeterType type = classify_type(graph, all);
  r.spherical = type.kind == TypeClass::Finite;
  r.affine = type.kind == TypeClass::Affine;

  int max_spherical = 0;
  for (VertexSet t : enumerate_spherical_subsets(graph)) max_spherical = std::max(max_spherical, t.size());
  r.two_dimensional = max_spherical <= 2;

  r.fc_type = true;
  for_each_clique(graph, VertexSet{}, 0, [&](VertexSet clique) {
    if (r.fc_type && !is_spherical(graph, clique)) r.fc_type = false;
  });

  r.join_decomposable = complement_disconnected(graph);
  r.notes.push_back("locally reducible: not decided");
  if (r.xxl && graph.size() >= 3) r.notes.push_back("XXL of rank >= 3: acylindrically hyperbolic by a known result");
  if (!r.join_decomposable && graph.size() >= 2) {
    r.notes.push_back("not a join: acylindrically hyperbolic by a known result");
  }
  return r;
}

}  // namespace relxl
