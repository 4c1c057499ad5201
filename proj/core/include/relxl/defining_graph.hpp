#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "relxl/vertex_set.hpp"

namespace relxl {

/// An edge {u, v} with u < v and its label m(u, v).
struct Edge {
  int u = 0;
  int v = 0;
  int label = 2;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite simplicial graph with named vertices and integer edge labels >= 2.
/// A missing edge means there is no relation between its endpoints (m = infinity).
class DefiningGraph {
 public:
  DefiningGraph() = default;

  /// Validates and builds. Throws InputError on duplicate names, self-loops,
  /// parallel edges, labels < 2 or out-of-range endpoints.
  static DefiningGraph create(std::vector<std::string> names, const std::vector<Edge>& edges);

  int size() const { return static_cast<int>(names_.size()); }
  VertexSet all() const { return VertexSet::first_n(size()); }
  const std::string& name(int v) const { return names_.at(static_cast<std::size_t>(v)); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index_of(std::string_view name) const;

  /// Label of {u, v}, or nullopt when the vertices are not adjacent.
  std::optional<int> label(int u, int v) const;
  bool adjacent(int u, int v) const { return label(u, v).has_value(); }
  VertexSet neighbours(int v) const { return adjacency_.at(static_cast<std::size_t>(v)); }

  /// All edges with u < v, sorted lexicographically by (u, v).
  const std::vector<Edge>& edges() const { return edges_; }

  /// Subgraph induced by `subset`, vertices renumbered in increasing order.
  DefiningGraph induced(VertexSet subset) const;

  std::string format_set(VertexSet s) const;

  friend bool operator==(const DefiningGraph& a, const DefiningGraph& b) {
    return a.names_ == b.names_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
  std::vector<int> labels_;  // row-major n x n, 0 = no edge
  std::vector<VertexSet> adjacency_;
  std::vector<Edge> edges_;
};

/// Disjoint non-empty vertex subsets covering the whole graph.
class SubgraphFamily {
 public:
  SubgraphFamily() = default;

  /// Throws InputError unless the parts are non-empty, pairwise disjoint and
  /// cover every vertex of `graph`.
  static SubgraphFamily create(const DefiningGraph& graph, std::vector<VertexSet> parts);

  int count() const { return static_cast<int>(parts_.size()); }
  VertexSet part(int i) const { return parts_.at(static_cast<std::size_t>(i)); }
  const std::vector<VertexSet>& parts() const { return parts_; }
  int part_of(int v) const { return part_of_.at(static_cast<std::size_t>(v)); }

  friend bool operator==(const SubgraphFamily&, const SubgraphFamily&) = default;

 private:
  std::vector<VertexSet> parts_;
  std::vector<int> part_of_;
};

/// A graph together with its family; the unit every checker works on.
struct Instance {
  DefiningGraph graph;
  SubgraphFamily family;
};

/// An edge whose endpoints lie in distinct parts.
struct InterEdge {
  Edge edge;
  int part_u = 0;
  int part_v = 0;

  VertexSet vertices() const { return VertexSet::pair(edge.u, edge.v); }
  friend bool operator==(const InterEdge&, const InterEdge&) = default;
};

std::vector<InterEdge> inter_edges(const DefiningGraph& graph, const SubgraphFamily& family);

/// Endpoints of inter-edges.
VertexSet inter_edge_vertices(const DefiningGraph& graph, const SubgraphFamily& family);

/// True when no other inter-edge shares a vertex with `e`.
bool is_isolated_inter_edge(const InterEdge& e, const std::vector<InterEdge>& all);

struct RelReport {
  bool holds = true;
  std::vector<InterEdge> violators;
};

/// Every inter-edge has label >= 4.
RelReport check_rel(const DefiningGraph& graph, const SubgraphFamily& family);

/// Every inter-edge sharing a vertex with another inter-edge has label >= 4.
RelReport check_rel_prime(const DefiningGraph& graph, const SubgraphFamily& family);

enum class Tristate { False, True, Unknown };

/// Membership of a defining graph in the classes with a known K(pi,1) or
/// acylindrical hyperbolicity result.
struct ClassifierReport {
  bool spherical = false;
  bool affine = false;
  bool two_dimensional = false;
  Tristate locally_reducible = Tristate::Unknown;
  bool fc_type = false;
  bool large = false;
  bool extra_large = false;
  bool xxl = false;
  bool right_angled = false;
  bool join_decomposable = false;
  std::vector<std::string> notes;

  /// Any of the K(pi,1) classes this artifact can decide.
  bool known_kpi1_class() const { return spherical || affine || two_dimensional || fc_type; }
};

ClassifierReport classify_known(const DefiningGraph& graph);

}  // namespace relxl
