#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "relxl/defining_graph.hpp"
#include "relxl/dihedral_garside.hpp"

namespace relxl {

/// The four vertex types of the complex, by the subset T of the coset A_T.
enum class LinkCase { Part = 1, Single = 2, InterEdge = 3, Empty = 4 };

std::string to_string(LinkCase c);

enum class LinkVertexKind {
  Element,  // alpha * 1
  Coset,    // alpha * A_{s}
  Subset,   // A_T for T in S^l (finite links)
  Power,    // s^k, the Z side of a Case 2 link
};

struct LinkVertex {
  /// Unique within the graph; two ids are equal iff they name the same coset.
  std::string id;
  LinkVertexKind kind = LinkVertexKind::Subset;
  std::string label;
  VertexSet subset;
  int side = 0;
  bool boundary = false;
};

struct LinkEdge {
  int u = 0;
  int v = 0;
  int length = 0;  // pi/8 units
};

class LinkGraph {
 public:
  LinkGraph() = default;
  LinkGraph(LinkCase link_case, std::string center) : case_(link_case), center_(std::move(center)) {}

  /// Returns the index of the vertex with this id, adding it if new.
  int add_vertex(LinkVertex v);
  /// Throws std::logic_error for a loop or a repeated edge with another length.
  void add_edge(int u, int v, int length);

  std::optional<int> find(const std::string& id) const;
  const std::vector<LinkVertex>& vertices() const { return vertices_; }
  LinkVertex& vertex(int i) { return vertices_.at(static_cast<std::size_t>(i)); }
  const std::vector<LinkEdge>& edges() const { return edges_; }
  /// (neighbour, length) pairs.
  const std::vector<std::pair<int, int>>& neighbours(int v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  LinkCase link_case() const { return case_; }
  const std::string& center() const { return center_; }
  /// 0 for a complete link; otherwise the development radius in letters.
  int radius() const { return radius_; }
  bool truncated() const { return truncated_; }
  void set_truncation(int radius) {
    radius_ = radius;
    truncated_ = true;
  }
  /// Every edge joins side 0 to side 1.
  bool respects_sides() const;

 private:
  LinkCase case_ = LinkCase::Empty;
  std::string center_;
  int radius_ = 0;
  bool truncated_ = false;
  std::vector<LinkVertex> vertices_;
  std::unordered_map<std::string, int> index_;
  std::vector<LinkEdge> edges_;
  std::vector<std::vector<std::pair<int, int>>> adjacency_;
};

/// Angle at A_T in the triangle [1, A_{s}, A_T]: 2 for a part or a disjoint
/// inter-edge, 1 for an inter-edge meeting another one.
int corner_units(const Instance& instance, VertexSet t);
/// Angle at 1 in the same triangle: 2, 2 or 3.
int base_units(const Instance& instance, VertexSet t);
inline constexpr int kRightAngleUnits = 4;

/// Link of the trivial coset.
LinkGraph build_link_empty(const Instance& instance);

/// Link of A_{s}, with the powers of s truncated to |k| <= truncation_n.
/// Throws InputError when s is not an inter-edge vertex.
LinkGraph build_link_single(const Instance& instance, int s, int truncation_n = 4);

/// Exact engine for the part, or nullptr when none applies: dihedral for an
/// edge, free for an edgeless part (including a single vertex).
std::unique_ptr<WordProblemOracle> make_part_oracle(const Instance& instance, int part);

/// Ball development of the link of A_{S_i}: elements of A_i of word length
/// <= radius and their cosets of every <s>, s in S_i. Throws InputError when
/// the oracle is not exact; ResourceLimitError past `cap` elements.
LinkGraph develop_link_part(const Instance& instance, int part, const WordProblemOracle& oracle, int radius,
                            std::size_t cap = 1'000'000);

/// Ball development of the link of A_T for the inter-edge T.
LinkGraph develop_link_interedge(const Instance& instance, const InterEdge& edge, int radius,
                                 std::size_t cap = 1'000'000);

}  // namespace relxl
