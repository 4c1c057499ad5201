#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "relxl/defining_graph.hpp"

namespace relxl {

/// Why a subset belongs to a poset. A subset may carry several tags.
enum Tag : unsigned {
  kTagEmpty = 1U << 0,
  kTagPart = 1U << 1,
  kTagInterEdge = 1U << 2,
  kTagInterEdgeVertex = 1U << 3,
  kTagSpherical = 1U << 4,
  kTagPartSubset = 1U << 5,
};

std::vector<std::string> tag_names(unsigned tags);

struct PosetElement {
  VertexSet set;
  unsigned tags = 0;
};

/// A family of vertex subsets ordered by inclusion. Each subset is stored
/// once, with the union of the tags it was added under.
class SubsetPoset {
 public:
  void add(VertexSet set, unsigned tags);
  /// Removes a subset (negative controls only). No-op if absent.
  void remove(VertexSet set);

  std::size_t size() const { return elements_.size(); }
  /// Elements sorted by size then bits.
  const std::vector<PosetElement>& elements() const { return elements_; }
  bool contains(VertexSet set) const { return index_of(set).has_value(); }
  std::optional<std::size_t> index_of(VertexSet set) const;
  unsigned tags(VertexSet set) const;

  /// Pairs (i, j) with elements()[i] covered by elements()[j].
  std::vector<std::pair<std::size_t, std::size_t>> covering_pairs() const;

 private:
  std::vector<PosetElement> elements_;
};

/// The elements of S^l: the empty set, each part, each inter-edge and each
/// inter-edge endpoint.
SubsetPoset build_s_ell(const Instance& instance);
/// All spherical subsets.
SubsetPoset build_s_f(const DefiningGraph& graph);
/// S^l together with every subset of every part.
SubsetPoset build_s_bar(const Instance& instance);

/// A chain T0 < T1 < ... < Tn, listed in increasing order.
using Chain = std::vector<VertexSet>;

struct ChainLess {
  bool operator()(const Chain& a, const Chain& b) const;
};

/// All non-empty chains of a subset poset (its order complex).
class DerivedComplex {
 public:
  DerivedComplex() = default;
  DerivedComplex(std::vector<VertexSet> vertices, std::vector<Chain> simplices);

  const std::vector<VertexSet>& vertices() const { return vertices_; }
  /// Sorted by length, then lexicographically.
  const std::vector<Chain>& simplices() const { return simplices_; }
  bool contains(const Chain& c) const;
  /// Highest simplex dimension (chain length - 1), -1 when empty.
  int dimension() const;
  std::size_t count(int dim) const;
  std::vector<Chain> maximal_simplices() const;

 private:
  std::vector<VertexSet> vertices_;
  std::vector<Chain> simplices_;
};

/// Throws ResourceLimitError once more than `cap` chains are produced.
DerivedComplex derived_complex(const SubsetPoset& poset, std::size_t cap = 5'000'000);

struct DimensionReport {
  bool two_dimensional = true;
  int longest_chain = 0;
  std::optional<Chain> witness;  // a chain with 4 or more elements
};

DimensionReport check_two_dimensional(const DerivedComplex& complex);

/// Exact edge lengths occurring in the metric: every 2-simplex is a right
/// triangle whose leg [empty, {s}] has length 1.
enum class EdgeLength { One, Sqrt2, OnePlusSqrt2, Sec3PiOver8 };

double value(EdgeLength l);
std::string to_string(EdgeLength l);

/// Angles are in units of pi/8.
inline constexpr int kPiUnits = 8;
inline constexpr int kTwoPiUnits = 16;

enum class SimplexKind { Part, DisjointInterEdge, SharedInterEdge };

struct MetricSimplex {
  std::array<VertexSet, 3> vertices;  // empty set, {s}, T
  std::array<int, 3> angles{};        // at each vertex
  /// Lengths of [v0,v1], [v1,v2], [v0,v2].
  std::array<EdgeLength, 3> lengths{};
  SimplexKind kind = SimplexKind::Part;
};

/// Puts the piecewise Euclidean metric on every 2-simplex. Throws
/// std::invalid_argument for a 2-chain that is not [empty < {s} < T] with T a
/// part or an inter-edge.
std::vector<MetricSimplex> assign_metric(const DerivedComplex& complex, const Instance& instance);

struct SharedEdge {
  VertexSet a;
  VertexSet b;
  std::vector<EdgeLength> lengths;  // one per incident 2-simplex
  bool consistent = true;
};

struct GluingReport {
  bool consistent = true;
  std::vector<SharedEdge> shared_edges;
};

/// Compares the lengths induced on every 1-simplex shared by two or more
/// 2-simplices.
GluingReport check_gluing(const std::vector<MetricSimplex>& simplices);

struct RetractionReport {
  bool total = true;
  bool lands_in_s_ell = true;
  bool identity_on_s_ell = true;
  bool idempotent = true;
  bool compatible = true;
  /// Each maximal chain of the S-bar complex with its image.
  std::vector<std::pair<Chain, Chain>> maximal_images;
  std::vector<std::string> problems;

  bool ok() const { return total && lands_in_s_ell && identity_on_s_ell && idempotent && compatible; }
};

/// Image of a maximal S-bar chain: inter-edge chains are fixed, a chain
/// [empty < {s} < ... < S_i] goes to [empty < {s} < S_i] when s is an
/// inter-edge vertex and to [empty < S_i] otherwise. nullopt for a chain of
/// any other shape.
std::optional<Chain> retract_maximal_chain(const Chain& chain, const Instance& instance);

RetractionReport retraction_map(const DerivedComplex& s_bar, const DerivedComplex& s_ell,
                                 const Instance& instance);

}  // namespace relxl
