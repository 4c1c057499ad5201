#pragma once

#include <string>
#include <vector>

#include "relxl/defining_graph.hpp"

namespace relxl {

/// Coxeter matrix of the standard parabolic subgroup on T. Entries follow the
/// Artin convention: a missing edge is m = infinity, stored as kInfinity.
class CoxeterMatrix {
 public:
  static constexpr int kInfinity = 0;

  CoxeterMatrix(const DefiningGraph& graph, VertexSet subset);

  int rank() const { return static_cast<int>(vertices_.size()); }
  const std::vector<int>& vertices() const { return vertices_; }
  /// Row/column indices are positions in vertices(), not graph indices.
  int at(int i, int j) const { return entries_[static_cast<std::size_t>(i * rank() + j)]; }

 private:
  std::vector<int> vertices_;
  std::vector<int> entries_;
};

/// Throws InputError when `subset` references vertices outside the graph.
CoxeterMatrix coxeter_matrix(const DefiningGraph& graph, VertexSet subset);

enum class CoxeterFamily { A, B, D, E, F, H, I, AffineA, AffineB, AffineC, AffineD, AffineE, AffineF, AffineG };

/// One irreducible component of a finite or affine Coxeter diagram.
struct CoxeterComponent {
  CoxeterFamily family = CoxeterFamily::A;
  int rank = 1;   // number of diagram vertices
  int label = 0;  // I2(m) only
  VertexSet vertices;

  bool affine() const { return family >= CoxeterFamily::AffineA; }
  /// Conventional name, e.g. "A3", "I2(5)", "~C3" (affine types carry a tilde
  /// and are indexed by rank - 1).
  std::string name() const;
};

enum class TypeClass { Finite, Affine, Neither };

struct CoxeterType {
  TypeClass kind = TypeClass::Neither;
  /// Components in increasing order of their lowest vertex. Components that
  /// are neither finite nor affine are not listed.
  std::vector<CoxeterComponent> components;

  std::string name() const;
};

/// Classifies the diagram on T by matching every irreducible component
/// against the finite and affine tables. T must be non-empty.
CoxeterType classify_type(const DefiningGraph& graph, VertexSet subset);

/// W_T finite. The empty set is spherical.
bool is_spherical(const DefiningGraph& graph, VertexSet subset);

enum class Definiteness { PositiveDefinite, PositiveSemidefinite, Indefinite };

struct DefinitenessResult {
  Definiteness kind = Definiteness::Indefinite;
  double min_eigenvalue = 0.0;
  /// |min eigenvalue| lies within 1000 * tolerance of the decision boundary
  /// but outside the tolerance band itself.
  bool low_confidence = false;
};

/// Signature of the cosine matrix B(s,s) = 1, B(s,t) = -cos(pi/m(s,t)),
/// with -1 for m = infinity. Independent of the diagram tables.
DefinitenessResult definiteness_oracle(const DefiningGraph& graph, VertexSet subset,
                                       double tolerance = 1e-9);

/// Every spherical T, including the empty set, sorted by size then bits.
std::vector<VertexSet> enumerate_spherical_subsets(const DefiningGraph& graph);

std::string to_string(Definiteness d);
std::string to_string(TypeClass t);

}  // namespace relxl
