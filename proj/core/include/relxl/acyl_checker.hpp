#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "relxl/defining_graph.hpp"

namespace relxl {

enum class AcylStatus { ViaFreeProduct, ViaWitness, Inapplicable };

std::string to_string(AcylStatus s);

struct DeltaChecks {
  bool connected = false;
  bool two_dimensional = false;  // the triple is not spherical
  bool not_right_angled = false;
  bool rank3 = false;
  std::string type;  // Coxeter type of the triple

  bool ok() const { return connected && two_dimensional && not_right_angled && rank3; }
};

DeltaChecks check_delta(const DefiningGraph& graph, VertexSet delta);

struct Witness {
  InterEdge edge;
  int third = 0;
  VertexSet delta;
  DeltaChecks checks;
};

struct WitnessSearch {
  std::optional<Witness> witness;
  /// Candidates tried before the witness, with the failed check.
  std::vector<std::pair<Witness, std::string>> rejected;
  /// No witness, and some candidate edge has no neighbour outside it: the
  /// group splits as a free product along that edge.
  bool free_product = false;
};

/// Inter-edges with label >= 3 by (label descending, names), third vertices
/// by name; the first triple passing check_delta wins.
WitnessSearch find_witness(const Instance& instance);

struct GrowthRow {
  int radius = 0;
  std::size_t ball_size = 0;
  int max_syllables = 0;
};

/// Largest geodesic syllable count over each word-length ball of A_{a,b}.
std::vector<GrowthRow> empirical_orbit_growth(int m, const std::vector<int>& radii, std::size_t cap = 1'000'000);

struct AcylVerdict {
  AcylStatus status = AcylStatus::Inapplicable;
  std::string reason;
  std::optional<Witness> witness;
  std::vector<std::pair<Witness, std::string>> rejected;
  std::vector<GrowthRow> growth;
  /// The weak malnormality ingredient is cited, not computed.
  std::string malnormality;
};

/// Hypothesis stage only: returns ViaFreeProduct, Inapplicable, or ViaWitness
/// meaning "hypotheses hold, witness still to be found".
AcylVerdict check_hypotheses(const Instance& instance);

AcylVerdict acyl_verdict(const Instance& instance, const std::vector<int>& growth_radii = {2, 4, 6, 8},
                         std::size_t cap = 1'000'000);

}  // namespace relxl
