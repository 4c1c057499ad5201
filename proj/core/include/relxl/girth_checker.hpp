#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "relxl/defining_graph.hpp"
#include "relxl/dihedral_garside.hpp"
#include "relxl/link_builder.hpp"

namespace relxl {

inline constexpr int kLinkThresholdUnits = 16;  // 2 pi

struct CycleCertificate {
  bool found = false;
  std::vector<int> cycle;  // vertex indices, first vertex not repeated
  int length_units = 0;
  bool complete = true;  // false for a truncated development

  int edge_count() const { return static_cast<int>(cycle.size()); }
  bool passes() const { return !found || length_units >= kLinkThresholdUnits; }
};

/// Exact minimum-length simple cycle, from one half-radius Dijkstra per
/// root vertex.
CycleCertificate shortest_embedded_cycle(const LinkGraph& link);

/// Shortest simple cycle through `root`: for every edge at the root, the
/// shortest path avoiding it closes a cycle.
CycleCertificate shortest_cycle_through(const LinkGraph& link, int root);

/// Sum of the edge lengths along a closed vertex sequence, recomputed from
/// the graph; nullopt when two consecutive vertices are not adjacent.
std::optional<int> cycle_length(const LinkGraph& link, const std::vector<int>& cycle);

/// One syllable gen^exponent.
struct Syllable {
  int gen = 0;
  int exponent = 0;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Shortest cycle through the vertex 1 of a coset link, searched as a word
/// with cyclically distinct consecutive generators that is trivial in the
/// group. A cycle of n syllables has 2n edges.
struct SyllableSearch {
  int radius = 0;
  int max_half = 0;  // syllables per half-word
  std::size_t explored = 0;
  std::optional<std::vector<Syllable>> shortest;
  /// Every element vertex of the witness has normal-form size <= radius,
  /// hence lies in the word-length ball.
  bool witness_in_ball = false;
  /// Element and coset vertices of the witness are pairwise distinct.
  bool witness_simple = false;

  int syllables() const { return shortest ? static_cast<int>(shortest->size()) : 0; }
};

/// Meet-in-the-middle search over half-words of at most `max_half`
/// syllables whose every syllable prefix has length lower bound <= radius.
/// The region searched contains the radius ball, so "no cycle" is sound for
/// every cycle through 1 whose element vertices lie in the ball. Any cycle
/// of at most 2 * max_half syllables in that ball is found.
SyllableSearch shortest_syllable_cycle(const DihedralGroup& group, int radius, int max_half,
                                       std::size_t cap = 20'000'000);
SyllableSearch shortest_syllable_cycle(const FreeGroup& group, int radius, int max_half,
                                       std::size_t cap = 20'000'000);

Word syllables_to_word(const std::vector<Syllable>& s);

enum class CertStatus { PassComplete, PassWithinRadius, TrustedByPaper, Fail };

std::string to_string(CertStatus s);

struct LinkCertificate {
  std::string vertex_type;  // e.g. "A_{a,b}"
  LinkCase link_case = LinkCase::Empty;
  std::vector<std::string> minimal_cycle;  // vertex labels
  std::optional<int> length_units;
  CertStatus status = CertStatus::PassComplete;
  int radius = 0;
  std::string method;
  std::string note;
};

struct CertifyConfig {
  int radius_case1 = 16;
  std::optional<int> radius_case3;  // default 8m per inter-edge
  int truncation_case2 = 4;
  std::size_t cap = 1'000'000;
};

struct LinkConditionReport {
  std::vector<LinkCertificate> certificates;

  bool passed() const;
  bool failed() const { return !passed(); }
};

/// Runs every vertex type: the empty coset, each inter-edge vertex, each part
/// and each inter-edge. Any cycle shorter than 16 units is a FAIL.
LinkConditionReport certify_link_condition(const Instance& instance, const CertifyConfig& config = {});

/// Half-word syllable budget that reaches cycles of 16 units when each edge
/// has `unit` units.
int half_syllables_for(int unit);

}  // namespace relxl
