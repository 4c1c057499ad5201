#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relxl/defining_graph.hpp"
#include "relxl/girth_checker.hpp"
#include "relxl/poset_complex.hpp"

namespace relxl {

/// How a part's own K(pi,1) status is known. Ordered strongest first.
enum class Provenance { KnownClass, UserAsserted, Unknown };

std::string to_string(Provenance p);

struct PartStatus {
  int part = 0;
  Provenance provenance = Provenance::Unknown;
  std::string detail;  // the known class, when there is one
};

struct FamilyAudit {
  /// Closed under subsets; witness is (T, missing subset of T).
  bool condition1 = true;
  std::optional<std::pair<VertexSet, VertexSet>> closure_witness;
  /// Contains every spherical subset; witness is one that is missing.
  bool condition3 = true;
  std::optional<VertexSet> spherical_witness;
  std::vector<PartStatus> parts;

  Provenance weakest() const;
  bool passed() const { return condition1 && condition3 && weakest() != Provenance::Unknown; }
};

/// `asserted` lists parts the user vouches for.
FamilyAudit audit_family(const SubsetPoset& s_bar, const Instance& instance, const std::vector<int>& asserted = {});

struct CrossingReport {
  bool passed = true;
  /// Spherical subsets meeting two parts that are not a single inter-edge.
  std::vector<VertexSet> witnesses;
};

CrossingReport verify_no_large_crossing_spherical(const Instance& instance);

enum class Kpi1Status { Holds, ReductionEstablished, Inapplicable, CheckFailed };

std::string to_string(Kpi1Status s);

enum class EvidenceKind { MachineChecked, TrustedCitation, UserAssertion };

std::string to_string(EvidenceKind k);

struct Evidence {
  std::string claim;
  EvidenceKind kind = EvidenceKind::MachineChecked;
  bool ok = true;
  std::string detail;
};

struct Kpi1Verdict {
  Kpi1Status status = Kpi1Status::CheckFailed;
  std::string summary;
  std::vector<Evidence> evidence;
  std::vector<InterEdge> violators;
  std::vector<PartStatus> parts;
  std::optional<LinkConditionReport> links;
};

/// Runs every checkable ingredient of the reduction and says no more than
/// they establish: "holds" only when all checks pass and every part is of a
/// known class or asserted.
Kpi1Verdict kpi1_verdict(const Instance& instance, const std::vector<int>& asserted = {},
                             const CertifyConfig& config = {});

}  // namespace relxl
