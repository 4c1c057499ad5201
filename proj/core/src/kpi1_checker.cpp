#include "relxl/kpi1_checker.hpp"

#include <algorithm>
#include <set>

#include "relxl/coxeter.hpp"
#include "relxl/errors.hpp"

namespace relxl {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::KnownClass: return "known-class";
    case Provenance::UserAsserted: return "user-asserted";
    case Provenance::Unknown: return "unknown";
  }
  return "?";
}

std::string to_string(Kpi1Status s) {
  switch (s) {
    case Kpi1Status::Holds: return "holds";
    case Kpi1Status::ReductionEstablished: return "reduction-established";
    case Kpi1Status::Inapplicable: return "inapplicable";
    case Kpi1Status::CheckFailed: return "check-failed";
  }
  return "?";
}

std::string to_string(EvidenceKind k) {
  switch (k) {
    case EvidenceKind::MachineChecked: return "machine-checked";
    case EvidenceKind::TrustedCitation: return "trusted-citation";
    case EvidenceKind::UserAssertion: return "user-assertion";
  }
  return "?";
}

Provenance FamilyAudit::weakest() const {
  Provenance w = Provenance::KnownClass;
  for (const PartStatus& p : parts) w = std::max(w, p.provenance);
  return w;
}

namespace {

std::string known_class(const DefiningGraph& part) {
  const ClassifierReport r = classify_known(part);
  if (r.spherical) return "spherical";
  if (r.affine) return "affine";
  if (r.two_dimensional) return "2-dimensional";
  if (r.fc_type) return "FC";
  return {};
}

}  // namespace

FamilyAudit audit_family(const SubsetPoset& s_bar, const Instance& instance, const std::vector<int>& asserted) {
  FamilyAudit audit;
  // Closure under removing one vertex gives closure under all subsets.
  for (const PosetElement& e : s_bar.elements()) {
    for (int v : e.set.members()) {
      if (!s_bar.contains(e.set.without(v))) {
        audit.condition1 = false;
        audit.closure_witness = std::pair(e.set, e.set.without(v));
        break;
      }
    }
    if (!audit.condition1) break;
  }
  for (VertexSet t : enumerate_spherical_subsets(instance.graph)) {
    if (!s_bar.contains(t)) {
      audit.condition3 = false;
      audit.spherical_witness = t;
      break;
    }
  }
  for (int i = 0; i < instance.family.count(); ++i) {
    PartStatus p{i, Provenance::Unknown, {}};
    const std::string cls = known_class(instance.graph.induced(instance.family.part(i)));
    if (!cls.empty()) {
      p.provenance = Provenance::KnownClass;
      p.detail = cls;
    } else if (std::find(asserted.begin(), asserted.end(), i) != asserted.end()) {
      p.provenance = Provenance::UserAsserted;
      p.detail = "asserted";
    }
    audit.parts.push_back(p);
  }
  return audit;
}

CrossingReport verify_no_large_crossing_spherical(const Instance& instance) {
  CrossingReport r;
  const auto edges = inter_edges(instance.graph, instance.family);
  for (VertexSet t : enumerate_spherical_subsets(instance.graph)) {
    if (t.empty()) continue;
    const int home = instance.family.part_of(t.lowest());
    if (t.subset_of(instance.family.part(home))) continue;
    const bool single_edge =
        t.size() == 2 && std::any_of(edges.begin(), edges.end(), [t](const InterEdge& e) { return e.vertices() == t; });
    if (!single_edge) {
      r.passed = false;
      r.witnesses.push_back(t);
    }
  }
  return r;
}

Kpi1Verdict kpi1_verdict(const Instance& instance, const std::vector<int>& asserted,
                             const CertifyConfig& config) {
  const DefiningGraph& g = instance.graph;
  Kpi1Verdict v;
  auto add = [&](std::string claim, EvidenceKind kind, bool ok, std::string detail = {}) {
    v.evidence.push_back({std::move(claim), kind, ok, std::move(detail)});
  };

  const RelReport rel = check_rel_prime(g, instance.family);
  add("every inter-edge meeting another inter-edge has label >= 4", EvidenceKind::MachineChecked, rel.holds,
      rel.holds ? "" : std::to_string(rel.violators.size()) + " violating inter-edge(s)");
  if (!rel.holds) {
    v.status = Kpi1Status::Inapplicable;
    v.violators = rel.violators;
    v.summary = "inapplicable: the relative extra-large condition fails";
    return v;
  }

  bool all_ok = true;
  v.links = certify_link_condition(instance, config);
  {
    int trusted = 0;
    for (const auto& c : v.links->certificates) trusted += c.status == CertStatus::TrustedByPaper ? 1 : 0;
    std::string detail = std::to_string(v.links->certificates.size()) + " vertex types";
    if (trusted > 0) detail += ", " + std::to_string(trusted) + " part link(s) without an exact engine";
    add("every embedded loop in every vertex link has length >= 2 pi", EvidenceKind::MachineChecked,
        v.links->passed(), detail);
    all_ok = all_ok && v.links->passed();
    if (trusted > 0) {
      add("part links without an exact engine have loops of >= 8 edges", EvidenceKind::TrustedCitation, true,
          "parabolic subgroup argument");
    }
  }

  try {
    const SubsetPoset s_ell = build_s_ell(instance);
    const SubsetPoset s_bar = build_s_bar(instance);
    const DerivedComplex k_ell = derived_complex(s_ell);
    const DimensionReport dim = check_two_dimensional(k_ell);
    add("the complex is 2-dimensional", EvidenceKind::MachineChecked, dim.two_dimensional,
        "longest chain " + std::to_string(dim.longest_chain));
    all_ok = all_ok && dim.two_dimensional;

    const auto metric = assign_metric(k_ell, instance);
    const GluingReport gluing = check_gluing(metric);
    add("the metric glues consistently", EvidenceKind::MachineChecked, gluing.consistent,
        std::to_string(gluing.shared_edges.size()) + " shared edges");
    all_ok = all_ok && gluing.consistent;

    const FamilyAudit audit = audit_family(s_bar, instance, asserted);
    v.parts = audit.parts;
    add("the enlarged family is closed under subsets", EvidenceKind::MachineChecked, audit.condition1,
        audit.closure_witness ? "missing " + g.format_set(audit.closure_witness->second) : "");
    add("the enlarged family contains every spherical subset", EvidenceKind::MachineChecked, audit.condition3,
        audit.spherical_witness ? "missing " + g.format_set(*audit.spherical_witness) : "");
    all_ok = all_ok && audit.condition1 && audit.condition3;

    const CrossingReport crossing = verify_no_large_crossing_spherical(instance);
    add("spherical subsets meeting two parts are single inter-edges", EvidenceKind::MachineChecked, crossing.passed,
        crossing.passed ? "" : "e.g. " + g.format_set(crossing.witnesses.front()));
    all_ok = all_ok && crossing.passed;

    const DerivedComplex k_bar = derived_complex(s_bar);
    const RetractionReport retraction = retraction_map(k_bar, k_ell, instance);
    add("the retraction onto the smaller complex is a well-defined simplex map", EvidenceKind::MachineChecked,
        retraction.ok(), std::to_string(retraction.maximal_images.size()) + " maximal chains");
    all_ok = all_ok && retraction.ok();
  } catch (const ResourceLimitError& e) {
    add("complex-level checks", EvidenceKind::MachineChecked, false, e.what());
    all_ok = false;
  }

  add("the developed complex is simply connected", EvidenceKind::TrustedCitation, true,
      "complex-of-groups development argument");
  add("a CAT(0) complex built on a complete K(pi,1) family gives the K(pi,1) conjecture",
      EvidenceKind::TrustedCitation, true, "hyperplane complement criterion");

  std::set<std::string> classes;
  Provenance weakest = Provenance::KnownClass;
  for (const PartStatus& p : v.parts) {
    const std::string name = "part " + g.format_set(instance.family.part(p.part));
    if (p.provenance == Provenance::KnownClass) {
      classes.insert(p.detail);
      add(name + " satisfies the K(pi,1) conjecture (" + p.detail + ")", EvidenceKind::MachineChecked, true,
          "known class");
    } else if (p.provenance == Provenance::UserAsserted) {
      add(name + " satisfies the K(pi,1) conjecture", EvidenceKind::UserAssertion, true);
    } else {
      add(name + " satisfies the K(pi,1) conjecture", EvidenceKind::MachineChecked, false, "status unknown");
    }
    weakest = std::max(weakest, p.provenance);
  }

  if (!all_ok) {
    v.status = Kpi1Status::CheckFailed;
    v.summary = "check failed: see evidence";
  } else if (weakest == Provenance::Unknown) {
    v.status = Kpi1Status::ReductionEstablished;
    v.summary = "reduction established, per-part status pending";
  } else {
    v.status = Kpi1Status::Holds;
    std::string joined;
    for (const std::string& c : classes) joined += (joined.empty() ? "" : ", ") + c;
    if (weakest == Provenance::UserAsserted) {
      v.summary = "holds, conditional on asserted parts";
      if (!joined.empty()) v.summary += "; other parts " + joined;
    } else {
      v.summary = "holds, parts " + joined;
    }
  }
  return v;
}

}  // namespace relxl
