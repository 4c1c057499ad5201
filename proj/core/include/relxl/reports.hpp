#pragma once

#include <string>

#include "relxl/acyl_checker.hpp"
#include "relxl/defining_graph.hpp"
#include "relxl/girth_checker.hpp"
#include "relxl/kpi1_checker.hpp"
#include "relxl/link_builder.hpp"
#include "relxl/poset_complex.hpp"

namespace relxl {

// JSON documents are pretty-printed with two-space indentation; text is
// line-oriented. Both are deterministic for fixed input.

std::string rel_json(const Instance& instance, const RelReport& rel, const RelReport& rel_prime);
std::string rel_text(const Instance& instance, const RelReport& rel, const RelReport& rel_prime);

std::string classifier_json(const ClassifierReport& r);
std::string classifier_text(const ClassifierReport& r);

std::string poset_json(const DefiningGraph& g, const SubsetPoset& p, const DerivedComplex& k);
std::string poset_text(const DefiningGraph& g, const std::string& name, const SubsetPoset& p, const DerivedComplex& k);
/// Hasse diagram.
std::string poset_dot(const DefiningGraph& g, const std::string& name, const SubsetPoset& p);

std::string certificates_json(const LinkConditionReport& r);
std::string certificates_text(const LinkConditionReport& r);

std::string kpi1_json(const Instance& instance, const Kpi1Verdict& v);
std::string kpi1_text(const Instance& instance, const Kpi1Verdict& v);

std::string acyl_json(const Instance& instance, const AcylVerdict& v);
std::string acyl_text(const Instance& instance, const AcylVerdict& v);

std::string link_json(const LinkGraph& link, const CycleCertificate& girth);
std::string link_text(const LinkGraph& link, const CycleCertificate& girth);
/// Edge labels are lengths in pi/8 units; boundary vertices are dashed.
std::string link_dot(const LinkGraph& link);

}  // namespace relxl
