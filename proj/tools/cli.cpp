#include "cli.hpp"

#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "relxl/acyl_checker.hpp"
#include "relxl/coxeter.hpp"
#include "relxl/errors.hpp"
#include "relxl/girth_checker.hpp"
#include "relxl/io.hpp"
#include "relxl/kpi1_checker.hpp"
#include "relxl/link_builder.hpp"
#include "relxl/reports.hpp"

namespace relxl {

namespace {

constexpr int kPass = 0;
constexpr int kInputError = 1;
constexpr int kConditionFailure = 2;

struct RunConfig {
  std::string input;
  std::string format = "text";
  int radius_case1 = 16;
  int radius_case3 = 0;  // 0: 8m per inter-edge
  std::size_t cap = 1'000'000;
  double tolerance = 1e-9;
  std::vector<int> asserted_parts;
  // develop
  std::string vertex_type = "interedge";
  int part = 0;
  std::string edge;
  std::string vertex;
  int radius = 6;
};

CertifyConfig certify_config(const RunConfig& c) {
  CertifyConfig out;
  out.radius_case1 = c.radius_case1;
  if (c.radius_case3 > 0) out.radius_case3 = c.radius_case3;
  out.cap = c.cap;
  return out;
}

void require_format(const RunConfig& c, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (c.format == f) return;
  }
  throw InputError("format '" + c.format + "' is not available for this command");
}

int cmd_check_rel(const RunConfig& c, std::ostream& out) {
  require_format(c, {"json", "text"});
  const Instance inst = load_instance(c.input);
  const RelReport rel = check_rel(inst.graph, inst.family);
  const RelReport rel_prime = check_rel_prime(inst.graph, inst.family);
  out << (c.format == "json" ? rel_json(inst, rel, rel_prime) + "\n" : rel_text(inst, rel, rel_prime));
  return rel.holds && rel_prime.holds ? kPass : kConditionFailure;
}

int cmd_classify(const RunConfig& c, std::ostream& out) {
  require_format(c, {"json", "text"});
  const Instance inst = load_instance(c.input);
  const ClassifierReport r = classify_known(inst.graph);
  const DefinitenessResult d = definiteness_oracle(inst.graph, inst.graph.all(), c.tolerance);
  if (c.format == "json") {
    auto doc = nlohmann::json::parse(classifier_json(r));
    doc["definiteness"] = {{"kind", to_string(d.kind)}, {"min_eigenvalue", d.min_eigenvalue},
                           {"low_confidence", d.low_confidence}};
    out << doc.dump(2) << "\n";
  } else {
    out << classifier_text(r) << "cosine matrix: " << to_string(d.kind) << (d.low_confidence ? " (low confidence)" : "")
        << "\n";
  }
  return kPass;
}

int cmd_build(const RunConfig& c, std::ostream& out) {
  const Instance inst = load_instance(c.input);
  const SubsetPoset s_ell = build_s_ell(inst);
  const SubsetPoset s_f = build_s_f(inst.graph);
  const SubsetPoset s_bar = build_s_bar(inst);
  const DerivedComplex k_ell = derived_complex(s_ell);
  const DimensionReport dim = check_two_dimensional(k_ell);
  if (c.format == "dot") {
    out << poset_dot(inst.graph, "S_ell", s_ell) << poset_dot(inst.graph, "S_f", s_f)
        << poset_dot(inst.graph, "S_bar", s_bar);
    return dim.two_dimensional ? kPass : kConditionFailure;
  }
  require_format(c, {"json", "text"});
  const DerivedComplex k_f = derived_complex(s_f);
  const DerivedComplex k_bar = derived_complex(s_bar);
  std::string metric_error;
  std::optional<GluingReport> gluing;
  try {
    gluing = check_gluing(assign_metric(k_ell, inst));
  } catch (const std::invalid_argument& e) {
    metric_error = e.what();
  }
  const RetractionReport retraction = retraction_map(k_bar, k_ell, inst);
  if (c.format == "json") {
    nlohmann::json doc;
    doc["S_ell"] = nlohmann::json::parse(poset_json(inst.graph, s_ell, k_ell));
    doc["S_f"] = nlohmann::json::parse(poset_json(inst.graph, s_f, k_f));
    doc["S_bar"] = nlohmann::json::parse(poset_json(inst.graph, s_bar, k_bar));
    doc["two_dimensional"] = dim.two_dimensional;
    doc["gluing_consistent"] = gluing ? nlohmann::json(gluing->consistent) : nlohmann::json(nullptr);
    if (!metric_error.empty()) doc["metric_error"] = metric_error;
    doc["retraction_ok"] = retraction.ok();
    doc["retraction_problems"] = retraction.problems;
    out << doc.dump(2) << "\n";
  } else {
    out << poset_text(inst.graph, "S_ell", s_ell, k_ell) << poset_text(inst.graph, "S_f", s_f, k_f)
        << poset_text(inst.graph, "S_bar", s_bar, k_bar);
    out << "2-dimensional: " << (dim.two_dimensional ? "yes" : "no") << "\n";
    if (gluing) out << "gluing: " << (gluing->consistent ? "consistent" : "inconsistent") << "\n";
    if (!metric_error.empty()) out << "metric: " << metric_error << "\n";
    out << "retraction: " << (retraction.ok() ? "well-defined" : "problems") << "\n";
    for (const auto& p : retraction.problems) out << "  " << p << "\n";
  }
  const bool ok = dim.two_dimensional && gluing && gluing->consistent && retraction.ok();
  return ok ? kPass : kConditionFailure;
}

int cmd_links(const RunConfig& c, std::ostream& out) {
  require_format(c, {"json", "text"});
  const Instance inst = load_instance(c.input);
  const LinkConditionReport r = certify_link_condition(inst, certify_config(c));
  out << (c.format == "json" ? certificates_json(r) + "\n" : certificates_text(r));
  return r.passed() ? kPass : kConditionFailure;
}

int cmd_kpi1(const RunConfig& c, std::ostream& out) {
  require_format(c, {"json", "text"});
  const Instance inst = load_instance(c.input);
  for (int p : c.asserted_parts) {
    if (p < 0 || p >= inst.family.count()) throw InputError("asserted part index out of range");
  }
  const Kpi1Verdict v = kpi1_verdict(inst, c.asserted_parts, certify_config(c));
  out << (c.format == "json" ? kpi1_json(inst, v) + "\n" : kpi1_text(inst, v));
  const bool failed = v.status == Kpi1Status::Inapplicable || v.status == Kpi1Status::CheckFailed;
  return failed ? kConditionFailure : kPass;
}

int cmd_acyl(const RunConfig& c, std::ostream& out) {
  require_format(c, {"json", "text"});
  const Instance inst = load_instance(c.input);
  const AcylVerdict v = acyl_verdict(inst, {2, 4, 6, 8}, c.cap);
  out << (c.format == "json" ? acyl_json(inst, v) + "\n" : acyl_text(inst, v));
  return v.status == AcylStatus::Inapplicable ? kConditionFailure : kPass;
}

InterEdge find_edge(const Instance& inst, const std::string& spec) {
  const auto comma = spec.find(',');
  if (comma == std::string::npos) throw InputError("--edge expects u,v");
  const auto u = inst.graph.index_of(spec.substr(0, comma));
  const auto v = inst.graph.index_of(spec.substr(comma + 1));
  if (!u || !v) throw InputError("--edge names an unknown vertex");
  for (const InterEdge& e : inter_edges(inst.graph, inst.family)) {
    if (e.vertices() == VertexSet::pair(*u, *v)) return e;
  }
  throw InputError("--edge is not an inter-edge");
}

int cmd_develop(const RunConfig& c, std::ostream& out) {
  require_format(c, {"json", "text", "dot"});
  const Instance inst = load_instance(c.input);
  LinkGraph link;
  if (c.vertex_type == "empty") {
    link = build_link_empty(inst);
  } else if (c.vertex_type == "single") {
    const auto s = inst.graph.index_of(c.vertex);
    if (!s) throw InputError("--vertex names an unknown vertex");
    link = build_link_single(inst, *s, c.radius);
  } else if (c.vertex_type == "part") {
    if (c.part < 0 || c.part >= inst.family.count()) throw InputError("--part out of range");
    const auto oracle = make_part_oracle(inst, c.part);
    if (!oracle) throw InputError("no exact word problem engine for this part");
    link = develop_link_part(inst, c.part, *oracle, c.radius, c.cap);
  } else if (c.vertex_type == "interedge") {
    link = develop_link_interedge(inst, find_edge(inst, c.edge), c.radius, c.cap);
  } else {
    throw InputError("--type must be one of empty, single, part, interedge");
  }
  const CycleCertificate girth = shortest_embedded_cycle(link);
  if (c.format == "dot") {
    out << link_dot(link);
  } else {
    out << (c.format == "json" ? link_json(link, girth) + "\n" : link_text(link, girth));
  }
  return girth.passes() ? kPass : kConditionFailure;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Relative extra-large Artin group checker"};
  app.require_subcommand(1);
  RunConfig config;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", config.input, "JSON graph file")->required();
    sub->add_option("--format", config.format, "json, text or dot")
        ->check(CLI::IsMember({"json", "text", "dot"}));
    sub->add_option("--radius-case1", config.radius_case1, "part link radius in letters")->check(CLI::PositiveNumber);
    sub->add_option("--radius-case3", config.radius_case3, "inter-edge link radius in letters (default 8m)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--cap", config.cap, "element cap for enumerations")->check(CLI::PositiveNumber);
    sub->add_option("--tolerance", config.tolerance, "definiteness oracle tolerance")->check(CLI::PositiveNumber);
  };
  struct Command {
    const char* name;
    const char* help;
    int (*run)(const RunConfig&, std::ostream&);
  };
  const std::vector<Command> commands = {
      {"check-rel", "check (REL) and (REL')", cmd_check_rel},
      {"classify", "known-class flags", cmd_classify},
      {"build", "posets, complexes, metric and retraction", cmd_build},
      {"links", "certify the link condition", cmd_links},
      {"kpi1", "K(pi,1) reduction verdict", cmd_kpi1},
      {"acyl", "acylindrical hyperbolicity hypotheses and witness", cmd_acyl},
      {"develop", "emit one link", cmd_develop},
  };
  std::vector<std::pair<CLI::App*, const Command*>> subs;
  for (const Command& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    add_common(sub);
    subs.emplace_back(sub, &c);
    if (std::string(c.name) == "kpi1") {
      sub->add_option("--assume-part-kpi1", config.asserted_parts, "part index known to satisfy K(pi,1)");
    }
    if (std::string(c.name) == "develop") {
      sub->add_option("--type", config.vertex_type, "empty, single, part or interedge");
      sub->add_option("--part", config.part, "part index for --type part");
      sub->add_option("--edge", config.edge, "u,v for --type interedge");
      sub->add_option("--vertex", config.vertex, "vertex for --type single");
      sub->add_option("--radius", config.radius, "development radius (truncation for single)")
          ->check(CLI::PositiveNumber);
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kPass : kInputError;
  }

  for (auto [sub, command] : subs) {
    if (!sub->parsed()) continue;
    try {
      return command->run(config, out);
    } catch (const InputError& e) {
      err << "input error: " << e.what() << "\n";
      return kInputError;
    } catch (const ResourceLimitError& e) {
      err << "resource limit: " << e.what() << "\n";
      return kInputError;
    }
  }
  return kInputError;
}

}  // namespace relxl
