#include "relxl/reports.hpp"

#include <sstream>

#include <json.hpp>

namespace relxl {

using nlohmann::json;

namespace {

json edge_json(const DefiningGraph& g, const InterEdge& e) {
  return {{"u", g.name(e.edge.u)}, {"v", g.name(e.edge.v)}, {"m", e.edge.label}, {"parts", {e.part_u, e.part_v}}};
}

std::string edge_text(const DefiningGraph& g, const InterEdge& e) {
  return g.name(e.edge.u) + "-" + g.name(e.edge.v) + " (m=" + std::to_string(e.edge.label) + ")";
}

json set_json(const DefiningGraph& g, VertexSet s) {
  json out = json::array();
  for (int v : s.members()) out.push_back(g.name(v));
  return out;
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string rel_json(const Instance& instance, const RelReport& rel, const RelReport& rel_prime) {
  const DefiningGraph& g = instance.graph;
  json doc;
  doc["inter_edges"] = inter_edges(g, instance.family).size();
  for (auto [name, r] : {std::pair("rel", &rel), std::pair("rel_prime", &rel_prime)}) {
    doc[name]["holds"] = r->holds;
    doc[name]["violators"] = json::array();
    for (const InterEdge& e : r->violators) doc[name]["violators"].push_back(edge_json(g, e));
  }
  return doc.dump(2);
}

std::string rel_text(const Instance& instance, const RelReport& rel, const RelReport& rel_prime) {
  const DefiningGraph& g = instance.graph;
  std::ostringstream out;
  out << "inter-edges: " << inter_edges(g, instance.family).size() << "\n";
  for (auto [name, r] : {std::pair("REL", &rel), std::pair("REL'", &rel_prime)}) {
    out << name << ": " << (r->holds ? "holds" : "fails") << "\n";
    for (const InterEdge& e : r->violators) out << "  violator " << edge_text(g, e) << "\n";
  }
  return out.str();
}

std::string classifier_json(const ClassifierReport& r) {
  json doc;
  doc["spherical"] = r.spherical;
  doc["affine"] = r.affine;
  doc["two_dimensional"] = r.two_dimensional;
  doc["locally_reducible"] = "unknown";
  doc["fc_type"] = r.fc_type;
  doc["large"] = r.large;
  doc["extra_large"] = r.extra_large;
  doc["xxl"] = r.xxl;
  doc["right_angled"] = r.right_angled;
  doc["join_decomposable"] = r.join_decomposable;
  doc["known_kpi1_class"] = r.known_kpi1_class();
  doc["notes"] = r.notes;
  return doc.dump(2);
}

std::string classifier_text(const ClassifierReport& r) {
  std::ostringstream out;
  auto flag = [&](const char* name, bool v) { out << name << ": " << (v ? "yes" : "no") << "\n"; };
  flag("spherical", r.spherical);
  flag("affine", r.affine);
  flag("2-dimensional", r.two_dimensional);
  out << "locally reducible: unknown\n";
  flag("FC", r.fc_type);
  flag("large", r.large);
  flag("extra-large", r.extra_large);
  flag("XXL", r.xxl);
  flag("right-angled", r.right_angled);
  flag("join", r.join_decomposable);
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  return out.str();
}

std::string poset_json(const DefiningGraph& g, const SubsetPoset& p, const DerivedComplex& k) {
  json doc;
  doc["elements"] = json::array();
  for (const PosetElement& e : p.elements()) doc["elements"].push_back({{"set", set_json(g, e.set)}, {"tags", tag_names(e.tags)}});
  doc["covers"] = json::array();
  for (auto [i, j] : p.covering_pairs()) doc["covers"].push_back({i, j});
  json counts = json::array();
  for (int d = 0; d <= k.dimension(); ++d) counts.push_back(k.count(d));
  doc["simplex_counts"] = counts;
  doc["dimension"] = k.dimension();
  return doc.dump(2);
}

std::string poset_text(const DefiningGraph& g, const std::string& name, const SubsetPoset& p, const DerivedComplex& k) {
  std::ostringstream out;
  out << name << ": " << p.size() << " elements, derived complex of dimension " << k.dimension() << "\n";
  for (int d = 0; d <= k.dimension(); ++d) out << "  " << d << "-simplices: " << k.count(d) << "\n";
  for (const PosetElement& e : p.elements()) {
    out << "  " << g.format_set(e.set);
    for (const auto& t : tag_names(e.tags)) out << " " << t;
    out << "\n";
  }
  return out.str();
}

std::string poset_dot(const DefiningGraph& g, const std::string& name, const SubsetPoset& p) {
  std::ostringstream out;
  out << "digraph " << dot_quote(name) << " {\n  rankdir=BT;\n";
  const auto& els = p.elements();
  for (std::size_t i = 0; i < els.size(); ++i) {
    std::string label = g.format_set(els[i].set);
    for (const auto& t : tag_names(els[i].tags)) label += "\\n" + t;
    out << "  n" << i << " [label=" << dot_quote(label) << "];\n";
  }
  for (auto [i, j] : p.covering_pairs()) out << "  n" << i << " -> n" << j << ";\n";
  out << "}\n";
  return out.str();
}

namespace {

json certificate_json(const LinkCertificate& c) {
  json doc;
  doc["vertex_type"] = c.vertex_type;
  doc["case"] = static_cast<int>(c.link_case);
  doc["minimal_cycle"] = c.minimal_cycle;
  doc["length_units"] = c.length_units ? json(*c.length_units) : json(nullptr);
  doc["status"] = to_string(c.status);
  doc["radius"] = c.radius;
  doc["method"] = c.method;
  if (!c.note.empty()) doc["note"] = c.note;
  return doc;
}

}  // namespace

std::string certificates_json(const LinkConditionReport& r) {
  json doc;
  doc["passed"] = r.passed();
  doc["certificates"] = json::array();
  for (const auto& c : r.certificates) doc["certificates"].push_back(certificate_json(c));
  return doc.dump(2);
}

std::string certificates_text(const LinkConditionReport& r) {
  std::ostringstream out;
  for (const auto& c : r.certificates) {
    out << "case " << static_cast<int>(c.link_case) << " " << c.vertex_type << ": " << to_string(c.status);
    if (c.length_units) {
      out << ", shortest cycle " << *c.length_units << " units (" << c.minimal_cycle.size() << " edges)";
    } else {
      out << ", no cycle";
    }
    if (c.radius > 0) out << ", radius " << c.radius;
    out << "\n";
    if (c.status == CertStatus::Fail) {
      out << "  witness:";
      for (const auto& v : c.minimal_cycle) out << " [" << v << "]";
      out << "\n";
    }
    if (!c.note.empty()) out << "  " << c.note << "\n";
  }
  out << "link condition: " << (r.passed() ? "pass" : "FAIL") << "\n";
  return out.str();
}

std::string kpi1_json(const Instance& instance, const Kpi1Verdict& v) {
  const DefiningGraph& g = instance.graph;
  json doc;
  doc["status"] = to_string(v.status);
  doc["summary"] = v.summary;
  doc["evidence"] = json::array();
  for (const Evidence& e : v.evidence) {
    doc["evidence"].push_back({{"claim", e.claim}, {"kind", to_string(e.kind)}, {"ok", e.ok}, {"detail", e.detail}});
  }
  doc["violators"] = json::array();
  for (const InterEdge& e : v.violators) doc["violators"].push_back(edge_json(g, e));
  doc["parts"] = json::array();
  for (const PartStatus& p : v.parts) {
    doc["parts"].push_back({{"part", set_json(g, instance.family.part(p.part))},
                            {"provenance", to_string(p.provenance)},
                            {"detail", p.detail}});
  }
  return doc.dump(2);
}

std::string kpi1_text(const Instance& instance, const Kpi1Verdict& v) {
  const DefiningGraph& g = instance.graph;
  std::ostringstream out;
  out << "K(pi,1): " << v.summary << "\n";
  for (const Evidence& e : v.evidence) {
    out << "  [" << (e.ok ? "ok" : "no") << "] (" << to_string(e.kind) << ") " << e.claim;
    if (!e.detail.empty()) out << ": " << e.detail;
    out << "\n";
  }
  for (const InterEdge& e : v.violators) out << "  violator " << edge_text(g, e) << "\n";
  return out.str();
}

namespace {

json witness_json(const DefiningGraph& g, const Witness& w) {
  return {{"edge", {g.name(w.edge.edge.u), g.name(w.edge.edge.v)}},
          {"label", w.edge.edge.label},
          {"third", g.name(w.third)},
          {"delta", set_json(g, w.delta)},
          {"checks",
           {{"connected", w.checks.connected},
            {"two_dimensional", w.checks.two_dimensional},
            {"not_right_angled", w.checks.not_right_angled},
            {"rank3", w.checks.rank3},
            {"type", w.checks.type}}}};
}

}  // namespace

std::string acyl_json(const Instance& instance, const AcylVerdict& v) {
  const DefiningGraph& g = instance.graph;
  json doc;
  doc["status"] = to_string(v.status);
  doc["reason"] = v.reason;
  doc["witness"] = v.witness ? witness_json(g, *v.witness) : json(nullptr);
  doc["rejected"] = json::array();
  for (const auto& [w, why] : v.rejected) {
    json r = witness_json(g, w);
    r["why"] = why;
    doc["rejected"].push_back(r);
  }
  doc["orbit_growth"] = json::array();
  for (const GrowthRow& row : v.growth) {
    doc["orbit_growth"].push_back({{"radius", row.radius}, {"ball_size", row.ball_size}, {"max_syllables", row.max_syllables}});
  }
  if (!v.malnormality.empty()) doc["malnormality"] = v.malnormality;
  return doc.dump(2);
}

std::string acyl_text(const Instance& instance, const AcylVerdict& v) {
  const DefiningGraph& g = instance.graph;
  std::ostringstream out;
  out << "status: " << to_string(v.status) << " (" << v.reason << ")\n";
  for (const auto& [w, why] : v.rejected) out << "  rejected " << g.format_set(w.delta) << ": " << why << "\n";
  if (v.witness) {
    const Witness& w = *v.witness;
    out << "  edge " << edge_text(g, w.edge) << ", third vertex " << g.name(w.third) << ", Delta "
        << g.format_set(w.delta) << " (" << w.checks.type << ")\n";
  }
  for (const GrowthRow& row : v.growth) {
    out << "  radius " << row.radius << ": " << row.ball_size << " elements, max syllables " << row.max_syllables
        << "\n";
  }
  if (!v.malnormality.empty()) out << "  malnormality " << v.malnormality << "\n";
  return out.str();
}

std::string link_json(const LinkGraph& link, const CycleCertificate& girth) {
  json doc;
  doc["case"] = static_cast<int>(link.link_case());
  doc["center"] = link.center();
  doc["radius"] = link.radius();
  doc["truncated"] = link.truncated();
  doc["vertices"] = json::array();
  for (const LinkVertex& v : link.vertices()) {
    doc["vertices"].push_back({{"id", v.id}, {"label", v.label}, {"side", v.side}, {"boundary", v.boundary}});
  }
  doc["edges"] = json::array();
  for (const LinkEdge& e : link.edges()) doc["edges"].push_back({{"u", e.u}, {"v", e.v}, {"length", e.length}});
  doc["shortest_cycle"] = girth.found ? json(girth.cycle) : json(nullptr);
  doc["length_units"] = girth.found ? json(girth.length_units) : json(nullptr);
  return doc.dump(2);
}

std::string link_text(const LinkGraph& link, const CycleCertificate& girth) {
  std::ostringstream out;
  out << "link of " << link.center() << " (case " << static_cast<int>(link.link_case()) << "): "
      << link.vertex_count() << " vertices, " << link.edge_count() << " edges";
  if (link.truncated()) out << ", truncated at radius " << link.radius();
  out << "\n";
  if (girth.found) {
    out << "shortest embedded cycle: " << girth.length_units << " units, " << girth.edge_count() << " edges\n ";
    for (int v : girth.cycle) out << " [" << link.vertices()[static_cast<std::size_t>(v)].label << "]";
    out << "\n";
  } else {
    out << "no embedded cycle\n";
  }
  return out.str();
}

std::string link_dot(const LinkGraph& link) {
  std::ostringstream out;
  out << "graph " << dot_quote("lk " + link.center()) << " {\n";
  for (int i = 0; i < link.vertex_count(); ++i) {
    const LinkVertex& v = link.vertices()[static_cast<std::size_t>(i)];
    out << "  v" << i << " [label=" << dot_quote(v.label) << (v.side == 0 ? ", shape=circle" : ", shape=box")
        << (v.boundary ? ", style=dashed" : "") << "];\n";
  }
  for (const LinkEdge& e : link.edges()) out << "  v" << e.u << " -- v" << e.v << " [label=" << e.length << "];\n";
  out << "}\n";
  return out.str();
}

}  // namespace relxl
