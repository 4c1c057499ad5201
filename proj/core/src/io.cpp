#include "relxl/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "relxl/errors.hpp"

namespace relxl {

using nlohmann::json;

namespace {

void require_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw InputError(where + " must be an object");
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.contains(key)) throw InputError("unknown key '" + key + "' in " + where);
  }
  for (const auto& key : allowed) {
    if (!obj.contains(key)) throw InputError("missing key '" + key + "' in " + where);
  }
}

std::string vertex_name(const json& j, const std::string& where) {
  if (!j.is_string()) throw InputError(where + " must be a vertex name");
  return j.get<std::string>();
}

}  // namespace

Instance parse_instance(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  require_keys(doc, {"vertices", "edges", "family"}, "graph");
  if (!doc["vertices"].is_array()) throw InputError("'vertices' must be an array");
  std::vector<std::string> names;
  for (const json& v : doc["vertices"]) names.push_back(vertex_name(v, "vertex"));

  // Index lookups go through a temporary graph so duplicates are reported first.
  const DefiningGraph bare = DefiningGraph::create(names, {});
  auto index = [&](const json& j) {
    const std::string name = vertex_name(j, "edge endpoint");
    auto i = bare.index_of(name);
    if (!i) throw InputError("edge references unknown vertex '" + name + "'");
    return *i;
  };

  if (!doc["edges"].is_array()) throw InputError("'edges' must be an array");
  std::vector<Edge> edges;
  for (const json& e : doc["edges"]) {
    require_keys(e, {"u", "v", "m"}, "edge");
    if (!e["m"].is_number_integer()) throw InputError("edge label must be an integer");
    edges.push_back({index(e["u"]), index(e["v"]), e["m"].get<int>()});
  }
  DefiningGraph graph = DefiningGraph::create(names, edges);

  if (!doc["family"].is_array()) throw InputError("'family' must be an array of arrays");
  std::vector<VertexSet> parts;
  for (const json& part : doc["family"]) {
    if (!part.is_array()) throw InputError("'family' must be an array of arrays");
    VertexSet s;
    for (const json& v : part) {
      const std::string name = vertex_name(v, "family member");
      auto i = graph.index_of(name);
      if (!i) throw InputError("family references unknown vertex '" + name + "'");
      if (s.contains(*i)) throw InputError("vertex '" + name + "' repeated in a part");
      s = s.with(*i);
    }
    parts.push_back(s);
  }
  SubgraphFamily family = SubgraphFamily::create(graph, parts);
  return Instance{std::move(graph), std::move(family)};
}

std::string serialize_instance(const Instance& instance) {
  const DefiningGraph& g = instance.graph;
  json doc;
  doc["vertices"] = g.names();
  doc["edges"] = json::array();
  for (const Edge& e : g.edges()) doc["edges"].push_back({{"u", g.name(e.u)}, {"v", g.name(e.v)}, {"m", e.label}});
  doc["family"] = json::array();
  for (VertexSet part : instance.family.parts()) {
    json members = json::array();
    for (int v : part.members()) members.push_back(g.name(v));
    doc["family"].push_back(members);
  }
  return doc.dump(2);
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_instance(text.str());
}

}  // namespace relxl
