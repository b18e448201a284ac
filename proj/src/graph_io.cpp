#include "rainbow/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace rainbow {

using nlohmann::ordered_json;

GraphDocument load_graph(const ordered_json& doc) {
  if (!doc.is_object()) throw ParseError("graph document must be a JSON object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw ParseError("graph document missing \"vertices\" array");
  if (!doc.contains("edges") || !doc["edges"].is_array())
    throw ParseError("graph document missing \"edges\" array");

  GraphDocument out;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) throw ParseError("vertex entries must be strings");
    out.graph.add_vertex(v.get<std::string>());
  }
  size_t index = 0;
  for (const auto& e : doc["edges"]) {
    ++index;
    if (!e.is_object())
      throw ParseError("edge " + std::to_string(index) + " must be an object");
    for (const char* field : {"u", "v", "color"}) {
      if (!e.contains(field) || !e[field].is_string())
        throw ParseError("edge " + std::to_string(index) + " missing \"" + field + "\"");
    }
    out.graph.add_edge(e["u"].get<std::string>(), e["v"].get<std::string>(),
                       e["color"].get<std::string>());
  }
  if (doc.contains("meta")) {
    if (!doc["meta"].is_object()) throw ParseError("\"meta\" must be an object");
    out.meta = doc["meta"];
  }
  return out;
}

GraphDocument load_graph_text(const std::string& text) {
  ordered_json doc = ordered_json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError("graph document is not valid JSON");
  return load_graph(doc);
}

GraphDocument load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return load_graph_text(ss.str());
}

ordered_json save_graph(const EdgeColoredGraph& g, const ordered_json& meta) {
  ordered_json doc;
  doc["vertices"] = ordered_json::array();
  for (Vertex v = 0; v < g.vertex_count(); ++v) doc["vertices"].push_back(g.vertex_name(v));
  doc["edges"] = ordered_json::array();
  for (const Edge& e : g.edges()) {
    ordered_json je;
    je["u"] = g.vertex_name(e.u);
    je["v"] = g.vertex_name(e.v);
    je["color"] = g.color_name(e.color);
    doc["edges"].push_back(std::move(je));
  }
  if (!meta.is_null()) doc["meta"] = meta;
  return doc;
}

std::string export_dot(const EdgeColoredGraph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) out << "  \"" << g.vertex_name(v) << "\";\n";
  for (const Edge& e : g.edges()) {
    out << "  \"" << g.vertex_name(e.u) << "\" -- \"" << g.vertex_name(e.v) << "\" [label=\""
        << g.color_name(e.color) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace rainbow
