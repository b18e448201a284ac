#pragma once

#include <string>

#include "json.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

// Interchange document: {"vertices": [names...],
//                        "edges": [{"u":..,"v":..,"color":..}...],
//                        "meta": {...}}  (meta optional, kept verbatim)
struct GraphDocument {
  EdgeColoredGraph graph;
  nlohmann::ordered_json meta;  // null when absent
};

GraphDocument load_graph(const nlohmann::ordered_json& doc);
GraphDocument load_graph_text(const std::string& text);
GraphDocument load_graph_file(const std::string& path);

nlohmann::ordered_json save_graph(const EdgeColoredGraph& g,
                                  const nlohmann::ordered_json& meta = nullptr);

// One node line per vertex, one labeled undirected edge line per edge,
// both in storage order; byte-identical for identical inputs.
std::string export_dot(const EdgeColoredGraph& g);

}  // namespace rainbow
