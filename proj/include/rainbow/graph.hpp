#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rainbow/errors.hpp"

namespace rainbow {

using Vertex = std::int32_t;
using Color = std::int32_t;

struct Edge {
  Vertex u, v;
  Color color;
};

// Half-edge as seen from one endpoint.
struct Arc {
  Vertex to;
  Color color;
};

/// Simple undirected graph with a total edge-coloring.
///
/// Vertices and colors carry string names, interned to dense indices;
/// colors are interned in first-seen order. Intended use is build once,
/// query read-only afterwards (queries are safe to run concurrently).
class EdgeColoredGraph {
 public:
  Vertex add_vertex(const std::string& name);
  void add_edge(const std::string& u, const std::string& v, const std::string& color);
  void add_edge(Vertex u, Vertex v, const std::string& color);

  int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int color_count() const { return static_cast<int>(color_names_.size()); }

  std::optional<Vertex> find_vertex(const std::string& name) const;
  // Throws ParseError if the name is unknown.
  Vertex vertex(const std::string& name) const;
  const std::string& vertex_name(Vertex v) const { return vertex_names_[static_cast<size_t>(v)]; }
  const std::string& color_name(Color c) const { return color_names_[static_cast<size_t>(c)]; }

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Arc>& arcs(Vertex v) const { return adj_[static_cast<size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }

  bool adjacent(Vertex u, Vertex v) const;
  std::optional<Color> edge_color(Vertex u, Vertex v) const;

  // Vertex indices sorted by name; the order used wherever outputs must be
  // deterministic (failing pairs, path enumeration).
  std::vector<Vertex> vertices_by_name() const;

  bool same_as(const EdgeColoredGraph& other) const;

 private:
  std::vector<std::string> vertex_names_;
  std::unordered_map<std::string, Vertex> vertex_index_;
  std::vector<std::string> color_names_;
  std::unordered_map<std::string, Color> color_index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Arc>> adj_;
  std::unordered_map<std::uint64_t, Color> edge_lookup_;  // key: normalized (min,max)

  static std::uint64_t edge_key(Vertex u, Vertex v);
};

/// A walk through the graph; colors[i] belongs to edge (vertices[i], vertices[i+1]).
struct PathWitness {
  std::vector<Vertex> vertices;
  std::vector<Color> colors;
};

}  // namespace rainbow
