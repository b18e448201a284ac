#include "rainbow/graph.hpp"

#include <algorithm>

namespace rainbow {

std::uint64_t EdgeColoredGraph::edge_key(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

Vertex EdgeColoredGraph::add_vertex(const std::string& name) {
  if (name.empty()) throw ParseError("vertex name must be non-empty");
  if (vertex_index_.count(name)) throw ParseError("duplicate vertex '" + name + "'");
  Vertex v = static_cast<Vertex>(vertex_names_.size());
  vertex_names_.push_back(name);
  vertex_index_.emplace(name, v);
  adj_.emplace_back();
  return v;
}

void EdgeColoredGraph::add_edge(const std::string& u, const std::string& v,
                                const std::string& color) {
  auto ui = find_vertex(u), vi = find_vertex(v);
  if (!ui) throw ParseError("unknown vertex reference '" + u + "'");
  if (!vi) throw ParseError("unknown vertex reference '" + v + "'");
  add_edge(*ui, *vi, color);
}

void EdgeColoredGraph::add_edge(Vertex u, Vertex v, const std::string& color) {
  if (u == v) throw ParseError("self-loop at vertex '" + vertex_name(u) + "'");
  if (color.empty())
    throw ParseError("missing color on edge (" + vertex_name(u) + "," + vertex_name(v) + ")");
  auto key = edge_key(u, v);
  if (edge_lookup_.count(key))
    throw ParseError("duplicate edge (" + vertex_name(u) + "," + vertex_name(v) + ")");
  Color c;
  auto it = color_index_.find(color);
  if (it == color_index_.end()) {
    c = static_cast<Color>(color_names_.size());
    color_names_.push_back(color);
    color_index_.emplace(color, c);
  } else {
    c = it->second;
  }
  edges_.push_back(Edge{u, v, c});
  adj_[static_cast<size_t>(u)].push_back(Arc{v, c});
  adj_[static_cast<size_t>(v)].push_back(Arc{u, c});
  edge_lookup_.emplace(key, c);
}

std::optional<Vertex> EdgeColoredGraph::find_vertex(const std::string& name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

Vertex EdgeColoredGraph::vertex(const std::string& name) const {
  auto v = find_vertex(name);
  if (!v) throw ParseError("unknown vertex '" + name + "'");
  return *v;
}

bool EdgeColoredGraph::adjacent(Vertex u, Vertex v) const {
  return edge_lookup_.count(edge_key(u, v)) > 0;
}

std::optional<Color> EdgeColoredGraph::edge_color(Vertex u, Vertex v) const {
  auto it = edge_lookup_.find(edge_key(u, v));
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

std::vector<Vertex> EdgeColoredGraph::vertices_by_name() const {
  std::vector<Vertex> order(vertex_names_.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<Vertex>(i);
  std::sort(order.begin(), order.end(),
            [&](Vertex a, Vertex b) { return vertex_name(a) < vertex_name(b); });
  return order;
}

bool EdgeColoredGraph::same_as(const EdgeColoredGraph& other) const {
  if (vertex_names_ != other.vertex_names_) return false;
  if (edges_.size() != other.edges_.size()) return false;
  for (size_t i = 0; i < edges_.size(); ++i) {
    const Edge& a = edges_[i];
    const Edge& b = other.edges_[i];
    if (vertex_name(a.u) != other.vertex_name(b.u)) return false;
    if (vertex_name(a.v) != other.vertex_name(b.v)) return false;
    if (color_name(a.color) != other.color_name(b.color)) return false;
  }
  return true;
}

}  // namespace rainbow
