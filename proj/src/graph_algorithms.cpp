#include "rainbow/graph_algorithms.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>

namespace rainbow {

namespace {

constexpr std::uint64_t kCountCap = std::uint64_t(1) << 62;

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  if (s < a || s > kCountCap) return kCountCap;
  return s;
}

}  // namespace

std::vector<int> bfs_distances(const EdgeColoredGraph& g, Vertex s) {
  std::vector<int> dist(static_cast<size_t>(g.vertex_count()), kUnreachable);
  std::deque<Vertex> queue{s};
  dist[static_cast<size_t>(s)] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (const Arc& a : g.arcs(u)) {
      if (dist[static_cast<size_t>(a.to)] == kUnreachable) {
        dist[static_cast<size_t>(a.to)] = dist[static_cast<size_t>(u)] + 1;
        queue.push_back(a.to);
      }
    }
  }
  return dist;
}

int diameter(const EdgeColoredGraph& g) {
  if (g.vertex_count() == 0) throw Refusal("diameter undefined on the empty graph");
  int best = 0;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    auto dist = bfs_distances(g, s);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (dist[static_cast<size_t>(v)] == kUnreachable)
        throw Refusal("diameter undefined: no path between '" + g.vertex_name(s) + "' and '" +
                      g.vertex_name(v) + "'");
      best = std::max(best, dist[static_cast<size_t>(v)]);
    }
  }
  return best;
}

ShortestPathDag shortest_path_dag(const EdgeColoredGraph& g, Vertex s) {
  ShortestPathDag dag;
  dag.source = s;
  dag.dist = bfs_distances(g, s);
  size_t n = static_cast<size_t>(g.vertex_count());
  dag.tight_out.assign(n, {});
  dag.tight_in.assign(n, {});
  dag.path_count.assign(n, 0);
  dag.path_count[static_cast<size_t>(s)] = 1;

  std::vector<Vertex> order;
  order.reserve(n);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (dag.dist[static_cast<size_t>(v)] != kUnreachable) order.push_back(v);
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return dag.dist[static_cast<size_t>(a)] < dag.dist[static_cast<size_t>(b)];
  });

  for (Vertex u : order) {
    for (const Arc& a : g.arcs(u)) {
      if (dag.dist[static_cast<size_t>(a.to)] == dag.dist[static_cast<size_t>(u)] + 1) {
        dag.tight_out[static_cast<size_t>(u)].push_back(a.to);
        dag.tight_in[static_cast<size_t>(a.to)].push_back(u);
      }
    }
  }
  for (Vertex v : order) {
    if (v == s) continue;
    std::uint64_t total = 0;
    for (Vertex u : dag.tight_in[static_cast<size_t>(v)])
      total = saturating_add(total, dag.path_count[static_cast<size_t>(u)]);
    dag.path_count[static_cast<size_t>(v)] = total;
  }
  return dag;
}

std::uint64_t count_shortest_paths(const EdgeColoredGraph& g, Vertex u, Vertex v) {
  if (u == v) return 1;
  return shortest_path_dag(g, u).path_count[static_cast<size_t>(v)];
}

std::vector<PathWitness> enumerate_shortest_paths(const EdgeColoredGraph& g, Vertex u, Vertex v,
                                                  std::optional<std::uint64_t> cap) {
  std::vector<PathWitness> out;
  if (cap && *cap == 0) return out;
  if (u == v) {
    out.push_back(PathWitness{{u}, {}});
    return out;
  }
  auto dist_u = bfs_distances(g, u);
  if (dist_u[static_cast<size_t>(v)] == kUnreachable) return out;
  auto dist_v = bfs_distances(g, v);
  int total = dist_u[static_cast<size_t>(v)];

  // Successor lists restricted to edges on some shortest u-v path, in
  // neighbor-name order so that emitted paths come out lexicographically.
  size_t n = static_cast<size_t>(g.vertex_count());
  std::vector<std::vector<Arc>> succ(n);
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    if (dist_u[static_cast<size_t>(x)] == kUnreachable) continue;
    for (const Arc& a : g.arcs(x)) {
      if (dist_u[static_cast<size_t>(a.to)] == dist_u[static_cast<size_t>(x)] + 1 &&
          dist_v[static_cast<size_t>(a.to)] != kUnreachable &&
          dist_u[static_cast<size_t>(a.to)] + dist_v[static_cast<size_t>(a.to)] == total) {
        succ[static_cast<size_t>(x)].push_back(a);
      }
    }
    std::sort(succ[static_cast<size_t>(x)].begin(), succ[static_cast<size_t>(x)].end(),
              [&](const Arc& a, const Arc& b) { return g.vertex_name(a.to) < g.vertex_name(b.to); });
  }

  PathWitness current;
  current.vertices.push_back(u);
  // Iterative DFS over the filtered DAG.
  struct Frame {
    Vertex at;
    size_t next = 0;
  };
  std::vector<Frame> stack{{u, 0}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.at == v) {
      out.push_back(current);
      if (cap && out.size() >= *cap) break;
      stack.pop_back();
      if (!stack.empty()) {
        current.vertices.pop_back();
        current.colors.pop_back();
      }
      continue;
    }
    const auto& list = succ[static_cast<size_t>(f.at)];
    if (f.next >= list.size()) {
      stack.pop_back();
      if (!stack.empty()) {
        current.vertices.pop_back();
        current.colors.pop_back();
      }
      continue;
    }
    const Arc& a = list[f.next++];
    current.vertices.push_back(a.to);
    current.colors.push_back(a.color);
    stack.push_back(Frame{a.to, 0});
  }
  return out;
}

BlockDecomposition biconnected_components(const EdgeColoredGraph& g) {
  BlockDecomposition out;
  int n = g.vertex_count();
  std::vector<int> num(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0);
  std::vector<int> is_cut(static_cast<size_t>(n), 0);
  std::vector<std::pair<Vertex, Vertex>> edge_stack;
  int counter = 0;

  struct Frame {
    Vertex v;
    Vertex parent;
    size_t next = 0;
    int children = 0;
  };

  auto emit_block = [&](Vertex u, Vertex w) {
    std::vector<std::pair<Vertex, Vertex>> block;
    while (!edge_stack.empty()) {
      auto e = edge_stack.back();
      edge_stack.pop_back();
      block.push_back(e);
      if (e.first == u && e.second == w) break;
    }
    std::set<Vertex> verts;
    for (auto& e : block) {
      verts.insert(e.first);
      verts.insert(e.second);
    }
    out.blocks.emplace_back(verts.begin(), verts.end());
    out.block_edges.push_back(std::move(block));
  };

  for (Vertex root = 0; root < n; ++root) {
    if (num[static_cast<size_t>(root)] != -1) continue;
    std::vector<Frame> stack{{root, -1}};
    num[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = counter++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& arcs = g.arcs(f.v);
      if (f.next < arcs.size()) {
        Vertex w = arcs[f.next++].to;
        if (num[static_cast<size_t>(w)] == -1) {
          edge_stack.emplace_back(f.v, w);
          num[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = counter++;
          f.children++;
          stack.push_back(Frame{w, f.v});
        } else if (w != f.parent && num[static_cast<size_t>(w)] < num[static_cast<size_t>(f.v)]) {
          edge_stack.emplace_back(f.v, w);
          low[static_cast<size_t>(f.v)] =
              std::min(low[static_cast<size_t>(f.v)], num[static_cast<size_t>(w)]);
        }
      } else {
        Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          Frame& p = stack.back();
          low[static_cast<size_t>(p.v)] =
              std::min(low[static_cast<size_t>(p.v)], low[static_cast<size_t>(done.v)]);
          if (low[static_cast<size_t>(done.v)] >= num[static_cast<size_t>(p.v)]) {
            if (p.parent != -1 || p.children > 1) is_cut[static_cast<size_t>(p.v)] = 1;
            emit_block(p.v, done.v);
          }
        }
      }
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (is_cut[static_cast<size_t>(v)]) out.cut_vertices.push_back(v);
  return out;
}

std::vector<std::pair<Vertex, Vertex>> bridges(const EdgeColoredGraph& g) {
  auto decomp = biconnected_components(g);
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const auto& edges : decomp.block_edges)
    if (edges.size() == 1) out.push_back(edges.front());
  return out;
}

WitnessCheck check_witness(const EdgeColoredGraph& g, const PathWitness& w, bool require_rainbow,
                           bool require_shortest) {
  if (w.vertices.empty()) return {false, "empty vertex sequence"};
  if (w.colors.size() + 1 != w.vertices.size())
    return {false, "color count does not match vertex count"};
  for (size_t i = 0; i + 1 < w.vertices.size(); ++i) {
    auto c = g.edge_color(w.vertices[i], w.vertices[i + 1]);
    if (!c)
      return {false, "vertices '" + g.vertex_name(w.vertices[i]) + "' and '" +
                         g.vertex_name(w.vertices[i + 1]) + "' are not adjacent"};
    if (*c != w.colors[i])
      return {false, "edge color mismatch at step " + std::to_string(i)};
  }
  if (require_rainbow) {
    std::set<Color> seen;
    for (Color c : w.colors)
      if (!seen.insert(c).second)
        return {false, "repeated color '" + g.color_name(c) + "'"};
  }
  if (require_shortest) {
    auto dist = bfs_distances(g, w.vertices.front());
    int d = dist[static_cast<size_t>(w.vertices.back())];
    if (static_cast<int>(w.colors.size()) != d)
      return {false, "length " + std::to_string(w.colors.size()) + " but distance is " +
                         std::to_string(d)};
  }
  return {};
}

}  // namespace rainbow
