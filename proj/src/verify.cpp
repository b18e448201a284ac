#include "rainbow/verify.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <unordered_map>

namespace rainbow {

namespace {

// ---------- color sets ----------

template <int W>
struct FixedMask {
  std::array<std::uint64_t, W> words{};

  static FixedMask make(int) { return {}; }
  bool test(int c) const { return (words[static_cast<size_t>(c >> 6)] >> (c & 63)) & 1; }
  void set(int c) { words[static_cast<size_t>(c >> 6)] |= std::uint64_t(1) << (c & 63); }
  bool intersects(const FixedMask& o) const {
    for (int i = 0; i < W; ++i)
      if (words[static_cast<size_t>(i)] & o.words[static_cast<size_t>(i)]) return true;
    return false;
  }
  bool operator==(const FixedMask&) const = default;
  size_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (int i = 0; i < W; ++i) {
      h ^= words[static_cast<size_t>(i)];
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

struct DynMask {
  std::vector<std::uint64_t> words;

  static DynMask make(int colors) {
    DynMask m;
    m.words.assign(static_cast<size_t>(colors / 64 + 1), 0);
    return m;
  }
  bool test(int c) const { return (words[static_cast<size_t>(c >> 6)] >> (c & 63)) & 1; }
  void set(int c) { words[static_cast<size_t>(c >> 6)] |= std::uint64_t(1) << (c & 63); }
  bool intersects(const DynMask& o) const {
    for (size_t i = 0; i < words.size(); ++i)
      if (words[i] & o.words[i]) return true;
    return false;
  }
  bool operator==(const DynMask&) const = default;
  size_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint64_t w : words) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

template <class MaskT>
struct StateKey {
  Vertex v;
  MaskT used;
  bool operator==(const StateKey&) const = default;
};

template <class MaskT>
struct StateKeyHash {
  size_t operator()(const StateKey<MaskT>& k) const {
    return k.used.hash() * 31u + static_cast<size_t>(k.v);
  }
};

// ---------- shared helpers ----------

std::optional<std::pair<Vertex, Vertex>> unreachable_pair(const EdgeColoredGraph& g) {
  if (g.vertex_count() == 0) return std::nullopt;
  auto order = g.vertices_by_name();
  auto dist = bfs_distances(g, order.front());
  for (Vertex v : order)
    if (dist[static_cast<size_t>(v)] == kUnreachable) return std::make_pair(order.front(), v);
  return std::nullopt;
}

// The subgraph a u-v path can live in: the blocks along the block-cut tree
// path, plus the ordered colors of the bridges every u-v path must cross.
struct ChainContext {
  std::vector<char> allowed;
  std::vector<int> seg;  // index of the first bridge still ahead
  std::vector<Color> bridge_colors;
};

ChainContext build_chain_context(const EdgeColoredGraph& g, Vertex u, Vertex v) {
  size_t n = static_cast<size_t>(g.vertex_count());
  ChainContext ctx;
  ctx.allowed.assign(n, 0);
  ctx.seg.assign(n, 0);

  auto decomp = biconnected_components(g);
  int nblocks = static_cast<int>(decomp.blocks.size());
  std::vector<char> is_cut(n, 0);
  std::vector<int> cut_node(n, -1);
  int nodes = nblocks;
  for (Vertex c : decomp.cut_vertices) {
    is_cut[static_cast<size_t>(c)] = 1;
    cut_node[static_cast<size_t>(c)] = nodes++;
  }
  std::vector<std::vector<int>> tree(static_cast<size_t>(nodes));
  std::vector<int> home_block(n, -1);
  for (int b = 0; b < nblocks; ++b) {
    for (Vertex x : decomp.blocks[static_cast<size_t>(b)]) {
      home_block[static_cast<size_t>(x)] = b;
      if (is_cut[static_cast<size_t>(x)]) {
        tree[static_cast<size_t>(b)].push_back(cut_node[static_cast<size_t>(x)]);
        tree[static_cast<size_t>(cut_node[static_cast<size_t>(x)])].push_back(b);
      }
    }
  }
  auto node_of = [&](Vertex x) {
    return is_cut[static_cast<size_t>(x)] ? cut_node[static_cast<size_t>(x)]
                                          : home_block[static_cast<size_t>(x)];
  };
  int start = node_of(u), goal = node_of(v);
  std::vector<int> parent(static_cast<size_t>(nodes), -2);
  std::deque<int> queue{start};
  parent[static_cast<size_t>(start)] = -1;
  while (!queue.empty() && parent[static_cast<size_t>(goal)] == -2) {
    int x = queue.front();
    queue.pop_front();
    for (int y : tree[static_cast<size_t>(x)]) {
      if (parent[static_cast<size_t>(y)] == -2) {
        parent[static_cast<size_t>(y)] = x;
        queue.push_back(y);
      }
    }
  }
  std::vector<int> path_blocks;
  for (int x = goal; x != -1; x = parent[static_cast<size_t>(x)])
    if (x < nblocks) path_blocks.push_back(x);
  std::reverse(path_blocks.begin(), path_blocks.end());

  int bridges_seen = 0;
  for (int b : path_blocks) {
    bool is_bridge = decomp.block_edges[static_cast<size_t>(b)].size() == 1;
    for (Vertex x : decomp.blocks[static_cast<size_t>(b)]) {
      ctx.allowed[static_cast<size_t>(x)] = 1;
      ctx.seg[static_cast<size_t>(x)] = bridges_seen;
    }
    if (is_bridge) {
      auto e = decomp.block_edges[static_cast<size_t>(b)].front();
      ctx.bridge_colors.push_back(*g.edge_color(e.first, e.second));
      ++bridges_seen;
    }
  }
  // Arriving at the target needs no further bridge.
  ctx.seg[static_cast<size_t>(v)] = static_cast<int>(ctx.bridge_colors.size());
  return ctx;
}

PathWitness strip_cycles(PathWitness w) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::unordered_map<Vertex, size_t> first;
    for (size_t i = 0; i < w.vertices.size(); ++i) {
      auto it = first.find(w.vertices[i]);
      if (it != first.end()) {
        w.vertices.erase(w.vertices.begin() + static_cast<long>(it->second) + 1,
                         w.vertices.begin() + static_cast<long>(i) + 1);
        w.colors.erase(w.colors.begin() + static_cast<long>(it->second),
                       w.colors.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
      first.emplace(w.vertices[i], i);
    }
  }
  return w;
}

template <class MaskT>
struct SearchNode {
  Vertex at;
  MaskT used;
  std::int32_t parent;
  Color via;
};

template <class MaskT>
PathWitness rebuild_witness(const std::vector<SearchNode<MaskT>>& nodes, std::uint32_t idx) {
  PathWitness w;
  for (std::int64_t i = idx; i != -1; i = nodes[static_cast<size_t>(i)].parent) {
    w.vertices.push_back(nodes[static_cast<size_t>(i)].at);
    if (nodes[static_cast<size_t>(i)].parent != -1)
      w.colors.push_back(nodes[static_cast<size_t>(i)].via);
  }
  std::reverse(w.vertices.begin(), w.vertices.end());
  std::reverse(w.colors.begin(), w.colors.end());
  return w;
}

// Memoized rainbow-walk search within the chain subgraph. A rainbow walk
// exists iff a rainbow path does (cutting a revisit keeps colors distinct),
// so states are (vertex, used colors) and the witness is de-cycled at the end.
template <class MaskT>
std::optional<PathWitness> walk_search(const EdgeColoredGraph& g, Vertex u, Vertex v,
                                       const ChainContext& ctx, VerifyStats* stats) {
  std::vector<MaskT> suffix(ctx.bridge_colors.size() + 1, MaskT::make(g.color_count()));
  for (int i = static_cast<int>(ctx.bridge_colors.size()) - 1; i >= 0; --i) {
    suffix[static_cast<size_t>(i)] = suffix[static_cast<size_t>(i) + 1];
    suffix[static_cast<size_t>(i)].set(ctx.bridge_colors[static_cast<size_t>(i)]);
  }

  std::vector<SearchNode<MaskT>> nodes;
  std::unordered_map<StateKey<MaskT>, std::uint32_t, StateKeyHash<MaskT>> seen;
  MaskT empty = MaskT::make(g.color_count());
  nodes.push_back({u, empty, -1, -1});
  seen.emplace(StateKey<MaskT>{u, empty}, 0);
  std::deque<std::uint32_t> work{0};

  while (!work.empty()) {
    std::uint32_t idx = work.front();
    work.pop_front();
    SearchNode<MaskT> node = nodes[idx];
    for (const Arc& a : g.arcs(node.at)) {
      if (!ctx.allowed[static_cast<size_t>(a.to)]) continue;
      if (node.used.test(a.color)) continue;
      MaskT next = node.used;
      next.set(a.color);
      if (suffix[static_cast<size_t>(ctx.seg[static_cast<size_t>(a.to)])].intersects(next))
        continue;
      StateKey<MaskT> key{a.to, next};
      if (seen.count(key)) continue;
      auto nidx = static_cast<std::uint32_t>(nodes.size());
      nodes.push_back({a.to, next, static_cast<std::int32_t>(idx), a.color});
      seen.emplace(std::move(key), nidx);
      if (a.to == v) {
        if (stats) stats->states_explored += nodes.size();
        return strip_cycles(rebuild_witness(nodes, nidx));
      }
      work.push_back(nidx);
    }
  }
  if (stats) stats->states_explored += nodes.size();
  return std::nullopt;
}

// Memoized search down the tight-edge DAG: visits only edges lying on some
// shortest u-v path, so any hit is a rainbow shortest path.
template <class MaskT>
std::optional<PathWitness> dag_search(const EdgeColoredGraph& g, Vertex u, Vertex v,
                                      const std::vector<int>& dist_u,
                                      const std::vector<int>& dist_v, VerifyStats* stats) {
  int total = dist_u[static_cast<size_t>(v)];
  std::vector<SearchNode<MaskT>> nodes;
  std::unordered_map<StateKey<MaskT>, std::uint32_t, StateKeyHash<MaskT>> seen;
  MaskT empty = MaskT::make(g.color_count());
  nodes.push_back({u, empty, -1, -1});
  seen.emplace(StateKey<MaskT>{u, empty}, 0);
  std::vector<std::uint32_t> work{0};

  while (!work.empty()) {
    std::uint32_t idx = work.back();
    work.pop_back();
    SearchNode<MaskT> node = nodes[idx];
    for (const Arc& a : g.arcs(node.at)) {
      size_t to = static_cast<size_t>(a.to);
      if (dist_u[to] != dist_u[static_cast<size_t>(node.at)] + 1) continue;
      if (dist_v[to] == kUnreachable || dist_u[to] + dist_v[to] != total) continue;
      if (node.used.test(a.color)) continue;
      MaskT next = node.used;
      next.set(a.color);
      StateKey<MaskT> key{a.to, next};
      if (seen.count(key)) continue;
      auto nidx = static_cast<std::uint32_t>(nodes.size());
      nodes.push_back({a.to, next, static_cast<std::int32_t>(idx), a.color});
      seen.emplace(std::move(key), nidx);
      if (a.to == v) {
        if (stats) stats->states_explored += nodes.size();
        return rebuild_witness(nodes, nidx);
      }
      work.push_back(nidx);
    }
  }
  if (stats) stats->states_explored += nodes.size();
  return std::nullopt;
}

template <class F>
auto dispatch_mask(int colors, F&& f) {
  if (colors <= 64) return f(FixedMask<1>{});
  if (colors <= 128) return f(FixedMask<2>{});
  if (colors <= 256) return f(FixedMask<4>{});
  return f(DynMask::make(colors));
}

// ---------- antichain families ----------

// Keeps only minimal sets; a dominated insert is dropped, a dominating
// insert evicts its supersets. Extending a minimal set covers every
// extension of the sets it displaced, so reachability answers are intact.
bool antichain_insert(std::vector<std::uint32_t>& fam, std::uint32_t s) {
  for (std::uint32_t t : fam)
    if ((t & s) == t) return false;
  fam.erase(std::remove_if(fam.begin(), fam.end(),
                           [&](std::uint32_t t) { return (t & s) == s; }),
            fam.end());
  fam.push_back(s);
  return true;
}

std::vector<std::vector<std::uint32_t>> reach_families_all_paths(const EdgeColoredGraph& g,
                                                                 Vertex s,
                                                                 std::uint64_t* states = nullptr) {
  size_t n = static_cast<size_t>(g.vertex_count());
  std::vector<std::vector<std::uint32_t>> fam(n);
  std::deque<std::pair<Vertex, std::uint32_t>> work;
  fam[static_cast<size_t>(s)].push_back(0);
  work.emplace_back(s, 0);
  while (!work.empty()) {
    auto [u, set] = work.front();
    work.pop_front();
    const auto& here = fam[static_cast<size_t>(u)];
    if (std::find(here.begin(), here.end(), set) == here.end()) continue;  // displaced
    for (const Arc& a : g.arcs(u)) {
      if ((set >> a.color) & 1) continue;
      std::uint32_t next = set | (std::uint32_t(1) << a.color);
      if (antichain_insert(fam[static_cast<size_t>(a.to)], next)) {
        if (states) ++*states;
        work.emplace_back(a.to, next);
      }
    }
  }
  return fam;
}

std::vector<std::vector<std::uint32_t>> reach_families_shortest(const EdgeColoredGraph& g,
                                                                const ShortestPathDag& dag,
                                                                std::uint64_t* states = nullptr) {
  size_t n = static_cast<size_t>(g.vertex_count());
  std::vector<std::vector<std::uint32_t>> fam(n);
  fam[static_cast<size_t>(dag.source)].push_back(0);
  std::vector<Vertex> order;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (dag.dist[static_cast<size_t>(v)] != kUnreachable) order.push_back(v);
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return dag.dist[static_cast<size_t>(a)] < dag.dist[static_cast<size_t>(b)];
  });
  for (Vertex v : order) {
    if (v == dag.source) continue;
    for (Vertex pred : dag.tight_in[static_cast<size_t>(v)]) {
      Color c = *g.edge_color(pred, v);
      for (std::uint32_t set : fam[static_cast<size_t>(pred)]) {
        if ((set >> c) & 1) continue;
        if (antichain_insert(fam[static_cast<size_t>(v)], set | (std::uint32_t(1) << c)) && states)
          ++*states;
      }
    }
  }
  return fam;
}

void check_color_guard(const EdgeColoredGraph& g, int color_guard) {
  if (g.color_count() > color_guard)
    throw Refusal("color count " + std::to_string(g.color_count()) + " exceeds the 2^k guard of " +
                  std::to_string(color_guard) +
                  "; use the brute single-pair search for instances with many colors");
}

Verdict not_connected_verdict(std::pair<Vertex, Vertex> pair, std::string algorithm) {
  Verdict verdict;
  verdict.yes = false;
  verdict.failing_pair = pair;
  verdict.algorithm = std::move(algorithm);
  return verdict;
}

}  // namespace

// ---------- public operations ----------

ReachFamilies rainbow_reach_fpt(const EdgeColoredGraph& g, Vertex s, int color_guard) {
  check_color_guard(g, color_guard);
  ReachFamilies out;
  out.source = s;
  out.family = reach_families_all_paths(g, s);
  return out;
}

Verdict rc_verify(const EdgeColoredGraph& g, RcAlgo algo, int color_guard) {
  Verdict verdict;
  verdict.algorithm = algo == RcAlgo::Fpt ? "rc/fpt" : "rc/brute";
  if (auto bad = unreachable_pair(g)) return not_connected_verdict(*bad, verdict.algorithm);
  if (algo == RcAlgo::Fpt) check_color_guard(g, color_guard);

  auto order = g.vertices_by_name();
  for (size_t i = 0; i < order.size(); ++i) {
    std::vector<std::vector<std::uint32_t>> fam;
    if (algo == RcAlgo::Fpt) fam = reach_families_all_paths(g, order[i], &verdict.stats.states_explored);
    for (size_t j = i + 1; j < order.size(); ++j) {
      ++verdict.stats.pairs_checked;
      bool ok = algo == RcAlgo::Fpt
                    ? !fam[static_cast<size_t>(order[j])].empty()
                    : rainbow_path_between(g, order[i], order[j], &verdict.stats).has_value();
      if (!ok) {
        verdict.yes = false;
        verdict.failing_pair = std::make_pair(order[i], order[j]);
        return verdict;
      }
    }
  }
  verdict.yes = true;
  return verdict;
}

std::optional<PathWitness> rainbow_path_between(const EdgeColoredGraph& g, Vertex u, Vertex v,
                                                VerifyStats* stats) {
  if (u == v) return PathWitness{{u}, {}};
  auto dist = bfs_distances(g, u);
  if (dist[static_cast<size_t>(v)] == kUnreachable) return std::nullopt;
  ChainContext ctx = build_chain_context(g, u, v);
  return dispatch_mask(g.color_count(), [&](auto tag) {
    using MaskT = decltype(tag);
    return walk_search<MaskT>(g, u, v, ctx, stats);
  });
}

std::optional<PathWitness> rainbow_shortest_path_between(const EdgeColoredGraph& g, Vertex u,
                                                         Vertex v, VerifyStats* stats) {
  if (u == v) return PathWitness{{u}, {}};
  auto dist_u = bfs_distances(g, u);
  if (dist_u[static_cast<size_t>(v)] == kUnreachable) return std::nullopt;
  auto dist_v = bfs_distances(g, v);
  return dispatch_mask(g.color_count(), [&](auto tag) {
    using MaskT = decltype(tag);
    return dag_search<MaskT>(g, u, v, dist_u, dist_v, stats);
  });
}

namespace {

// Shared core of the shortest-path verifiers: check every pair in name
// order over precomputed distance rows.
Verdict src_check_all_pairs(const EdgeColoredGraph& g, std::string algorithm) {
  Verdict verdict;
  verdict.algorithm = std::move(algorithm);
  auto order = g.vertices_by_name();
  std::vector<std::vector<int>> rows(static_cast<size_t>(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) rows[static_cast<size_t>(v)] = bfs_distances(g, v);

  for (size_t i = 0; i < order.size(); ++i) {
    for (size_t j = i + 1; j < order.size(); ++j) {
      ++verdict.stats.pairs_checked;
      auto hit = dispatch_mask(g.color_count(), [&](auto tag) {
        using MaskT = decltype(tag);
        return dag_search<MaskT>(g, order[i], order[j], rows[static_cast<size_t>(order[i])],
                                 rows[static_cast<size_t>(order[j])], &verdict.stats);
      });
      if (!hit) {
        verdict.yes = false;
        verdict.failing_pair = std::make_pair(order[i], order[j]);
        return verdict;
      }
    }
  }
  verdict.yes = true;
  return verdict;
}

// Largest pair count and the pair attaining it, for guard messages.
struct GeodecityScan {
  std::uint64_t max_count = 0;
  std::pair<Vertex, Vertex> pair{0, 0};
};

GeodecityScan scan_geodecity(const EdgeColoredGraph& g) {
  GeodecityScan scan;
  auto order = g.vertices_by_name();
  for (size_t i = 0; i < order.size(); ++i) {
    auto dag = shortest_path_dag(g, order[i]);
    for (size_t j = i + 1; j < order.size(); ++j) {
      std::uint64_t c = dag.path_count[static_cast<size_t>(order[j])];
      if (c > scan.max_count) {
        scan.max_count = c;
        scan.pair = {order[i], order[j]};
      }
    }
  }
  return scan;
}

}  // namespace

Verdict src_verify_enumerate(const EdgeColoredGraph& g, std::optional<std::uint64_t> cap) {
  std::string algorithm = "src/enumerate";
  if (auto bad = unreachable_pair(g)) return not_connected_verdict(*bad, algorithm);
  if (cap) {
    auto order = g.vertices_by_name();
    for (size_t i = 0; i < order.size(); ++i) {
      auto dag = shortest_path_dag(g, order[i]);
      for (size_t j = i + 1; j < order.size(); ++j) {
        std::uint64_t c = dag.path_count[static_cast<size_t>(order[j])];
        if (c > *cap)
          throw Refusal("pair (" + g.vertex_name(order[i]) + "," + g.vertex_name(order[j]) +
                        ") has " + std::to_string(c) + " shortest paths, above the cap of " +
                        std::to_string(*cap));
      }
    }
  }
  return src_check_all_pairs(g, algorithm);
}

Verdict src_verify_kgeodetic(const EdgeColoredGraph& g, std::uint64_t k_max) {
  std::string algorithm = "src/kgeodetic";
  if (auto bad = unreachable_pair(g)) return not_connected_verdict(*bad, algorithm);
  auto scan = scan_geodecity(g);
  if (scan.max_count > k_max)
    throw Refusal("graph is not " + std::to_string(k_max) + "-geodetic: pair (" +
                  g.vertex_name(scan.pair.first) + "," + g.vertex_name(scan.pair.second) +
                  ") has " + std::to_string(scan.max_count) + " shortest paths");
  return src_check_all_pairs(g, algorithm);
}

Verdict src_verify_geodetic(const EdgeColoredGraph& g) {
  Verdict verdict;
  verdict.algorithm = "src/geodetic";
  if (auto bad = unreachable_pair(g)) return not_connected_verdict(*bad, verdict.algorithm);
  auto order = g.vertices_by_name();
  for (size_t i = 0; i < order.size(); ++i) {
    auto dag = shortest_path_dag(g, order[i]);
    for (size_t j = i + 1; j < order.size(); ++j) {
      if (dag.path_count[static_cast<size_t>(order[j])] != 1)
        throw Refusal("graph is not geodetic: pair (" + g.vertex_name(order[i]) + "," +
                      g.vertex_name(order[j]) + ") has " +
                      std::to_string(dag.path_count[static_cast<size_t>(order[j])]) +
                      " shortest paths");
    }
    // Unique predecessors let us read each pair's only shortest path
    // straight off the DAG.
    for (size_t j = i + 1; j < order.size(); ++j) {
      ++verdict.stats.pairs_checked;
      std::vector<char> used(static_cast<size_t>(g.color_count()), 0);
      bool rainbow = true;
      for (Vertex x = order[j]; x != order[i];) {
        Vertex pred = dag.tight_in[static_cast<size_t>(x)].front();
        Color c = *g.edge_color(pred, x);
        if (used[static_cast<size_t>(c)]) {
          rainbow = false;
          break;
        }
        used[static_cast<size_t>(c)] = 1;
        x = pred;
      }
      if (!rainbow) {
        verdict.yes = false;
        verdict.failing_pair = std::make_pair(order[i], order[j]);
        return verdict;
      }
    }
  }
  verdict.yes = true;
  return verdict;
}

Verdict src_verify_fpt(const EdgeColoredGraph& g, int color_guard) {
  Verdict verdict;
  verdict.algorithm = "src/fpt";
  if (auto bad = unreachable_pair(g)) return not_connected_verdict(*bad, verdict.algorithm);
  check_color_guard(g, color_guard);
  auto order = g.vertices_by_name();
  for (size_t i = 0; i < order.size(); ++i) {
    auto dag = shortest_path_dag(g, order[i]);
    auto fam = reach_families_shortest(g, dag, &verdict.stats.states_explored);
    for (size_t j = i + 1; j < order.size(); ++j) {
      ++verdict.stats.pairs_checked;
      if (fam[static_cast<size_t>(order[j])].empty()) {
        verdict.yes = false;
        verdict.failing_pair = std::make_pair(order[i], order[j]);
        return verdict;
      }
    }
  }
  verdict.yes = true;
  return verdict;
}

}  // namespace rainbow
