#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/graph_algorithms.hpp"

namespace rainbow {

// All verifiers are pure read-only queries over the graph; distinct calls
// may run concurrently, and failing pairs are picked by vertex-name order,
// never by timing.

// Color-count guard for the 2^k subset algorithms.
inline constexpr int kDefaultColorGuard = 24;

struct VerifyStats {
  std::uint64_t pairs_checked = 0;
  std::uint64_t states_explored = 0;
};

struct Verdict {
  bool yes = false;
  std::optional<std::pair<Vertex, Vertex>> failing_pair;
  std::optional<PathWitness> witness;  // single-pair queries only
  std::string algorithm;
  VerifyStats stats;
};

/// Per-vertex families of color sets reachable by rainbow paths from one
/// source. family[v] holds bitmasks over interned colors, pruned to the
/// antichain of minimal achievable sets: v is rainbow-reachable with some
/// superset of S iff some member of family[v] is a subset of S's superset;
/// in particular v is rainbow-reachable iff family[v] is non-empty.
struct ReachFamilies {
  Vertex source = 0;
  std::vector<std::vector<std::uint32_t>> family;
};

ReachFamilies rainbow_reach_fpt(const EdgeColoredGraph& g, Vertex s,
                                int color_guard = kDefaultColorGuard);

enum class RcAlgo { Fpt, Brute };

// Is every vertex pair joined by a rainbow path?
Verdict rc_verify(const EdgeColoredGraph& g, RcAlgo algo, int color_guard = kDefaultColorGuard);

// Single-pair rainbow path search: memoized on (vertex, used-color-set),
// restricted to the blocks between u and v, pruned on the colors of the
// bridges still ahead. Exhausts the state space before answering no.
std::optional<PathWitness> rainbow_path_between(const EdgeColoredGraph& g, Vertex u, Vertex v,
                                                VerifyStats* stats = nullptr);

// Single-pair strong query: is some shortest u-v path rainbow?
std::optional<PathWitness> rainbow_shortest_path_between(const EdgeColoredGraph& g, Vertex u,
                                                         Vertex v, VerifyStats* stats = nullptr);

// Is every vertex pair joined by a rainbow shortest path? Checks every
// shortest path per pair over the tight-edge DAG. With a bounded cap the
// verifier first requires count_shortest_paths <= cap for every pair and
// refuses otherwise, naming the offending pair.
Verdict src_verify_enumerate(const EdgeColoredGraph& g,
                             std::optional<std::uint64_t> cap = std::nullopt);

// Same answer as src_verify_enumerate(unlimited); refuses when some pair
// has more than k_max shortest paths.
Verdict src_verify_kgeodetic(const EdgeColoredGraph& g, std::uint64_t k_max);

// Same answer on geodetic inputs (exactly one shortest path per pair);
// refuses on non-geodetic input.
Verdict src_verify_geodetic(const EdgeColoredGraph& g);

// Color-subset DP restricted to each source's shortest-path DAG; every DAG
// path is a shortest path, so this matches src_verify_enumerate(unlimited).
Verdict src_verify_fpt(const EdgeColoredGraph& g, int color_guard = kDefaultColorGuard);

}  // namespace rainbow
