#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

inline constexpr int kUnreachable = -1;

// Exact unweighted distances from s; kUnreachable where no path exists.
std::vector<int> bfs_distances(const EdgeColoredGraph& g, Vertex s);

// Largest pairwise distance. Throws Refusal on a disconnected graph.
int diameter(const EdgeColoredGraph& g);

/// All shortest paths out of one source, as the DAG of tight edges.
/// A tight edge u->v satisfies dist(v) = dist(u) + 1; every shortest
/// source path is a directed path of tight edges and vice versa.
/// path_count saturates instead of overflowing.
struct ShortestPathDag {
  Vertex source = 0;
  std::vector<int> dist;
  std::vector<std::vector<Vertex>> tight_out;
  std::vector<std::vector<Vertex>> tight_in;
  std::vector<std::uint64_t> path_count;
};

ShortestPathDag shortest_path_dag(const EdgeColoredGraph& g, Vertex s);

// Number of shortest u-v paths; 0 when disconnected.
std::uint64_t count_shortest_paths(const EdgeColoredGraph& g, Vertex u, Vertex v);

// Distinct shortest u-v paths in lexicographic vertex-name order, at most
// cap of them (all when cap is empty). Empty when disconnected.
std::vector<PathWitness> enumerate_shortest_paths(const EdgeColoredGraph& g, Vertex u, Vertex v,
                                                  std::optional<std::uint64_t> cap);

struct BlockDecomposition {
  std::vector<std::vector<Vertex>> blocks;           // vertex sets, one per block
  std::vector<std::vector<std::pair<Vertex, Vertex>>> block_edges;
  std::vector<Vertex> cut_vertices;
};

// Standard block decomposition; every edge lands in exactly one block,
// cut vertices are exactly the block-intersection vertices.
BlockDecomposition biconnected_components(const EdgeColoredGraph& g);

// Edges whose block is a single edge.
std::vector<std::pair<Vertex, Vertex>> bridges(const EdgeColoredGraph& g);

struct WitnessCheck {
  bool ok = true;
  std::string reason;
};

// Re-validates a PathWitness independently: adjacency, color agreement,
// optionally all-distinct colors, optionally length == bfs distance.
WitnessCheck check_witness(const EdgeColoredGraph& g, const PathWitness& w,
                           bool require_rainbow, bool require_shortest);

}  // namespace rainbow
