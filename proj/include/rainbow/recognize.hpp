#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

enum class ScaledVerdict { Yes, No, UnknownAtScale };

struct BipartiteResult {
  bool bipartite = false;
  std::vector<int> side;          // 0/1 per vertex when bipartite
  std::vector<Vertex> odd_cycle;  // when not
};

struct RegularityResult {
  bool regular = false;
  int degree = 0;           // common degree when regular, else the majority degree
  Vertex deviant = -1;      // name-least vertex whose degree differs
  int deviant_degree = 0;
};

struct BlockGraphResult {
  bool block_graph = false;
  std::vector<Vertex> offending_block;  // a block that is not a clique
};

struct ChordalResult {
  bool chordal = false;
  std::vector<Vertex> elimination_order;  // perfect elimination order when chordal
  std::vector<Vertex> hole;               // induced cycle of length >= 4 when not
};

struct IntervalResult {
  ScaledVerdict verdict = ScaledVerdict::No;
  std::vector<std::vector<Vertex>> clique_path;  // ordered maximal cliques on yes
  std::vector<Vertex> hole;                      // when not chordal
};

struct ClawFreeResult {
  bool claw_free = false;
  std::array<Vertex, 4> claw{-1, -1, -1, -1};  // center, then three leaves
};

struct OuterplanarResult {
  ScaledVerdict verdict = ScaledVerdict::No;
  std::string reason;  // "k4-minor" or "k23-subdivision" on no
  // For k4-minor: the irreducible core left by series-parallel reduction
  // (minimum degree 3, contracts to K4). For k23-subdivision: the two
  // centers followed by the vertices of three disjoint connecting paths.
  std::vector<Vertex> forbidden;
};

BipartiteResult is_bipartite(const EdgeColoredGraph& g);
RegularityResult regularity(const EdgeColoredGraph& g);
BlockGraphResult is_block_graph(const EdgeColoredGraph& g);
ChordalResult is_chordal(const EdgeColoredGraph& g);
IntervalResult is_interval(const EdgeColoredGraph& g, int clique_guard = 256,
                           std::uint64_t node_guard = 1000000);
ClawFreeResult is_claw_free(const EdgeColoredGraph& g);
OuterplanarResult is_outerplanar(const EdgeColoredGraph& g);

// Largest number of shortest paths over all vertex pairs (1 = geodetic).
// Throws Refusal on a disconnected graph.
std::uint64_t geodecity(const EdgeColoredGraph& g);

// Maximum clique size read off a perfect elimination order.
// Throws Refusal on non-chordal input.
int max_clique_size_chordal(const EdgeColoredGraph& g);

// Maximal cliques of a chordal graph, from the elimination order.
// Throws Refusal on non-chordal input.
std::vector<std::vector<Vertex>> maximal_cliques_chordal(const EdgeColoredGraph& g);

}  // namespace rainbow
