#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rainbow/cnf.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

/// A formula compiled into an edge-colored gadget graph. The gadget list
/// partitions the vertices: tail, X.i per variable, C.j per clause, head
/// (and h1..h(k-2) copy gadgets for the k-regular construction).
struct Reduction {
  EdgeColoredGraph graph;
  Vertex source = -1;
  Vertex sink = -1;
  std::vector<std::pair<std::string, std::vector<Vertex>>> gadgets;
  std::string construction;  // base | io | ib | cubic | kreg
  int regular_k = 0;         // kreg only
  CnfFormula formula;        // the formula actually encoded (after padding)
  int original_clause_count = 0;
  std::vector<int> reconstructed_clauses;  // 1-based clauses with size < 3
};

// Chord color for the rank-th occurrence of a variable: the opposite-sign
// path color of that variable at the same rank, so the chord is free
// exactly when the chosen assignment makes the literal true.
std::string literal_chord_color_name(const Literal& lit, int rank);

Reduction build_base(const CnfFormula& f);
Reduction build_interval_outerplanar(const CnfFormula& f);
Reduction build_interval_block(const CnfFormula& f);
// Pads the formula to at least 3 clauses (the tail needs them).
Reduction build_cubic(const CnfFormula& f);
// k > 3: k-2 identically colored cubic copies tied by per-label cliques.
Reduction build_k_regular(const CnfFormula& f, int k);

// tag: base | io | ib | cubic | kreg (k required for kreg).
Reduction build_construction(const std::string& tag, const CnfFormula& f, int k = 0);

// Interchange document with the construction metadata block.
nlohmann::ordered_json reduction_document(const Reduction& r);

}  // namespace rainbow
