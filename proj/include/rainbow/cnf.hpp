#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rainbow/errors.hpp"

namespace rainbow {

struct Literal {
  int variable = 0;  // 1-based
  bool negative = false;

  bool operator==(const Literal&) const = default;
};

// CNF with clauses of size 1..3 where every variable occurs at most three
// times across the whole formula. Clause and in-clause literal order are
// kept exactly as written.
struct CnfFormula {
  int variable_count = 0;
  std::vector<std::vector<Literal>> clauses;

  int clause_count() const { return static_cast<int>(clauses.size()); }
  bool operator==(const CnfFormula&) const = default;
};

struct OccurrenceViolation {
  int variable = 0;
  std::vector<std::pair<int, int>> sites;  // (clause, slot), 1-based
};

// Occurrence rank (1..3) of the variable in each clause slot, assigned in
// clause order then slot order; repeated variables inside one clause take
// consecutive ranks by slot.
struct OccurrenceIndex {
  std::vector<std::vector<int>> rank;  // parallel to formula clauses
};

struct Assignment {
  std::vector<bool> value;  // value[i-1] is the value of variable i

  bool get(int variable) const { return value[static_cast<size_t>(variable - 1)]; }
};

CnfFormula parse_dimacs(const std::string& text);
std::string print_dimacs(const CnfFormula& f);

std::vector<OccurrenceViolation> validate_occurrence(const CnfFormula& f);

bool clause_satisfied(const std::vector<Literal>& clause, const Assignment& a);
bool formula_satisfied(const CnfFormula& f, const Assignment& a);

// Exhaustive satisfiability check; refuses above the variable guard.
std::optional<Assignment> brute_force_sat(const CnfFormula& f, int variable_guard = 24);

OccurrenceIndex literal_positions(const CnfFormula& f);

// Appends unit clauses on fresh variables until the formula has at least
// min_clauses clauses; satisfiability is unchanged in both directions.
CnfFormula pad_to_min_clauses(const CnfFormula& f, int min_clauses);

}  // namespace rainbow
