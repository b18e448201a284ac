#include "rainbow/cnf.hpp"

#include <cstdlib>
#include <sstream>

namespace rainbow {

namespace {

void check_occurrences_or_throw(const CnfFormula& f) {
  auto violations = validate_occurrence(f);
  if (violations.empty()) return;
  const auto& v = violations.front();
  const auto& fourth = v.sites[3];
  throw ParseError("variable " + std::to_string(v.variable) + " occurs " +
                   std::to_string(v.sites.size()) + " times (4th occurrence at clause " +
                   std::to_string(fourth.first) + ", slot " + std::to_string(fourth.second) + ")");
}

}  // namespace

CnfFormula parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  CnfFormula f;
  int declared_clauses = -1;
  bool header_seen = false;
  std::vector<Literal> clause;
  int line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c") continue;
    if (tok == "p") {
      if (header_seen) throw ParseError("duplicate DIMACS header at line " + std::to_string(line_no));
      std::string fmt;
      if (!(ls >> fmt) || fmt != "cnf" || !(ls >> f.variable_count) || !(ls >> declared_clauses) ||
          f.variable_count < 0 || declared_clauses < 0)
        throw ParseError("malformed DIMACS header at line " + std::to_string(line_no));
      header_seen = true;
      continue;
    }
    if (!header_seen) throw ParseError("literal before DIMACS header at line " + std::to_string(line_no));
    ls.clear();
    ls.str(line);
    long lit;
    while (ls >> lit) {
      if (lit == 0) {
        if (clause.empty())
          throw ParseError("empty clause at line " + std::to_string(line_no));
        if (clause.size() > 3)
          throw ParseError("clause " + std::to_string(f.clauses.size() + 1) + " has " +
                           std::to_string(clause.size()) + " literals (at most 3 allowed)");
        f.clauses.push_back(clause);
        clause.clear();
        continue;
      }
      long var = std::labs(lit);
      if (var > f.variable_count)
        throw ParseError("literal " + std::to_string(lit) + " out of range at line " +
                         std::to_string(line_no));
      clause.push_back(Literal{static_cast<int>(var), lit < 0});
    }
    if (!ls.eof()) throw ParseError("bad token at line " + std::to_string(line_no));
  }
  if (!header_seen) throw ParseError("missing DIMACS header");
  if (!clause.empty()) throw ParseError("unterminated clause at end of input");
  if (declared_clauses != f.clause_count())
    throw ParseError("header declares " + std::to_string(declared_clauses) + " clauses but " +
                     std::to_string(f.clause_count()) + " found");
  check_occurrences_or_throw(f);
  return f;
}

std::string print_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.variable_count << " " << f.clause_count() << "\n";
  for (const auto& clause : f.clauses) {
    for (const Literal& l : clause) out << (l.negative ? -l.variable : l.variable) << " ";
    out << "0\n";
  }
  return out.str();
}

std::vector<OccurrenceViolation> validate_occurrence(const CnfFormula& f) {
  std::vector<std::vector<std::pair<int, int>>> sites(static_cast<size_t>(f.variable_count) + 1);
  for (size_t j = 0; j < f.clauses.size(); ++j)
    for (size_t k = 0; k < f.clauses[j].size(); ++k)
      sites[static_cast<size_t>(f.clauses[j][k].variable)].emplace_back(static_cast<int>(j) + 1,
                                                                        static_cast<int>(k) + 1);
  std::vector<OccurrenceViolation> out;
  for (int v = 1; v <= f.variable_count; ++v)
    if (sites[static_cast<size_t>(v)].size() > 3)
      out.push_back(OccurrenceViolation{v, sites[static_cast<size_t>(v)]});
  return out;
}

bool clause_satisfied(const std::vector<Literal>& clause, const Assignment& a) {
  for (const Literal& l : clause)
    if (a.get(l.variable) != l.negative) return true;
  return false;
}

bool formula_satisfied(const CnfFormula& f, const Assignment& a) {
  for (const auto& clause : f.clauses)
    if (!clause_satisfied(clause, a)) return false;
  return true;
}

std::optional<Assignment> brute_force_sat(const CnfFormula& f, int variable_guard) {
  if (f.variable_count > variable_guard)
    throw Refusal("brute-force satisfiability limited to " + std::to_string(variable_guard) +
                  " variables (got " + std::to_string(f.variable_count) +
                  "); use a dedicated SAT solver for larger formulas");
  std::uint64_t limit = std::uint64_t(1) << f.variable_count;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    Assignment a;
    a.value.resize(static_cast<size_t>(f.variable_count));
    for (int i = 0; i < f.variable_count; ++i) a.value[static_cast<size_t>(i)] = (mask >> i) & 1;
    if (formula_satisfied(f, a)) return a;
  }
  return std::nullopt;
}

OccurrenceIndex literal_positions(const CnfFormula& f) {
  OccurrenceIndex idx;
  std::vector<int> seen(static_cast<size_t>(f.variable_count) + 1, 0);
  idx.rank.resize(f.clauses.size());
  for (size_t j = 0; j < f.clauses.size(); ++j) {
    idx.rank[j].resize(f.clauses[j].size());
    for (size_t k = 0; k < f.clauses[j].size(); ++k)
      idx.rank[j][k] = ++seen[static_cast<size_t>(f.clauses[j][k].variable)];
  }
  return idx;
}

CnfFormula pad_to_min_clauses(const CnfFormula& f, int min_clauses) {
  CnfFormula out = f;
  while (out.clause_count() < min_clauses) {
    ++out.variable_count;
    out.clauses.push_back({Literal{out.variable_count, false}});
  }
  return out;
}

}  // namespace rainbow
