#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "rainbow/cnf.hpp"

using namespace rainbow;

TEST_CASE("dimacs parsing basics") {
  auto f = parse_dimacs("p cnf 1 1\n1 0\n");
  CHECK(f.variable_count == 1);
  REQUIRE(f.clause_count() == 1);
  CHECK(f.clauses[0].size() == 1);
  CHECK_FALSE(f.clauses[0][0].negative);

  auto g = parse_dimacs("c comment\np cnf 3 2\n1 -2 3 0\n-1 2 0\n");
  REQUIRE(g.clause_count() == 2);
  CHECK(g.clauses[0][1].variable == 2);
  CHECK(g.clauses[0][1].negative);
}

TEST_CASE("dimacs errors") {
  CHECK_THROWS_WITH_AS(parse_dimacs("p cnf 4 1\n1 2 3 4 0\n"), doctest::Contains("4 literals"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_dimacs("p cnf 1 4\n1 0\n1 0\n1 0\n1 0\n"),
                       doctest::Contains("4th occurrence at clause 4"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 2\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n3 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2\n"), ParseError);
}

TEST_CASE("occurrence validation") {
  auto f = parse_dimacs("p cnf 3 3\n1 2 3 0\n-1 2 3 0\n1 -2 -3 0\n");
  CHECK(validate_occurrence(f).empty());

  CnfFormula four;
  four.variable_count = 1;
  for (int i = 0; i < 4; ++i) four.clauses.push_back({Literal{1, false}});
  auto violations = validate_occurrence(four);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].variable == 1);
  CHECK(violations[0].sites.size() == 4);

  CHECK(validate_occurrence(CnfFormula{}).empty());
}

TEST_CASE("brute force sat") {
  auto unit = parse_dimacs("p cnf 1 1\n1 0\n");
  auto a = brute_force_sat(unit);
  REQUIRE(a.has_value());
  CHECK(a->get(1) == true);

  auto contradiction = parse_dimacs("p cnf 1 2\n1 0\n-1 0\n");
  CHECK_FALSE(brute_force_sat(contradiction).has_value());

  auto f = parse_dimacs("p cnf 3 3\n1 2 3 0\n-1 2 3 0\n1 -2 -3 0\n");
  auto sat = brute_force_sat(f);
  REQUIRE(sat.has_value());
  CHECK(oracle::satisfies(f, *sat));

  CnfFormula big;
  big.variable_count = 25;
  big.clauses.push_back({Literal{25, false}});
  CHECK_THROWS_AS(brute_force_sat(big), Refusal);
}

TEST_CASE("literal positions rank in scan order") {
  auto f = parse_dimacs("p cnf 3 3\n1 2 0\n3 0\n1 -3 0\n");
  auto occ = literal_positions(f);
  CHECK(occ.rank[0][0] == 1);  // x1 first
  CHECK(occ.rank[2][0] == 2);  // x1 second
  CHECK(occ.rank[1][0] == 1);  // x3 first
  CHECK(occ.rank[2][1] == 2);  // x3 second

  CnfFormula tie;
  tie.variable_count = 1;
  tie.clauses.push_back({Literal{1, false}, Literal{1, false}, Literal{1, true}});
  auto tocc = literal_positions(tie);
  CHECK(tocc.rank[0] == std::vector<int>{1, 2, 3});
}

TEST_CASE("ranks never exceed three on random valid formulas") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    auto f = oracle::random_formula(rng, 2, 6, 1, 6);
    REQUIRE(validate_occurrence(f).empty());
    auto occ = literal_positions(f);
    for (const auto& clause : occ.rank)
      for (int r : clause) {
        CHECK(r >= 1);
        CHECK(r <= 3);
      }
  }
}

TEST_CASE("padding preserves satisfiability and occurrence bound") {
  auto f = parse_dimacs("p cnf 2 1\n1 -2 0\n");
  auto padded = pad_to_min_clauses(f, 3);
  CHECK(padded.clause_count() == 3);
  CHECK(padded.variable_count == 4);
  CHECK(pad_to_min_clauses(padded, 3) == padded);

  std::mt19937 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    auto r = oracle::random_formula(rng, 2, 5, 1, 4);
    auto p = pad_to_min_clauses(r, 3);
    CHECK(validate_occurrence(p).empty());
    CHECK(brute_force_sat(r).has_value() == brute_force_sat(p).has_value());
  }
}

TEST_CASE("parse-print-parse is the identity") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    auto f = oracle::random_formula(rng, 2, 6, 1, 6);
    auto reparsed = parse_dimacs(print_dimacs(f));
    CHECK(reparsed == f);
  }
}

TEST_CASE("parser survives garbage input") {
  std::mt19937 rng(101);
  const std::string alphabet = "pcnf 0123456789-\n\tx%";
  for (int trial = 0; trial < 300; ++trial) {
    std::string text;
    int len = std::uniform_int_distribution<int>(0, 60)(rng);
    for (int i = 0; i < len; ++i)
      text += alphabet[static_cast<size_t>(std::uniform_int_distribution<int>(
          0, static_cast<int>(alphabet.size()) - 1)(rng))];
    try {
      auto f = parse_dimacs(text);
      CHECK(validate_occurrence(f).empty());
      for (const auto& clause : f.clauses) {
        CHECK(!clause.empty());
        CHECK(clause.size() <= 3);
      }
    } catch (const ParseError&) {
      // rejecting malformed input is the expected outcome
    }
  }
}
