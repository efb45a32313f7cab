#include <doctest.h>

#include "oracles.hpp"
#include "pav/search.hpp"

using pav::Pattern;
using pav::SearchOutcome;

TEST_SUITE("search") {

TEST_CASE("squares over two letters die at length 3") {
  auto out = pav::backtrack_avoid(Pattern::parse("AA"), 2, 100);
  REQUIRE(out.kind == SearchOutcome::Kind::Exhausted);
  CHECK(out.max_len == 3);
  CHECK(out.maximal_word_count == 2);  // 010 and 101
}

TEST_CASE("squares over three letters survive") {
  auto out = pav::backtrack_avoid(Pattern::parse("AA"), 3, 60);
  REQUIRE(out.kind == SearchOutcome::Kind::DepthReached);
  REQUIRE(out.witness);
  CHECK(out.witness->size() == 60);
  CHECK(out.witness->letters[0] == 0);
  CHECK_FALSE(pav::contains_instance(*out.witness, Pattern::parse("AA")));
}

TEST_CASE("cubes over two letters survive") {
  auto out = pav::backtrack_avoid(Pattern::parse("AAA"), 2, 80);
  REQUIRE(out.kind == SearchOutcome::Kind::DepthReached);
  CHECK_FALSE(pav::contains_instance(*out.witness, Pattern::parse("AAA")));
}

TEST_CASE("xyx over two letters dies at length 4") {
  auto out = pav::backtrack_avoid(Pattern::parse("ABA"), 2, 50);
  REQUIRE(out.kind == SearchOutcome::Kind::Exhausted);
  CHECK(out.max_len == 4);
  CHECK(out.maximal_word_count == 2);  // 0011 and 1100
}

TEST_CASE("boundary consistency") {
  auto out = pav::backtrack_avoid(Pattern::parse("AA"), 2, 100);
  REQUIRE(out.kind == SearchOutcome::Kind::Exhausted);
  auto at_boundary = pav::backtrack_avoid(Pattern::parse("AA"), 2, out.max_len);
  CHECK(at_boundary.kind == SearchOutcome::Kind::DepthReached);
}

TEST_CASE("budget semantics") {
  auto out = pav::backtrack_avoid(Pattern::parse("AA"), 3, 1000, 50);
  CHECK(out.kind == SearchOutcome::Kind::BudgetExceeded);
  CHECK(out.nodes_visited > 0);

  CHECK(pav::unavoidability_probe(Pattern::parse("AA"), 3, 1000, 50) == std::nullopt);
}

TEST_CASE("unavoidability probe") {
  Pattern aba = Pattern::parse("ABA");
  CHECK(pav::unavoidability_probe(aba, 2, 5) == true);
  CHECK(pav::unavoidability_probe(aba, 2, 4) == false);
  CHECK(pav::unavoidability_probe(aba, 2, 1) == false);
  CHECK(pav::unavoidability_probe(Pattern::parse("AA"), 3, 100) == false);
  CHECK(pav::unavoidability_probe(Pattern::parse("A"), 2, 1) == true);
}

TEST_CASE("factor monotonicity on the doubled family") {
  auto aa = pav::backtrack_avoid(Pattern::parse("AA"), 2, 100);
  auto aabaa = pav::backtrack_avoid(Pattern::parse("AABAA"), 2, 100);
  REQUIRE(aa.kind == SearchOutcome::Kind::Exhausted);
  REQUIRE(aabaa.kind == SearchOutcome::Kind::Exhausted);
  CHECK(aa.max_len <= aabaa.max_len);
}

}  // TEST_SUITE
