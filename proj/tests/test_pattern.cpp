#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "pav/pattern.hpp"

using pav::Pattern;

TEST_SUITE("pattern") {

TEST_CASE("parse basics") {
  Pattern p = Pattern::parse("ABA");
  CHECK(p.variable_count() == 2);
  CHECK(p.length() == 3);
  CHECK(p.multiplicity('A') == 2);
  CHECK(p.multiplicity('B') == 1);

  Pattern q = Pattern::parse("ACBBCBBABCAB");
  CHECK(q.variable_count() == 3);
  CHECK(q.variables() == std::vector<char>{'A', 'B', 'C'});
  CHECK(q.multiplicities() == std::vector<int>{3, 6, 3});
  CHECK(q.length() == 12);
}

TEST_CASE("parse rejections") {
  CHECK_THROWS_AS(Pattern::parse(""), std::invalid_argument);
  CHECK_THROWS_WITH_AS(Pattern::parse("aba"),
                       "pattern: invalid character at position 1 (expected A-Z)",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(Pattern::parse("AB1A"),
                       "pattern: invalid character at position 3 (expected A-Z)",
                       std::invalid_argument);
}

TEST_CASE("classify") {
  auto aa = pav::classify(Pattern::parse("AA"));
  CHECK(aa.doubled);
  CHECK(aa.balanced);
  CHECK(aa.k == 1);
  CHECK(aa.q_k == 3);

  auto aba = pav::classify(Pattern::parse("ABA"));
  CHECK_FALSE(aba.doubled);
  CHECK_FALSE(aba.balanced);

  // suffix of length 2 is BB, missing A
  auto aabb = pav::classify(Pattern::parse("AABB"));
  CHECK(aabb.doubled);
  CHECK_FALSE(aabb.balanced);

  auto abab = pav::classify(Pattern::parse("ABAB"));
  CHECK(abab.doubled);
  CHECK(abab.balanced);
  CHECK(abab.q_k == 6);

  CHECK(pav::q_threshold(4) == 24);
  CHECK(pav::q_threshold(5) == 48);
}

TEST_CASE("extract_balanced_factor examples") {
  CHECK(pav::extract_balanced_factor(Pattern::parse("ABAB"), 2).text() == "ABAB");
  CHECK(pav::extract_balanced_factor(Pattern::parse("AABB"), 2).text() == "AA");
  CHECK(pav::extract_balanced_factor(Pattern::parse("AABBAABBCC"), 2).text() == "AA");
  CHECK_THROWS_AS(pav::extract_balanced_factor(Pattern::parse("AAB"), 2),
                  std::invalid_argument);
}

TEST_CASE("extract_balanced_factor properties") {
  pav::SplitMix64 rng(7);
  for (int iter = 0; iter < 300; ++iter) {
    int f = 2 + static_cast<int>(rng.below(2));
    int k = 1 + static_cast<int>(rng.below(5));
    long long min_len = static_cast<long long>(f) << (k - 1);
    int len = static_cast<int>(min_len + rng.below(min_len + 4));
    Pattern p = oracle::random_pattern(rng, k, len);
    Pattern fac = pav::extract_balanced_factor(p, f);

    auto cls = pav::classify(fac);
    CHECK(cls.balanced);
    CHECK(fac.length() >= (static_cast<long long>(f) << (fac.variable_count() - 1)));
    CHECK(p.text().find(fac.text()) != std::string::npos);
  }
}

TEST_CASE("reduce_doubled") {
  CHECK(pav::reduce_doubled(Pattern::parse("ABBCDBCABDDCB")).text() ==
        "AEBCDECABDDCB");
  CHECK(pav::reduce_doubled(Pattern::parse("AABB")).text() == "AABB");

  Pattern r = pav::reduce_doubled(Pattern::parse("AAAA"));
  CHECK(r.text() == "BABA");
  CHECK(r.variable_count() == 2);
  CHECK(r.length() == 4);

  CHECK_THROWS_AS(pav::reduce_doubled(Pattern::parse("ABA")), std::invalid_argument);
  CHECK_THROWS_AS(pav::reduce_doubled(Pattern::parse(std::string(108, 'A'))),
                  std::length_error);
}

TEST_CASE("reduce_doubled properties") {
  pav::SplitMix64 rng(11);
  for (int iter = 0; iter < 300; ++iter) {
    int k = 1 + static_cast<int>(rng.below(4));
    int len = 2 * k + static_cast<int>(rng.below(20));
    Pattern p = oracle::random_doubled_pattern(rng, k, len);
    Pattern r = pav::reduce_doubled(p);
    CHECK(r.length() == p.length());
    for (int m : r.multiplicities()) {
      CHECK(m >= 2);
      CHECK(m <= 3);
    }
  }
}

TEST_CASE("zimin and aa_family") {
  CHECK(pav::zimin(1).text() == "A");
  CHECK(pav::zimin(3).text() == "ABACABA");
  CHECK(pav::zimin(4).text() == "ABACABADABACABA");
  CHECK(pav::zimin(4).length() == 15);

  CHECK(pav::aa_family(1).text() == "AA");
  CHECK(pav::aa_family(2).text() == "AABAA");
  CHECK(pav::aa_family(3).text() == "AABAACAABAA");
  CHECK(pav::aa_family(3).length() == 11);

  for (int k = 1; k <= 12; ++k) {
    CHECK(pav::zimin(k).length() == (1LL << k) - 1);
    CHECK(pav::aa_family(k).length() == 3LL * (1LL << (k - 1)) - 1);
    if (k >= 2) {
      CHECK_FALSE(pav::classify(pav::zimin(k)).doubled);
      CHECK_FALSE(pav::classify(pav::aa_family(k)).doubled);
    }
  }

  CHECK_THROWS_AS(pav::zimin(0), std::invalid_argument);
  CHECK_THROWS_AS(pav::aa_family(27), std::invalid_argument);
}

}  // TEST_SUITE
