#include <doctest.h>

#include <array>

#include "oracles.hpp"
#include "pav/occurrence.hpp"

using pav::Pattern;
using pav::Word;

namespace {

Word bin(std::string_view s) { return Word::from_string(s, 2); }

}  // namespace

TEST_SUITE("occurrence") {

TEST_CASE("instance_check") {
  Pattern aba = Pattern::parse("ABA");

  auto occ = pav::instance_check(bin("00100"), aba, std::array<long long, 2>{2, 1});
  REQUIRE(occ);
  CHECK(occ->bindings[0] == std::vector<uint8_t>{0, 0});
  CHECK(occ->bindings[1] == std::vector<uint8_t>{1});
  CHECK(occ->total_length == 5);
  CHECK(occ->prefix_sums == std::vector<long long>{2});

  auto occ2 = pav::instance_check(bin("00100"), aba, std::array<long long, 2>{1, 3});
  REQUIRE(occ2);
  CHECK(occ2->bindings[0] == std::vector<uint8_t>{0});
  CHECK(occ2->bindings[1] == std::vector<uint8_t>{0, 1, 0});

  CHECK_FALSE(pav::instance_check(bin("00101"), aba, std::array<long long, 2>{2, 1}));

  CHECK_THROWS_AS(pav::instance_check(bin("00100"), aba, std::array<long long, 2>{1, 1}),
                  std::invalid_argument);
}

TEST_CASE("find_suffix_occurrences basics") {
  Pattern aa = Pattern::parse("AA");

  auto single = pav::find_suffix_occurrences(bin("00"), aa);
  REQUIRE(single.size() == 1);
  CHECK(single[0].lengths == std::vector<long long>{1});
  CHECK(single[0].total_length == 2);

  CHECK(pav::find_suffix_occurrences(bin("0110"), aa).empty());

  // Word built in the worked simulator example, one letter past the clean
  // prefix; the suffix occurrence of length 21 has lengths (2, 1, 3).
  Pattern p = Pattern::parse("ACBBCBBABCAB");
  Word w = bin("0010011001110011011100011");
  auto occs = pav::find_suffix_occurrences(w, p);
  REQUIRE_FALSE(occs.empty());
  bool found = false;
  for (const auto& occ : occs) {
    if (occ.lengths == std::vector<long long>{2, 1, 3}) {
      found = true;
      CHECK(occ.total_length == 21);
      CHECK(occ.bindings[0] == std::vector<uint8_t>{0, 1});
      CHECK(occ.bindings[1] == std::vector<uint8_t>{1});
      CHECK(occ.bindings[2] == std::vector<uint8_t>{1, 0, 0});
      CHECK(occ.prefix_sums == std::vector<long long>{2, 3});
    }
  }
  CHECK(found);
}

TEST_CASE("ordering and round-trip") {
  pav::SplitMix64 rng(23);
  for (int iter = 0; iter < 200; ++iter) {
    int k = 1 + static_cast<int>(rng.below(3));
    int plen = k + static_cast<int>(rng.below(5));
    if (plen < k) plen = k;
    Pattern p = oracle::random_pattern(rng, k, plen);
    int n = static_cast<int>(rng.below(24));
    std::vector<uint8_t> letters;
    for (int i = 0; i < n; ++i) letters.push_back(static_cast<uint8_t>(rng.below(2)));
    Word w(letters, 2);

    auto occs = pav::find_suffix_occurrences(w, p);
    for (size_t i = 0; i < occs.size(); ++i) {
      CHECK(occs[i].total_length >= p.length());
      if (i > 0) {
        bool ordered = occs[i - 1].total_length < occs[i].total_length ||
                       (occs[i - 1].total_length == occs[i].total_length &&
                        occs[i - 1].lengths < occs[i].lengths);
        CHECK(ordered);
      }
      // Substituting the bindings reproduces the claimed suffix.
      auto image = oracle::substitute(p, occs[i]);
      std::vector<uint8_t> suffix(w.letters.end() - occs[i].total_length,
                                  w.letters.end());
      CHECK(image == suffix);
    }
  }
}

TEST_CASE("agreement with the literal enumeration") {
  pav::SplitMix64 rng(41);
  for (int iter = 0; iter < 400; ++iter) {
    int k = 1 + static_cast<int>(rng.below(4));
    int plen = std::max<int>(k, 2 + static_cast<int>(rng.below(6)));
    Pattern p = oracle::random_pattern(rng, k, plen);
    int sigma = 2 + static_cast<int>(rng.below(2));
    int n = static_cast<int>(rng.below(28));
    std::vector<uint8_t> letters;
    for (int i = 0; i < n; ++i) letters.push_back(static_cast<uint8_t>(rng.below(sigma)));
    Word w(letters, sigma);

    auto got = pav::find_suffix_occurrences(w, p);
    auto expected = oracle::suffix_occurrences(w, p);
    REQUIRE(got.size() == expected.size());
    for (size_t i = 0; i < got.size(); ++i) CHECK(got[i] == expected[i]);

    CHECK(pav::has_suffix_occurrence(w, p) == !expected.empty());
    auto first = pav::first_suffix_occurrence(w, p);
    CHECK(first.has_value() == !expected.empty());
    if (first) CHECK(*first == expected.front());
  }
}

TEST_CASE("contains_instance") {
  Pattern aba = Pattern::parse("ABA");
  Pattern aa = Pattern::parse("AA");

  // The prefix 0010 already ends with the instance 010 (A=0, B=1), so the
  // first end position is 4; the full word 00100 is itself an instance too.
  auto hit = pav::contains_instance(bin("00100"), aba);
  REQUIRE(hit);
  CHECK(hit->first == 4);
  auto full = pav::instance_check(bin("00100"), aba, std::array<long long, 2>{2, 1});
  CHECK(full.has_value());

  CHECK_FALSE(pav::contains_instance(bin("010"), aa));

  auto square = pav::contains_instance(bin("0110"), aa);
  REQUIRE(square);
  CHECK(square->first == 3);

  pav::SplitMix64 rng(59);
  for (int iter = 0; iter < 150; ++iter) {
    int k = 1 + static_cast<int>(rng.below(3));
    Pattern p = oracle::random_pattern(rng, k, std::max<int>(k, 1 + (int)rng.below(5)));
    int n = static_cast<int>(rng.below(20));
    std::vector<uint8_t> letters;
    for (int i = 0; i < n; ++i) letters.push_back(static_cast<uint8_t>(rng.below(2)));
    Word w(letters, 2);

    auto got = pav::contains_instance(w, p);
    auto expected = oracle::contains_instance(w, p);
    CHECK(got.has_value() == expected.has_value());
    if (got && expected) {
      CHECK(got->first == expected->first);
      CHECK(got->second == expected->second);
    }
  }
}

}  // TEST_SUITE
