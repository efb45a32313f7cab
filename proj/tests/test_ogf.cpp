#include <doctest.h>

#include <array>

#include "oracles.hpp"
#include "pav/ogf.hpp"

using pav::BigInt;
using pav::TruncatedSeries;

TEST_SUITE("ogf") {

TEST_CASE("series_multiply") {
  TruncatedSeries one = TruncatedSeries::one(8);
  TruncatedSeries s(8);
  s.coeff[1] = 1;
  s.coeff[2] = 1;  // x + x^2

  auto same = pav::series_multiply(s, one);
  CHECK(same.coeff == s.coeff);

  auto sq = pav::series_multiply(s, s);  // x^2 + 2x^3 + x^4
  CHECK(sq.coeff[2] == 1);
  CHECK(sq.coeff[3] == 2);
  CHECK(sq.coeff[4] == 1);
  CHECK(sq.coeff[5] == 0);

  auto geo = pav::series_multiply(TruncatedSeries::geometric(2, 8),
                                  TruncatedSeries::geometric(3, 8));
  CHECK(geo.coeff[8] == 1);  // 2i + 3j = 8: only (1, 2)

  TruncatedSeries other(9);
  CHECK_THROWS_AS(pav::series_multiply(s, other), std::invalid_argument);
}

TEST_CASE("geometric coefficient of x^12 over steps 2 and 3") {
  auto geo = pav::series_multiply(TruncatedSeries::geometric(2, 12),
                                  TruncatedSeries::geometric(3, 12));
  CHECK(geo.coeff[12] == 1);  // 2i + 3j = 12 with i, j >= 1: only (3, 2)
}

TEST_CASE("pattern_ogf") {
  std::array<int, 4> a{2, 2, 2, 18};
  auto s = pav::pattern_ogf(a, 100);
  CHECK(s.coeff[46] == 84);
  CHECK(s.coeff[24] == 1);   // all lengths one
  CHECK(s.coeff[23] == 0);   // below the pattern length
  CHECK(s.coeff[25] == 0);   // parity: 2i+2j+2k+18l is even

  std::array<int, 2> pair{1, 1};
  auto comp = pav::pattern_ogf(pair, 40);
  for (int n = 2; n <= 40; ++n) CHECK(comp.coeff[n] == n - 1);

  std::array<int, 1> even{2};
  auto sq = pav::pattern_ogf(even, 20);
  for (int l = 0; l <= 20; ++l) CHECK(sq.coeff[l] == ((l >= 2 && l % 2 == 0) ? 1 : 0));

  CHECK_THROWS_AS(pav::pattern_ogf(a, 20), std::invalid_argument);
}

TEST_CASE("h_bruteforce") {
  CHECK(pav::h_bruteforce(std::array<int, 4>{2, 2, 2, 18}, 46) == 84);
  CHECK(pav::h_bruteforce(std::array<int, 1>{2}, 7) == 0);
  CHECK(pav::h_bruteforce(std::array<int, 2>{3, 3}, 12) == 3);
}

TEST_CASE("pattern_ogf agrees with the tuple enumeration") {
  pav::SplitMix64 rng(4242);
  for (int iter = 0; iter < 60; ++iter) {
    int k = 1 + static_cast<int>(rng.below(4));
    std::vector<int> a(k);
    int total = 0;
    for (int& ai : a) {
      ai = 1 + static_cast<int>(rng.below(8));
      total += ai;
    }
    if (total > 30) continue;
    auto s = pav::pattern_ogf(a, 100);
    long long ell = total + static_cast<long long>(rng.below(101 - total));
    CHECK(s.coeff[ell] == pav::h_bruteforce(a, ell));
  }
}

TEST_CASE("restricted sweep") {
  auto report = pav::g4_sweep(24, 40, 60);
  CHECK(report.binomial_bound_ok);
  CHECK(report.argmax_b > 0);
  CHECK(report.max_value > 1.0);

  // Every table row matches a direct tuple count.
  int checked = 0;
  for (const auto& row : report.table) {
    if (checked >= 25) break;
    CHECK(pav::h_bruteforce(row.multiset, row.ell) == row.b);
    ++checked;
  }

  // Restricting the pattern length must restrict the argmax accordingly.
  auto only24 = pav::g4_sweep(24, 40, 60, 24, 24);
  CHECK(only24.argmax_p_len == 24);
  for (const auto& row : only24.table) CHECK(row.p_len == 24);
}

TEST_CASE("csv rendering") {
  auto report = pav::g4_sweep(24, 26, 40);
  std::string csv = pav::sweep_report_csv(report);
  CHECK(csv.find("p_len,multiset,ell,b,root") == 0);
  CHECK(csv.find('\n') != std::string::npos);
}

}  // TEST_SUITE
