// Exact truncated power series for counting variable-length tuples of
// pattern occurrences, and the sweep locating the maximal per-letter count
// over 4-variable doubled patterns.
#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "pav/bounds.hpp"

namespace pav {

/// Power series with exact integer coefficients, truncated at a fixed order.
struct TruncatedSeries {
  std::vector<BigInt> coeff;  // index 0..order

  explicit TruncatedSeries(int order) : coeff(static_cast<size_t>(order) + 1) {}
  int order() const { return static_cast<int>(coeff.size()) - 1; }

  static TruncatedSeries one(int order);
  /// x^a + x^(2a) + x^(3a) + ... = x^a / (1 - x^a), truncated.
  static TruncatedSeries geometric(int a, int order);
};

/// Plain convolution, truncated at the shared order. Orders must match.
TruncatedSeries series_multiply(const TruncatedSeries& s1, const TruncatedSeries& s2);

/// Product over i of x^(a_i)/(1 - x^(a_i)). The coefficient of x^l counts
/// the tuples (l_1, ..., l_k), l_i >= 1, with sum a_i * l_i = l.
/// Requires order >= sum a_i.
TruncatedSeries pattern_ogf(std::span<const int> a, int order);

/// Independent oracle for the same count, by direct nested enumeration.
BigInt h_bruteforce(std::span<const int> a, long long ell);

struct SweepRow {
  int p_len = 0;
  std::array<int, 4> multiset{};  // the multiplicities achieving b
  int ell = 0;
  BigInt b;        // max coefficient over multisets for this (p_len, ell)
  double root = 0; // b^(1/ell), informational
};

struct SweepReport {
  int len_min = 0, len_max = 0, order = 0;
  double max_value = 0;  // b^(1/ell) at the argmax
  int argmax_p_len = 0;
  std::array<int, 4> argmax_multiset{};
  int argmax_ell = 0;
  BigInt argmax_b;
  std::vector<SweepRow> table;  // best row per (p_len, ell), ell >= p_len
  bool binomial_bound_ok = true;  // every b <= C(floor(ell/2), 3)
  long long series_built = 0;
};

/// For each 4-part multiset {a_1 <= ... <= a_4}, a_i >= 2, with
/// len_min <= sum <= len_max, expands the OGF to the given order and ranks
/// b_ell^(1/ell) over max(len_min, sum) <= ell <= len_max. Float ranking is
/// confirmed by exact cross-power comparison among the near-maximal
/// candidates. p_min/p_max optionally restrict the pattern length range
/// (default: the full [len_min, len_max]).
SweepReport g4_sweep(int len_min = 24, int len_max = 99, int order = 100,
                     int p_min = -1, int p_max = -1);

std::string sweep_report_csv(const SweepReport& report);

}  // namespace pav
