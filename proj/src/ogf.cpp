#include "pav/ogf.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pav {

namespace mp = boost::multiprecision;

TruncatedSeries TruncatedSeries::one(int order) {
  TruncatedSeries s(order);
  s.coeff[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::geometric(int a, int order) {
  if (a < 1) throw std::invalid_argument("geometric: a must be >= 1");
  TruncatedSeries s(order);
  for (int i = a; i <= order; i += a) s.coeff[i] = 1;
  return s;
}

TruncatedSeries series_multiply(const TruncatedSeries& s1, const TruncatedSeries& s2) {
  if (s1.order() != s2.order()) {
    throw std::invalid_argument("series_multiply: order mismatch");
  }
  int order = s1.order();
  TruncatedSeries out(order);
  for (int i = 0; i <= order; ++i) {
    if (s1.coeff[i].is_zero()) continue;
    for (int j = 0; i + j <= order; ++j) {
      if (s2.coeff[j].is_zero()) continue;
      out.coeff[i + j] += s1.coeff[i] * s2.coeff[j];
    }
  }
  return out;
}

namespace {

// s * x^a/(1-x^a) via the recurrence out[i] = s[i-a] + out[i-a].
TruncatedSeries multiply_geometric(const TruncatedSeries& s, int a) {
  int order = s.order();
  TruncatedSeries out(order);
  for (int i = a; i <= order; ++i) {
    out.coeff[i] = s.coeff[i - a];
    if (i - a >= a) out.coeff[i] += out.coeff[i - a];
  }
  return out;
}

}  // namespace

TruncatedSeries pattern_ogf(std::span<const int> a, int order) {
  if (a.empty()) throw std::invalid_argument("pattern_ogf: empty multiplicity tuple");
  long long total = 0;
  for (int ai : a) {
    if (ai < 1) throw std::invalid_argument("pattern_ogf: multiplicities must be >= 1");
    total += ai;
  }
  if (order < total) {
    throw std::invalid_argument("pattern_ogf: order below the pattern length");
  }
  TruncatedSeries s = TruncatedSeries::one(order);
  for (int ai : a) s = multiply_geometric(s, ai);
  return s;
}

BigInt h_bruteforce(std::span<const int> a, long long ell) {
  long long total = 0;
  for (int ai : a) total += ai;
  if (ell < total) return 0;

  BigInt count = 0;
  std::vector<long long> stack;
  // Nested enumeration of l_1..l_{k-1} with l_k solved.
  auto recurse = [&](auto&& self, size_t idx, long long remaining) -> void {
    if (idx + 1 == a.size()) {
      if (remaining >= a[idx] && remaining % a[idx] == 0) ++count;
      return;
    }
    long long rest_min = 0;
    for (size_t j = idx + 1; j < a.size(); ++j) rest_min += a[j];
    for (long long li = 1; a[idx] * li + rest_min <= remaining; ++li) {
      self(self, idx + 1, remaining - a[idx] * li);
    }
  };
  recurse(recurse, 0, ell);
  return count;
}

namespace {

struct Candidate {
  BigInt b;
  int ell = 0;
  int p_len = 0;
  std::array<int, 4> multiset{};
};

// Tie order: smaller |p|, then lexicographic multiset, then smaller ell.
bool tie_before(const Candidate& x, const Candidate& y) {
  if (x.p_len != y.p_len) return x.p_len < y.p_len;
  if (x.multiset != y.multiset) return x.multiset < y.multiset;
  return x.ell < y.ell;
}

// Exact comparison of b1^(1/e1) vs b2^(1/e2) via cross powers.
int cmp_root(const BigInt& b1, int e1, const BigInt& b2, int e2) {
  BigInt lhs = mp::pow(b1, static_cast<unsigned>(e2));
  BigInt rhs = mp::pow(b2, static_cast<unsigned>(e1));
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

}  // namespace

SweepReport g4_sweep(int len_min, int len_max, int order, int p_min, int p_max) {
  if (len_min < 8 || len_max < len_min || order < len_max) {
    throw std::invalid_argument("g4_sweep: need 8 <= len_min <= len_max <= order");
  }
  if (p_min < 0) p_min = len_min;
  if (p_max < 0) p_max = len_max;

  SweepReport report;
  report.len_min = len_min;
  report.len_max = len_max;
  report.order = order;

  // Best coefficient per (p_len, ell); flat table indexed by offsets.
  int span = len_max - len_min + 1;
  std::vector<Candidate> best(static_cast<size_t>(span) * span);

  std::vector<BigInt> binom(static_cast<size_t>(len_max) / 2 + 1);
  for (size_t i = 0; i < binom.size(); ++i) {
    binom[i] = i >= 3 ? BigInt(i) * (i - 1) * (i - 2) / 6 : BigInt(0);
  }

  // All multisets a1 <= a2 <= a3 <= a4, a_i >= 2, len_min <= sum <= len_max.
  // b_ell only depends on the multiset, not the order of the a_i.
  for (int a1 = 2; 4 * a1 <= len_max; ++a1) {
    TruncatedSeries s1 = multiply_geometric(TruncatedSeries::one(order), a1);
    for (int a2 = a1; a1 + 3 * a2 <= len_max; ++a2) {
      TruncatedSeries s2 = multiply_geometric(s1, a2);
      for (int a3 = a2; a1 + a2 + 2 * a3 <= len_max; ++a3) {
        TruncatedSeries s3 = multiply_geometric(s2, a3);
        for (int a4 = a3; a1 + a2 + a3 + a4 <= len_max; ++a4) {
          int p_len = a1 + a2 + a3 + a4;
          if (p_len < len_min || p_len < p_min || p_len > p_max) continue;
          TruncatedSeries s4 = multiply_geometric(s3, a4);
          ++report.series_built;
          std::array<int, 4> ms{a1, a2, a3, a4};
          for (int ell = std::max(len_min, p_len); ell <= len_max; ++ell) {
            const BigInt& b = s4.coeff[ell];
            if (b.is_zero()) continue;
            if (b > binom[static_cast<size_t>(ell) / 2]) {
              report.binomial_bound_ok = false;
            }
            Candidate& slot =
                best[static_cast<size_t>(p_len - len_min) * span + (ell - len_min)];
            Candidate cand{b, ell, p_len, ms};
            if (slot.ell == 0 || cand.b > slot.b ||
                (cand.b == slot.b && tie_before(cand, slot))) {
              slot = std::move(cand);
            }
          }
        }
      }
    }
  }

  // Rank by float, then confirm the winner among near ties exactly.
  double max_float = 0;
  for (const Candidate& c : best) {
    if (c.ell == 0) continue;
    SweepRow row;
    row.p_len = c.p_len;
    row.multiset = c.multiset;
    row.ell = c.ell;
    row.b = c.b;
    row.root = std::pow(c.b.convert_to<double>(), 1.0 / c.ell);
    max_float = std::max(max_float, row.root);
    report.table.push_back(std::move(row));
  }
  std::sort(report.table.begin(), report.table.end(),
            [](const SweepRow& x, const SweepRow& y) {
              if (x.p_len != y.p_len) return x.p_len < y.p_len;
              return x.ell < y.ell;
            });

  const Candidate* winner = nullptr;
  for (const Candidate& c : best) {
    if (c.ell == 0) continue;
    double root = std::pow(c.b.convert_to<double>(), 1.0 / c.ell);
    if (root < max_float - 1e-9) continue;
    if (!winner) { winner = &c; continue; }
    int cmp = cmp_root(c.b, c.ell, winner->b, winner->ell);
    if (cmp > 0 || (cmp == 0 && tie_before(c, *winner))) winner = &c;
  }
  if (!winner) throw std::logic_error("g4_sweep: empty sweep");

  report.max_value = std::pow(winner->b.convert_to<double>(), 1.0 / winner->ell);
  report.argmax_p_len = winner->p_len;
  report.argmax_multiset = winner->multiset;
  report.argmax_ell = winner->ell;
  report.argmax_b = winner->b;
  return report;
}

std::string sweep_report_csv(const SweepReport& report) {
  std::ostringstream out;
  out << "p_len,multiset,ell,b,root\n";
  for (const SweepRow& row : report.table) {
    out << row.p_len << ',' << row.multiset[0] << '+' << row.multiset[1] << '+'
        << row.multiset[2] << '+' << row.multiset[3] << ',' << row.ell << ','
        << row.b.convert_to<std::string>() << ',';
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", row.root);
    out << buf << '\n';
  }
  return out.str();
}

}  // namespace pav
