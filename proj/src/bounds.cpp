#include "pav/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace pav {

namespace mp = boost::multiprecision;

BigRat rat_pow(const BigRat& q, unsigned long e) {
  BigInt num = mp::pow(BigInt(numerator(q)), static_cast<unsigned>(e));
  BigInt den = mp::pow(BigInt(denominator(q)), static_cast<unsigned>(e));
  return BigRat(num, den);
}

BigRat phi(int d, const BigRat& x) {
  if (x <= 0 || x >= 1) throw std::domain_error("phi: x must be in (0, 1)");
  if (d < 1) throw std::invalid_argument("phi: d must be >= 1");
  return BigRat(1) + rat_pow(x, d) / (BigRat(1) - x);
}

BigRat p_poly(int d, const BigRat& x) {
  BigRat one_minus = BigRat(1) - x;
  BigRat xd = rat_pow(x, d);
  return one_minus * one_minus + BigRat(1 - d) * xd + BigRat(d - 2) * xd * x;
}

namespace {

int p_sign(int d, const BigRat& x) {
  BigRat v = p_poly(d, x);
  if (v > 0) return 1;
  if (v < 0) return -1;
  return 0;
}

}  // namespace

TauBracket tau_root(int d, const BigRat& eps) {
  if (d < 2) throw std::invalid_argument("tau_root: d must be >= 2");
  if (eps <= 0) throw std::invalid_argument("tau_root: eps must be positive");

  BigRat lo(1, d);
  BigRat hi = BigRat(1) - BigRat(1, BigInt(d) * d);
  int slo = p_sign(d, lo);
  if (slo == 0) return {lo, lo};
  int shi = p_sign(d, hi);
  if (shi == 0) return {hi, hi};
  if (!(slo > 0 && shi < 0)) {
    lo = BigRat(1, 1000000);
    hi = BigRat(999999, 1000000);
    slo = p_sign(d, lo);
    if (slo == 0) return {lo, lo};
    shi = p_sign(d, hi);
    if (shi == 0) return {hi, hi};
    if (!(slo > 0 && shi < 0)) {
      throw std::logic_error("tau_root: no sign change on the fallback bracket");
    }
  }

  while (hi - lo > eps) {
    BigRat mid = (lo + hi) / 2;
    int s = p_sign(d, mid);
    if (s == 0) return {mid, mid};
    if (s > 0) lo = mid; else hi = mid;
  }
  return {lo, hi};
}

GammaBound gamma_upper(int d, const BigRat& eps) {
  if (d < 2) throw std::invalid_argument("gamma_upper: d must be >= 2");
  if (eps <= 0) throw std::invalid_argument("gamma_upper: eps must be positive");

  auto val = [d](const BigRat& x) { return phi(d, x) / x; };

  GammaBound g;
  g.d = d;

  TauBracket br = tau_root(d, BigRat(1, 16));
  if (br.lo == br.hi) {
    // Exact stationary point: the bound is gamma_d itself.
    g.tau_lo = br.lo;
    g.tau_hi = br.hi;
    g.x_star = br.lo;
    g.upper = val(br.lo);
    return g;
  }

  for (int iter = 0; iter < 100000; ++iter) {
    BigRat vlo = val(br.lo);
    BigRat vhi = val(br.hi);
    BigRat mid = (br.lo + br.hi) / 2;
    BigRat vmid = val(mid);

    BigRat best = vlo;
    BigRat best_x = br.lo;
    if (vmid < best) { best = vmid; best_x = mid; }
    if (vhi < best) { best = vhi; best_x = br.hi; }

    if (vlo - best <= eps && vhi - best <= eps) {
      g.tau_lo = br.lo;
      g.tau_hi = br.hi;
      g.x_star = best_x;
      g.upper = best;
      return g;
    }

    int s = p_sign(d, mid);
    if (s == 0) {
      g.tau_lo = mid;
      g.tau_hi = mid;
      g.x_star = mid;
      g.upper = vmid;
      return g;
    }
    if (s > 0) br.lo = mid; else br.hi = mid;
  }
  throw std::logic_error("gamma_upper: bisection failed to converge");
}

BigRat gamma_lower(int d, const BigRat& eps) {
  if (d < 2) throw std::invalid_argument("gamma_lower: d must be >= 2");
  if (eps <= 0) throw std::invalid_argument("gamma_lower: eps must be positive");
  TauBracket br = tau_root(d, eps);
  if (br.lo == br.hi) return phi(d, br.lo) / br.lo;  // exact stationary point
  return (BigRat(1) + rat_pow(br.lo, d) / (BigRat(1) - br.lo)) / br.hi;
}

BigRat gbar_core(int k, long long ell) {
  if (k < 2 || ell < 2) throw std::invalid_argument("gbar: k >= 2 and ell >= 2 required");
  BigInt num = mp::pow(BigInt(ell / 2), static_cast<unsigned>(k - 1));
  BigInt fact = 1;
  for (int i = 2; i <= k - 1; ++i) fact *= i;
  return BigRat(num, fact);
}

double gbar(int k, long long ell) {
  BigRat core = gbar_core(k, ell);
  double g = std::pow(core.convert_to<double>(), 1.0 / static_cast<double>(ell));
  if (!std::isfinite(g) || g <= 0) g = 1.0;
  auto holds = [&](double cand) {
    return rat_pow(BigRat(cand), static_cast<unsigned long>(ell)) >= core;
  };
  while (!holds(g)) g = std::nextafter(g, std::numeric_limits<double>::infinity());
  for (;;) {
    double lower = std::nextafter(g, 0.0);
    if (lower > 0 && holds(lower)) g = lower; else break;
  }
  return g;
}

bool gbar_less_than(int k, long long ell, const BigRat& bound) {
  return gbar_core(k, ell) < rat_pow(bound, static_cast<unsigned long>(ell));
}

bool gbar_le(int k1, long long l1, int k2, long long l2) {
  // core1^(1/l1) <= core2^(1/l2)  <=>  core1^l2 <= core2^l1
  return rat_pow(gbar_core(k1, l1), static_cast<unsigned long>(l2)) <=
         rat_pow(gbar_core(k2, l2), static_cast<unsigned long>(l1));
}

BigInt partial_dyck_count(long long t, long long r, long long d) {
  if (t < 0 || r < 0 || r > t) {
    throw std::invalid_argument("partial_dyck_count: need 0 <= r <= t");
  }
  if (d < 1) throw std::invalid_argument("partial_dyck_count: d must be >= 1");
  if ((t + 1) * (d + 1) > 50'000'000LL) {
    throw std::invalid_argument("partial_dyck_count: state space too large");
  }

  // States per layer of zeros-used: (height h, run counter c) where c = 0
  // after an appended 0 (or at the start), and c = min(current 1-run, d)
  // inside a descent. An appended 0 is legal only at c = 0 or c = d.
  size_t cw = static_cast<size_t>(d + 1);
  size_t width = static_cast<size_t>(t + 1) * cw;
  std::vector<BigInt> cur(width), next(width);
  auto cell = [cw](std::vector<BigInt>& layer, long long h, long long c) -> BigInt& {
    return layer[static_cast<size_t>(h) * cw + static_cast<size_t>(c)];
  };

  cell(cur, 0, 0) = 1;
  for (long long z = 0;; ++z) {
    // 1-appends stay in the layer and only lower the height.
    for (long long h = z; h >= 1; --h) {
      for (long long c = 0; c <= d; ++c) {
        const BigInt& cnt = cell(cur, h, c);
        if (cnt.is_zero()) continue;
        long long c2 = std::min(c + 1, d);
        cell(cur, h - 1, c2) += cnt;
      }
    }
    if (z == t) break;
    for (auto& x : next) x = 0;
    for (long long h = 0; h <= z; ++h) {
      const BigInt& stopped = cell(cur, h, 0);
      if (!stopped.is_zero()) cell(next, h + 1, 0) += stopped;
      if (d > 0) {
        const BigInt& deep = cell(cur, h, d);
        if (!deep.is_zero()) cell(next, h + 1, 0) += deep;
      }
    }
    cur.swap(next);
  }

  BigInt result = cell(cur, r, 0);
  result += cell(cur, r, d);
  return result;
}

BigInt dyck_count(long long t, long long d) {
  return partial_dyck_count(t, 0, d);
}

std::string decimal_string(const BigRat& q, int digits, bool round_up) {
  if (digits < 0) throw std::invalid_argument("decimal_string: digits must be >= 0");
  BigInt scale = mp::pow(BigInt(10), static_cast<unsigned>(digits));
  BigInt num = BigInt(numerator(q)) * scale;
  BigInt den = denominator(q);
  BigInt quot = num / den;  // truncates toward zero
  BigInt rem = num % den;
  if (rem != 0) {
    if (round_up && num > 0) ++quot;
    if (!round_up && num < 0) --quot;
  }
  bool neg = quot < 0;
  std::string body = mp::abs(quot).convert_to<std::string>();
  if (static_cast<int>(body.size()) <= digits) {
    body.insert(0, digits + 1 - body.size(), '0');
  }
  std::string out;
  if (neg) out.push_back('-');
  out += body.substr(0, body.size() - digits);
  if (digits > 0) {
    out.push_back('.');
    out += body.substr(body.size() - digits);
  }
  return out;
}

}  // namespace pav
