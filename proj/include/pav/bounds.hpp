// Exact counting of descent-constrained (partial) Dyck words, certified
// rational upper bounds on the growth constant gamma_d, and the closed-form
// per-letter bounds gbar_k.
#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace pav {

using BigInt = boost::multiprecision::mpz_int;
using BigRat = boost::multiprecision::mpq_rational;

/// Exact q^e for integer e >= 0.
BigRat rat_pow(const BigRat& q, unsigned long e);

/// phi_d(x) = 1 + x^d / (1 - x). Requires 0 < x < 1.
BigRat phi(int d, const BigRat& x);

/// P(x) = (1-x)^2 + (1-d) x^d + (d-2) x^(d+1); its unique root in (0,1) is
/// the stationary point tau of phi_d(x)/x.
BigRat p_poly(int d, const BigRat& x);

struct TauBracket {
  BigRat lo, hi;  // P(lo) >= 0 >= P(hi); lo == hi when the root was hit exactly
};

/// Bisection bracket of width <= eps around tau. Requires d >= 2, eps > 0.
TauBracket tau_root(int d, const BigRat& eps);

/// Certified upper bound on gamma_d = min over (0,1) of phi_d(x)/x.
/// upper = phi_d(x_star)/x_star for an exactly evaluated rational x_star, so
/// the bound holds unconditionally; the bracket only controls tightness.
struct GammaBound {
  int d = 0;
  BigRat tau_lo, tau_hi;
  BigRat upper;
  BigRat x_star;
  BigRat width() const { return tau_hi - tau_lo; }
};

GammaBound gamma_upper(int d, const BigRat& eps);

/// Certified lower bound on gamma_d: gamma_d = phi_d(tau)/tau with tau inside
/// the bisection bracket [lo, hi], and for every x there
/// phi_d(x)/x >= (1 + lo^d/(1-lo)) / hi, evaluated exactly.
BigRat gamma_lower(int d, const BigRat& eps);

/// Exact core of gbar_k(l): floor(l/2)^(k-1) / (k-1)!.
BigRat gbar_core(int k, long long ell);

/// gbar_k(l) = core^(1/l) as the smallest double g with g^l >= core
/// (upward-rounded evaluation).
double gbar(int k, long long ell);

/// Certified check gbar_k(ell) < bound, i.e. core < bound^ell exactly.
bool gbar_less_than(int k, long long ell, const BigRat& bound);

/// Certified check gbar_{k1}(l1) <= gbar_{k2}(l2) via cross powers.
bool gbar_le(int k1, long long l1, int k2, long long l2);

/// Dyck words of length 2t whose maximal 1-runs all have length >= d.
BigInt dyck_count(long long t, long long d);

/// Partial Dyck words with t 0s and t-r 1s, every prefix balanced, all
/// maximal 1-runs of length >= d.
BigInt partial_dyck_count(long long t, long long r, long long d);

/// Decimal rendering with explicit rounding direction (round_up: toward
/// +infinity, else toward -infinity).
std::string decimal_string(const BigRat& q, int digits, bool round_up);

}  // namespace pav
