#pragma once

// Exact evaluation of
//
//   S = sum_{j=0}^{n} sum_{i=0}^{j} C(top, i) / C(bottom, j) * u^i * v^j
//
// and of finite sums of Gamma ratios with integer-spaced arguments.

#include <string>
#include <utility>

#include "binomsum/errors.hpp"
#include "binomsum/exact_arith.hpp"
#include "binomsum/rational.hpp"

namespace binomsum {

struct DoubleSumSpec {
  long n = 0;
  Rational top;
  Rational bottom;
  Rational u{1};
  Rational v{1};

  /// Weight c^(i-j), i.e. (u, v) = (c, 1/c).
  static DoubleSumSpec with_c(long n, Rational top, Rational bottom, const Rational& c) {
    if (c.is_zero()) throw DomainError("weight c^(i-j) needs c != 0");
    return {n, std::move(top), std::move(bottom), c, c.inverse()};
  }

  /// Weight c^(j-i), i.e. (u, v) = (1/c, c).
  static DoubleSumSpec with_c_reversed(long n, Rational top, Rational bottom, const Rational& c) {
    if (c.is_zero()) throw DomainError("weight c^(j-i) needs c != 0");
    return {n, std::move(top), std::move(bottom), c.inverse(), c};
  }
};

/// Rejects specs whose denominator binomial vanishes somewhere in 0..n,
/// i.e. `bottom` an integer in [0, n-1].
inline void validate(const DoubleSumSpec& spec) {
  if (spec.n < 0) throw DomainError("double sum: negative outer limit");
  if (spec.bottom.is_integer() && spec.bottom.sign() >= 0 && spec.bottom < Rational(spec.n))
    throw PoleError("double sum: C(" + spec.bottom.str() + ", j) vanishes for j = " +
                    spec.bottom.str() + "+1 <= n = " + std::to_string(spec.n));
}

/// Exact value of the double sum.
///
/// With top = p/q, u = r/s, bottom = beta/gamma and v = x/y the running
/// quantities are kept as integers over implicit denominators:
///
///   W_j = prod_{i<j} (p - i q) (r gamma x)^j
///   Q_j = (prefix_j) (q s)^j j! (gamma x)^j       Q_j = q s gamma x j Q_{j-1} + W_j
///   E_j = prod_{i<j} q s y (beta - i gamma)        A_j = A_{j-1} E_j/E_{j-1} + Q_j
///
/// so that the partial double sum through j equals A_j / E_j. The j! of
/// the prefix cancels against the reciprocal binomial. One gcd at the end.
inline Rational eval_double_sum(const DoubleSumSpec& spec) {
  validate(spec);
  const mpz_class& p = spec.top.num();
  const mpz_class& q = spec.top.den();
  const mpz_class& r = spec.u.num();
  const mpz_class& s = spec.u.den();
  const mpz_class& beta = spec.bottom.num();
  const mpz_class& gamma = spec.bottom.den();
  const mpz_class& x = spec.v.num();
  const mpz_class& y = spec.v.den();

  const mpz_class w_step = r * gamma * x;
  const mpz_class q_step = q * s * gamma * x;
  const mpz_class e_step = q * s * y;
  mpz_class w(1), prefix(1), acc(1), den(1), factor;
  for (long j = 1; j <= spec.n; ++j) {
    factor = q * (j - 1);
    factor = p - factor;
    w *= factor;
    w *= w_step;

    prefix *= q_step;
    prefix *= j;
    prefix += w;

    factor = gamma * (j - 1);
    factor = beta - factor;
    if (factor == 0) throw PoleError("double sum: vanishing denominator binomial");
    factor *= e_step;
    acc *= factor;
    acc += prefix;
    den *= factor;
  }
  return Rational(acc, den);
}

/// sum_{i=0}^{j} C(top, i) u^i.
inline Rational eval_inner_prefix(const Rational& top, long j, const Rational& u) {
  if (j < 0) throw DomainError("inner prefix: negative upper limit");
  // Over the common denominator (q s)^i i!.
  const mpz_class& p = top.num();
  const mpz_class& q = top.den();
  const mpz_class& r = u.num();
  const mpz_class& s = u.den();
  const mpz_class qs = q * s;
  mpz_class term(1), acc(1), den(1), factor;
  for (long i = 1; i <= j; ++i) {
    factor = q * (i - 1);
    factor = p - factor;
    term *= factor;
    term *= r;
    acc *= qs;
    acc *= i;
    acc += term;
    den *= qs;
    den *= i;
  }
  return Rational(acc, den);
}

/// sum_{j=0}^{n} sum_{i=0}^{j} C(n+1, i) f(j) for a tabulated weight f.
template <class Weight>
Rational symmetric_weighted_sum(long n, Weight&& f) {
  if (n < 0) throw DomainError("symmetric sum: negative n");
  Rational total(0);
  mpq_class prefix(0), term(1);
  for (long j = 0; j <= n; ++j) {
    if (j > 0) {
      term *= n + 2 - j;
      term /= j;
    }
    prefix += term;
    total += Rational(mpq_class(prefix)) * f(j);
  }
  return total;
}

/// sum_{j=m}^{n} Gamma(j+a)/Gamma(j+b+1), divided by Gamma(m+a)/Gamma(m+b+1).
struct GammaRatioSumSpec {
  long m = 0;
  long n = 0;
  Rational a;
  Rational b;
};

struct GammaRatioSumCheck {
  Rational lhs;
  Rational rhs;
};

/// Both sides of the telescoped Gamma-ratio sum in normalized form:
///
///   lhs = sum_{j=m}^{n} (m+a)_{j-m} / (m+b+1)_{j-m}
///   rhs = (m+b)/(b-a) - (m+a)_{n-m+1} / ((b-a) (m+b+1)_{n-m})
///
/// Normalizing by Gamma(m+a)/Gamma(m+b+1) keeps both sides rational for
/// every rational a, b.
inline GammaRatioSumCheck check_gamma_ratio_sum(const GammaRatioSumSpec& spec) {
  if (spec.n < spec.m) throw DomainError("gamma ratio sum: n < m");
  if (spec.a == spec.b) throw DomainError("gamma ratio sum: needs b != a");
  const long len = spec.n - spec.m;
  const Rational num_base = Rational(spec.m) + spec.a;
  const Rational den_base = Rational(spec.m) + spec.b + Rational(1);

  mpq_class term(1), acc(1), step;
  for (long k = 1; k <= len; ++k) {
    step = den_base.mpq() + (k - 1);
    if (step == 0)
      throw PoleError("gamma ratio sum: Gamma(j+b+1) pole at j = " + std::to_string(spec.m + k - 1));
    term *= num_base.mpq() + (k - 1);
    term /= step;
    acc += term;
  }
  const Rational tail_den = pochhammer(den_base, len);
  const Rational diff = spec.b - spec.a;
  Rational rhs = (Rational(spec.m) + spec.b) / diff -
                 pochhammer(num_base, len + 1) / (diff * tail_den);
  return {Rational(std::move(acc)), std::move(rhs)};
}

}  // namespace binomsum
