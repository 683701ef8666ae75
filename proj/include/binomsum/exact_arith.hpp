#pragma once

/**
 * @file exact_arith.hpp
 * @brief Exact scalar kernels over the rationals.
 *
 * Generalized binomial coefficients, rising factorials, integer-shift Gamma
 * ratios, harmonic numbers and digamma differences are all exact. Gamma at
 * an arbitrary positive rational is only available as a bounded
 * approximation (gamma_numeric).
 */

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "binomsum/approx.hpp"
#include "binomsum/errors.hpp"
#include "binomsum/rational.hpp"

namespace binomsum {

/// Generalized binomial coefficient x(x-1)...(x-k+1)/k!.
///
/// Defined for every rational x. For a negative integer x = -m this is
/// (-1)^k C(m+k-1, k); for an integer 0 <= x < k it is 0.
inline Rational binom(const Rational& x, long k) {
  if (k < 0) throw DomainError("binom: negative lower index");
  // x = p/q: numerator prod (p - i q), denominator q^k k!.
  const mpz_class& p = x.num();
  const mpz_class& q = x.den();
  mpz_class num(1), den(1), factor;
  for (long i = 0; i < k; ++i) {
    factor = q * i;
    factor = p - factor;
    if (factor == 0) return Rational(0);
    num *= factor;
    den *= q;
    den *= i + 1;
  }
  return Rational(num, den);
}

/// Rising factorial (x)_n = x(x+1)...(x+n-1); (x)_0 = 1.
inline Rational pochhammer(const Rational& x, long n) {
  if (n < 0) throw DomainError("pochhammer: negative length");
  const mpz_class& p = x.num();
  const mpz_class& q = x.den();
  mpz_class num(1), den(1), factor;
  for (long i = 0; i < n; ++i) {
    factor = q * i;
    factor += p;
    if (factor == 0) return Rational(0);
    num *= factor;
    den *= q;
  }
  return Rational(num, den);
}

/// Gamma(x+m)/Gamma(x) for an integer shift m of either sign.
///
/// For m >= 0 this is (x)_m, and a Gamma pole in the numerator chain just
/// yields 0. For m < 0 it is 1/(x+m)_{-m}, which has a pole when any of
/// x+m, ..., x-1 vanishes.
inline Rational gamma_ratio(const Rational& x, long m) {
  if (m >= 0) return pochhammer(x, m);
  Rational base = x + Rational(m);
  Rational den = pochhammer(base, -m);
  if (den.is_zero())
    throw PoleError("gamma_ratio: Gamma(" + x.str() + std::to_string(m) + ") pole in denominator");
  return den.inverse();
}

/// H_n = 1 + 1/2 + ... + 1/n; H_0 = 0.
inline Rational harmonic(long n) {
  if (n < 0) throw DomainError("harmonic: negative index");
  // Sum as a single fraction over integers, then canonicalize once.
  mpz_class num(0), den(1);
  for (long k = 1; k <= n; ++k) {
    num = num * k + den;
    den *= k;
  }
  return Rational(num, den);
}

/// psi(x+m) - psi(x) = sum_{k<m} 1/(x+k).
inline Rational digamma_diff(const Rational& x, long m) {
  if (m < 0) throw DomainError("digamma_diff: negative shift");
  // sum_k q/(p + k q) accumulated over the running product of denominators.
  const mpz_class& p = x.num();
  const mpz_class& q = x.den();
  mpz_class num(0), den(1), factor;
  for (long k = 0; k < m; ++k) {
    factor = q * k;
    factor += p;
    if (factor == 0) throw PoleError("digamma_diff: pole at x+" + std::to_string(k) + " = 0");
    num *= factor;
    num += q * den;
    den *= factor;
  }
  return Rational(num, den);
}

namespace detail {

// Lanczos approximation with g = 7 and nine coefficients (Godfrey's set).
// Relative truncation error is below 2e-15 for Re(x) >= 1/2.
inline constexpr double kLanczosG = 7.0;
inline constexpr std::array<long double, 9> kLanczosCoefficients = {
    0.99999999999980993227684700473478L,  676.520368121885098567009190444019L,
    -1259.13921672240287047156078755283L, 771.3234287776530788486528258894L,
    -176.61502916214059906584551354L,     12.507343278686904814458936853L,
    -0.13857109526572011689554707L,       9.984369578019570859563e-6L,
    1.50563273514931155834e-7L};

inline long double lanczos_gamma(long double x) {
  // Gamma(x) = sqrt(2 pi) t^(x-1/2) e^-t A(x), t = x + g - 1/2.
  const long double z = x - 1;
  long double series = kLanczosCoefficients[0];
  for (std::size_t i = 1; i < kLanczosCoefficients.size(); ++i)
    series += kLanczosCoefficients[i] / (z + static_cast<long double>(i));
  const long double t = z + kLanczosG + 0.5L;
  constexpr long double kSqrtTwoPi = 2.506628274631000502415765284811045253L;
  return kSqrtTwoPi * std::pow(t, z + 0.5L) * std::exp(-t) * series;
}

}  // namespace detail

/// Gamma(x) for x > 0, relative error below 1e-12 on (0, 50].
///
/// Arguments below 1/2 are shifted up with Gamma(x) = Gamma(x+1)/x so the
/// Lanczos sum is always evaluated where it converges well.
inline ApproxValue gamma_numeric(const Rational& x) {
  if (x.sign() <= 0) throw DomainError("gamma_numeric: argument " + x.str() + " is not positive");
  LongDoubleApprox xa = to_long_double(x);
  long double v;
  if (xa.value < 0.5L) {
    v = detail::lanczos_gamma(xa.value + 1) / xa.value;
  } else {
    v = detail::lanczos_gamma(xa.value);
  }
  double d = static_cast<double>(v);
  if (!std::isfinite(d)) throw DomainError("gamma_numeric: overflow at " + x.str());
  return {d, std::abs(d) * 1e-12};
}

}  // namespace binomsum
