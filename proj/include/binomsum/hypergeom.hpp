#pragma once

/**
 * @file hypergeom.hpp
 * @brief 2F1 and 3F2 at rational arguments.
 *
 * Terminating series (some upper parameter a nonpositive integer) are
 * summed exactly. Otherwise the series is summed in long double with a
 * running bound on rounding error, and the tail is bounded explicitly:
 *
 *  - |z| < 1: once the term ratio is below 1 and has been nonincreasing
 *    for five consecutive terms, the remainder is majorized by a geometric
 *    series with that ratio.
 *  - z = 1 (2F1 only, c - a - b > 0): the remainder is bracketed between
 *    two series whose term ratios are (l+d)/(l+d+q) with q on either side
 *    of 1 + c - a - b. Those series sum to (L+d+q-1)/(q-1) in closed form,
 *    and the comparison of term ratios is checked exactly over Q.
 */

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "binomsum/approx.hpp"
#include "binomsum/errors.hpp"
#include "binomsum/exact_arith.hpp"
#include "binomsum/rational.hpp"

namespace binomsum {

struct HypSeriesSpec {
  std::vector<Rational> upper;
  std::vector<Rational> lower;
  Rational z;
  double tol = 1e-15;

  static HypSeriesSpec f21(Rational a, Rational b, Rational c, Rational z, double tol = 1e-15) {
    return {{std::move(a), std::move(b)}, {std::move(c)}, std::move(z), tol};
  }
  static HypSeriesSpec f32(Rational a, Rational b, Rational c, Rational d, Rational e, Rational z,
                           double tol = 1e-15) {
    return {{std::move(a), std::move(b), std::move(c)}, {std::move(d), std::move(e)}, std::move(z),
            tol};
  }
};

/// Exact when the series terminates, bounded approximation otherwise.
using HypValue = Value;

namespace detail {

inline constexpr long double kLdUnit = std::numeric_limits<long double>::epsilon() / 2;
inline constexpr long kMaxTerms = 1L << 22;

// Smallest k with -k among the upper parameters, if any.
inline std::optional<long> termination_index(const HypSeriesSpec& spec) {
  std::optional<long> k;
  for (const auto& a : spec.upper) {
    if (!a.is_nonpositive_integer()) continue;
    auto v = a.to_long();
    if (!v) throw DomainError("hypergeometric: terminating parameter out of range");
    if (!k || -*v < *k) k = -*v;
  }
  return k;
}

inline void check_shape(const HypSeriesSpec& spec) {
  const auto p = spec.upper.size();
  if (!(p == 2 || p == 3) || spec.lower.size() + 1 != p)
    throw DomainError("hypergeometric: only 2F1 and 3F2 are supported");
  if (!(spec.tol > 0)) throw DomainError("hypergeometric: tolerance must be positive");
}

// A lower parameter -m is harmless only if the series stops strictly
// before (lower)_l reaches zero, i.e. it terminates at some k < m.
inline void check_lower(const HypSeriesSpec& spec, std::optional<long> stop) {
  for (const auto& b : spec.lower) {
    if (!b.is_nonpositive_integer()) continue;
    auto m = b.to_long();
    if (m && stop && *stop < -*m) continue;
    throw UndefinedSeriesError("hypergeometric: lower parameter " + b.str() +
                               " is a nonpositive integer not shielded by termination");
  }
}

inline Rational exact_sum(const HypSeriesSpec& spec, long last) {
  mpq_class term(1), acc(1);
  for (long l = 0; l < last; ++l) {
    for (const auto& a : spec.upper) term *= a.mpq() + l;
    for (const auto& b : spec.lower) term /= b.mpq() + l;
    term *= spec.z.mpq();
    term /= l + 1;
    acc += term;
  }
  return Rational(std::move(acc));
}

// l + p in long double. Small parameters use an exact integer numerator
// and a single rounding; anything else goes through the exact rational.
class ShiftedParam {
 public:
  explicit ShiftedParam(const Rational& p) : exact_(p) {
    constexpr long kLimit = 1L << 40;
    if (p.num().fits_slong_p() && p.den().fits_slong_p()) {
      num_ = p.num().get_si();
      den_ = p.den().get_si();
      fast_ = std::abs(num_) < kLimit && den_ < kLimit;
    }
  }

  long double at(long l) const {
    if (fast_ && l < (1L << 21)) {
      std::int64_t n = static_cast<std::int64_t>(l) * den_ + num_;
      return static_cast<long double>(n) / static_cast<long double>(den_);
    }
    return to_long_double(exact_ + Rational(l)).value;
  }

  // Relative error of at(), in units of kLdUnit.
  static constexpr long double kUnits = 4;

 private:
  Rational exact_;
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  bool fast_ = false;
};

struct SeriesState {
  long double sum = 0;
  long double err = 0;  // accumulated absolute rounding error
};

inline ApproxValue finish(const SeriesState& s, long double tail_value, long double tail_err) {
  long double v = s.sum + tail_value;
  long double eb = s.err + tail_err + std::abs(v) * kLdUnit;
  double d = static_cast<double>(v);
  return {d, static_cast<double>(eb) + rounding(d)};
}

// For l >= L, |t_{l+1}/t_l| = |z| prod (l+a_i)/(l+b_i) over paired upper
// and lower parameters (the lower side includes the 1 from l!). Once every
// L+a_i and L+b_i is positive, each factor is at most max(1, (L+a)/(L+b)).
class RatioCap {
 public:
  RatioCap(const HypSeriesSpec& spec, long double abs_z, long double z_rel) : abs_z_(abs_z) {
    std::vector<Rational> up = spec.upper;
    std::vector<Rational> lo = spec.lower;
    lo.emplace_back(1);
    std::sort(up.begin(), up.end());
    std::sort(lo.begin(), lo.end());
    for (std::size_t i = 0; i < up.size(); ++i) {
      pairs_.emplace_back(to_long_double(up[i]).value, to_long_double(lo[i]).value);
      min_param_ = std::min({min_param_, pairs_.back().first, pairs_.back().second});
    }
    slack_ = 1 + z_rel + 64 * kLdUnit;
  }

  /// Bound on every ratio from index L on, or nullopt if not yet available.
  std::optional<long double> at(long L) const {
    const long double l = static_cast<long double>(L);
    if (l + min_param_ <= 0.5L) return std::nullopt;
    long double rho = abs_z_ * slack_;
    for (const auto& [a, b] : pairs_) rho *= std::max<long double>(1, (l + a) / (l + b));
    if (rho >= 1) return std::nullopt;
    return rho;
  }

 private:
  long double abs_z_;
  long double slack_ = 1;
  long double min_param_ = 0;
  std::vector<std::pair<long double, long double>> pairs_;
};

// Numeric summation for |z| < 1.
inline ApproxValue sum_inside_disc(const HypSeriesSpec& spec) {
  std::vector<ShiftedParam> up, lo;
  for (const auto& a : spec.upper) up.emplace_back(a);
  for (const auto& b : spec.lower) lo.emplace_back(b);
  const LongDoubleApprox z = to_long_double(spec.z);
  const RatioCap cap(spec, std::abs(z.value), z.rel_error);
  const long double step_units =
      ShiftedParam::kUnits * static_cast<long double>(up.size() + lo.size()) + 4 +
      static_cast<long double>(up.size() + lo.size() + 2) + z.rel_error / kLdUnit;

  SeriesState s;
  long double term = 1;
  long double term_rel = 0;  // relative error bound of `term`
  for (long l = 0; l < kMaxTerms; ++l) {
    s.sum += term;
    s.err += std::abs(term) * term_rel + std::abs(s.sum) * kLdUnit;

    long double ratio = z.value / static_cast<long double>(l + 1);
    for (const auto& a : up) ratio *= a.at(l);
    for (const auto& b : lo) ratio /= b.at(l);
    term *= ratio;
    term_rel += step_units * kLdUnit * 1.01L;
    if (term == 0) return finish(s, 0, 0);

    if (auto rho = cap.at(l + 1)) {
      // Remaining terms t_{l+1}, t_{l+2}, ... shrink by at least rho each.
      const long double bound = std::abs(term) * (1 + term_rel) / (1 - *rho);
      const long double target =
          std::max<long double>(0.5L * spec.tol, 0.25L * kLdUnit * std::abs(s.sum));
      if (bound <= target) return finish(s, 0, bound);
    }
  }
  throw DivergenceError("hypergeometric: series did not reach the tolerance within the term budget");
}

struct TailBracket {
  long double lo;
  long double hi;
};

// Bounds on R = sum_{k>=0} prod_{i<k} r_{L+i} for the 2F1(a,b;c;1) term
// ratios r_l = (l+a)(l+b)/((l+c)(l+1)), valid when every factor is positive
// for l >= L. Returns nothing if the comparison cannot be certified at L.
inline std::optional<TailBracket> gauss_tail_bracket(const Rational& a, const Rational& b,
                                                     const Rational& c, long L) {
  const Rational s = c - a - b;
  const Rational one(1);
  const Rational LL(L);
  const Rational L2 = LL * LL;
  const Rational ab = a * b;
  // Majorant/minorant ratio (l+d)/(l+d+q); d is chosen so that the cubic
  // comparison polynomial has no linear term.
  auto shift_for = [&](const Rational& q) { return (ab + (a + b) * q - c) / (s + one); };
  auto closed_sum = [&](const Rational& d, const Rational& q) { return (LL + d + q - one) / (q - one); };

  std::optional<Rational> upper, lower;
  for (long k = 1; k <= (1L << 30) && !(upper && lower); k *= 2) {
    const Rational eps = Rational(k) / L2;
    if (eps * Rational(2) > s) break;
    if (!upper) {
      const Rational q = one + s - eps;
      const Rational d = shift_for(q);
      // P(l) = (l+d)(l+c)(l+1) - (l+a)(l+b)(l+d+q) = eps l^2 + C
      const Rational C = d * c - ab * (d + q);
      if (LL + d > Rational(0) && eps * L2 + C >= Rational(0)) upper = closed_sum(d, q);
    }
    if (!lower) {
      const Rational q = one + s + eps;
      const Rational d = shift_for(q);
      const Rational C = ab * (d + q) - d * c;
      if (LL + d > Rational(0) && eps * L2 + C >= Rational(0)) lower = closed_sum(d, q);
    }
  }
  if (!upper || !lower) return std::nullopt;
  LongDoubleApprox hi = to_long_double(*upper);
  LongDoubleApprox lo = to_long_double(*lower);
  return TailBracket{lo.value * (1 - lo.rel_error), hi.value * (1 + hi.rel_error)};
}

// Numeric summation of 2F1(a,b;c;1) with c - a - b > 0.
inline ApproxValue sum_at_unit(const HypSeriesSpec& spec) {
  const Rational& a = spec.upper[0];
  const Rational& b = spec.upper[1];
  const Rational& c = spec.lower[0];
  // First index from which l+a, l+b, l+c are all positive.
  long first_positive = 1;
  for (const Rational* p : {&a, &b, &c}) {
    if (p->sign() >= 0) continue;
    mpz_class ceil_neg;
    mpz_cdiv_q(ceil_neg.get_mpz_t(), mpz_class(-p->num()).get_mpz_t(), p->den().get_mpz_t());
    if (!ceil_neg.fits_slong_p() || ceil_neg.get_si() > kMaxTerms / 4)
      throw DomainError("hypergeometric: parameters too large for unit-argument summation");
    first_positive = std::max(first_positive, ceil_neg.get_si() + 1);
  }

  const ShiftedParam pa(a), pb(b), pc(c);
  const long double step_units = ShiftedParam::kUnits * 3 + 4 + 4;
  SeriesState s;
  long double term = 1;
  long double term_rel = 0;
  long checkpoint = 16;
  std::optional<ApproxValue> best;
  for (long l = 0; l < kMaxTerms; ++l) {
    if (l >= checkpoint) {
      checkpoint *= 2;
      if (l >= first_positive) {
        if (auto br = gauss_tail_bracket(a, b, c, l)) {
          const long double mid = 0.5L * (br->lo + br->hi);
          const long double tail = term * mid;
          const long double tail_err = std::abs(term) * (0.5L * (br->hi - br->lo) + br->hi * term_rel) +
                                       std::abs(tail) * 2 * kLdUnit;
          ApproxValue v = finish(s, tail, tail_err);
          if (v.error_bound <= 0.5 * spec.tol) return v;
          if (!best || v.error_bound < best->error_bound) best = v;
        }
      }
    }
    s.sum += term;
    s.err += std::abs(term) * term_rel + std::abs(s.sum) * kLdUnit;
    long double ratio = pa.at(l) * pb.at(l) / (pc.at(l) * static_cast<long double>(l + 1));
    term *= ratio;
    term_rel += step_units * kLdUnit * 1.01L;
    if (term == 0) return finish(s, 0, 0);
  }
  if (best) return *best;
  throw DivergenceError("hypergeometric: could not bound the tail at z = 1");
}

}  // namespace detail

/// Evaluates the series sum_l prod(upper)_l / prod(lower)_l z^l / l!.
inline HypValue hyp_eval(const HypSeriesSpec& spec) {
  detail::check_shape(spec);
  const auto stop = detail::termination_index(spec);
  detail::check_lower(spec, stop);
  if (stop) return detail::exact_sum(spec, *stop);
  if (spec.z.is_zero()) return Rational(1);

  const Rational abs_z = spec.z.abs();
  if (abs_z < Rational(1)) return detail::sum_inside_disc(spec);
  if (spec.z == Rational(1) && spec.upper.size() == 2) {
    if (spec.lower[0] - spec.upper[0] - spec.upper[1] <= Rational(0))
      throw DivergenceError("hypergeometric: 2F1 at z = 1 needs c - a - b > 0");
    return detail::sum_at_unit(spec);
  }
  throw DivergenceError("hypergeometric: non-terminating series at |z| = " + abs_z.str() +
                        " >= 1 is outside the supported region");
}

/// Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b)), the value of 2F1(a,b;c;1).
inline ApproxValue gauss_value(const Rational& a, const Rational& b, const Rational& c) {
  const Rational s = c - a - b;
  if (s.sign() <= 0) throw DomainError("gauss_value: needs c - a - b > 0");
  if (c.sign() <= 0 || (c - a).sign() <= 0 || (c - b).sign() <= 0)
    throw DomainError("gauss_value: c, c-a, c-b must be positive");
  if (a.is_zero() || b.is_zero()) return {1.0, 0.0};
  return gamma_numeric(c) * gamma_numeric(s) / (gamma_numeric(c - a) * gamma_numeric(c - b));
}

/// e^x with bound propagation.
inline ApproxValue exp_of(const ApproxValue& x) {
  double v = std::exp(x.value);
  double eb = v * std::expm1(x.error_bound) + 4 * detail::rounding(v);
  return {v, eb};
}

struct PfaffResult {
  HypSeriesSpec target;
  Value factor;  // (1-z)^(-a)
};

/// 2F1(a,b;c;z) = (1-z)^(-a) 2F1(a, c-b; c; z/(z-1)).
inline PfaffResult pfaff_transform(const HypSeriesSpec& spec) {
  detail::check_shape(spec);
  if (spec.upper.size() != 2) throw DomainError("pfaff_transform: needs a 2F1");
  const Rational one(1);
  if (spec.z == one) throw PoleError("pfaff_transform: pole at z = 1");
  const Rational& a = spec.upper[0];
  const Rational& b = spec.upper[1];
  const Rational& c = spec.lower[0];
  const Rational w = one - spec.z;

  HypSeriesSpec target{{a, c - b}, {c}, spec.z / (spec.z - one), spec.tol};
  Value factor;
  if (auto ai = a.to_long()) {
    factor = w.pow(-*ai);
  } else {
    if (w.sign() <= 0) throw DomainError("pfaff_transform: (1-z)^(-a) is not real");
    factor = exp_of(-(ApproxValue::from(a) * log_of(w)));
  }
  return {std::move(target), std::move(factor)};
}

/// Residual of 2F1(2, beta+1; gamma+1; 1/2)
///   = (2 gamma / beta) ((beta - 2 gamma + 2) 2F1(1, beta; gamma; 1/2) + 2 gamma - 2).
inline Value contiguous_2f1_residual(const Rational& beta, const Rational& gamma,
                                     double tol = 1e-15) {
  if (beta.is_zero()) throw DomainError("contiguous_2f1_residual: beta must be nonzero");
  if (gamma.is_nonpositive_integer())
    throw DomainError("contiguous_2f1_residual: gamma is a nonpositive integer");
  const Rational half(1, 2);
  const Rational one(1), two(2);
  Value lhs = hyp_eval(HypSeriesSpec::f21(two, beta + one, gamma + one, half, tol));
  Value inner = hyp_eval(HypSeriesSpec::f21(one, beta, gamma, half, tol));
  Value rhs = Value(two * gamma / beta) *
              (Value(beta - two * gamma + two) * inner + Value(two * gamma - two));
  return lhs - rhs;
}

/// Residual of (n+2) 3F2(1,1,n+3;2,2;x) - (n+1) 3F2(1,1,n+2;2,2;x) - 2F1(1,n+2;2;x).
inline Value contiguous_3f2_residual(long n, const Rational& x, double tol = 1e-15) {
  if (n < 0) throw DomainError("contiguous_3f2_residual: negative n");
  if (!(x.abs() < Rational(1))) throw DomainError("contiguous_3f2_residual: needs |x| < 1");
  const Rational one(1), two(2);
  Value f_hi = hyp_eval(HypSeriesSpec::f32(one, one, Rational(n + 3), two, two, x, tol));
  Value f_lo = hyp_eval(HypSeriesSpec::f32(one, one, Rational(n + 2), two, two, x, tol));
  Value g = hyp_eval(HypSeriesSpec::f21(one, Rational(n + 2), two, x, tol));
  return Value(Rational(n + 2)) * f_hi - Value(Rational(n + 1)) * f_lo - g;
}

/// The binomial prefix sum_{i<=k} C(top,i) x^i written through a 2F1:
///   x^(k+1)/(x+1) C(top,k) 2F1(1, top+1; top+1-k; 1/(x+1)).
inline Value inner_prefix_hypergeometric(const Rational& top, long k, const Rational& x,
                                         double tol = 1e-15) {
  const Rational one(1);
  if (x == -one) throw PoleError("inner_prefix_hypergeometric: x = -1");
  const Rational lead = x.pow(k + 1) / (x + one) * binom(top, k);
  return Value(lead) *
         hyp_eval(HypSeriesSpec::f21(one, top + one, top + one - Rational(k), (x + one).inverse(), tol));
}

}  // namespace binomsum
