#pragma once

// Floating values with a rigorous absolute error bound, and the tagged
// exact-or-approximate value used wherever a closed form may involve
// logarithms or non-terminating series.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <string>
#include <variant>

#include "binomsum/errors.hpp"
#include "binomsum/rational.hpp"

namespace binomsum {

namespace detail {
inline constexpr double kUnitRoundoff = std::numeric_limits<double>::epsilon() / 2;

// Error from rounding a freshly computed result to double.
inline double rounding(double v) { return std::abs(v) * kUnitRoundoff; }
}  // namespace detail

struct ApproxValue {
  double value = 0.0;
  double error_bound = 0.0;

  static ApproxValue from(const Rational& r) {
    double v = r.to_double();
    return {v, std::abs(v) * 2 * detail::kUnitRoundoff};
  }

  double lower() const { return value - error_bound; }
  double upper() const { return value + error_bound; }

  ApproxValue operator-() const { return {-value, error_bound}; }

  friend ApproxValue operator+(const ApproxValue& x, const ApproxValue& y) {
    double v = x.value + y.value;
    return {v, x.error_bound + y.error_bound + detail::rounding(v)};
  }
  friend ApproxValue operator-(const ApproxValue& x, const ApproxValue& y) { return x + (-y); }

  friend ApproxValue operator*(const ApproxValue& x, const ApproxValue& y) {
    double v = x.value * y.value;
    double eb = std::abs(x.value) * y.error_bound + std::abs(y.value) * x.error_bound +
                x.error_bound * y.error_bound;
    return {v, eb + detail::rounding(v)};
  }

  friend ApproxValue operator/(const ApproxValue& x, const ApproxValue& y) {
    double den = std::abs(y.value) - y.error_bound;
    if (!(den > 0)) throw PoleError("approximate division by an interval containing zero");
    double v = x.value / y.value;
    // |x/y - x~/y~| <= (|x~| eb_y + |y~| eb_x) / (|y~| (|y~| - eb_y))
    double eb = (std::abs(x.value) * y.error_bound + std::abs(y.value) * x.error_bound) /
                (std::abs(y.value) * den);
    return {v, eb + detail::rounding(v)};
  }
};

/// True when the intervals [v ± eb] of both operands overlap after
/// widening by `tol`.
inline bool consistent(const ApproxValue& x, const ApproxValue& y, double tol = 0.0) {
  return std::abs(x.value - y.value) <= x.error_bound + y.error_bound + tol;
}

/// Natural logarithm of a positive rational.
inline ApproxValue log_of(const Rational& x) {
  if (x.sign() <= 0) throw DomainError("logarithm of a nonpositive number");
  // log(p/q) = log p - log q keeps relative input error out of large ratios.
  LongDoubleApprox p = to_long_double(Rational(x.num()));
  LongDoubleApprox q = to_long_double(Rational(x.den()));
  long double v = std::log(p.value) - std::log(q.value);
  // Input error rel_e contributes at most rel_e/(1-rel_e) in the log; libm
  // log is accurate to well under 2 ulp of long double.
  constexpr long double u = std::numeric_limits<long double>::epsilon() / 2;
  long double eb = 1.01L * (p.rel_error + q.rel_error) +
                   4 * u * (std::abs(std::log(p.value)) + std::abs(std::log(q.value)) + 1);
  double d = static_cast<double>(v);
  return {d, static_cast<double>(eb) + detail::rounding(d) + 1e-300};
}

/// Either an exact rational or a bounded approximation.
using Value = std::variant<Rational, ApproxValue>;

inline bool is_exact(const Value& v) { return std::holds_alternative<Rational>(v); }

inline ApproxValue to_approx(const Value& v) {
  if (auto* r = std::get_if<Rational>(&v)) return ApproxValue::from(*r);
  return std::get<ApproxValue>(v);
}

namespace detail {
template <class ExactOp, class ApproxOp>
Value combine(const Value& x, const Value& y, ExactOp exact, ApproxOp approx) {
  if (is_exact(x) && is_exact(y)) return exact(std::get<Rational>(x), std::get<Rational>(y));
  return approx(to_approx(x), to_approx(y));
}
}  // namespace detail

inline Value operator+(const Value& x, const Value& y) {
  return detail::combine(
      x, y, [](const Rational& a, const Rational& b) { return Value(a + b); },
      [](const ApproxValue& a, const ApproxValue& b) { return Value(a + b); });
}
inline Value operator-(const Value& x, const Value& y) {
  return detail::combine(
      x, y, [](const Rational& a, const Rational& b) { return Value(a - b); },
      [](const ApproxValue& a, const ApproxValue& b) { return Value(a - b); });
}
inline Value operator*(const Value& x, const Value& y) {
  // Exact zero annihilates an approximation.
  if (auto* r = std::get_if<Rational>(&x); r && r->is_zero()) return Rational(0);
  if (auto* r = std::get_if<Rational>(&y); r && r->is_zero()) return Rational(0);
  return detail::combine(
      x, y, [](const Rational& a, const Rational& b) { return Value(a * b); },
      [](const ApproxValue& a, const ApproxValue& b) { return Value(a * b); });
}
inline Value operator/(const Value& x, const Value& y) {
  return detail::combine(
      x, y, [](const Rational& a, const Rational& b) { return Value(a / b); },
      [](const ApproxValue& a, const ApproxValue& b) { return Value(a / b); });
}

/// Shortest round-trippable decimal for a double.
inline std::string format_double(double v) {
  char buf[32];
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

/// "p/q" for exact values, "<value> +/- <bound>" for approximations.
inline std::string to_string(const Value& v) {
  if (auto* r = std::get_if<Rational>(&v)) return r->str();
  const auto& a = std::get<ApproxValue>(v);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", a.error_bound);
  return format_double(a.value) + " +/- " + buf;
}

}  // namespace binomsum
