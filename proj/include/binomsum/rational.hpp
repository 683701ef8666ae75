#pragma once

/**
 * @file rational.hpp
 * @brief Arbitrary-precision signed rational numbers.
 *
 * Thin value type over GMP's mpq_class. Every Rational is stored in
 * canonical form: positive denominator, numerator and denominator coprime,
 * zero as 0/1. Text form is "p/q", with "/q" omitted for integers.
 */

#include <gmpxx.h>

#include <cmath>
#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "binomsum/errors.hpp"

namespace binomsum {

class Rational {
 public:
  Rational() = default;

  template <std::signed_integral T>
  Rational(T v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

  template <std::unsigned_integral T>
  Rational(T v) : q_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)

  Rational(long num, long den) {
    if (den == 0) throw PoleError("rational with zero denominator");
    q_ = mpq_class(num, 1);
    q_ /= den;
  }

  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw PoleError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  /// Parses "[+-]p" or "[+-]p/q" (decimal digits only). Rejects q = 0.
  static Rational parse(std::string_view text) {
    auto fail = [&](const char* why) {
      return ParseError("invalid rational '" + std::string(text) + "': " + why);
    };
    if (text.empty()) throw fail("empty");
    std::string_view num = text;
    std::string_view den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      num = text.substr(0, slash);
      den = text.substr(slash + 1);
    }
    auto digits_ok = [](std::string_view s, bool allow_sign) {
      if (allow_sign && !s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
      if (s.empty()) return false;
      for (char ch : s)
        if (ch < '0' || ch > '9') return false;
      return true;
    };
    if (!digits_ok(num, true)) throw fail("bad numerator");
    if (!digits_ok(den, false)) throw fail("bad denominator");
    if (num.front() == '+') num.remove_prefix(1);
    mpz_class p(std::string(num), 10);
    mpz_class q(std::string(den), 10);
    if (q == 0) throw fail("zero denominator");
    return Rational(p, q);
  }

  std::string str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  const mpq_class& mpq() const noexcept { return q_; }
  const mpz_class& num() const noexcept { return q_.get_num(); }
  const mpz_class& den() const noexcept { return q_.get_den(); }

  int sign() const noexcept { return sgn(q_); }
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_integer() const noexcept { return q_.get_den() == 1; }
  bool is_nonpositive_integer() const noexcept { return is_integer() && sign() <= 0; }
  bool is_negative_integer() const noexcept { return is_integer() && sign() < 0; }

  /// Integer value when this is an integer fitting in a long.
  std::optional<long> to_long() const {
    if (!is_integer() || !q_.get_num().fits_slong_p()) return std::nullopt;
    return q_.get_num().get_si();
  }

  /// Nearest-below double; relative error at most 2^-52.
  double to_double() const { return q_.get_d(); }

  Rational abs() const { return Rational(::abs(q_)); }

  Rational inverse() const {
    if (is_zero()) throw PoleError("inverse of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
    return Rational(std::move(r));
  }

  /// Integer power; negative exponents require a nonzero base.
  Rational pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
    Rational r;
    r.q_ = mpq_class(n, d);  // already coprime
    return r;
  }

  Rational operator-() const { return Rational(mpq_class(-q_)); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw PoleError("division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_{0};
};

/// Long double approximation together with a bound on its relative error.
struct LongDoubleApprox {
  long double value;
  long double rel_error;
};

/// Converts to long double. Exact inputs whose numerator and denominator
/// fit in 64 bits incur one rounding; larger ones are scaled first.
inline LongDoubleApprox to_long_double(const Rational& r) {
  constexpr long double kUnit = std::numeric_limits<long double>::epsilon() / 2;
  const mpz_class& n = r.num();
  const mpz_class& d = r.den();
  if (n.fits_slong_p() && d.fits_slong_p()) {
    long double v = static_cast<long double>(n.get_si()) / static_cast<long double>(d.get_si());
    return {v, kUnit};
  }
  if (n == 0) return {0.0L, 0.0L};
  // Scale |n|/d so that the integer quotient has 64 significant bits.
  mpz_class an = ::abs(n);
  long shift = 64 - static_cast<long>(mpz_sizeinbase(an.get_mpz_t(), 2)) +
               static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2));
  mpz_class quot;
  if (shift >= 0) {
    mpz_class scaled = an << static_cast<mp_bitcnt_t>(shift);
    mpz_tdiv_q(quot.get_mpz_t(), scaled.get_mpz_t(), d.get_mpz_t());
  } else {
    mpz_class scaled = d << static_cast<mp_bitcnt_t>(-shift);
    mpz_tdiv_q(quot.get_mpz_t(), an.get_mpz_t(), scaled.get_mpz_t());
  }
  // quot has 64 or 65 bits; keep the top 64 exactly.
  long extra = static_cast<long>(mpz_sizeinbase(quot.get_mpz_t(), 2)) - 64;
  if (extra > 0) {
    quot >>= static_cast<mp_bitcnt_t>(extra);
    shift -= extra;
  }
  std::uint64_t top = 0;
  mpz_export(&top, nullptr, -1, sizeof(top), 0, 0, quot.get_mpz_t());
  long double v = std::ldexp(static_cast<long double>(top), static_cast<int>(-shift));
  if (n < 0) v = -v;
  // Two truncations of at most one unit in the 64th bit, plus the ldexp.
  return {v, 4 * kUnit};
}

}  // namespace binomsum
