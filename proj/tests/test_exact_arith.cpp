#include <catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

#include "binomsum/approx.hpp"
#include "binomsum/exact_arith.hpp"
#include "binomsum/rational.hpp"

using binomsum::ApproxValue;
using binomsum::Rational;

namespace {
Rational q(long p, long d = 1) { return Rational(p, d); }
}  // namespace

TEST_CASE("rational canonical form and text round trip") {
  Rational r(6, -4);
  CHECK(r.str() == "-3/2");
  CHECK(r.den() > 0);
  CHECK(Rational::parse("-3/2") == r);
  CHECK(Rational::parse("+10/5").str() == "2");
  CHECK(Rational::parse("0/7").is_zero());
  for (const char* text : {"1/2", "-7", "22/7", "-123456789012345678901234567890/7"})
    CHECK(Rational::parse(Rational::parse(text).str()).str() == Rational::parse(text).str());
}

TEST_CASE("rational parse rejects malformed input") {
  CHECK_THROWS_AS(Rational::parse(""), binomsum::ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), binomsum::ParseError);
  CHECK_THROWS_AS(Rational::parse("1/-2"), binomsum::ParseError);
  CHECK_THROWS_AS(Rational::parse("0.5"), binomsum::ParseError);
  CHECK_THROWS_AS(Rational::parse("x"), binomsum::ParseError);
  CHECK_THROWS_AS(Rational(1, 0), binomsum::PoleError);
}

TEST_CASE("rational arithmetic") {
  CHECK(q(1, 2) + q(1, 3) == q(5, 6));
  CHECK(q(1, 2) * q(2, 3) == q(1, 3));
  CHECK(q(1, 2) / q(1, 4) == q(2));
  CHECK_THROWS_AS(q(1) / q(0), binomsum::PoleError);
  CHECK(q(2, 3).pow(-2) == q(9, 4));
  CHECK(q(-5).is_negative_integer());
  CHECK(q(0).is_nonpositive_integer());
  CHECK_FALSE(q(-1, 2).is_nonpositive_integer());
  CHECK(q(-1, 2) < q(1, 3));
  std::ostringstream os;
  os << q(7, 3);
  CHECK(os.str() == "7/3");
}

TEST_CASE("binomial coefficients") {
  CHECK(binomsum::binom(q(5), 2) == q(10));
  CHECK(binomsum::binom(q(-3), 2) == q(6));
  CHECK(binomsum::binom(q(1, 2), 2) == q(-1, 8));
  CHECK(binomsum::binom(q(3), 5) == q(0));
  CHECK(binomsum::binom(q(7, 3), 0) == q(1));
  CHECK_THROWS_AS(binomsum::binom(q(1), -1), binomsum::DomainError);
}

TEST_CASE("rising factorials and gamma ratios") {
  CHECK(binomsum::pochhammer(q(7, 3), 0) == q(1));
  CHECK(binomsum::pochhammer(q(3), 2) == q(12));
  CHECK(binomsum::pochhammer(q(1, 2), 3) == q(15, 8));
  CHECK(binomsum::pochhammer(q(-2), 4) == q(0));
  CHECK(binomsum::gamma_ratio(q(9, 7), 0) == q(1));
  CHECK(binomsum::gamma_ratio(q(1, 2), 2) == q(3, 4));
  CHECK(binomsum::gamma_ratio(q(5, 2), -2) == q(4, 3));
  CHECK_THROWS_AS(binomsum::gamma_ratio(q(2), -3), binomsum::PoleError);
}

TEST_CASE("harmonic numbers and digamma differences") {
  CHECK(binomsum::harmonic(0) == q(0));
  CHECK(binomsum::harmonic(4) == q(25, 12));
  CHECK(binomsum::harmonic(3) - binomsum::harmonic(1) / q(2) == q(4, 3));
  CHECK(binomsum::digamma_diff(q(3, 5), 0) == q(0));
  CHECK(binomsum::digamma_diff(q(1), 4) == q(25, 12));
  CHECK(binomsum::digamma_diff(q(1, 2), 2) == q(8, 3));
  CHECK_THROWS_AS(binomsum::digamma_diff(q(-2), 4), binomsum::PoleError);
}

TEST_CASE("gamma_numeric against known constants") {
  const double sqrt_pi = std::sqrt(std::acos(-1.0));
  ApproxValue one = binomsum::gamma_numeric(q(1));
  CHECK(std::abs(one.value - 1.0) <= 1e-12);
  ApproxValue half = binomsum::gamma_numeric(q(1, 2));
  CHECK(std::abs(half.value - 1.7724538509055160) <= half.error_bound);
  CHECK(std::abs(half.value - sqrt_pi) <= half.error_bound);
  ApproxValue five_halves = binomsum::gamma_numeric(q(5, 2));
  CHECK(std::abs(five_halves.value - 1.3293403881791370) <= five_halves.error_bound);
  CHECK_THROWS_AS(binomsum::gamma_numeric(q(0)), binomsum::DomainError);
  CHECK_THROWS_AS(binomsum::gamma_numeric(q(-1, 2)), binomsum::DomainError);
}

TEST_CASE("gamma_numeric agrees with std::tgamma on (0, 50]") {
  for (long num = 1; num <= 500; num += 7) {
    const Rational x = q(num, 10);
    const ApproxValue g = binomsum::gamma_numeric(x);
    const double ref = std::tgamma(x.to_double());
    INFO("x = " << x);
    CHECK(std::abs(g.value - ref) <= g.error_bound + 4e-15 * std::abs(ref));
  }
}

TEST_CASE("approximate arithmetic propagates bounds") {
  ApproxValue a{1.0, 1e-10};
  ApproxValue b{2.0, 1e-12};
  ApproxValue s = a + b;
  CHECK(s.value == 3.0);
  CHECK(s.error_bound >= 1e-10 + 1e-12);
  ApproxValue p = a * b;
  CHECK(p.error_bound >= 1.0 * 1e-12 + 2.0 * 1e-10);
  CHECK_THROWS_AS(a / (ApproxValue{0.0, 1e-3}), binomsum::PoleError);
  ApproxValue l = binomsum::log_of(q(2));
  CHECK(std::abs(l.value - std::log(2.0)) <= l.error_bound);
  CHECK_THROWS_AS(binomsum::log_of(q(0)), binomsum::DomainError);
}

TEST_CASE("mixed exact and approximate values") {
  using binomsum::Value;
  Value exact = q(1, 3);
  Value approx = ApproxValue{0.5, 1e-9};
  CHECK(binomsum::is_exact(exact + exact));
  CHECK_FALSE(binomsum::is_exact(exact + approx));
  CHECK(binomsum::is_exact(Value(q(0)) * approx));
  CHECK(binomsum::to_string(exact) == "1/3");
  CHECK(binomsum::to_string(approx).find("+/-") != std::string::npos);
}
