#include <catch_amalgamated.hpp>

#include "binomsum/double_sum.hpp"
#include "oracles.hpp"

using binomsum::DoubleSumSpec;
using binomsum::Rational;

namespace {
Rational q(long p, long d = 1) { return Rational(p, d); }
}  // namespace

TEST_CASE("double sum values") {
  CHECK(binomsum::eval_double_sum({1, q(4), q(3)}) == q(8, 3));
  CHECK(binomsum::eval_double_sum({1, q(3), q(2)}) == q(3));
  CHECK(binomsum::eval_double_sum({1, q(2), q(1), q(-1), q(1)}) == q(0));
  CHECK(binomsum::eval_double_sum({0, q(-7, 3), q(5, 2), q(9), q(-4)}) == q(1));
  CHECK(binomsum::eval_double_sum(DoubleSumSpec::with_c(1, q(4), q(3), q(1))) == q(8, 3));
}

TEST_CASE("double sum weights") {
  auto s = DoubleSumSpec::with_c(3, q(5), q(4), q(2));
  CHECK(s.u == q(2));
  CHECK(s.v == q(1, 2));
  auto r = DoubleSumSpec::with_c_reversed(3, q(5), q(4), q(2));
  CHECK(r.u == q(1, 2));
  CHECK(r.v == q(2));
  CHECK_THROWS_AS(DoubleSumSpec::with_c(3, q(5), q(4), q(0)), binomsum::DomainError);
}

TEST_CASE("double sum rejects vanishing denominator binomials") {
  CHECK_THROWS_AS(binomsum::eval_double_sum({3, q(1), q(2)}), binomsum::PoleError);
  CHECK_THROWS_AS(binomsum::eval_double_sum({3, q(1), q(0)}), binomsum::PoleError);
  CHECK_NOTHROW(binomsum::eval_double_sum({3, q(1), q(3)}));
  CHECK_NOTHROW(binomsum::eval_double_sum({3, q(1), q(-2)}));
  CHECK_NOTHROW(binomsum::eval_double_sum({3, q(1), q(5, 2)}));
  CHECK_THROWS_AS(binomsum::eval_double_sum({-1, q(1), q(3)}), binomsum::DomainError);
}

TEST_CASE("double sum matches the direct triple loop") {
  const Rational tops[] = {q(4), q(-7, 3), q(1, 2), q(11)};
  const Rational bottoms[] = {q(9), q(5, 2), q(-3), q(-4, 3)};
  const Rational weights[] = {q(1), q(-1), q(2, 3), q(-5, 2)};
  for (long n : {0L, 1L, 4L, 9L})
    for (const auto& t : tops)
      for (const auto& b : bottoms)
        for (const auto& u : weights) {
          const Rational v = u.inverse();
          if (b.is_integer() && b.sign() >= 0 && b < Rational(n)) continue;
          auto got = binomsum::eval_double_sum({n, t, b, u, v});
          auto want = oracle::double_sum(n, t.mpq(), b.mpq(), u.mpq(), v.mpq());
          INFO("n=" << n << " top=" << t << " bottom=" << b << " u=" << u);
          CHECK(got.mpq() == want);
        }
}

TEST_CASE("inner prefix") {
  CHECK(binomsum::eval_inner_prefix(q(4), 1, q(1)) == q(5));
  CHECK(binomsum::eval_inner_prefix(q(-9, 4), 0, q(3)) == q(1));
  CHECK(binomsum::eval_inner_prefix(q(2), 2, q(1)) == q(4));
  CHECK(binomsum::eval_inner_prefix(q(5, 3), 3, q(-2)).mpq() ==
        1 + oracle::binom(mpq_class(5, 3), 1) * -2 + oracle::binom(mpq_class(5, 3), 2) * 4 +
            oracle::binom(mpq_class(5, 3), 3) * -8);
}

TEST_CASE("gamma ratio sum") {
  auto a = binomsum::check_gamma_ratio_sum({0, 1, q(1), q(1, 2)});
  CHECK(a.lhs == q(5, 3));
  CHECK(a.rhs == q(5, 3));
  auto b = binomsum::check_gamma_ratio_sum({0, 0, q(3, 7), q(-2, 5)});
  CHECK(b.lhs == q(1));
  CHECK(b.rhs == q(1));
  auto c = binomsum::check_gamma_ratio_sum({2, 5, q(2), q(3)});
  CHECK(c.lhs == c.rhs);
  CHECK_THROWS_AS(binomsum::check_gamma_ratio_sum({2, 1, q(2), q(3)}), binomsum::DomainError);
  CHECK_THROWS_AS(binomsum::check_gamma_ratio_sum({0, 3, q(2), q(2)}), binomsum::DomainError);
  CHECK_THROWS_AS(binomsum::check_gamma_ratio_sum({0, 3, q(2), q(-2)}), binomsum::PoleError);
}

TEST_CASE("symmetric weighted sum") {
  for (long n = 0; n <= 12; ++n) {
    auto lhs = binomsum::symmetric_weighted_sum(n, [&](long j) { return binomsum::binom(q(n), j).inverse(); });
    Rational rhs(0);
    for (long j = 0; j <= n; ++j) rhs += binomsum::binom(q(n), j).inverse();
    CHECK(lhs == Rational(2).pow(n) * rhs);
  }
}
