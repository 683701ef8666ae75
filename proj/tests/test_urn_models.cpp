#include <catch_amalgamated.hpp>

#include <cmath>

#include "binomsum/double_sum.hpp"
#include "binomsum/urn_models.hpp"
#include "oracles.hpp"

using binomsum::Rational;
using binomsum::UrnKind;

namespace {
Rational q(long p, long d = 1) { return Rational(p, d); }
}  // namespace

TEST_CASE("ehrenfest expected steps") {
  CHECK(binomsum::ehrenfest_expected_steps(1, 1) == q(1));
  CHECK(binomsum::ehrenfest_expected_steps(3, 2) == q(8, 3));
  CHECK(binomsum::ehrenfest_expected_steps(5, 3) == q(23, 5));
  CHECK_THROWS_AS(binomsum::ehrenfest_expected_steps(3, 0), binomsum::DomainError);
  CHECK_THROWS_AS(binomsum::ehrenfest_expected_steps(3, 5), binomsum::DomainError);
  CHECK_THROWS_AS(binomsum::ehrenfest_expected_steps(0, 1), binomsum::DomainError);
}

TEST_CASE("ehrenfest agrees with a dense linear solve") {
  for (long M = 1; M <= 8; ++M) {
    const long N = M + 1;
    for (long target = 1; target <= N; ++target) {
      std::vector<bool> absorbing(N + 1, false);
      absorbing[target] = true;
      auto h = oracle::hitting_times(oracle::ehrenfest_matrix(N), absorbing);
      auto sol = binomsum::ehrenfest_hitting_times(M, target);
      for (long w = 0; w <= target; ++w) CHECK(sol.expectations[w].mpq() == h[w]);
    }
  }
}

TEST_CASE("mabinogion expected absorption") {
  CHECK(binomsum::mabinogion_expected_exact(2, 1) == q(1));
  CHECK(binomsum::mabinogion_expected_exact(4, 2) == q(8, 3));
  for (long n : {2L, 5L, 9L}) {
    CHECK(binomsum::mabinogion_expected_exact(n, 0) == q(0));
    CHECK(binomsum::mabinogion_expected_exact(n, n) == q(0));
  }
  CHECK_THROWS_AS(binomsum::mabinogion_expected_exact(1, 0), binomsum::DomainError);
  CHECK_THROWS_AS(binomsum::mabinogion_expected_exact(4, 5), binomsum::DomainError);
}

TEST_CASE("mabinogion agrees with a dense linear solve") {
  for (long n = 2; n <= 12; ++n) {
    std::vector<bool> absorbing(n + 1, false);
    absorbing[0] = absorbing[n] = true;
    auto h = oracle::hitting_times(oracle::mabinogion_matrix(n), absorbing);
    auto sol = binomsum::mabinogion_solution(n);
    for (long k = 0; k <= n; ++k) CHECK(sol.expectations[k].mpq() == h[k]);
  }
}

TEST_CASE("simulation is reproducible and consistent") {
  binomsum::SimConfig cfg{20000, 7};
  auto a = binomsum::simulate({UrnKind::mabinogion, 4}, 2, cfg);
  auto b = binomsum::simulate({UrnKind::mabinogion, 4}, 2, cfg);
  CHECK(a.mean == b.mean);
  CHECK(a.std_error == b.std_error);
  CHECK(std::abs(a.mean - 8.0 / 3.0) <= 4 * a.std_error);

  auto e = binomsum::simulate({UrnKind::ehrenfest, 4}, 0, cfg, 2);
  CHECK(std::abs(e.mean - 8.0 / 3.0) <= 4 * e.std_error);

  auto other_seed = binomsum::simulate({UrnKind::mabinogion, 4}, 2, {20000, 8});
  CHECK(other_seed.mean != a.mean);
}

TEST_CASE("simulation edge cases") {
  auto absorbed = binomsum::simulate({UrnKind::mabinogion, 6}, 0, {1, 0});
  CHECK(absorbed.mean == 0.0);
  CHECK(absorbed.std_error == 0.0);
  auto at_target = binomsum::simulate({UrnKind::ehrenfest, 4}, 2, {1, 0}, 2);
  CHECK(at_target.mean == 0.0);
  CHECK_THROWS_AS(binomsum::simulate({UrnKind::ehrenfest, 4}, 0, {10, 0}), binomsum::DomainError);
  CHECK_THROWS_AS(binomsum::simulate({UrnKind::mabinogion, 4}, 5, {10, 0}), binomsum::DomainError);
  CHECK_THROWS_AS(binomsum::simulate({UrnKind::mabinogion, 4}, 2, {0, 0}), binomsum::DomainError);
}

TEST_CASE("counter-based generator") {
  binomsum::detail::TrialRng r1(0, 5), r2(0, 5), r3(0, 6);
  auto x = r1.next();
  CHECK(x == r2.next());
  CHECK(x != r3.next());
  binomsum::detail::TrialRng r(42, 0);
  for (int i = 0; i < 1000; ++i) CHECK(r.below(7) < 7);
}

TEST_CASE("remark value") {
  auto r = binomsum::mabinogion_remark_value(0);
  CHECK(r.status == binomsum::Status::within_bounds);
  CHECK(binomsum::mabinogion_remark_value(1).status == binomsum::Status::within_bounds);
  CHECK(binomsum::mabinogion_remark_value(5).status == binomsum::Status::within_bounds);
}
