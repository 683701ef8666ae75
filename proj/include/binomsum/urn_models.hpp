#pragma once

// Ehrenfest and Mabinogion urns: exact expected hitting/absorption times
// and a reproducible Monte-Carlo simulator.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "binomsum/errors.hpp"
#include "binomsum/identities.hpp"
#include "binomsum/rational.hpp"

namespace binomsum {

enum class UrnKind { ehrenfest, mabinogion };

/// State is the number of white balls, 0..total_balls.
struct UrnChain {
  UrnKind kind = UrnKind::ehrenfest;
  long total_balls = 1;
};

struct HittingTimeSolution {
  std::vector<Rational> expectations;  // indexed by state
};

/// Expected steps to reach `target` from each state 0..target of the
/// Ehrenfest chain with M+1 balls. The entry at `target` is 0.
inline HittingTimeSolution ehrenfest_hitting_times(long M, long target) {
  if (M < 1) throw DomainError("ehrenfest: M must be positive");
  if (target < 1 || target > M + 1) throw DomainError("ehrenfest: target must lie in [1, M+1]");
  const long N = M + 1;
  // e[w]: expected time from w to w+1; e[w] = (N + w e[w-1]) / (N - w).
  std::vector<Rational> step(target);
  for (long w = 0; w < target; ++w) {
    Rational prev = w > 0 ? step[w - 1] : Rational(0);
    step[w] = (Rational(N) + Rational(w) * prev) / Rational(N - w);
  }
  HittingTimeSolution sol{std::vector<Rational>(target + 1, Rational(0))};
  for (long w = target - 1; w >= 0; --w) sol.expectations[w] = sol.expectations[w + 1] + step[w];
  return sol;
}

/// Expected steps from 0 white balls to `target` white balls, M+1 balls total.
inline Rational ehrenfest_expected_steps(long M, long target) {
  return ehrenfest_hitting_times(M, target).expectations[0];
}

/// Expected absorption times X(0..n) of the Mabinogion urn with n balls.
inline HittingTimeSolution mabinogion_solution(long total) {
  if (total < 2) throw DomainError("mabinogion: total must be at least 2");
  const long n = total;
  // Rows k = 1..n-1 of  -(n-k) X(k-1) + n X(k) - k X(k+1) = n  (times n).
  std::vector<Rational> diag(n + 1), rhs(n + 1);
  for (long k = 1; k < n; ++k) {
    diag[k] = Rational(n);
    rhs[k] = Rational(n);
    if (k > 1) {
      Rational f = Rational(-(n - k)) / diag[k - 1];
      diag[k] -= f * Rational(-(k - 1));
      rhs[k] -= f * rhs[k - 1];
    }
  }
  HittingTimeSolution sol{std::vector<Rational>(n + 1, Rational(0))};
  for (long k = n - 1; k >= 1; --k) {
    Rational r = rhs[k];
    if (k + 1 < n) r += Rational(k) * sol.expectations[k + 1];
    sol.expectations[k] = r / diag[k];
  }
  return sol;
}

inline Rational mabinogion_expected_exact(long total, long start) {
  if (start < 0 || start > total) throw DomainError("mabinogion: start must lie in [0, total]");
  return mabinogion_solution(total).expectations[start];
}

struct SimConfig {
  std::uint64_t trials = 100000;
  std::uint64_t seed = 0;
};

struct SimResult {
  double mean = 0;
  double std_error = 0;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Counter-based stream: output i of trial t depends only on (seed, t, i).
class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t trial) : key_(splitmix64(seed ^ splitmix64(trial))) {}

  std::uint64_t next() { return splitmix64(key_ + 0x9E3779B97F4A7C15ULL * ++counter_); }

  /// Uniform on [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = -bound % bound;  // 2^64 mod bound
    for (;;) {
      unsigned __int128 prod = static_cast<unsigned __int128>(next()) * bound;
      if (static_cast<std::uint64_t>(prod) >= limit) return static_cast<std::uint64_t>(prod >> 64);
    }
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace detail

/// Mean and standard error of the number of steps until absorption
/// (mabinogion) or until `target` is first reached (ehrenfest).
inline SimResult simulate(const UrnChain& chain, long start, const SimConfig& cfg,
                          std::optional<long> target = std::nullopt) {
  const long n = chain.total_balls;
  if (n < 1) throw DomainError("simulate: total_balls must be positive");
  if (start < 0 || start > n) throw DomainError("simulate: start must lie in [0, total_balls]");
  if (cfg.trials == 0) throw DomainError("simulate: trials must be positive");
  if (chain.kind == UrnKind::ehrenfest) {
    if (!target) throw DomainError("simulate: the ehrenfest chain needs a target state");
    if (*target < 0 || *target > n) throw DomainError("simulate: target must lie in [0, total_balls]");
  }
  auto done = [&](long w) {
    if (chain.kind == UrnKind::ehrenfest) return w == *target;
    return w == 0 || w == n;
  };

  std::uint64_t sum = 0;
  unsigned __int128 sum_sq = 0;
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    detail::TrialRng rng(cfg.seed, t);
    long w = start;
    std::uint64_t steps = 0;
    while (!done(w)) {
      const bool white = rng.below(static_cast<std::uint64_t>(n)) < static_cast<std::uint64_t>(w);
      // Ehrenfest flips the drawn ball; Mabinogion recolors one ball of the
      // other color to match the drawn one.
      if (chain.kind == UrnKind::ehrenfest)
        w += white ? -1 : 1;
      else
        w += white ? 1 : -1;
      ++steps;
    }
    sum += steps;
    sum_sq += static_cast<unsigned __int128>(steps) * steps;
  }
  const long double k = static_cast<long double>(cfg.trials);
  const long double mean = static_cast<long double>(sum) / k;
  SimResult res{static_cast<double>(mean), 0.0};
  if (cfg.trials > 1) {
    long double var = (static_cast<long double>(sum_sq) - k * mean * mean) / (k - 1);
    res.std_error = static_cast<double>(std::sqrt(std::max(var, 0.0L) / k));
  }
  return res;
}

/// Numeric check of the 3n absorption-time sum against its digamma/3F2 form.
inline VerifyReport mabinogion_remark_value(long n, double tol = 1e-9) {
  return verify("mabinogion_3n", {.n = n}, tol);
}

}  // namespace binomsum
