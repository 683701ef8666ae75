#pragma once

// Slow, direct reference implementations used only by the tests.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace oracle {

inline mpq_class binom(const mpq_class& x, long k) {
  mpq_class r(1);
  for (long i = 0; i < k; ++i) {
    r *= x - i;
    r /= i + 1;
  }
  return r;
}

inline mpq_class power(const mpq_class& x, long e) {
  mpq_class r(1);
  for (long i = 0; i < e; ++i) r *= x;
  return r;
}

// Term-by-term double sum, every binomial recomputed from scratch.
inline mpq_class double_sum(long n, const mpq_class& top, const mpq_class& bottom,
                            const mpq_class& u = 1, const mpq_class& v = 1) {
  mpq_class total(0);
  for (long j = 0; j <= n; ++j) {
    mpq_class inner(0);
    for (long i = 0; i <= j; ++i) inner += binom(top, i) * power(u, i);
    total += inner * power(v, j) / binom(bottom, j);
  }
  return total;
}

// Dense Gauss-Jordan solve of A x = b over the rationals.
inline std::vector<mpq_class> solve(std::vector<std::vector<mpq_class>> a, std::vector<mpq_class> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::runtime_error("singular system");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      mpq_class f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

// Expected hitting times of `absorbing` states for a chain on 0..N with
// transition matrix P: h = 1 + P h off the absorbing set, h = 0 on it.
inline std::vector<mpq_class> hitting_times(const std::vector<std::vector<mpq_class>>& P,
                                            const std::vector<bool>& absorbing) {
  const std::size_t n = P.size();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n, 0));
  std::vector<mpq_class> b(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    a[i][i] = 1;
    if (absorbing[i]) continue;
    for (std::size_t j = 0; j < n; ++j) a[i][j] -= P[i][j];
    b[i] = 1;
  }
  return solve(a, b);
}

inline mpq_class frac(long p, long q) { return mpq_class(p) / q; }

// Ehrenfest chain with N balls: flip a uniformly drawn ball.
inline std::vector<std::vector<mpq_class>> ehrenfest_matrix(long N) {
  std::vector<std::vector<mpq_class>> P(N + 1, std::vector<mpq_class>(N + 1, 0));
  for (long w = 0; w <= N; ++w) {
    if (w > 0) P[w][w - 1] = frac(w, N);
    if (w < N) P[w][w + 1] = frac(N - w, N);
  }
  return P;
}

// Mabinogion chain with N balls: the drawn color gains a ball.
inline std::vector<std::vector<mpq_class>> mabinogion_matrix(long N) {
  std::vector<std::vector<mpq_class>> P(N + 1, std::vector<mpq_class>(N + 1, 0));
  P[0][0] = 1;
  P[N][N] = 1;
  for (long w = 1; w < N; ++w) {
    P[w][w + 1] = frac(w, N);
    P[w][w - 1] = frac(N - w, N);
  }
  return P;
}

}  // namespace oracle
