#pragma once

// The identity catalog. Each entry pairs a left side (mostly a double sum
// evaluated by eval_double_sum) with an independently coded closed form.
// Notation in the formula strings: C(x,k) generalized binomial, H_n
// harmonic number, psi digamma, (x)_k rising factorial, S[...] the double
// sum sum_{j=0}^{n} sum_{i=0}^{j} C(top,i)/C(bottom,j) w(i,j).

#include <optional>
#include <string>
#include <vector>

#include "binomsum/approx.hpp"
#include "binomsum/double_sum.hpp"
#include "binomsum/errors.hpp"
#include "binomsum/exact_arith.hpp"
#include "binomsum/hypergeom.hpp"
#include "binomsum/identity_record.hpp"
#include "binomsum/rational.hpp"

namespace binomsum::detail::catalog {

using P = IdentityParams;
using Reason = std::optional<std::string>;

inline Rational Z(long v) { return Rational(v); }
inline Rational frac(long p, long q) { return Rational(p, q); }

inline Rational sign_pow(long e) { return (e % 2 == 0) ? Z(1) : Z(-1); }

template <class F>
Rational sum_range(long lo, long hi, F&& f) {
  Rational acc(0);
  for (long k = lo; k <= hi; ++k) acc += f(k);
  return acc;
}

// sum_{k=0}^{n} 1/(2k+1)
inline Rational odd_reciprocals(long n) {
  return sum_range(0, n, [](long k) { return frac(1, 2 * k + 1); });
}

// sum_{k=1}^{N} 2^k/k
inline Rational powers_of_two_over_k(long N) {
  return sum_range(1, N, [](long k) { return Z(2).pow(k) / Z(k); });
}

inline Rational S(long n, const Rational& top, const Rational& bottom, const Rational& u = Z(1),
                  const Rational& v = Z(1)) {
  return eval_double_sum({n, top, bottom, u, v});
}

inline Reason negative_integer(const std::optional<Rational>& x, const char* name) {
  if (x && x->is_negative_integer()) return std::string(name) + " = " + x->str() + " is a negative integer";
  return std::nullopt;
}

inline Reason first_of(std::initializer_list<Reason> reasons) {
  for (const auto& r : reasons)
    if (r) return r;
  return std::nullopt;
}

inline Reason when(bool cond, std::string why) {
  if (cond) return why;
  return std::nullopt;
}

inline Reason unit_disc(const Rational& c) {
  return when(!((c + Z(1)).abs() > Z(1)),
              "c = " + c.str() + " puts 1/(c+1) outside the open unit disc");
}

inline Reason c_excluded(const Rational& c) {
  return when(c == Z(0) || c == Z(-1), "c = " + c.str() + " is excluded (c in {-1, 0})");
}

inline std::optional<DoubleSumSpec> no_sum(const P&) { return std::nullopt; }

inline Value hyp(HypSeriesSpec spec) { return hyp_eval(spec); }

// Both sides of a pointwise family folded into (sum lhs, sum rhs) plus the
// individual equalities as side checks.
struct Family {
  Rational lhs{0};
  Rational rhs{0};
  std::vector<SideCheck> points;

  void add(std::string label, Rational l, Rational r) {
    lhs += l;
    rhs += r;
    points.push_back({std::move(label), std::move(l), std::move(r)});
  }
};

inline std::vector<IdentityRecord> build() {
  std::vector<IdentityRecord> reg;
  auto add = [&](IdentityRecord r) {
    if (!r.reject) r.reject = [](const P&) -> Reason { return std::nullopt; };
    if (!r.lhs_sum) r.lhs_sum = no_sum;
    if (!r.lhs) {
      auto spec_of = r.lhs_sum;
      r.lhs = [spec_of](const P& p) -> Value { return eval_double_sum(*spec_of(p)); };
    }
    reg.push_back(std::move(r));
  };
  auto sum_spec = [](auto f) {
    return [f](const P& p) -> std::optional<DoubleSumSpec> { return f(p); };
  };

  // ---- central binomial-ratio sums -------------------------------------

  add({.id = "wansum",
       .formula = "S[top=2n+2, bottom=2n+1] = (n+1) sum_{k=0}^{n} 1/(2k+1)",
       .domain = "n >= 0",
       .lhs_sum = sum_spec([](const P& p) { return DoubleSumSpec{p.n, Z(2 * p.n + 2), Z(2 * p.n + 1)}; }),
       .rhs = [](const P& p) -> Value { return Z(p.n + 1) * odd_reciprocals(p.n); }});

  add({.id = "wansum_b",
       .formula = "S[top=2n+1, bottom=2n] = (n+1/2) sum_{k=0}^{n} 1/(2k+1) + 2^(2n-1)/C(2n,n)",
       .domain = "n >= 0",
       .lhs_sum = sum_spec([](const P& p) { return DoubleSumSpec{p.n, Z(2 * p.n + 1), Z(2 * p.n)}; }),
       .rhs = [](const P& p) -> Value {
         return (Z(p.n) + frac(1, 2)) * odd_reciprocals(p.n) +
                Z(2).pow(2 * p.n - 1) / binom(Z(2 * p.n), p.n);
       }});

  add({.id = "thm1_general",
       .formula = "S[top=2n+a+2, bottom=2n+b+1]/(2n+b+2) = sum_{k=0}^{n} (C(2k+a,k) + b "
                  "sum_{j<k} C(2k+a,j)/(k+b+1)) / ((k+1) C(2k+b+2,k+1))",
       .domain = "b not a negative integer",
       .parameters = {'a', 'b'},
       .reject = [](const P& p) { return negative_integer(p.b, "b"); },
       .lhs_sum = sum_spec([](const P& p) {
         return DoubleSumSpec{p.n, Z(2 * p.n + 2) + *p.a, Z(2 * p.n + 1) + *p.b};
       }),
       .lhs = [](const P& p) -> Value {
         return S(p.n, Z(2 * p.n + 2) + *p.a, Z(2 * p.n + 1) + *p.b) / (Z(2 * p.n + 2) + *p.b);
       },
       .rhs = [](const P& p) -> Value {
         const Rational& a = *p.a;
         const Rational& b = *p.b;
         return sum_range(0, p.n, [&](long k) {
           const Rational top = Z(2 * k) + a;
           Rational bracket = binom(top, k);
           if (k > 0) bracket += b * eval_inner_prefix(top, k - 1, Z(1)) / (Z(k + 1) + b);
           return bracket / (Z(k + 1) * binom(Z(2 * k + 2) + b, k + 1));
         });
       }});

  add({.id = "thm2_sum_form",
       .formula = "S[top=n+a+1, bottom=n+b, w=c^(i-j)]/(n+b+1) = 1/(b+1) sum_{k=0}^{n} sum_{j=0}^{k} "
                  "C(k+a,j)/C(k+b+1,k) c^(j-k)",
       .domain = "b not a negative integer, c != 0",
       .parameters = {'a', 'b', 'c'},
       .reject = [](const P& p) {
         return first_of({negative_integer(p.b, "b"), when(p.c->is_zero(), "c = 0")});
       },
       .lhs_sum = sum_spec([](const P& p) {
         return DoubleSumSpec::with_c(p.n, Z(p.n + 1) + *p.a, Z(p.n) + *p.b, *p.c);
       }),
       .lhs = [](const P& p) -> Value {
         auto spec = DoubleSumSpec::with_c(p.n, Z(p.n + 1) + *p.a, Z(p.n) + *p.b, *p.c);
         return eval_double_sum(spec) / (Z(p.n + 1) + *p.b);
       },
       .rhs = [](const P& p) -> Value {
         const Rational& a = *p.a;
         const Rational& b = *p.b;
         const Rational& c = *p.c;
         const Rational c_inv = c.inverse();
         Rational c_inv_pow(1);
         Rational total(0);
         for (long k = 0; k <= p.n; ++k) {
           total += eval_inner_prefix(Z(k) + a, k, c) * c_inv_pow / binom(Z(k + 1) + b, k);
           c_inv_pow *= c_inv;
         }
         return total / (b + Z(1));
       }});

  add({.id = "thm2_hyp_generic",
       .formula = "(a-b)(c+1)/((n+b+1)c) S[top=n+a+1, bottom=n+b, w=c^(i-j)] = "
                  "(a+1)_{n+1}/(b+1)_{n+1} 3F2(1, a-b, n+a+2; a-b+1, a+1; 1/(c+1)) "
                  "- 2F1(1, a-b; a-b+1; 1/(c+1))",
       .domain = "b not a negative integer, a-b not a nonpositive integer, a+1 not a nonpositive "
                 "integer, c not in {-1,0}, |c+1| > 1",
       .parameters = {'a', 'b', 'c'},
       .exactness = Exactness::numeric,
       .reject = [](const P& p) {
         const Rational d = *p.a - *p.b;
         return first_of({negative_integer(p.b, "b"), c_excluded(*p.c),
                          when(d.is_nonpositive_integer(),
                               "a-b = " + d.str() + " is a nonpositive integer (degenerate case)"),
                          when((*p.a + Z(1)).is_nonpositive_integer(), "a+1 is a nonpositive integer"),
                          unit_disc(*p.c)});
       },
       .lhs_sum = sum_spec([](const P& p) {
         return DoubleSumSpec::with_c(p.n, Z(p.n + 1) + *p.a, Z(p.n) + *p.b, *p.c);
       }),
       .lhs = [](const P& p) -> Value {
         const Rational& c = *p.c;
         auto spec = DoubleSumSpec::with_c(p.n, Z(p.n + 1) + *p.a, Z(p.n) + *p.b, c);
         return (*p.a - *p.b) * (c + Z(1)) / ((Z(p.n + 1) + *p.b) * c) * eval_double_sum(spec);
       },
       .rhs = [](const P& p) -> Value {
         const Rational& a = *p.a;
         const Rational& b = *p.b;
         const Rational z = (*p.c + Z(1)).inverse();
         const Rational d = a - b;
         const Rational ratio = pochhammer(a + Z(1), p.n + 1) / pochhammer(b + Z(1), p.n + 1);
         return Value(ratio) * hyp(HypSeriesSpec::f32(Z(1), d, Z(p.n + 2) + a, d + Z(1), a + Z(1), z)) -
                hyp(HypSeriesSpec::f21(Z(1), d, d + Z(1), z));
       }});

  add({.id = "thm2_hyp_degenerate",
       .formula = "(c+1)^(b-a+1)/((n+b+1)c) S[top=n+a+1, bottom=n+b, w=c^(i-j)] = "
                  "(n+b+2)/((b+1)(c+1)) 3F2(1,1,n+b+3; 2,b+2; 1/(c+1)) + psi(n+b+2) - psi(b+1) "
                  "+ log(c/(c+1)) - sum_{l=1}^{b-a} (c+1)^l/l (Gamma(n+b+2-l)Gamma(b+1)/"
                  "(Gamma(n+b+2)Gamma(b+1-l)) - 1)",
       .domain = "b not a negative integer, a-b a nonpositive integer, c not in {-1,0}, |c+1| > 1",
       .parameters = {'a', 'b', 'c'},
       .exactness = Exactness::numeric,
       .reject = [](const P& p) -> Reason {
         const Rational d = *p.a - *p.b;
         if (auto r = first_of({negative_integer(p.b, "b"), c_excluded(*p.c),
                                when(!d.is_nonpositive_integer(),
                                     "a-b = " + d.str() + " is not a nonpositive integer"),
                                unit_disc(*p.c)}))
           return r;
         const long span = *(-d).to_long();
         for (long l = 1; l <= span; ++l)
           if (pochhammer(Z(p.n + 2 - l) + *p.b, l).is_zero())
             return "Gamma(n+b+2-l) has a pole at l = " + std::to_string(l);
         return std::nullopt;
       },
       .lhs_sum = sum_spec([](const P& p) {
         return DoubleSumSpec::with_c(p.n, Z(p.n + 1) + *p.a, Z(p.n) + *p.b, *p.c);
       }),
       .lhs = [](const P& p) -> Value {
         const Rational& c = *p.c;
         const long span = *(*p.b - *p.a).to_long();
         auto spec = DoubleSumSpec::with_c(p.n, Z(p.n + 1) + *p.a, Z(p.n) + *p.b, c);
         return (c + Z(1)).pow(span + 1) / ((Z(p.n + 1) + *p.b) * c) * eval_double_sum(spec);
       },
       .rhs = [](const P& p) -> Value {
         const Rational& b = *p.b;
         const Rational& c = *p.c;
         const Rational c1 = c + Z(1);
         const long span = *(b - *p.a).to_long();
         Value hyper = Value((Z(p.n + 2) + b) / ((b + Z(1)) * c1)) *
                       hyp(HypSeriesSpec::f32(Z(1), Z(1), Z(p.n + 3) + b, Z(2), b + Z(2), c1.inverse()));
         Rational finite = digamma_diff(b + Z(1), p.n + 1);
         finite -= sum_range(1, span, [&](long l) {
           Rational g = gamma_ratio(Z(p.n + 2) + b, -l) * gamma_ratio(b + Z(1 - l), l);
           return c1.pow(l) / Z(l) * (g - Z(1));
         });
         return hyper + Value(finite) + Value(log_of(c / c1));
       }});

  add({.id = "mabinogion_3n",
       .formula = "2/(3n+1) sum_{j=0}^{2n} sum_{i=0}^{j} C(3n+1,i)/C(3n,j) = psi(3n+2) - psi(n+1) "
                  "- log 2 + (3n+2)/(2n+2) 3F2(1,1,3n+3; 2,n+2; 1/2)",
       .domain = "n >= 0",
       .exactness = Exactness::numeric,
       .lhs_sum = sum_spec([](const P& p) { return DoubleSumSpec{2 * p.n, Z(3 * p.n + 1), Z(3 * p.n)}; }),
       .lhs = [](const P& p) -> Value {
         return frac(2, 3 * p.n + 1) * S(2 * p.n, Z(3 * p.n + 1), Z(3 * p.n));
       },
       .rhs = [](const P& p) -> Value {
         Value f = hyp(HypSeriesSpec::f32(Z(1), Z(1), Z(3 * p.n + 3), Z(2), Z(p.n + 2), frac(1, 2)));
         return Value(digamma_diff(Z(p.n + 1), 2 * p.n + 1)) - Value(log_of(Z(2))) +
                Value(frac(3 * p.n + 2, 2 * p.n + 2)) * f;
       }});

  // ---- specializations -------------------------------------------------

  add({.id = "cor3_b0",
       .formula = "S[top=2n+a+2, bottom=2n+1] = sum_{k=0}^{n} (n+1)/(2k+1) C(2k+a,k)/C(2k,k)",
       .domain = "any rational a",
       .parameters = {'a'},
       .lhs_sum = sum_spec([](const P& p) { return DoubleSumSpec{p.n, Z(2 * p.n + 2) + *p.a, Z(2 * p.n + 1)}; }),
       .rhs = [](const P& p) -> Value {
         return sum_range(0, p.n, [&](long k) {
           return frac(p.n + 1, 2 * k + 1) * binom(Z(2 * k) + *p.a, k) / binom(Z(2 * k), k);
         });
       }});

  add({.id = "cor3_a1",
       .formula = "S[top=2n+3, bottom=2n+b+1] = sum_{k=0}^{n} (2n+b+2)/(k+b+1) (C(2k+1,k) + "
                  "4^k b/(k+1)) / C(2k+b+2,k+1)",
       .domain = "b not a negative integer",
       .parameters = {'b'},
       .reject = [](const P& p) { return negative_integer(p.b, "b"); },
       .lhs_sum = sum_spec([](const P& p) { return DoubleSumSpec{p.n, Z(2 * p.n + 3), Z(2 * p.n + 1) + *p.b}; }),
       .rhs = [](const P& p) -> Value {
         const Rational& b = *p.b;
         return sum_range(0, p.n, [&](long k) {
           Rational inner = binom(Z(2 * k + 1), k) + Z(4).pow(k) * b / Z(k + 1);
           return (Z(2 * p.n + 2) + b) / (Z(k + 1) + b) * inner / binom(Z(2 * k + 2) + b, k + 1);
         });
       }});

  add({.id = "cor3_a0",
       .formula = "S[top=n+1, bottom=n+b, w=c^(j-i)] = sum_{k=0}^{n} (n+b+1)/(b+1) (c+1)^k / C(k+b+1,k)",
       .domain = "b not a negative integer, c != 0",
       .parameters = {'b', 'c'},
       .reject = [](const P& p) {
         return first_of({negative_integer(p.b, "b"), when(p.c->is_zero(), "c = 0")});
       },
       .lhs_sum = sum_spec([](const P& p) {
         return DoubleSumSpec::with_c_reversed(p.n, Z(p.n + 1), Z(p.n) + *p.b, *p.c);
       }),
       .rhs = [](const P& p) -> Value {
         const Rational& b = *p.b;
         const Rational c1 = *p.c + Z(1);
         return sum_range(0, p.n, [&](long k) {
           return (Z(p.n + 1) + b) / (b + Z(1)) * c1.pow(k) / binom(Z(k + 1) + b, k);
         });
       }});

  add({.id = "cor3_a1b0",
       .formula = "c S[top=n+2, bottom=n, w=c^(j-i)] = sum_{k=0}^{n} (n+1)/(k+1) ((c+1)^(k+1) - 1)",
       .domain = "c != 0",
       .parameters = {'c'},
       .reject = [](const P& p) { return when(p.c->is_zero(), "c = 0"); },
       .lhs_sum = sum_spec([](const P& p) {
         return DoubleSumSpec::with_c_reversed(p.n, Z(p.n + 2), Z(p.n), *p.c);
       }),
       .lhs = [](const P& p) -> Value {
         return *p.c * eval_double_sum(DoubleSumSpec::with_c_reversed(p.n, Z(p.n + 2), Z(p.n), *p.c));
       },
       .rhs = [](const P& p) -> Value {
         const Rational c1 = *p.c + Z(1);
         return sum_range(0, p.n, [&](long k) { return frac(p.n + 1, k + 1) * (c1.pow(k + 1) - Z(1)); });
       }});

  // ---- harmonic-number evaluations --------------------------------------

  add({.id = "cor4_odd",
       .formula = "S[top=2n+2, bottom=2n+1] = (n+1)(H_{2n+1} - H_n/2)",
       .domain = "n >= 0",
       .lhs_sum = sum_spec([](const P& p) { return DoubleSumSpec{p.n, Z(2 * p.n + 2), Z(2 * p.n + 1)}; }),
       .rhs = [](const P& p) -> Value {
         return Z(p.n + 1) * (harmonic(2 * p.n + 1) - harmonic(p.n) / Z(2));
       }});

  add({.id = "cor4_odd2",
       .formula = "S[top=2n+3, bottom=2n+1] = (n+1) H_{n+1}",
       .domain = "n >= 0",
       .lhs_sum = sum_spec([](const P& p) { return DoubleSumSpec{p.n, Z(2 * p.n + 3), Z(2 * p.n + 1)}; }),
       .rhs = [](const P& p) -> Value { return Z(p.n + 1) * harmonic(p.n + 1); }});

  add({.id = "cor4_even",
       .formula = "S[top=2n+1, bottom=2n] = 2^(2n-1)/C(2n,n) + (n+1/2)(H_{2n+1} - H_n/2)",
       .domain = "n >= 0",
       .lhs_sum = sum_spec([](const P& p) { return DoubleSumSpec{p.n, Z(2 * p.n + 1), Z(2 * p.n)}; }),
       .rhs = [](const P& p) -> Value {
         return Z(2).pow(2 * p.n - 1) / binom(Z(2 * p.n), p.n) +
                (Z(p.n) + frac(1, 2)) * (harmonic(2 * p.n + 1) - harmonic(p.n) / Z(2));
       }});

  add({.id = "cor4_even2",
       .formula = "S[top=2n+2, bottom=2n] = 2^(2n)/C(2n,n) + (n+1/2) H_n",
       .domain = "n >= 0",
       .lhs_sum = sum_spec([](const P& p) { return DoubleSumSpec{p.n, Z(2 * p.n + 2), Z(2 * p.n)}; }),
       .rhs = [](const P& p) -> Value {
         return Z(2).pow(2 * p.n) / binom(Z(2 * p.n), p.n) + (Z(p.n) + frac(1, 2)) * harmonic(p.n);
       }});

  add({.id = "h2log2_remark",
       .formula = "(2n+1)/(n+1) 3F2(1,1,2n+2; 2,n+2; 1/2) = H_n + 2 log 2",
       .domain = "n >= 0",
       .exactness = Exactness::numeric,
       .lhs = [](const P& p) -> Value {
         return Value(frac(2 * p.n + 1, p.n + 1)) *
                hyp(HypSeriesSpec::f32(Z(1), Z(1), Z(2 * p.n + 2), Z(2), Z(p.n + 2), frac(1, 2)));
       },
       .rhs = [](const P& p) -> Value {
         return Value(harmonic(p.n)) + Value(Z(2)) * Value(log_of(Z(2)));
       }});

  add({.id = "rem_fast",
       .formula = "sum_{k=1}^{n+1} 2^k/k = (n+2)/2 3F2(1,1,n+3; 2,2; 1/2) + H_{n+1} - log 2",
       .domain = "n >= 0",
       .exactness = Exactness::numeric,
       .lhs = [](const P& p) -> Value { return powers_of_two_over_k(p.n + 1); },
       .rhs = [](const P& p) -> Value {
         Value f = hyp(HypSeriesSpec::f32(Z(1), Z(1), Z(p.n + 3), Z(2), Z(2), frac(1, 2)));
         return Value(frac(p.n + 2, 2)) * f + Value(harmonic(p.n + 1)) - Value(log_of(Z(2)));
       }});

  // ---- shifted upper indices -------------------------------------------

  add({.id = "shift_up",
       .formula = "S[top=2n+3+m, bottom=2n+1] = 2^m (n+1) (H_{n+1} - sum_{k=1}^{m} 1/(2^(k-1) k) "
                  "(C(2n+2+k,n+1)/C(2n+2,n+1) - 1))",
       .domain = "m >= 0",
       .parameters = {'m'},
       .reject = [](const P& p) { return when(*p.m < 0, "m must be nonnegative"); },
       .lhs_sum = sum_spec([](const P& p) { return DoubleSumSpec{p.n, Z(2 * p.n + 3 + *p.m), Z(2 * p.n + 1)}; }),
       .rhs = [](const P& p) -> Value {
         const long n = p.n;
         const Rational central = binom(Z(2 * n + 2), n + 1);
         Rational corr = sum_range(1, *p.m, [&](long k) {
           return (binom(Z(2 * n + 2 + k), n + 1) / central - Z(1)) / (Z(2).pow(k - 1) * Z(k));
         });
         return Z(2).pow(*p.m) * Z(n + 1) * (harmonic(n + 1) - corr);
       }});

  add({.id = "shift_down",
       .formula = "S[top=2n+2-m, bottom=2n+1] = (n+1)/2^(m+1) (2 H_{2n+1} - H_n - sum_{k=1}^{m} "
                  "2^(k+1)/k (C(2n+2-k,n+1)/C(2n+2,n+1) - 1))",
       .domain = "m >= 0",
       .parameters = {'m'},
       .reject = [](const P& p) { return when(*p.m < 0, "m must be nonnegative"); },
       .lhs_sum = sum_spec([](const P& p) { return DoubleSumSpec{p.n, Z(2 * p.n + 2 - *p.m), Z(2 * p.n + 1)}; }),
       .rhs = [](const P& p) -> Value {
         const long n = p.n;
         const Rational central = binom(Z(2 * n + 2), n + 1);
         Rational corr = sum_range(1, *p.m, [&](long k) {
           return Z(2).pow(k + 1) / Z(k) * (binom(Z(2 * n + 2 - k), n + 1) / central - Z(1));
         });
         return Z(n + 1) / Z(2).pow(*p.m + 1) * (Z(2) * harmonic(2 * n + 1) - harmonic(n) - corr);
       }});

  add({.id = "shift_denominator",
       .formula = "S[top=2n+2, bottom=2n-m] = 2^(m-1)(2n+1-m) (H_n + 2^(2n+1)/((n+1)C(2n+1,n+1)) + "
                  "sum_{k=1}^{m} 1/(2^(k-1) k) ((2^(2n+2) k/(2n+2-k) - C(2n+2,n+1))/(2 C(2n+1-k,n+1)) + 1))",
       .domain = "0 <= m <= n",
       .parameters = {'m'},
       .reject = [](const P& p) { return when(*p.m < 0 || *p.m > p.n, "needs 0 <= m <= n"); },
       .lhs_sum = sum_spec([](const P& p) { return DoubleSumSpec{p.n, Z(2 * p.n + 2), Z(2 * p.n - *p.m)}; }),
       .rhs = [](const P& p) -> Value {
         const long n = p.n;
         const long m = *p.m;
         const Rational four_n1 = Z(2).pow(2 * n + 2);
         const Rational central = binom(Z(2 * n + 2), n + 1);
         Rational corr = sum_range(1, m, [&](long k) {
           Rational inner = (four_n1 * Z(k) / Z(2 * n + 2 - k) - central) /
                            (Z(2) * binom(Z(2 * n + 1 - k), n + 1));
           return (inner + Z(1)) / (Z(2).pow(k - 1) * Z(k));
         });
         Rational bracket = harmonic(n) + Z(2).pow(2 * n + 1) / (Z(n + 1) * binom(Z(2 * n + 1), n + 1)) + corr;
         return Z(2).pow(m - 1) * Z(2 * n + 1 - m) * bracket;
       }});

  // ---- reciprocal sums ---------------------------------------------------

  add({.id = "recip_single",
       .formula = "sum_{j=0}^{n} 1/C(n,j) = (n+1)/2^(n+1) sum_{k=1}^{n+1} 2^k/k",
       .domain = "n >= 0",
       .lhs_sum = sum_spec([](const P& p) { return DoubleSumSpec{p.n, Z(0), Z(p.n)}; }),
       .rhs = [](const P& p) -> Value {
         return Z(p.n + 1) / Z(2).pow(p.n + 1) * powers_of_two_over_k(p.n + 1);
       }});

  add({.id = "symmetry_lemma",
       .formula = "sum_{j=0}^{n} sum_{i=0}^{j} C(n+1,i) f(j) = 2^n sum_{j=0}^{n} f(j) for f(j) = f(n-j); "
                  "checked with f(j) = 1/C(n,j), f = 1 and f(j) = j(n-j)+1",
       .domain = "n >= 0",
       .lhs = [](const P& p) -> Value {
         return symmetric_weighted_sum(p.n, [&](long j) { return binom(Z(p.n), j).inverse(); });
       },
       .rhs = [](const P& p) -> Value {
         return Z(2).pow(p.n) * sum_range(0, p.n, [&](long j) { return binom(Z(p.n), j).inverse(); });
       },
       .side_checks = [](const P& p) {
         std::vector<SideCheck> out;
         out.push_back({"f = 1", symmetric_weighted_sum(p.n, [](long) { return Z(1); }),
                        Z(2).pow(p.n) * Z(p.n + 1)});
         auto quad = [&](long j) { return Z(j * (p.n - j) + 1); };
         out.push_back({"f(j) = j(n-j)+1", symmetric_weighted_sum(p.n, quad),
                        Z(2).pow(p.n) * sum_range(0, p.n, quad)});
         return out;
       }});

  add({.id = "recip_shift",
       .formula = "S[top=n+1-m, bottom=n] = (n+1)/2^(m+1) (sum_{k=1}^{n+1} 2^k/k + sum_{l=1}^{m} 2^l/l)",
       .domain = "0 <= m <= n+1",
       .parameters = {'m'},
       .reject = [](const P& p) { return when(*p.m < 0 || *p.m > p.n + 1, "needs 0 <= m <= n+1"); },
       .lhs_sum = sum_spec([](const P& p) { return DoubleSumSpec{p.n, Z(p.n + 1 - *p.m), Z(p.n)}; }),
       .rhs = [](const P& p) -> Value {
         return Z(p.n + 1) / Z(2).pow(*p.m + 1) *
                (powers_of_two_over_k(p.n + 1) + powers_of_two_over_k(*p.m));
       }});

  add({.id = "recip_whole",
       .formula = "S[top=n+1, bottom=n] = (n+1)/2 sum_{k=1}^{n+1} 2^k/k",
       .domain = "n >= 0",
       .lhs_sum = sum_spec([](const P& p) { return DoubleSumSpec{p.n, Z(p.n + 1), Z(p.n)}; }),
       .rhs = [](const P& p) -> Value { return frac(p.n + 1, 2) * powers_of_two_over_k(p.n + 1); }});

  add({.id = "many_faces",
       .formula = "S[top=n+1, bottom=2n+1] = sum_{k=0}^{floor(n/2)} (-1)^k C(n+1,2k+1)/C(n,k) "
                  "= (n+1) sum_{k=1}^{n+1} 2^k/(k C(n+1+k,k)) = (n+1)/2^(n+1) sum_{k=1}^{n+1} 2^k/k "
                  "= 2^(-n) S[top=n+1, bottom=n]",
       .domain = "n >= 0",
       .lhs_sum = sum_spec([](const P& p) { return DoubleSumSpec{p.n, Z(p.n + 1), Z(2 * p.n + 1)}; }),
       .rhs = [](const P& p) -> Value {
         return Z(p.n + 1) / Z(2).pow(p.n + 1) * powers_of_two_over_k(p.n + 1);
       },
       .side_checks = [](const P& p) {
         const long n = p.n;
         const Rational lhs = S(n, Z(n + 1), Z(2 * n + 1));
         Rational alternating = sum_range(0, n / 2, [&](long k) {
           return sign_pow(k) * binom(Z(n + 1), 2 * k + 1) / binom(Z(n), k);
         });
         Rational weighted = Z(n + 1) * sum_range(1, n + 1, [&](long k) {
           return Z(2).pow(k) / (Z(k) * binom(Z(n + 1 + k), k));
         });
         Rational scaled = S(n, Z(n + 1), Z(n)) / Z(2).pow(n);
         return std::vector<SideCheck>{{"alternating form", lhs, alternating},
                                       {"weighted form", lhs, weighted},
                                       {"scaled double sum", lhs, scaled}};
       }});

  add({.id = "ck_recurrence",
       .formula = "C(k) = S[n=k, top=k+1, bottom=2k+1]/(k+1): 2C(k) - C(k-1) = 2/(k+1), checked at k = n",
       .domain = "n >= 1",
       .reject = [](const P& p) { return when(p.n < 1, "needs n >= 1"); },
       .lhs = [](const P& p) -> Value {
         auto C = [](long k) { return S(k, Z(k + 1), Z(2 * k + 1)) / Z(k + 1); };
         return Z(2) * C(p.n) - C(p.n - 1);
       },
       .rhs = [](const P& p) -> Value { return frac(2, p.n + 1); }});

  add({.id = "three_n",
       .formula = "S[top=3n+2, bottom=2n+1]/(n+1) = 2^n (3/4 + sum_{k=1}^{n-1} 1/(2^k k) (1 - "
                  "(5k+12)/(8k+12) C(3k+2,k)/C(2k+1,k)))",
       .domain = "n >= 1",
       .reject = [](const P& p) { return when(p.n < 1, "needs n >= 1 (the closed form gives 3/4 at n = 0)"); },
       .lhs_sum = sum_spec([](const P& p) { return DoubleSumSpec{p.n, Z(3 * p.n + 2), Z(2 * p.n + 1)}; }),
       .lhs = [](const P& p) -> Value { return S(p.n, Z(3 * p.n + 2), Z(2 * p.n + 1)) / Z(p.n + 1); },
       .rhs = [](const P& p) -> Value {
         Rational inner = sum_range(1, p.n - 1, [](long k) {
           Rational r = frac(5 * k + 12, 8 * k + 12) * binom(Z(3 * k + 2), k) / binom(Z(2 * k + 1), k);
           return (Z(1) - r) / (Z(2).pow(k) * Z(k));
         });
         return Z(2).pow(p.n) * (frac(3, 4) + inner);
       }});

  add({.id = "d3n_recurrence",
       .formula = "D(k) = S[n=k, top=3k+2, bottom=2k+1]/(k+1): D(k+1) - 2D(k) = 2/k - (5k+12)/(2k(2k+3)) "
                  "C(3k+2,k)/C(2k+1,k), checked at k = n",
       .domain = "n >= 1",
       .reject = [](const P& p) { return when(p.n < 1, "needs n >= 1"); },
       .lhs = [](const P& p) -> Value {
         auto D = [](long k) { return S(k, Z(3 * k + 2), Z(2 * k + 1)) / Z(k + 1); };
         return D(p.n + 1) - Z(2) * D(p.n);
       },
       .rhs = [](const P& p) -> Value {
         const long k = p.n;
         return frac(2, k) - frac(5 * k + 12, 2 * k * (2 * k + 3)) * binom(Z(3 * k + 2), k) /
                                 binom(Z(2 * k + 1), k);
       }});

  add({.id = "iterative_up",
       .formula = "sum_{i<=j} C(n,i) = 2^m sum_{i<=j} C(n-m,i) - sum_{k=1}^{m} 2^(k-1) C(n-k,j), "
                  "for every 0 <= j <= n",
       .domain = "m >= 0",
       .parameters = {'m'},
       .reject = [](const P& p) { return when(*p.m < 0, "m must be nonnegative"); },
       .lhs = [](const P& p) -> Value {
         return sum_range(0, p.n, [&](long j) { return eval_inner_prefix(Z(p.n), j, Z(1)); });
       },
       .rhs = [](const P& p) -> Value {
         return sum_range(0, p.n, [&](long j) {
           return Z(2).pow(*p.m) * eval_inner_prefix(Z(p.n - *p.m), j, Z(1)) -
                  sum_range(1, *p.m, [&](long k) { return Z(2).pow(k - 1) * binom(Z(p.n - k), j); });
         });
       },
       .side_checks = [](const P& p) {
         std::vector<SideCheck> out;
         for (long j = 0; j <= p.n; ++j) {
           Rational r = Z(2).pow(*p.m) * eval_inner_prefix(Z(p.n - *p.m), j, Z(1)) -
                        sum_range(1, *p.m, [&](long k) { return Z(2).pow(k - 1) * binom(Z(p.n - k), j); });
           out.push_back({"j = " + std::to_string(j), eval_inner_prefix(Z(p.n), j, Z(1)), r});
         }
         return out;
       }});

  add({.id = "iterative_recip",
       .formula = "sum_{i<=k} 1/C(n,i) = 2^m (n+1)/(n+m+1) sum_{i<=k} 1/C(n+m,i) + sum_{j=1}^{m} "
                  "2^(j-1)(n+1)/(n+j+1) (1/C(n+j,k+1) - 1), for every 0 <= k <= n",
       .domain = "m >= 0",
       .parameters = {'m'},
       .reject = [](const P& p) { return when(*p.m < 0, "m must be nonnegative"); },
       .lhs = [](const P& p) -> Value {
         return sum_range(0, p.n, [&](long k) { return S(k, Z(0), Z(p.n)); });
       },
       .rhs = [](const P& p) -> Value {
         const long n = p.n;
         const long m = *p.m;
         return sum_range(0, n, [&](long k) {
           return Z(2).pow(m) * Z(n + 1) / Z(n + m + 1) * S(k, Z(0), Z(n + m)) +
                  sum_range(1, m, [&](long j) {
                    return Z(2).pow(j - 1) * Z(n + 1) / Z(n + j + 1) * (binom(Z(n + j), k + 1).inverse() - Z(1));
                  });
         });
       },
       .side_checks = [](const P& p) {
         const long n = p.n;
         const long m = *p.m;
         std::vector<SideCheck> out;
         for (long k = 0; k <= n; ++k) {
           Rational r = Z(2).pow(m) * Z(n + 1) / Z(n + m + 1) * S(k, Z(0), Z(n + m)) +
                        sum_range(1, m, [&](long j) {
                          return Z(2).pow(j - 1) * Z(n + 1) / Z(n + j + 1) *
                                 (binom(Z(n + j), k + 1).inverse() - Z(1));
                        });
           out.push_back({"k = " + std::to_string(k), S(k, Z(0), Z(n)), r});
         }
         return out;
       }});

  // ---- alternating sums ---------------------------------------------------

  add({.id = "alt_inner",
       .formula = "sum_{i=0}^{j} C(a,i) (-1)^i = (-1)^j C(a-1,j), for every 0 <= j <= n",
       .domain = "any rational a",
       .parameters = {'a'},
       .lhs = [](const P& p) -> Value {
         return sum_range(0, p.n, [&](long j) { return eval_inner_prefix(*p.a, j, Z(-1)); });
       },
       .rhs = [](const P& p) -> Value {
         return sum_range(0, p.n, [&](long j) { return sign_pow(j) * binom(*p.a - Z(1), j); });
       },
       .side_checks = [](const P& p) {
         std::vector<SideCheck> out;
         for (long j = 0; j <= p.n; ++j)
           out.push_back({"j = " + std::to_string(j), eval_inner_prefix(*p.a, j, Z(-1)),
                          sign_pow(j) * binom(*p.a - Z(1), j)});
         return out;
       }});

  add({.id = "alt_recip_inner",
       .formula = "sum_{j=i}^{m} (-1)^j/C(n,j) = (n+1)/(n+2) ((-1)^m/C(n+1,m+1) + (-1)^i/C(n+1,i)), "
                  "for every 0 <= i <= m",
       .domain = "0 <= m <= n",
       .parameters = {'m'},
       .reject = [](const P& p) { return when(*p.m < 0 || *p.m > p.n, "needs 0 <= m <= n"); },
       .lhs = [](const P& p) -> Value {
         const long n = p.n;
         const long m = *p.m;
         return sum_range(0, m, [&](long i) {
           return sum_range(i, m, [&](long j) { return sign_pow(j) / binom(Z(n), j); });
         });
       },
       .rhs = [](const P& p) -> Value {
         const long n = p.n;
         const long m = *p.m;
         return sum_range(0, m, [&](long i) {
           return frac(n + 1, n + 2) * (sign_pow(m) / binom(Z(n + 1), m + 1) + sign_pow(i) / binom(Z(n + 1), i));
         });
       },
       .side_checks = [](const P& p) {
         const long n = p.n;
         const long m = *p.m;
         std::vector<SideCheck> out;
         for (long i = 0; i <= m; ++i) {
           Rational l = sum_range(i, m, [&](long j) { return sign_pow(j) / binom(Z(n), j); });
           Rational r = frac(n + 1, n + 2) *
                        (sign_pow(m) / binom(Z(n + 1), m + 1) + sign_pow(i) / binom(Z(n + 1), i));
           out.push_back({"i = " + std::to_string(i), l, r});
         }
         return out;
       }});

  add({.id = "alt_plain",
       .formula = "S[top=n+a+1, bottom=n+a, w=(-1)^i] = ((-1)^n + 1)/2",
       .domain = "a not a negative integer",
       .parameters = {'a'},
       .reject = [](const P& p) { return negative_integer(p.a, "a"); },
       .lhs_sum = sum_spec([](const P& p) {
         return DoubleSumSpec{p.n, Z(p.n + 1) + *p.a, Z(p.n) + *p.a, Z(-1), Z(1)};
       }),
       .rhs = [](const P& p) -> Value { return (sign_pow(p.n) + Z(1)) / Z(2); }});

  add({.id = "alt_shift_n",
       .formula = "(-1)^n S[top=n+2, bottom=n, w=(-1)^i] = (n+1)(H_{n+1} - H_{floor((n+1)/2)})",
       .domain = "n >= 0",
       .lhs_sum = sum_spec([](const P& p) { return DoubleSumSpec{p.n, Z(p.n + 2), Z(p.n), Z(-1), Z(1)}; }),
       .lhs = [](const P& p) -> Value { return sign_pow(p.n) * S(p.n, Z(p.n + 2), Z(p.n), Z(-1), Z(1)); },
       .rhs = [](const P& p) -> Value {
         return Z(p.n + 1) * (harmonic(p.n + 1) - harmonic((p.n + 1) / 2));
       }});

  add({.id = "alt_c2",
       .formula = "S[top=n+2, bottom=n, w=(-2)^(j-i)] = (n+1)(H_{n+1} - H_{floor((n+1)/2)}/2)",
       .domain = "n >= 0",
       .lhs_sum = sum_spec([](const P& p) {
         return DoubleSumSpec::with_c_reversed(p.n, Z(p.n + 2), Z(p.n), Z(-2));
       }),
       .rhs = [](const P& p) -> Value {
         return Z(p.n + 1) * (harmonic(p.n + 1) - harmonic((p.n + 1) / 2) / Z(2));
       }});

  add({.id = "alt_general",
       .formula = "S[top=n+a+1, bottom=n+b, w=(-1)^(i-j)] = ((a)_{n+1}/(b+1)_n - n - b - 1)/(a-b-1)",
       .domain = "b not a negative integer, a-b != 1",
       .parameters = {'a', 'b'},
       .reject = [](const P& p) {
         return first_of({negative_integer(p.b, "b"),
                          when(*p.a - *p.b == Z(1), "a-b = 1 (use alt_abp1)")});
       },
       .lhs_sum = sum_spec([](const P& p) {
         return DoubleSumSpec{p.n, Z(p.n + 1) + *p.a, Z(p.n) + *p.b, Z(-1), Z(-1)};
       }),
       .rhs = [](const P& p) -> Value {
         const Rational& a = *p.a;
         const Rational& b = *p.b;
         Rational gamma_part = pochhammer(a, p.n + 1) / pochhammer(b + Z(1), p.n);
         return (gamma_part - Z(p.n + 1) - b) / (a - b - Z(1));
       }});

  add({.id = "alt_ab",
       .formula = "S[top=n+b+1, bottom=n+b, w=(-1)^(i-j)] = n+1",
       .domain = "b not a negative integer",
       .parameters = {'b'},
       .reject = [](const P& p) { return negative_integer(p.b, "b"); },
       .lhs_sum = sum_spec([](const P& p) {
         return DoubleSumSpec{p.n, Z(p.n + 1) + *p.b, Z(p.n) + *p.b, Z(-1), Z(-1)};
       }),
       .rhs = [](const P& p) -> Value { return Z(p.n + 1); }});

  add({.id = "alt_abp1",
       .formula = "S[top=n+b+2, bottom=n+b, w=(-1)^(i-j)] = (n+b+1)(psi(n+b+2) - psi(b+1))",
       .domain = "b not a negative integer",
       .parameters = {'b'},
       .reject = [](const P& p) { return negative_integer(p.b, "b"); },
       .lhs_sum = sum_spec([](const P& p) {
         return DoubleSumSpec{p.n, Z(p.n + 2) + *p.b, Z(p.n) + *p.b, Z(-1), Z(-1)};
       }),
       .rhs = [](const P& p) -> Value {
         return (Z(p.n + 1) + *p.b) * digamma_diff(*p.b + Z(1), p.n + 1);
       }});

  add({.id = "alt_whole",
       .formula = "S[top=n+1, bottom=n, w=(-1)^j] = (n+1)/(2n+4) (1 + (-1)^n (2^(n+2) - 1))",
       .domain = "n >= 0",
       .lhs_sum = sum_spec([](const P& p) { return DoubleSumSpec{p.n, Z(p.n + 1), Z(p.n), Z(1), Z(-1)}; }),
       .rhs = [](const P& p) -> Value {
         return frac(p.n + 1, 2 * p.n + 4) * (Z(1) + sign_pow(p.n) * (Z(2).pow(p.n + 2) - Z(1)));
       }});

  add({.id = "alt_even",
       .formula = "S[top=2n+1, bottom=2n, w=(-1)^j] = (-1)^n 2^(2n-1)/C(2n,n) + (2n+1)/(n+1) ((-1)^n + 1)/4",
       .domain = "n >= 0",
       .lhs_sum = sum_spec([](const P& p) { return DoubleSumSpec{p.n, Z(2 * p.n + 1), Z(2 * p.n), Z(1), Z(-1)}; }),
       .rhs = [](const P& p) -> Value {
         return sign_pow(p.n) * Z(2).pow(2 * p.n - 1) / binom(Z(2 * p.n), p.n) +
                frac(2 * p.n + 1, p.n + 1) * (sign_pow(p.n) + Z(1)) / Z(4);
       }});

  // ---- Gamma-ratio sum -----------------------------------------------------

  add({.id = "gamma_ratio_sum",
       .formula = "sum_{j=m}^{n} Gamma(j+a)/Gamma(j+b+1) = Gamma(m+a)/((b-a)Gamma(m+b)) - "
                  "Gamma(n+a+1)/((b-a)Gamma(n+b+1)), both sides divided by Gamma(m+a)/Gamma(m+b+1)",
       .domain = "m <= n, a != b, no pole of Gamma(j+b+1) for m <= j <= n",
       .parameters = {'a', 'b', 'm'},
       .reject = [](const P& p) -> Reason {
         if (*p.m > p.n) return "needs m <= n";
         if (*p.a == *p.b) return "needs a != b";
         if (pochhammer(Z(*p.m + 1) + *p.b, p.n - *p.m).is_zero()) return "Gamma(j+b+1) has a pole in range";
         return std::nullopt;
       },
       .lhs = [](const P& p) -> Value { return check_gamma_ratio_sum({*p.m, p.n, *p.a, *p.b}).lhs; },
       .rhs = [](const P& p) -> Value { return check_gamma_ratio_sum({*p.m, p.n, *p.a, *p.b}).rhs; }});

  return reg;
}

}  // namespace binomsum::detail::catalog
