// Acceptance driver: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "binomsum/binomsum.hpp"
#include "binomsum/report_io.hpp"

using namespace binomsum;

namespace {

constexpr double kNumericTol = 1e-9;
constexpr double kHypTol = 1e-9;
constexpr double kExactSuiteSeconds = 120.0;
constexpr double kNumericSuiteSeconds = 60.0;
constexpr double kSimulationSeconds = 30.0;
constexpr double kSigmas = 4.0;
constexpr long kTrials = 100000;
constexpr long kHypCases = 100;

Rational q(long p, long d = 1) { return Rational(p, d); }

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (ok) detail << why;
    ok = false;
  }
};

int failures = 0;

void report(const char* name, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  std::printf("%s %s (%.2fs) %s\n", o.ok ? "PASS" : "FAIL", name, seconds_since(t0), o.detail.str().c_str());
  std::fflush(stdout);
  if (!o.ok) ++failures;
}

bool agree(const Value& x, const Value& y, double tol) {
  if (is_exact(x) && is_exact(y)) return std::get<Rational>(x) == std::get<Rational>(y);
  return consistent(to_approx(x), to_approx(y), tol);
}

bool near_zero(const Value& v, double tol) {
  if (is_exact(v)) return std::get<Rational>(v).is_zero();
  const auto& a = std::get<ApproxValue>(v);
  return std::abs(a.value) <= a.error_bound + tol;
}

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : gen_(seed) {}
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  Rational rational(long max_num, long max_den) { return Rational(integer(-max_num, max_num), integer(1, max_den)); }

 private:
  std::mt19937_64 gen_;
};

void exact_suite(Outcome& o) {
  const auto t0 = Clock::now();
  long checked = 0, skipped = 0;
  for (const auto& rec : registry()) {
    if (rec.exactness != Exactness::exact_rational) continue;
    for (const auto& r : sweep(rec.id, 0, 100)) {
      if (r.status == Status::skipped) {
        ++skipped;
      } else if (r.status != Status::exact_equal) {
        o.fail(rec.id + " at " + params_cell(r.params) + ": " + std::string(to_string(r.status)));
      } else {
        ++checked;
      }
    }
  }
  const double dt = seconds_since(t0);
  o.detail << " exact-equal=" << checked << " skipped=" << skipped;
  if (dt > kExactSuiteSeconds) o.fail(" too slow");
}

void spot_values(Outcome& o) {
  struct Spot {
    const char* id;
    long n;
    Rational expected;
  };
  for (const Spot& s : {Spot{"wansum", 1, q(8, 3)}, Spot{"wansum_b", 1, q(3)}, Spot{"cor4_odd", 2, q(23, 5)}}) {
    auto r = verify(s.id, {.n = s.n});
    if (r.status != Status::exact_equal || std::get<Rational>(*r.lhs) != s.expected)
      o.fail(std::string(s.id) + " gave " + to_string(*r.lhs));
  }
  if (ehrenfest_expected_steps(3, 2) != q(8, 3)) o.fail("ehrenfest(3,2)");
}

void numeric_suite(Outcome& o) {
  const auto t0 = Clock::now();
  long within = 0, skipped = 0;
  for (const auto& rec : registry()) {
    if (rec.exactness != Exactness::numeric) continue;
    for (const auto& r : sweep(rec.id, 0, 30, ParamGrid::defaults(), kNumericTol)) {
      if (r.status == Status::skipped) {
        ++skipped;
        continue;
      }
      const bool ok = r.status == Status::exact_equal ||
                      (r.status == Status::within_bounds && *r.residual <= *r.bound + kNumericTol);
      if (!ok) o.fail(rec.id + " at " + params_cell(r.params));
      else ++within;
    }
  }
  o.detail << " within=" << within << " skipped=" << skipped;
  if (seconds_since(t0) > kNumericSuiteSeconds) o.fail(" too slow");
}

void hypergeometric(Outcome& o) {
  Draw d(20261018);
  long counts[5] = {0, 0, 0, 0, 0};

  // prefix of a binomial row through its 2F1 form
  const Rational xs[] = {q(1), q(2), q(1, 3)};
  while (counts[0] < kHypCases) {
    long top = d.integer(1, 30);
    long k = d.integer(0, top);
    const Rational& x = xs[d.integer(0, 2)];
    Value lhs = eval_inner_prefix(q(top), k, x);
    if (!agree(lhs, inner_prefix_hypergeometric(q(top), k, x), kHypTol))
      o.fail("bridge top=" + std::to_string(top) + " k=" + std::to_string(k) + " x=" + x.str());
    ++counts[0];
  }

  while (counts[1] < kHypCases) {
    long a = d.integer(-5, 5);
    Rational b = d.rational(10, 3), c = d.rational(10, 3);
    long k = d.integer(-8, 7);
    Rational z = k == -8 ? q(-1, 2) : q(k, 16);
    if (c.is_nonpositive_integer()) continue;
    auto spec = HypSeriesSpec::f21(q(a), b, c, z);
    auto pf = pfaff_transform(spec);
    if (!agree(hyp_eval(spec), pf.factor * hyp_eval(pf.target), kHypTol))
      o.fail("pfaff a=" + std::to_string(a) + " b=" + b.str() + " c=" + c.str() + " z=" + z.str());
    ++counts[1];
  }

  while (counts[2] < kHypCases) {
    Rational a = d.rational(8, 4), b = d.rational(8, 4);
    Rational c = a + b + q(1, 2) + Rational(d.integer(0, 12), 4);
    if (c.sign() <= 0 || (c - a).sign() <= 0 || (c - b).sign() <= 0) continue;
    if (a.is_nonpositive_integer() || b.is_nonpositive_integer()) continue;
    Value s = hyp_eval(HypSeriesSpec::f21(a, b, c, q(1), 1e-10));
    if (!consistent(to_approx(s), gauss_value(a, b, c), kHypTol))
      o.fail("gauss a=" + a.str() + " b=" + b.str() + " c=" + c.str());
    ++counts[2];
  }

  while (counts[3] < kHypCases) {
    Rational beta = d.rational(12, 4), gamma = d.rational(12, 4);
    if (beta.is_zero() || gamma.is_nonpositive_integer()) continue;
    if (!near_zero(contiguous_2f1_residual(beta, gamma), kHypTol))
      o.fail("2F1 contiguous beta=" + beta.str() + " gamma=" + gamma.str());
    ++counts[3];
  }

  while (counts[4] < kHypCases) {
    long n = d.integer(0, 20);
    Rational x = q(d.integer(-12, 12), 16);
    if (!near_zero(contiguous_3f2_residual(n, x), kHypTol))
      o.fail("3F2 contiguous n=" + std::to_string(n) + " x=" + x.str());
    ++counts[4];
  }
  o.detail << " cases=" << kHypCases << " per family";
}

void ehrenfest_sums(Outcome& o) {
  long checked = 0;
  for (long M = 1; M <= 60; ++M)
    for (long t = 1; t <= M; ++t, ++checked)
      if (ehrenfest_expected_steps(M, t) != eval_double_sum({t - 1, q(M + 1), q(M)}))
        o.fail("M=" + std::to_string(M) + " t=" + std::to_string(t));
  for (long n = 0; n <= 25; ++n, ++checked)
    if (ehrenfest_expected_steps(2 * n + 1, n + 1) != q(n + 1) * (harmonic(2 * n + 1) - harmonic(n) / q(2)))
      o.fail("closed form n=" + std::to_string(n));
  o.detail << " checked=" << checked;
}

void monte_carlo(Outcome& o) {
  const auto t0 = Clock::now();
  const SimConfig cfg{kTrials, 0};
  auto check = [&](const std::string& label, const SimResult& r, const Rational& exact) {
    const double z = std::abs(r.mean - exact.to_double()) / r.std_error;
    o.detail << " " << label << " z=" << format_double(z);
    if (!(z <= kSigmas)) o.fail(" [" + label + " off]");
  };
  for (long total : {4L, 10L, 20L})
    check("mabinogion" + std::to_string(total), simulate({UrnKind::mabinogion, total}, total / 2, cfg),
          mabinogion_expected_exact(total, total / 2));
  check("ehrenfest(3,2)", simulate({UrnKind::ehrenfest, 4}, 0, cfg, 2), ehrenfest_expected_steps(3, 2));
  if (seconds_since(t0) > kSimulationSeconds) o.fail(" too slow");
}

void recurrences(Outcome& o) {
  auto all_equal = [&](const char* label, const std::vector<VerifyReport>& reps) {
    for (const auto& r : reps)
      if (r.status != Status::exact_equal) o.fail(std::string(label) + " at " + params_cell(r.params));
    o.detail << " " << label << "=" << reps.size();
  };
  all_equal("ck", check_recurrences(RecurrenceKind::ck, {1, 50}));
  all_equal("d3n", check_recurrences(RecurrenceKind::d3n, {1, 30}));
  all_equal("iterative_up", check_recurrences(RecurrenceKind::iterative_up, {0, 40, 0, 10}));
  all_equal("iterative_recip", check_recurrences(RecurrenceKind::iterative_recip, {0, 40, 0, 10}));
}

}  // namespace

int main() {
  report("exact-identities-n0-100", exact_suite);
  report("spot-values", spot_values);
  report("numeric-identities-n0-30", numeric_suite);
  report("hypergeometric-relations", hypergeometric);
  report("ehrenfest-double-sum", ehrenfest_sums);
  report("monte-carlo-4-sigma", monte_carlo);
  report("recurrences", recurrences);
  std::printf("%s %d failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
