#pragma once

#include <algorithm>
#include <cmath>
#include <exception>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "binomsum/errors.hpp"
#include "binomsum/identity_catalog.hpp"
#include "binomsum/identity_record.hpp"

namespace binomsum {

/// All registered identities, in catalog order. Built once.
inline const std::vector<IdentityRecord>& registry() {
  static const std::vector<IdentityRecord> records = detail::catalog::build();
  return records;
}

inline const IdentityRecord& lookup(std::string_view id) {
  for (const auto& r : registry())
    if (r.id == id) return r;
  throw DomainError("unknown identity '" + std::string(id) + "'");
}

/// Grid of parameter values iterated by sweep().
struct ParamGrid {
  std::vector<Rational> a;
  std::vector<Rational> b;
  std::vector<Rational> c;
  std::vector<long> m;

  static ParamGrid defaults() {
    std::vector<Rational> ab{Rational(-5, 2), Rational(-1, 3), Rational(1, 4), Rational(1), Rational(7, 2)};
    return {ab, ab, {Rational(-3), Rational(-1, 2), Rational(1, 3), Rational(1), Rational(2)}, {0, 1, 2, 3, 5, 8}};
  }
};

namespace detail {

inline void check_declared(const IdentityRecord& rec, const IdentityParams& p) {
  auto check = [&](char name, bool present) {
    if (rec.uses(name) && !present)
      throw DomainError(rec.id + ": parameter " + std::string(1, name) + " is required");
    if (!rec.uses(name) && present)
      throw DomainError(rec.id + ": takes no parameter " + std::string(1, name));
  };
  check('a', p.a.has_value());
  check('b', p.b.has_value());
  check('c', p.c.has_value());
  check('m', p.m.has_value());
  if (p.n < 0) throw DomainError(rec.id + ": n must be nonnegative");
}

struct Comparison {
  bool ok = false;
  bool exact = false;
  std::optional<double> residual;
  std::optional<double> bound;
};

inline Comparison compare(const Value& lhs, const Value& rhs, Exactness kind, double tol) {
  Comparison out;
  if (is_exact(lhs) && is_exact(rhs)) {
    const auto& l = std::get<Rational>(lhs);
    const auto& r = std::get<Rational>(rhs);
    out.exact = true;
    out.ok = (l == r);
    if (!out.ok) out.residual = std::abs((l - r).to_double());
    return out;
  }
  const ApproxValue l = to_approx(lhs);
  const ApproxValue r = to_approx(rhs);
  out.residual = std::abs(l.value - r.value);
  out.bound = l.error_bound + r.error_bound;
  out.ok = kind == Exactness::numeric && *out.residual <= *out.bound + tol;
  return out;
}

inline VerifyReport evaluate(const IdentityRecord& rec, const IdentityParams& p, double tol) {
  VerifyReport rep{.id = rec.id, .params = p};
  try {
    rep.lhs = rec.lhs(p);
    rep.rhs = rec.rhs(p);
    Comparison main = compare(*rep.lhs, *rep.rhs, rec.exactness, tol);
    rep.residual = main.residual;
    rep.bound = main.bound;
    if (!main.ok) {
      rep.status = Status::fail;
      if (rec.exactness == Exactness::exact_rational && !main.exact) rep.note = "a side is not exact";
      return rep;
    }
    rep.status = main.exact ? Status::exact_equal : Status::within_bounds;
    if (rec.side_checks) {
      for (const auto& sc : rec.side_checks(p)) {
        Comparison c = compare(sc.lhs, sc.rhs, rec.exactness, tol);
        if (!c.ok) {
          rep.status = Status::fail;
          rep.note = "side check failed: " + sc.label;
          return rep;
        }
        if (!c.exact) rep.status = Status::within_bounds;
      }
    }
  } catch (const std::exception& e) {
    rep.status = Status::fail;
    rep.note = e.what();
  }
  return rep;
}

}  // namespace detail

/// Checks one identity at one parameter tuple. Tuples outside the domain
/// raise DomainError with the violated condition.
inline VerifyReport verify(std::string_view id, const IdentityParams& params, double tol = 1e-9) {
  const IdentityRecord& rec = lookup(id);
  detail::check_declared(rec, params);
  if (auto why = rec.reject(params))
    throw DomainError(rec.id + ": " + *why + " (domain: " + rec.domain + ")");
  return detail::evaluate(rec, params, tol);
}

/// verify() over n in [n_lo, n_hi] and the grid values of the parameters
/// the identity declares. Rejected points come back as skipped.
inline std::vector<VerifyReport> sweep(std::string_view id, long n_lo, long n_hi,
                                       const ParamGrid& grid = ParamGrid::defaults(),
                                       double tol = 1e-9) {
  const IdentityRecord& rec = lookup(id);
  if (n_lo < 0 || n_hi < n_lo) throw DomainError("sweep: bad n range");

  auto axis = [](bool used, const std::vector<Rational>& vals) {
    std::vector<std::optional<Rational>> out;
    if (!used) return std::vector<std::optional<Rational>>{std::nullopt};
    for (const auto& v : vals) out.emplace_back(v);
    return out;
  };
  const auto as = axis(rec.uses('a'), grid.a);
  const auto bs = axis(rec.uses('b'), grid.b);
  const auto cs = axis(rec.uses('c'), grid.c);
  std::vector<std::optional<long>> ms{std::nullopt};
  if (rec.uses('m')) ms.assign(grid.m.begin(), grid.m.end());

  std::vector<VerifyReport> out;
  for (long n = n_lo; n <= n_hi; ++n)
    for (const auto& a : as)
      for (const auto& b : bs)
        for (const auto& c : cs)
          for (const auto& m : ms) {
            IdentityParams p{n, a, b, c, m};
            if (auto why = rec.reject(p)) {
              out.push_back({.id = rec.id, .params = p, .status = Status::skipped, .note = *why});
              continue;
            }
            out.push_back(detail::evaluate(rec, p, tol));
          }
  return out;
}

enum class RecurrenceKind { ck, d3n, iterative_up, iterative_recip };

inline std::optional<RecurrenceKind> parse_recurrence_kind(std::string_view s) {
  if (s == "ck") return RecurrenceKind::ck;
  if (s == "d3n") return RecurrenceKind::d3n;
  if (s == "iterative_up") return RecurrenceKind::iterative_up;
  if (s == "iterative_recip") return RecurrenceKind::iterative_recip;
  return std::nullopt;
}

/// k (or n) in [lo, hi]; m in [m_lo, m_hi] for the iterative kinds.
struct RecurrenceRange {
  long lo = 1;
  long hi = 1;
  long m_lo = 0;
  long m_hi = 0;
};

inline std::vector<VerifyReport> check_recurrences(RecurrenceKind kind, const RecurrenceRange& r) {
  if (r.hi < r.lo || r.m_hi < r.m_lo || r.m_lo < 0) throw DomainError("check_recurrences: bad range");
  std::vector<VerifyReport> out;
  switch (kind) {
    case RecurrenceKind::ck:
    case RecurrenceKind::d3n: {
      if (r.lo < 1) throw DomainError("check_recurrences: k starts at 1");
      const char* id = kind == RecurrenceKind::ck ? "ck_recurrence" : "d3n_recurrence";
      for (long k = r.lo; k <= r.hi; ++k) out.push_back(verify(id, {.n = k}));
      break;
    }
    case RecurrenceKind::iterative_up:
    case RecurrenceKind::iterative_recip: {
      if (r.lo < 0) throw DomainError("check_recurrences: n must be nonnegative");
      const char* id = kind == RecurrenceKind::iterative_up ? "iterative_up" : "iterative_recip";
      for (long n = r.lo; n <= r.hi; ++n)
        for (long m = r.m_lo; m <= r.m_hi; ++m) out.push_back(verify(id, {.n = n, .m = m}));
      break;
    }
  }
  return out;
}

}  // namespace binomsum
