#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "binomsum/approx.hpp"
#include "binomsum/double_sum.hpp"
#include "binomsum/rational.hpp"

namespace binomsum {

enum class Exactness { exact_rational, numeric };

enum class Status { exact_equal, within_bounds, fail, skipped };

inline std::string_view to_string(Exactness e) {
  return e == Exactness::exact_rational ? "exact-rational" : "numeric";
}

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::exact_equal: return "exact-equal";
    case Status::within_bounds: return "within-bounds";
    case Status::fail: return "FAIL";
    case Status::skipped: return "skipped";
  }
  return "?";
}

/// Inputs of one identity instance. Which of a, b, c, m are required is
/// declared per identity.
struct IdentityParams {
  long n = 0;
  std::optional<Rational> a{};
  std::optional<Rational> b{};
  std::optional<Rational> c{};
  std::optional<long> m{};

  /// (name, "p/q") pairs in the order n, a, b, c, m, skipping absent ones.
  std::vector<std::pair<std::string, std::string>> named() const {
    std::vector<std::pair<std::string, std::string>> out{{"n", std::to_string(n)}};
    if (a) out.emplace_back("a", a->str());
    if (b) out.emplace_back("b", b->str());
    if (c) out.emplace_back("c", c->str());
    if (m) out.emplace_back("m", std::to_string(*m));
    return out;
  }
};

/// An additional equality an identity asserts beyond lhs = rhs (alternate
/// closed forms, or the pointwise statements behind an aggregated check).
struct SideCheck {
  std::string label;
  Value lhs;
  Value rhs;
};

struct IdentityRecord {
  std::string id{};
  std::string formula{};  // the statement, in plain-text math
  std::string domain{};   // human-readable admissibility condition
  std::vector<char> parameters{};  // subset of {'a','b','c','m'}
  Exactness exactness = Exactness::exact_rational;

  /// Reason the tuple is outside the identity's domain, if it is.
  std::function<std::optional<std::string>(const IdentityParams&)> reject{};
  /// The underlying double sum, for identities whose left side is one.
  std::function<std::optional<DoubleSumSpec>(const IdentityParams&)> lhs_sum{};
  std::function<Value(const IdentityParams&)> lhs{};
  std::function<Value(const IdentityParams&)> rhs{};
  std::function<std::vector<SideCheck>(const IdentityParams&)> side_checks{};

  bool uses(char name) const {
    for (char p : parameters)
      if (p == name) return true;
    return false;
  }
};

struct VerifyReport {
  std::string id;
  IdentityParams params;
  std::optional<Value> lhs{};
  std::optional<Value> rhs{};
  Status status = Status::fail;
  std::optional<double> residual{};
  std::optional<double> bound{};
  std::string note{};
};

}  // namespace binomsum
