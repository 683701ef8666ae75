#pragma once

// Command-line front end. Requires CLI11.hpp and json.hpp on the include path.
//
// Exit status: 0 success, 1 when any verification report is FAIL,
// 2 on usage or domain errors.

#include <algorithm>
#include <exception>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "binomsum/approx.hpp"
#include "binomsum/double_sum.hpp"
#include "binomsum/errors.hpp"
#include "binomsum/hypergeom.hpp"
#include "binomsum/identities.hpp"
#include "binomsum/rational.hpp"
#include "binomsum/report_io.hpp"
#include "binomsum/urn_models.hpp"

namespace binomsum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

inline long parse_integer(const std::string& text, const char* flag) {
  Rational r = Rational::parse(text);
  auto v = r.is_integer() ? r.to_long() : std::nullopt;
  if (!v) throw ParseError(std::string(flag) + " expects an integer, got '" + text + "'");
  return *v;
}

inline std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& part : split(text, ',')) out.push_back(Rational::parse(part));
  if (out.empty()) throw ParseError("empty list");
  return out;
}

inline std::pair<long, long> parse_range(const std::string& text) {
  auto parts = split(text, ':');
  if (parts.size() == 1) {
    long v = parse_integer(parts[0], "--n");
    return {v, v};
  }
  if (parts.size() != 2) throw ParseError("--n expects 'k' or 'lo:hi', got '" + text + "'");
  return {parse_integer(parts[0], "--n"), parse_integer(parts[1], "--n")};
}

struct Options {
  std::string n, m, a, b, c, top, bottom, weight, id, kind, upper, lower, z;
  std::string M, target, total, start;
  std::string format = "plain";
  double tol = 1e-9;
  double hyp_tol = 1e-15;
  std::uint64_t seed = 0;
  std::uint64_t trials = 100000;
};

inline void add_format(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "plain, json or csv")
      ->check(CLI::IsMember({"plain", "json", "csv"}))
      ->capture_default_str();
}

inline IdentityParams single_params(const Options& o) {
  IdentityParams p;
  if (o.n.empty()) throw ParseError("--n is required");
  p.n = parse_integer(o.n, "--n");
  if (!o.a.empty()) p.a = Rational::parse(o.a);
  if (!o.b.empty()) p.b = Rational::parse(o.b);
  if (!o.c.empty()) p.c = Rational::parse(o.c);
  if (!o.m.empty()) p.m = parse_integer(o.m, "--m");
  return p;
}

inline int emit_reports(std::ostream& out, const std::vector<VerifyReport>& reports,
                        const std::string& format) {
  if (format == "json") {
    out << (reports.size() == 1 ? to_json(reports.front()) : to_json(reports)).dump(2) << '\n';
  } else if (format == "csv") {
    write_csv(out, reports);
  } else {
    for (const auto& r : reports) write_plain(out, r);
  }
  bool failed = std::any_of(reports.begin(), reports.end(),
                            [](const VerifyReport& r) { return r.status == Status::fail; });
  return failed ? kExitFail : kExitOk;
}

template <class Row>
void emit_record(std::ostream& out, const std::string& format, const std::string& plain, const Row& fields) {
  if (format == "json") {
    nlohmann::ordered_json j;
    for (const auto& [k, v] : fields) j[k] = v;
    out << j.dump(2) << '\n';
  } else if (format == "csv") {
    for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << fields[i].first;
    out << '\n';
    for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << fields[i].second;
    out << '\n';
  } else {
    out << plain << '\n';
  }
}

using Fields = std::vector<std::pair<std::string, std::string>>;

inline int eval_sum(std::ostream& out, const Options& o) {
  if (!o.c.empty() && !o.weight.empty()) throw ParseError("--c and --weight are mutually exclusive");
  DoubleSumSpec spec{parse_integer(o.n, "--n"), Rational::parse(o.top), Rational::parse(o.bottom)};
  if (!o.c.empty()) {
    spec = DoubleSumSpec::with_c(spec.n, spec.top, spec.bottom, Rational::parse(o.c));
  } else if (!o.weight.empty()) {
    auto parts = split(o.weight, ':');
    if (parts.size() != 2) throw ParseError("--weight expects 'u:v', got '" + o.weight + "'");
    spec.u = Rational::parse(parts[0]);
    spec.v = Rational::parse(parts[1]);
  }
  const Rational value = eval_double_sum(spec);
  emit_record(out, o.format, value.str(),
              Fields{{"n", std::to_string(spec.n)},
                     {"top", spec.top.str()},
                     {"bottom", spec.bottom.str()},
                     {"u", spec.u.str()},
                     {"v", spec.v.str()},
                     {"value", value.str()}});
  return kExitOk;
}

inline int eval_hyp(std::ostream& out, const Options& o) {
  HypSeriesSpec spec{parse_list(o.upper), o.lower.empty() ? std::vector<Rational>{} : parse_list(o.lower),
                     Rational::parse(o.z), o.hyp_tol};
  const Value v = hyp_eval(spec);
  const ApproxValue a = to_approx(v);
  emit_record(out, o.format, to_string(v),
              Fields{{"value", is_exact(v) ? std::get<Rational>(v).str() : format_double(a.value)},
                     {"exact", is_exact(v) ? "true" : "false"},
                     {"bound", format_double(is_exact(v) ? 0.0 : a.error_bound)}});
  return kExitOk;
}

inline int identity_list(std::ostream& out, const Options& o) {
  if (o.format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : registry()) {
      nlohmann::ordered_json j;
      j["id"] = r.id;
      j["exactness"] = std::string(to_string(r.exactness));
      j["parameters"] = std::string(r.parameters.begin(), r.parameters.end());
      j["domain"] = r.domain;
      j["formula"] = r.formula;
      arr.push_back(std::move(j));
    }
    out << arr.dump(2) << '\n';
    return kExitOk;
  }
  if (o.format == "csv") out << "id,exactness,parameters,domain,formula\n";
  for (const auto& r : registry()) {
    std::string params(r.parameters.begin(), r.parameters.end());
    if (o.format == "csv") {
      out << r.id << ',' << to_string(r.exactness) << ',' << params << ','
          << binomsum::detail::csv_field(r.domain) << ',' << binomsum::detail::csv_field(r.formula) << '\n';
    } else {
      out << r.id << "  [" << to_string(r.exactness) << "]";
      if (!params.empty()) out << "  params: " << params;
      out << "\n    " << r.formula << "\n    domain: " << r.domain << '\n';
    }
  }
  return kExitOk;
}

inline int identity_verify(std::ostream& out, const Options& o) {
  return emit_reports(out, {verify(o.id, single_params(o), o.tol)}, o.format);
}

inline int identity_sweep(std::ostream& out, const Options& o) {
  if (o.n.empty()) throw ParseError("--n is required");
  auto [lo, hi] = parse_range(o.n);
  ParamGrid grid = ParamGrid::defaults();
  if (!o.a.empty()) grid.a = parse_list(o.a);
  if (!o.b.empty()) grid.b = parse_list(o.b);
  if (!o.c.empty()) grid.c = parse_list(o.c);
  if (!o.m.empty()) {
    grid.m.clear();
    for (const auto& part : split(o.m, ',')) grid.m.push_back(parse_integer(part, "--m"));
  }
  return emit_reports(out, sweep(o.id, lo, hi, grid, o.tol), o.format);
}

inline int urn_ehrenfest(std::ostream& out, const Options& o) {
  const long M = parse_integer(o.M, "--M");
  const long target = parse_integer(o.target, "--target");
  const Rational v = ehrenfest_expected_steps(M, target);
  emit_record(out, o.format, v.str(),
              Fields{{"M", std::to_string(M)}, {"target", std::to_string(target)}, {"expected_steps", v.str()}});
  return kExitOk;
}

inline int urn_mabinogion(std::ostream& out, const Options& o) {
  const long total = parse_integer(o.total, "--total");
  const long start = parse_integer(o.start, "--start");
  const Rational v = mabinogion_expected_exact(total, start);
  emit_record(out, o.format, v.str(),
              Fields{{"total", std::to_string(total)}, {"start", std::to_string(start)}, {"expected_steps", v.str()}});
  return kExitOk;
}

inline int urn_simulate(std::ostream& out, const Options& o) {
  UrnChain chain;
  std::optional<long> target;
  std::optional<Rational> exact;
  long start = 0;
  if (o.kind == "ehrenfest") {
    if (o.M.empty() == o.total.empty()) throw ParseError("ehrenfest needs exactly one of --M or --total");
    chain = {UrnKind::ehrenfest, o.M.empty() ? parse_integer(o.total, "--total") : parse_integer(o.M, "--M") + 1};
    target = parse_integer(o.target, "--target");
    if (!o.start.empty()) start = parse_integer(o.start, "--start");
    if (start == 0 && *target >= 1) exact = ehrenfest_expected_steps(chain.total_balls - 1, *target);
  } else {
    chain = {UrnKind::mabinogion, parse_integer(o.total, "--total")};
    start = o.start.empty() ? chain.total_balls / 2 : parse_integer(o.start, "--start");
    exact = mabinogion_expected_exact(chain.total_balls, start);
  }
  const SimResult res = simulate(chain, start, {o.trials, o.seed}, target);
  std::string plain = "mean " + format_double(res.mean) + " stderr " + format_double(res.std_error);
  Fields fields{{"kind", o.kind},
                {"total", std::to_string(chain.total_balls)},
                {"start", std::to_string(start)},
                {"trials", std::to_string(o.trials)},
                {"seed", std::to_string(o.seed)},
                {"mean", format_double(res.mean)},
                {"stderr", format_double(res.std_error)}};
  if (exact) {
    plain += " exact " + exact->str();
    fields.emplace_back("exact", exact->str());
  }
  emit_record(out, o.format, plain, fields);
  return kExitOk;
}

}  // namespace detail

/// Runs the tool on `args` (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  using detail::Options;
  Options o;
  CLI::App app{"Exact evaluation and verification of binomial-ratio double sums", "binomsum"};
  app.require_subcommand(1);

  auto* eval_sum = app.add_subcommand("eval-sum", "Evaluate a double sum exactly");
  eval_sum->add_option("--n", o.n, "outer upper limit")->required();
  eval_sum->add_option("--top", o.top, "upper binomial argument")->required();
  eval_sum->add_option("--bottom", o.bottom, "lower binomial argument")->required();
  eval_sum->add_option("--c", o.c, "weight c^(i-j)");
  eval_sum->add_option("--weight", o.weight, "weight u^i v^j given as u:v");
  detail::add_format(eval_sum, o);

  auto* eval_hyp = app.add_subcommand("eval-hyp", "Evaluate a 2F1 or 3F2 series");
  eval_hyp->add_option("--upper", o.upper, "comma-separated upper parameters")->required();
  eval_hyp->add_option("--lower", o.lower, "comma-separated lower parameters")->required();
  eval_hyp->add_option("--z", o.z, "argument")->required();
  eval_hyp->add_option("--tol", o.hyp_tol, "requested absolute accuracy")->capture_default_str();
  detail::add_format(eval_hyp, o);

  auto* list = app.add_subcommand("identity-list", "List registered identities");
  detail::add_format(list, o);

  auto* verify_cmd = app.add_subcommand("identity-verify", "Check one identity at one parameter tuple");
  auto* sweep_cmd = app.add_subcommand("identity-sweep", "Check one identity over a parameter grid");
  for (auto* sub : {verify_cmd, sweep_cmd}) {
    sub->add_option("--id", o.id, "identity id")->required();
    sub->add_option("--n", o.n, sub == sweep_cmd ? "n or lo:hi" : "n")->required();
    sub->add_option("--m", o.m, sub == sweep_cmd ? "comma-separated m values" : "m");
    sub->add_option("--a", o.a, sub == sweep_cmd ? "comma-separated a values" : "a");
    sub->add_option("--b", o.b, sub == sweep_cmd ? "comma-separated b values" : "b");
    sub->add_option("--c", o.c, sub == sweep_cmd ? "comma-separated c values" : "c");
    sub->add_option("--tol", o.tol, "extra absolute tolerance for numeric identities")->capture_default_str();
    detail::add_format(sub, o);
  }

  auto* ehrenfest = app.add_subcommand("urn-ehrenfest", "Expected Ehrenfest hitting time from 0 white balls");
  ehrenfest->add_option("--M", o.M, "M+1 balls in total")->required();
  ehrenfest->add_option("--target", o.target, "target number of white balls")->required();
  detail::add_format(ehrenfest, o);

  auto* mabinogion = app.add_subcommand("urn-mabinogion", "Expected Mabinogion absorption time");
  mabinogion->add_option("--total", o.total, "number of balls")->required();
  mabinogion->add_option("--start", o.start, "initial number of white balls")->required();
  detail::add_format(mabinogion, o);

  auto* simulate_cmd = app.add_subcommand("urn-simulate", "Monte-Carlo estimate of an urn hitting time");
  simulate_cmd->add_option("--kind", o.kind, "ehrenfest or mabinogion")
      ->required()
      ->check(CLI::IsMember({"ehrenfest", "mabinogion"}));
  simulate_cmd->add_option("--M", o.M, "ehrenfest: M+1 balls in total");
  simulate_cmd->add_option("--total", o.total, "number of balls");
  simulate_cmd->add_option("--start", o.start, "initial number of white balls");
  simulate_cmd->add_option("--target", o.target, "ehrenfest: target number of white balls");
  simulate_cmd->add_option("--trials", o.trials, "number of trajectories")->capture_default_str();
  simulate_cmd->add_option("--seed", o.seed, "base seed")->capture_default_str();
  detail::add_format(simulate_cmd, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n"
        << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kExitUsage;
  }

  try {
    if (eval_sum->parsed()) return detail::eval_sum(out, o);
    if (eval_hyp->parsed()) return detail::eval_hyp(out, o);
    if (list->parsed()) return detail::identity_list(out, o);
    if (verify_cmd->parsed()) return detail::identity_verify(out, o);
    if (sweep_cmd->parsed()) return detail::identity_sweep(out, o);
    if (ehrenfest->parsed()) return detail::urn_ehrenfest(out, o);
    if (mabinogion->parsed()) return detail::urn_mabinogion(out, o);
    if (simulate_cmd->parsed()) return detail::urn_simulate(out, o);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DivergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

inline int run(int argc, char** argv) {
  return run(std::vector<std::string>(argv + 1, argv + argc));
}

}  // namespace binomsum::cli
