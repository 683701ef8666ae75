#include <catch_amalgamated.hpp>

#include <sstream>

#include "binomsum/identities.hpp"
#include "binomsum/report_io.hpp"

using binomsum::Rational;

TEST_CASE("json report schema") {
  auto r = binomsum::verify("thm1_general", {.n = 1, .a = Rational(1, 2), .b = Rational(1, 3)});
  auto j = binomsum::to_json(r);
  CHECK(j["id"] == "thm1_general");
  CHECK(j["params"]["n"] == "1");
  CHECK(j["params"]["a"] == "1/2");
  CHECK(j["params"]["b"] == "1/3");
  CHECK(j["status"] == "exact-equal");
  CHECK(j["residual"].is_null());
  CHECK(j["bound"].is_null());
  CHECK(Rational::parse(j["lhs"].get<std::string>()) == Rational::parse(j["rhs"].get<std::string>()));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == binomsum::report_columns());

  auto numeric = binomsum::to_json(binomsum::verify("rem_fast", {.n = 2}));
  CHECK(numeric["status"] == "within-bounds");
  CHECK(numeric["residual"].is_number());
  CHECK(numeric["bound"].is_number());
}

TEST_CASE("csv report") {
  std::ostringstream os;
  binomsum::write_csv(os, binomsum::sweep("wansum", 0, 1));
  CHECK(os.str() ==
        "id,params,lhs,rhs,status,residual,bound\n"
        "wansum,n=0,1,1,exact-equal,,\n"
        "wansum,n=1,8/3,8/3,exact-equal,,\n");
  CHECK(binomsum::detail::csv_field("a,b") == "\"a,b\"");
  CHECK(binomsum::detail::csv_field("say \"x\"") == "\"say \"\"x\"\"\"");
}

TEST_CASE("parameter cell") {
  binomsum::IdentityParams p{.n = 1, .a = Rational(1, 2), .m = 3};
  CHECK(binomsum::params_cell(p) == "n=1;a=1/2;m=3");
}
