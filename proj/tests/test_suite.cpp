#include <doctest.h>

#include <set>

#include "qcert/identities.hpp"
#include "qcert/report.hpp"
#include "qcert/suite.hpp"

using namespace qcert;

TEST_CASE("run_spec dispatches on the identity kind") {
  CHECK(run_spec(modular_equation_spec()).kind == "eta");
  CHECK(run_spec(u5_example_spec()).kind == "up");
  CHECK(run_spec(theta_identity_spec()).kind == "geneta");
}

TEST_CASE("series checks of the standard identities") {
  for (const auto& spec : standard_identities()) CHECK_MESSAGE(series_check(spec, 50), spec.name);
  IdentitySpec broken = u5_example_spec();
  broken.terms.terms[1].coef = 3;
  CHECK_FALSE(series_check(broken, 50));
}

TEST_CASE("check_identity requires both the proof and the series") {
  const CheckResult ok = check_identity(u5_example_spec());
  CHECK(ok.pass);
  CHECK(ok.id == "identity/u5-eta-example");
  CHECK(ok.verdict == "proven");
  IdentitySpec broken = u5_example_spec();
  broken.terms.terms[0].coef = 6;
  CHECK_FALSE(check_identity(broken).pass);
}

TEST_CASE("suite check ids are unique") {
  const auto checks = suite_checks();
  std::set<std::string> ids;
  for (const auto& c : checks) ids.insert(c.id);
  CHECK(ids.size() == checks.size());
  CHECK(ids.count("identity/modular-equation") == 1);
  CHECK(ids.count("valuation/l-sequence-4") == 1);
}

TEST_CASE("run_checks sorts results and turns exceptions into failures") {
  std::vector<Check> checks;
  checks.push_back({"b", [] { return CheckResult{"b", true, "ok", 1, 0, "", nullptr}; }});
  checks.push_back({"c", []() -> CheckResult { throw TableTooSmall("boom"); }});
  checks.push_back({"a", [] { return CheckResult{"wrong id", false, "bad", 1, 0, "", nullptr}; }});
  for (unsigned jobs : {1u, 3u, 8u}) {
    const auto results = run_checks(checks, jobs);
    REQUIRE(results.size() == 3);
    CHECK(results[0].id == "a");
    CHECK(results[1].id == "b");
    CHECK(results[1].pass);
    CHECK(results[2].verdict == "error");
    CHECK(results[2].detail == "boom");
    CHECK_FALSE(results[2].pass);
  }
}

TEST_CASE("suite documents carry the format version") {
  const auto results = run_checks({{"x", [] { return CheckResult{"x", true, "ok", 7, 0, "", nullptr}; }}}, 1);
  const nlohmann::json doc = suite_json(results);
  CHECK(doc["format_version"] == kFormatVersion);
  CHECK(doc["kind"] == "suite");
  CHECK(doc["data"]["passed"] == "1");
  CHECK(doc["data"]["checks"][0]["depth"] == "7");
  CHECK_FALSE(doc["data"]["checks"][0].contains("seconds"));
  CHECK(suite_json(results, true)["data"]["checks"][0].contains("seconds"));
  CHECK(suite_text(results).find("1/1 checks passed") != std::string::npos);
}

TEST_CASE("certificate JSON writes numbers as strings") {
  const nlohmann::json j = to_json(run_spec(u5_example_spec()), "u5-eta-example");
  CHECK(j["B"] == "-18/5");
  CHECK(j["verdict"] == "proven");
}
