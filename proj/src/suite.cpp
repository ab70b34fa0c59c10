#include "qcert/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <future>
#include <sstream>
#include <thread>

#include "qcert/identities.hpp"
#include "qcert/rank.hpp"
#include "qcert/report.hpp"
#include "qcert/upalgebra.hpp"

namespace qcert {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

Rational rat(std::int64_t n) { return Rational(Integer(static_cast<long>(n))); }

bool zero_below(const Series& s, std::int64_t terms) { return s.is_zero() && s.precision() >= rat(terms); }

CheckResult boolean_check(std::string id, std::int64_t depth, const std::function<bool()>& f) {
  CheckResult r;
  r.id = std::move(id);
  r.depth = depth;
  r.pass = f();
  r.verdict = r.pass ? "pass" : "fail";
  return r;
}

Check simple(std::string id, std::int64_t depth, std::function<bool()> f) {
  return {id, [id, depth, f] { return boolean_check(id, depth, f); }};
}

Check congruence(std::string id, std::function<CongruenceReport()> f) {
  return {id, [id, f] {
            CongruenceReport rep = f();
            CheckResult r;
            r.id = id;
            r.pass = rep.pass();
            r.verdict = r.pass ? "pass" : "fail";
            r.depth = rep.n_max;
            r.detail = to_text(rep);
            if (!r.detail.empty() && r.detail.back() == '\n') r.detail.pop_back();
            r.data = to_json(rep);
            return r;
          }};
}

}  // namespace

ProofCertificate run_spec(const IdentitySpec& spec, const ProverOptions& options) {
  switch (spec.kind) {
    case IdentityKind::Eta:
      return prove_eta_identity(spec.terms, spec.group.level, options);
    case IdentityKind::GenEta:
      return prove_gen_identity(spec.terms, spec.group.level, options);
    case IdentityKind::Up:
      return prove_up_identity(spec.prime, spec.group.level, spec.up_terms, spec.terms, options);
  }
  throw std::logic_error("unknown identity kind");
}

bool series_check(const IdentitySpec& spec, std::int64_t terms) {
  if (spec.kind != IdentityKind::Up) return zero_below(expand_combination_scaled(spec.terms, rat(terms)).first, terms);
  auto [g, dg] = expand_combination_scaled(spec.up_terms, rat(spec.prime * terms));
  auto [f, df] = expand_combination_scaled(spec.terms, rat(terms));
  return zero_below(u_p(g, spec.prime).scaled(df) - f.scaled(dg), terms);
}

CheckResult check_identity(const IdentitySpec& spec, const SuiteOptions& options) {
  CheckResult r;
  r.id = "identity/" + spec.name;
  ProverOptions po;
  po.depth_cap = options.depth_cap;
  const ProofCertificate cert = run_spec(spec, po);
  const bool series = series_check(spec, options.series_terms);
  r.pass = cert.verdict == Verdict::Proven && series;
  r.verdict = to_string(cert.verdict);
  r.depth = cert.verified_depth;
  r.detail = "B = " + to_string(cert.B) + ", series agree below q^" + std::to_string(options.series_terms) + ": " +
             (series ? "yes" : "no");
  r.data = to_json(cert, spec.name);
  r.data["series_check"] = series;
  return r;
}

std::vector<IdentitySpec> load_identity_dir(const std::string& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".spec") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<IdentitySpec> out;
  for (const auto& f : files) {
    IdentitySpec s = load_spec(f.string());
    if (s.name.empty()) s.name = f.stem().string();
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Check> suite_checks(const SuiteOptions& options) {
  std::vector<Check> checks;
  for (const auto& spec : load_identity_dir(options.identity_dir))
    checks.push_back({"identity/" + spec.name, [spec, options] { return check_identity(spec, options); }});

  checks.push_back(simple("anchor/af-first-13", 13, [] {
    const std::vector<Integer> expected{1, 1, -2, 3, -3, 3, -5, 7, -6, 6, -10, 12, -11};
    const auto table = af_table(12);
    return table.values == expected;
  }));
  checks.push_back(simple("anchor/af-routes-300", 300, [] { return af_eulerian(300) == af_table(300).values; }));
  checks.push_back(simple("anchor/t-expansion-11", 11, [] {
    const std::vector<Integer> expected{1, -2, 3, -6, 11, -16, 24, -38, 57, -82, 117};
    const Series t = expand(hauptmodul_t(), rat(12));
    for (std::int64_t n = 1; n <= 11; ++n)
      if (t.coefficient(rat(n)) != expected[static_cast<std::size_t>(n - 1)]) return false;
    return t.coefficient(rat(0)) == 0;
  }));
  checks.push_back(simple("anchor/j1-dissection-500", 500, [] { return verify_j1_dissection(500); }));
  checks.push_back(simple("anchor/b-identity-500", 500, [] { return verify_b_identity(500); }));
  checks.push_back(simple("generating-function/mod5-200", 200, [] { return verify_af5id(200); }));
  checks.push_back(simple("generating-function/mod7-200", 200, [] { return verify_af7id(200); }));

  checks.push_back(congruence("congruence/rank-parity-mod5-a3", [] { return check_rank_parity_mod5(3, 100); }));
  checks.push_back(congruence("congruence/rank-parity-mod5-a4", [] { return check_rank_parity_mod5(4, 40); }));
  checks.push_back(congruence("congruence/rank-parity-mod7-a3", [] { return check_rank_parity_mod7(3, 50); }));
  checks.push_back(congruence("congruence/cf-mod5-a2", [] { return check_cf_congruence(1, false, 100); }));
  checks.push_back(congruence("congruence/cf-mod5-a3", [] { return check_cf_congruence(1, true, 100); }));
  checks.push_back(congruence("congruence/cf-mod5-a4", [] { return check_cf_congruence(2, false, 40); }));
  checks.push_back(congruence("congruence/cf-mod5-a5", [] { return check_cf_congruence(2, true, 20); }));

  checks.push_back(simple("valuation/sigma-set", 0, [] { return check_sigma_valuations(); }));
  checks.push_back(simple("valuation/seed-tables", 0, [] { return check_seed_valuations(); }));
  checks.push_back(simple("valuation/families-25", 25, [] { return check_family_valuations(25); }));
  checks.push_back({"valuation/l-sequence-4", [] {
                      const LValuationReport rep = verify_l_sequence_valuations(4);
                      CheckResult r;
                      r.id = "valuation/l-sequence-4";
                      r.pass = rep.pass;
                      r.verdict = rep.pass ? "pass" : "fail";
                      r.depth = 4;
                      r.data = to_json(rep);
                      return r;
                    }});
  checks.push_back({"certification/seed-tables", [] {
                      CheckResult r;
                      r.id = "certification/seed-tables";
                      initial_tables(true);
                      r.pass = true;
                      r.verdict = "pass";
                      return r;
                    }});
  return checks;
}

std::vector<CheckResult> run_checks(const std::vector<Check>& checks, unsigned jobs) {
  std::vector<CheckResult> results(checks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < checks.size(); i = next++) {
      const auto start = Clock::now();
      try {
        results[i] = checks[i].run();
      } catch (const std::exception& e) {
        results[i] = CheckResult{};
        results[i].pass = false;
        results[i].verdict = "error";
        results[i].detail = e.what();
      }
      results[i].id = checks[i].id;
      results[i].seconds = std::chrono::duration<double>(Clock::now() - start).count();
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(checks.size())));
  std::vector<std::future<void>> pool;
  for (unsigned t = 0; t < n; ++t) pool.push_back(std::async(std::launch::async, worker));
  for (auto& f : pool) f.get();
  std::sort(results.begin(), results.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return results;
}

json to_json(const CheckResult& r, bool timings) {
  json out{{"id", r.id},
           {"verdict", r.verdict},
           {"pass", r.pass},
           {"depth", std::to_string(r.depth)},
           {"detail", r.detail}};
  if (timings) {
    std::ostringstream secs;
    secs.precision(3);
    secs << std::fixed << r.seconds;
    out["seconds"] = secs.str();
  }
  if (!r.data.is_null()) out["data"] = r.data;
  return out;
}

json suite_json(const std::vector<CheckResult>& results, bool timings) {
  json checks = json::array();
  std::size_t passed = 0;
  for (const auto& r : results) {
    checks.push_back(to_json(r, timings));
    passed += r.pass ? 1 : 0;
  }
  return document("suite", {{"checks", std::move(checks)},
                            {"passed", std::to_string(passed)},
                            {"total", std::to_string(results.size())}});
}

std::string suite_text(const std::vector<CheckResult>& results) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const auto& r : results) {
    out << (r.pass ? "PASS " : "FAIL ") << r.id << " [" << r.verdict << "]";
    out.precision(2);
    out << std::fixed << " " << r.seconds << "s";
    if (!r.detail.empty()) out << "  " << r.detail;
    out << "\n";
    passed += r.pass ? 1 : 0;
  }
  out << passed << "/" << results.size() << " checks passed\n";
  return out.str();
}

}  // namespace qcert
