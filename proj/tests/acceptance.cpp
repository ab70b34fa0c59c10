// Acceptance run: one PASS/FAIL line per criterion with its wall time.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qcert/identities.hpp"
#include "qcert/orders.hpp"
#include "qcert/rank.hpp"
#include "qcert/suite.hpp"

using namespace qcert;

namespace {

// Time limits in seconds.
constexpr double kCuspLimit = 1.0;
constexpr double kBatteryLimit = 120.0;
constexpr double kGeneratingLimit = 60.0;
constexpr double kCongruenceLimit = 600.0;

constexpr std::int64_t kSeriesTerms = 50;
constexpr std::int64_t kAnchorTerms = 500;
constexpr std::int64_t kRouteTerms = 300;
constexpr std::int64_t kGeneratingDepth = 200;
constexpr int kRingCases = 120;
constexpr int kValenceCasesPerLevel = 20;
constexpr int kRoundTripCases = 40;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    detail += (detail.empty() ? "" : "; ") + what;
  }
};

Rational r(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

std::string join(const std::vector<Rational>& v) {
  std::string out;
  for (const auto& x : v) out += (out.empty() ? "" : " ") + to_string(x);
  return out;
}

std::vector<Rational> ints(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.push_back(Rational(x));
  return out;
}

std::vector<Rational> ord_row(const Product& p, const CuspTable& t) {
  std::vector<Rational> out;
  for (const auto& row : order_report(p, t).rows) out.push_back(row.ORD);
  return out;
}

Outcome cusp_tables() {
  Outcome o;
  const std::vector<std::pair<std::string, std::int64_t>> g50{
      {"0", 50}, {"1/2", 25}, {"1/5", 2}, {"2/5", 2}, {"3/5", 2},  {"4/5", 2},
      {"1/10", 1}, {"3/10", 1}, {"7/10", 1}, {"9/10", 1}, {"1/25", 2}, {"1/50", 1}};
  const std::vector<std::pair<std::string, std::int64_t>> g20{{"0", 20}, {"1/2", 5},   {"1/4", 5},
                                                              {"1/5", 4}, {"1/10", 1}, {"1/20", 1}};
  for (auto [n, expected] : {std::pair{std::int64_t{50}, g50}, std::pair{std::int64_t{20}, g20}}) {
    std::vector<std::pair<std::string, std::int64_t>> got;
    for (const auto& e : cusps_gamma0(n).entries) got.emplace_back(to_string(e.cusp), e.width);
    o.require(got == expected, "Gamma0(" + std::to_string(n) + ") table differs");
  }
  o.detail = o.pass ? "Gamma0(50): 12 cusps, Gamma0(20): 6 cusps" : o.detail;
  return o;
}

Outcome order_tables() {
  Outcome o;
  const CuspTable t50 = cusps_gamma0(50), t20 = cusps_gamma0(20);
  const auto t = ord_row(hauptmodul_t().at_level(50), t50);
  const auto t5 = ord_row(hauptmodul_t().dilated(5), t50);
  const auto f1 = ord_row(EtaQuotient{20, {{1, 4}, {2, -8}, {5, -4}, {10, 8}}}, t20);
  const auto f2 = ord_row(EtaQuotient{20, {{1, 2}, {2, -1}, {4, -1}, {5, -2}, {10, 5}, {20, -3}}}, t20);
  o.require(t == ints({0, -5, 0, 0, 0, 0, 1, 1, 1, 1, 0, 1}), "t: " + join(t));
  o.require(t5 == ints({0, -1, 0, 0, 0, 0, -1, -1, -1, -1, 0, 5}), "t(5tau): " + join(t5));
  o.require(f1 == ints({0, -2, -2, 0, 2, 2}), "f1: " + join(f1));
  o.require(f2 == ints({1, 0, -1, 0, 1, -1}), "f2: " + join(f2));
  if (o.pass) o.detail = "ORD(t, 1/2) = " + to_string(t[1]) + ", ORD(t(5tau), 1/50) = " + to_string(t5[11]);
  return o;
}

Outcome b_values() {
  Outcome o;
  const Rational modeq = run_spec(modular_equation_spec()).B;
  const Rational u5 = run_spec(u5_example_spec()).B;
  const Rational theta = run_spec(theta_identity_spec()).B;
  Rational least = 0;
  std::string argmin;
  for (const auto& s : seed_identity_specs()) {
    const Rational b = run_spec(s).B;
    if (b < least) least = b, argmin = s.name;
  }
  o.require(modeq == -24, "modular-equation B = " + to_string(modeq));
  o.require(u5 == r(-18, 5), "u5-eta-example B = " + to_string(u5));
  o.require(theta == -24, "geneta-5-dissection B = " + to_string(theta));
  o.require(least == -14, "seed battery minimum B = " + to_string(least) + " at " + argmin + ", expected -14");
  if (o.pass) o.detail = "-24, -18/5, -24, -14";
  return o;
}

Outcome proven_battery() {
  Outcome o;
  SuiteOptions opts;
  opts.series_terms = kSeriesTerms;
  int proven = 0;
  const auto specs = standard_identities();
  for (const auto& s : specs) {
    const CheckResult c = check_identity(s, opts);
    o.require(c.pass, s.name + ": " + c.verdict + ", " + c.detail);
    proven += c.pass ? 1 : 0;
  }
  if (o.pass) o.detail = std::to_string(proven) + "/" + std::to_string(specs.size()) + " proven, series agree below q^" +
                         std::to_string(kSeriesTerms);
  return o;
}

Outcome mutation_soundness() {
  Outcome o;
  int detected = 0, total = 0;
  for (IdentitySpec s : standard_identities()) {
    auto& terms = s.terms.terms;
    const std::size_t i = static_cast<std::size_t>(oracle::uniform(0, static_cast<std::int64_t>(terms.size()) - 1));
    terms[i].coef += oracle::uniform(0, 1) == 0 ? -1 : 1;
    const ProofCertificate c = run_spec(s);
    ++total;
    const bool caught = c.verdict != Verdict::Proven;
    detected += caught ? 1 : 0;
    o.require(caught, s.name + " term " + std::to_string(i) + " corruption was proven");
  }
  if (o.pass) o.detail = std::to_string(detected) + "/" + std::to_string(total) + " corruptions detected";
  return o;
}

Outcome series_anchors() {
  Outcome o;
  const RankParityTable a = af_table(kRouteTerms);
  const std::vector<long> af{1, 1, -2, 3, -3, 3, -5, 7, -6, 6, -10, 12, -11};
  for (std::size_t n = 0; n < af.size(); ++n)
    o.require(a.at(static_cast<std::int64_t>(n)) == af[n], "a_f(" + std::to_string(n) + ")");
  const Series t = expand(hauptmodul_t(), r(12));
  const std::vector<long> tc{1, -2, 3, -6, 11, -16, 24, -38, 57, -82, 117};
  for (std::size_t i = 0; i < tc.size(); ++i)
    o.require(t.coefficient(static_cast<std::int64_t>(i + 1)) == tc[i], "t coefficient " + std::to_string(i + 1));
  o.require(verify_j1_dissection(kAnchorTerms), "J1 5-dissection");
  o.require(verify_b_identity(kAnchorTerms), "B(q) identity");
  o.require(af_eulerian(kRouteTerms) == a.values, "Eulerian and bilateral a_f differ");
  if (o.pass) o.detail = "a_f(0..12), t to q^11, dissections to 500, routes to 300";
  return o;
}

Outcome generating_functions() {
  Outcome o;
  o.require(verify_af5id(kGeneratingDepth), "mod 5 generating function");
  o.require(verify_af7id(kGeneratingDepth), "mod 7 generating function");
  if (o.pass) o.detail = "both to depth " + std::to_string(kGeneratingDepth);
  return o;
}

Outcome congruences() {
  Outcome o;
  std::vector<CongruenceReport> reports{
      check_rank_parity_mod5(3, 100),      check_rank_parity_mod5(4, 40),      check_cf_congruence(1, false, 100),
      check_cf_congruence(1, true, 100),   check_cf_congruence(2, false, 40), check_cf_congruence(2, true, 20),
      check_rank_parity_mod7(3, 50),
  };
  std::size_t values = 0;
  for (const auto& rep : reports) {
    o.require(rep.pass(), rep.id + ": " + std::to_string(rep.failures.size()) + " failures");
    values += static_cast<std::size_t>(rep.n_max - rep.n_min + 1);
  }
  if (o.pass) o.detail = std::to_string(reports.size()) + " scans, " + std::to_string(values) + " values, 0 failures";
  return o;
}

Outcome valuations() {
  Outcome o;
  const LValuationReport rep = verify_l_sequence_valuations(4);
  o.require(rep.routes_agree, "series and recursion routes disagree");
  std::string rows;
  for (const auto& row : rep.rows) {
    o.require(row.pass, "L" + std::to_string(row.alpha) + " fails (slack " + std::to_string(row.slack) + ")");
    rows += " L" + std::to_string(row.alpha) + ":deg " + std::to_string(row.degree);
  }
  o.require(check_sigma_valuations(), "sigma valuations");
  o.require(check_seed_valuations(), "seed valuations");
  if (o.pass) o.detail = "L1..L4 within bounds," + rows + "; sigma and seed tables within bounds";
  return o;
}

Series random_series() {
  const std::int64_t grid = oracle::uniform(1, 3);
  const std::int64_t low = oracle::uniform(-4, 4);
  const std::int64_t len = oracle::uniform(0, 60);
  std::vector<Integer> c(static_cast<std::size_t>(len));
  for (auto& x : c) x = oracle::random_integer(40);
  return Series::from_coefficients(std::move(c), low, low + len + oracle::uniform(0, 5), grid);
}

Outcome property_suites() {
  Outcome o;
  int ring_failures = 0;
  for (int i = 0; i < kRingCases; ++i) {
    const Series a = random_series(), b = random_series(), c = random_series();
    const bool ok = a * b == b * a && (a * b) * c == a * (b * c) && agree(a * (b + c), a * b + a * c) &&
                    (a - a).is_zero() && agree((a + b) - b, a);
    ring_failures += ok ? 0 : 1;
  }
  o.require(ring_failures == 0, std::to_string(ring_failures) + " ring-axiom failures");

  int valence_cases = 0, valence_failures = 0;
  for (std::int64_t n : {10, 20, 50, 100}) {
    const auto ds = divisors(n);
    const CuspTable table = cusps_gamma0(n);
    int found = 0;
    for (int attempt = 0; attempt < 1000000 && found < kValenceCasesPerLevel; ++attempt) {
      EtaQuotient f{n, {}};
      std::int64_t sum = 0;
      for (std::size_t i = 0; i + 1 < ds.size(); ++i) sum += (f.exps[ds[i]] = oracle::uniform(-6, 6));
      f.exps[ds.back()] = -sum;
      f = f.normalized();
      if (f.exps.empty() || !newman_is_modular(f)) continue;
      ++found;
      Rational total = 0;
      for (const auto& row : order_report(f, table).rows) total += row.ORD;
      valence_failures += total == 0 ? 0 : 1;
    }
    valence_cases += found;
    o.require(found == kValenceCasesPerLevel, "too few modular quotients at N = " + std::to_string(n));
  }
  o.require(valence_failures == 0, std::to_string(valence_failures) + " nonzero valence sums");

  const Series v = expand_combination(prefactor_pb(), r(120));
  int round_trip_failures = 0;
  for (int i = 0; i < kRoundTripCases; ++i) {
    const std::int64_t lo = oracle::uniform(-3, 3);
    TPoly p;
    for (std::int64_t n = lo; n <= lo + oracle::uniform(0, 25); ++n) p.set(n, oracle::random_integer(30));
    p.set(lo, 1);
    round_trip_failures += reduce_to_tpoly(v * evaluate(p, 123), v, lo) == p ? 0 : 1;
  }
  o.require(round_trip_failures == 0, std::to_string(round_trip_failures) + " reduce_to_tpoly round-trip failures");
  if (o.pass)
    o.detail = std::to_string(kRingCases) + " ring cases, " + std::to_string(valence_cases) + " valence sums, " +
               std::to_string(kRoundTripCases) + " round trips";
  return o;
}

struct Criterion {
  int number;
  const char* name;
  std::function<Outcome()> run;
  double limit;  // seconds; 0 for none
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "cusp-tables", cusp_tables, kCuspLimit},
      {2, "order-tables", order_tables, 0},
      {3, "b-values", b_values, 0},
      {4, "proven-battery", proven_battery, kBatteryLimit},
      {5, "mutation-soundness", mutation_soundness, 0},
      {6, "series-anchors", series_anchors, 0},
      {7, "generating-functions", generating_functions, kGeneratingLimit},
      {8, "congruences", congruences, kCongruenceLimit},
      {9, "valuations", valuations, 0},
      {10, "property-suites", property_suites, 0},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit > 0 && secs >= c.limit) o.require(false, "exceeded " + std::to_string(static_cast<int>(c.limit)) + " s");
    failed += o.pass ? 0 : 1;
    std::printf("%s %2d %-22s %8.2fs  %s\n", o.pass ? "PASS" : "FAIL", c.number, c.name, secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}
