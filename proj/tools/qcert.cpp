// qcert: command-line front end for the eta-quotient identity prover.
//
// Exit codes: 0 success or proven, 1 a check failed, 2 bad input.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "qcert/cusps.hpp"
#include "qcert/etaq.hpp"
#include "qcert/orders.hpp"
#include "qcert/rank.hpp"
#include "qcert/report.hpp"
#include "qcert/spec_format.hpp"
#include "qcert/suite.hpp"

namespace {

using namespace qcert;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

struct Output {
  std::string format = "json";
  std::string path;

  void emit(const std::string& kind, const json& payload, const std::string& text) const {
    const std::string body = format == "json" ? document(kind, payload).dump(2) + "\n" : text;
    if (path.empty()) {
      std::cout << body;
      return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << body;
  }
};

// A spec file when the argument names an existing file, otherwise a product.
bool is_file(const std::string& arg) { return std::filesystem::is_regular_file(arg); }

int cmd_expand(const std::string& what, std::int64_t level, std::int64_t depth, const Output& out) {
  const Rational prec(Integer(static_cast<long>(depth)));
  if (!is_file(what)) {
    const Product p = parse_product(what, level);
    const Series s = expand(p, prec);
    out.emit("series", {{"product", product_text(p)}, {"series", to_json(s)}}, to_text(s));
    return kOk;
  }
  const IdentitySpec spec = load_spec(what);
  json payload{{"name", spec.name}};
  std::string text;
  if (spec.kind == IdentityKind::Up) {
    const auto [g, dg] = expand_combination_scaled(spec.up_terms, prec * spec.prime);
    const auto [f, df] = expand_combination_scaled(spec.terms, prec);
    const Series lhs = u_p(g, spec.prime), rhs = f;
    payload["scale_lhs"] = to_string(dg);
    payload["scale_rhs"] = to_string(df);
    payload["lhs"] = to_json(lhs);
    payload["rhs"] = to_json(rhs);
    text = to_string(dg) + " * U_p(g) = " + to_text(lhs) + to_string(df) + " * f = " + to_text(rhs);
  } else {
    const auto [s, d] = expand_combination_scaled(spec.terms, prec);
    payload["scale"] = to_string(d);
    payload["sum"] = to_json(s);
    text = to_string(d) + " * sum = " + to_text(s);
  }
  out.emit("series", payload, text);
  return kOk;
}

int cmd_cusps(std::int64_t n, bool gamma1, const Output& out) {
  if (n < 1) throw std::invalid_argument("level must be positive");
  const CuspTable t = cusp_table({gamma1 ? GroupKind::Gamma1 : GroupKind::Gamma0, n});
  out.emit("cusps", to_json(t), to_text(t));
  return kOk;
}

int cmd_orders(const std::string& product, std::int64_t level, bool gamma1, const Output& out) {
  const Product p = parse_product(product, level);
  const Group g{gamma1 || std::holds_alternative<GeneralizedEtaQuotient>(p) ? GroupKind::Gamma1 : GroupKind::Gamma0,
                product_level(p)};
  const OrderReport r = order_report(p, cusp_table(g), product_text(p));
  out.emit("orders", to_json(r), to_text(r));
  return kOk;
}

int cmd_prove(const std::string& path, std::optional<std::int64_t> cap, const Output& out) {
  const IdentitySpec spec = load_spec(path);
  ProverOptions opts;
  opts.depth_cap = cap;
  const ProofCertificate cert = run_spec(spec, opts);
  out.emit("certificate", to_json(cert, spec.name), to_text(cert, spec.name));
  return cert.verdict == Verdict::Proven ? kOk : kCheckFailed;
}

int cmd_upcheck(const std::string& path, std::int64_t depth, const Output& out) {
  const IdentitySpec spec = load_spec(path);
  if (spec.kind != IdentityKind::Up) throw std::invalid_argument(path + " is not a U_p identity");
  const bool agree = series_check(spec, depth);
  const ProofCertificate cert = run_spec(spec);
  const bool ok = agree && cert.verdict == Verdict::Proven;
  json payload{{"name", spec.name},
               {"series_depth", std::to_string(depth)},
               {"series_agree", agree},
               {"certificate", to_json(cert, spec.name)}};
  out.emit("upcheck", payload,
           "series agree below q^" + std::to_string(depth) + ": " + (agree ? "yes" : "no") + "\n" +
               to_text(cert, spec.name));
  return ok ? kOk : kCheckFailed;
}

int cmd_congruence(std::int64_t prime, int alpha, std::int64_t n_max, bool cf_family, const Output& out) {
  if (n_max < 0) throw std::invalid_argument("--nmax must be nonnegative");
  CongruenceReport r;
  if (cf_family) {
    if (prime != 5) throw std::invalid_argument("c_f congruences are stated for p = 5");
    if (alpha < 2) throw std::invalid_argument("c_f congruences need --alpha >= 2");
    r = check_cf_congruence(alpha / 2, alpha % 2 == 1, n_max);
  } else if (prime == 5) {
    if (alpha < 3) throw std::invalid_argument("--alpha must be >= 3");
    r = check_rank_parity_mod5(alpha, n_max);
  } else if (prime == 7) {
    if (alpha < 3) throw std::invalid_argument("--alpha must be >= 3");
    r = check_rank_parity_mod7(alpha, n_max);
  } else {
    throw std::invalid_argument("--prime must be 5 or 7");
  }
  out.emit("congruence", to_json(r), to_text(r));
  return r.pass() ? kOk : kCheckFailed;
}

int cmd_suite(unsigned jobs, const std::string& dir, std::optional<std::int64_t> cap, bool timings, const Output& out) {
  SuiteOptions opts;
  opts.jobs = jobs;
  if (!dir.empty()) opts.identity_dir = dir;
  opts.depth_cap = cap;
  const auto results = run_checks(suite_checks(opts), opts.jobs);
  out.emit("suite", suite_json(results, timings)["data"], suite_text(results));
  for (const auto& r : results)
    if (!r.pass) return kCheckFailed;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-series expansion, cusp analysis and identity certificates for eta-quotients"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_option("--format", out.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", out.path, "Write output to this file instead of stdout");

  std::string target;
  std::int64_t level = 0, depth = 50, n = 0, prime = 5, n_max = 100;
  int alpha = 3;
  bool gamma1 = false, cf_family = false;
  std::optional<std::int64_t> cap;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::string dir;

  auto* expand_cmd = app.add_subcommand("expand", "q-expansion of a product or of both sides of a spec file");
  expand_cmd->add_option("target", target, "eta{...}, geta{...} or a spec file")->required();
  expand_cmd->add_option("--level", level, "Level of a product (default: lcm of its indices)");
  expand_cmd->add_option("--depth", depth, "Expand below q^depth")->check(CLI::PositiveNumber);

  auto* cusps_cmd = app.add_subcommand("cusps", "Cusp representatives and widths");
  cusps_cmd->add_option("level", n, "Level N")->required()->check(CLI::PositiveNumber);
  cusps_cmd->add_flag("--gamma1", gamma1, "Use Gamma1(N) instead of Gamma0(N)");

  auto* orders_cmd = app.add_subcommand("orders", "Orders of a product at every cusp");
  orders_cmd->add_option("product", target, "eta{...} or geta{...}")->required();
  orders_cmd->add_option("--level", level, "Level (default: lcm of the indices)");
  orders_cmd->add_flag("--gamma1", gamma1, "Use Gamma1(N) cusps");

  auto* prove_cmd = app.add_subcommand("prove", "Prove an identity spec with the valence formula");
  prove_cmd->add_option("spec", target, "Identity spec file")->required()->check(CLI::ExistingFile);
  prove_cmd->add_option("--depth", cap, "Largest exponent bound allowed to be expanded");

  auto* upcheck_cmd = app.add_subcommand("upcheck", "Series check and certificate for a U_p identity");
  upcheck_cmd->add_option("spec", target, "Identity spec file")->required()->check(CLI::ExistingFile);
  upcheck_cmd->add_option("--depth", depth, "Compare both sides below q^depth")->check(CLI::PositiveNumber);

  auto* cong_cmd = app.add_subcommand("congruence", "Scan a rank-parity congruence");
  cong_cmd->add_option("--prime", prime, "5 or 7")->check(CLI::IsMember({5, 7}));
  cong_cmd->add_option("--alpha", alpha, "Power of the prime in the progression");
  cong_cmd->add_option("--nmax", n_max, "Largest n scanned");
  cong_cmd->add_flag("--cf", cf_family, "Scan c_f(5^alpha n + lambda_alpha) instead of a_f");

  auto* suite_cmd = app.add_subcommand("suite", "Run the full reproduction battery");
  suite_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  suite_cmd->add_option("--identities", dir, "Directory of *.spec files")->check(CLI::ExistingDirectory);
  suite_cmd->add_option("--depth", cap, "Largest exponent bound allowed to be expanded");
  bool timings = false;
  suite_cmd->add_flag("--timings", timings, "Include per-check wall times in JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*expand_cmd) return cmd_expand(target, level, depth, out);
    if (*cusps_cmd) return cmd_cusps(n, gamma1, out);
    if (*orders_cmd) return cmd_orders(target, level, gamma1, out);
    if (*prove_cmd) return cmd_prove(target, cap, out);
    if (*upcheck_cmd) return cmd_upcheck(target, depth, out);
    if (*cong_cmd) return cmd_congruence(prime, alpha, n_max, cf_family, out);
    if (*suite_cmd) return cmd_suite(jobs, dir, cap, timings, out);
  } catch (const ParseError& e) {
    std::cerr << "error: " << target << ":" << e.line() << ":" << e.column() << ": " << e.detail() << "\n";
    return kInputError;
  } catch (const NotModular& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const CertificationFailed& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
