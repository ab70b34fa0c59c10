#pragma once

// Dispatch of identity specs to the matching prover and the full
// reproduction battery run by the `suite` command.

#include <cstdint>
#include <functional>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "qcert/prover.hpp"
#include "qcert/spec_format.hpp"

namespace qcert {

/// Certificate from prove_eta_identity, prove_gen_identity or prove_up_identity.
ProofCertificate run_spec(const IdentitySpec& spec, const ProverOptions& options = {});
/// Both sides of the identity agree as q-series below q^terms.
bool series_check(const IdentitySpec& spec, std::int64_t terms);

struct CheckResult {
  std::string id;
  bool pass = false;
  std::string verdict;
  std::int64_t depth = 0;
  double seconds = 0;
  std::string detail;
  nlohmann::json data;
};

struct Check {
  std::string id;
  std::function<CheckResult()> run;
};

struct SuiteOptions {
  unsigned jobs = 1;
  std::string identity_dir = QCERT_IDENTITY_DIR;
  std::optional<std::int64_t> depth_cap;
  /// Terms compared by series_check for every identity.
  std::int64_t series_terms = 60;
};

/// Proves the identity and runs series_check; passes only when both succeed.
CheckResult check_identity(const IdentitySpec& spec, const SuiteOptions& options = {});
/// Every *.spec file under dir, sorted by file name.
std::vector<IdentitySpec> load_identity_dir(const std::string& dir);

/// The full battery; ids are unique.
std::vector<Check> suite_checks(const SuiteOptions& options = {});
/// Runs checks on up to options.jobs threads; the result is sorted by id and
/// exceptions become failed results.
std::vector<CheckResult> run_checks(const std::vector<Check>& checks, unsigned jobs);

/// Wall times are included only with timings set, so default output is byte-for-byte reproducible.
nlohmann::json to_json(const CheckResult& r, bool timings = false);
nlohmann::json suite_json(const std::vector<CheckResult>& results, bool timings = false);
std::string suite_text(const std::vector<CheckResult>& results);

}  // namespace qcert
