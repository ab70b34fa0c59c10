#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcert/arith.hpp"
#include "qcert/cusps.hpp"
#include "qcert/etaq.hpp"
#include "qcert/orders.hpp"

namespace qcert {

enum class Verdict { Proven, Counterexample, InsufficientPrecision };

std::string to_string(Verdict v);

/// Orders of one term across the cusp table; lower bounds for U_p images.
struct TermOrders {
  std::string label;
  std::string side;  // "f" or "U_p(g)"
  std::vector<Rational> values;
  bool lower_bound = false;
};

struct ProofCertificate {
  std::string kind;  // "eta", "geneta" or "up"
  Group group;
  std::int64_t prime = 0;
  CuspTable cusps;
  std::size_t infinity_index = 0;
  std::vector<TermOrders> orders;
  /// Per-cusp minimum entering B; the infinity entry is not summed.
  std::vector<Rational> minima;
  Rational B;
  /// floor(-B) + 1: coefficients of q^n for every n < required_depth must vanish.
  std::int64_t required_depth = 0;
  /// Exponent bound actually checked (required_depth + 1 unless capped).
  std::int64_t verified_depth = 0;
  Verdict verdict = Verdict::InsufficientPrecision;
  std::optional<Rational> counterexample_exponent;
  std::optional<Rational> counterexample_coefficient;
  std::vector<std::string> checks;
  std::vector<std::string> notes;
};

struct ProverOptions {
  /// Largest exponent bound the caller allows to be expanded.
  std::optional<std::int64_t> depth_cap;
};

/// sum_i coef_i f_i = 0 with eta-quotients on Gamma0(level).
ProofCertificate prove_eta_identity(const LinearCombination& terms, std::int64_t level,
                                    const ProverOptions& options = {});
/// sum_i coef_i f_i + 1 = 0 with generalized eta-quotients on Gamma1(level);
/// divides through by the term of least order at infinity if no constant is present.
ProofCertificate prove_gen_identity(const LinearCombination& terms, std::int64_t level,
                                    const ProverOptions& options = {});
/// U_p(sum g) = sum f with g on Gamma0(p N) and f on Gamma0(N).
ProofCertificate prove_up_identity(std::int64_t p, std::int64_t level, const LinearCombination& g_terms,
                                   const LinearCombination& f_terms, const ProverOptions& options = {});

struct GordonHughesBound {
  Rational value;
  int case_number = 0;
  /// nu_p(delta) == nu_p(N) / 2, decided by the first case.
  bool boundary = false;
};

/// Lower bound for ORD(U_p f, r, Gamma0(N)) with r = beta/delta, delta | N.
GordonHughesBound gordon_hughes(std::int64_t p, std::int64_t level, const EtaQuotient& f, const Cusp& r);
Rational gordon_hughes_bound(std::int64_t p, std::int64_t level, const EtaQuotient& f, const Cusp& r);

}  // namespace qcert
