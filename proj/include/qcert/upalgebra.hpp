#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "qcert/arith.hpp"
#include "qcert/etaq.hpp"
#include "qcert/prover.hpp"
#include "qcert/series.hpp"

namespace qcert {

/// Laurent polynomial in t with integer coefficients; zero coefficients are never stored.
class TPoly {
 public:
  TPoly() = default;
  static TPoly monomial(const Integer& c, std::int64_t n);
  /// Coefficients listed from t^low upward.
  static TPoly from_coefficients(std::int64_t low, const std::vector<Integer>& coeffs);

  const std::map<std::int64_t, Integer>& terms() const noexcept { return terms_; }
  Integer coefficient(std::int64_t n) const;
  void set(std::int64_t n, const Integer& c);
  bool is_zero() const noexcept { return terms_.empty(); }
  /// ord_t; throws std::logic_error on the zero polynomial.
  std::int64_t min_degree() const;
  std::int64_t max_degree() const;

  TPoly shifted(std::int64_t k) const;
  TPoly scaled(const Integer& c) const;

  friend TPoly operator+(const TPoly& a, const TPoly& b);
  friend TPoly operator-(const TPoly& a, const TPoly& b);
  friend TPoly operator-(const TPoly& a);
  friend TPoly operator*(const TPoly& a, const TPoly& b);
  friend bool operator==(const TPoly&, const TPoly&) = default;

 private:
  std::map<std::int64_t, Integer> terms_;
};

std::string to_string(const TPoly& p);

/// t = eta(tau)^2 eta(10 tau)^4 / (eta(2 tau)^4 eta(5 tau)^2), level 10.
EtaQuotient hauptmodul_t();
/// The multipliers of U_A and U_B.
EtaQuotient multiplier_a();
EtaQuotient multiplier_b();
/// The prefactors P_A (order 0) and P_B (order -1), level 20.
LinearCombination prefactor_pa();
LinearCombination prefactor_pb();

/// sigma_0 .. sigma_4 of the degree-5 modular equation between t(tau) and t(5 tau).
const std::array<TPoly, 5>& sigma_set();

/// U_5 on an integer-exponent series (alias of u_p with p = 5 for any p).
Series u_p_series(const Series& f, std::int64_t p);
/// U_5(A f).
Series u_a(const Series& f);
/// U_5(B f).
Series u_b(const Series& f);

/// p(t) as a q-series known below q^prec.
Series evaluate(const TPoly& p, std::int64_t prec, const EtaQuotient& t = hauptmodul_t());

struct ReduceOptions {
  /// Terms of degree beyond this make a nonzero residual an error.
  std::optional<std::int64_t> max_degree;
  /// Degrees within this many exponents of the precision are not trusted.
  std::int64_t margin = 10;
};

/// The Laurent polynomial p with s = v p(t) and ord_t(p) >= floor_t_order,
/// found by leading-term elimination of s / v.
TPoly reduce_to_tpoly(const Series& s, const Series& v, std::int64_t floor_t_order,
                      const ReduceOptions& options = {}, const EtaQuotient& t = hauptmodul_t());

/// prev[j] = p_{k+j-5}; returns p_k = -sum_j sigma_j p_{k+j-5}.
TPoly fundamental_step(const std::array<TPoly, 5>& prev);

/// Extends a family given on k = -4 .. 0 up to k = kmax.
std::map<std::int64_t, TPoly> extend_family(const std::map<std::int64_t, TPoly>& seeds, std::int64_t kmax);

/// The images U_A(P_A t^k) = P_B p_k(t) (first) and U_B(P_B t^k) = P_A p_k(t)
/// (second) for k = -4 .. 0.
struct InitialTables {
  std::map<std::int64_t, TPoly> group_a;
  std::map<std::int64_t, TPoly> group_b;
};

/// Hard-coded seed polynomials. With certify set, each one is proven by the
/// U_p prover and checked as a series identity (once per process); throws
/// CertificationFailed if either check fails.
const InitialTables& initial_tables(bool certify = true);

using ValuationLedger = std::map<std::pair<std::int64_t, std::int64_t>, int>;

/// nu_5 of every coefficient of a family; zero maps to kInfiniteValuation.
ValuationLedger valuation_ledger(const std::map<std::int64_t, TPoly>& family, unsigned long p = 5);
/// True iff every entry meets bound(k, n).
bool check_valuation_bounds(const ValuationLedger& ledger,
                            const std::function<std::int64_t(std::int64_t, std::int64_t)>& bound);

/// Proves the modular equation on Gamma0(50) and checks it as a series
/// identity to 200 terms; throws CertificationFailed when the two disagree.
ProofCertificate verify_modular_equation();

}  // namespace qcert
