#pragma once

// Rank-parity function f(q) = sum a_f(n) q^n, its 5- and 7-dissection
// identities, the L_alpha iteration and the congruence scans built on them.

#include <cstdint>
#include <string>
#include <vector>

#include "qcert/arith.hpp"
#include "qcert/series.hpp"
#include "qcert/upalgebra.hpp"

namespace qcert {

/// Exact a_f(0 .. nmax).
struct RankParityTable {
  std::int64_t nmax = -1;
  std::vector<Integer> values;

  /// a_f(n), zero for n < 0; throws TableTooSmall past nmax.
  Integer at(std::int64_t n) const;
  /// a_f(x) for rational x: zero unless x is a nonnegative integer.
  Integer at(const Rational& x) const;
};

/// a_f(n) mod m for 0 <= n <= nmax, values in [0, m).
struct ResidueTable {
  std::int64_t modulus = 1;
  std::int64_t nmax = -1;
  std::vector<std::int64_t> values;

  std::int64_t at(std::int64_t n) const;
};

/// From (1/(q)_inf) (1 + 4 sum_{m>=1} (-1)^m q^{m(3m+1)/2} / (1 + q^m)).
RankParityTable af_table(std::int64_t nmax);
/// From sum q^(n^2) / (-q; q)_n^2, quadratic in nmax; used as an oracle.
std::vector<Integer> af_eulerian(std::int64_t nmax);
/// The bilateral route in machine integers modulo m.
ResidueTable af_residues(std::int64_t nmax, std::int64_t modulus);

/// c_f(n) = a_f(5n - 1) + a_f(n / 5).
Integer cf(const RankParityTable& table, std::int64_t n);
std::int64_t cf(const ResidueTable& table, std::int64_t n);

/// sum c_f(n) q^n against its two-term J-quotient below q^depth.
bool verify_af5id(std::int64_t depth);
/// sum (a_f(n/7) - a_f(7n - 2)) q^n against its J-quotient below q^depth.
bool verify_af7id(std::int64_t depth);
/// J_1 = J_25 (B(q^5) - q - q^2 / B(q^5)) with B = J_{2,5} / J_{1,5}, below q^depth.
bool verify_j1_dissection(std::int64_t depth);
/// J_1^6 / J_5^6 = B^5 - 11 q - q^2 / B^5 with B = B(q), below q^depth.
bool verify_b_identity(std::int64_t depth);

/// 24^-1 mod p^alpha in [0, p^alpha).
Integer delta(int alpha, std::int64_t p = 5);
/// lambda_0 = lambda_1 = 0 and lambda_{2a} = lambda_{2a+1} = 5 (1 - 25^a) / 24.
Integer lambda(int alpha);

/// L_0 = P_A, L_{2a+1} = U_A(L_{2a}), L_{2a+2} = U_B(L_{2a+1}) as q-series;
/// every returned series is known below q^depth. Throws PrecisionExhausted
/// when the prescribed input precision does not survive the alpha_max steps.
std::vector<Series> l_sequence(int alpha_max, std::int64_t depth);

/// ell(alpha, .) with L_alpha = P_A l(t) (even) or P_B l(t) (odd), found by
/// expanding each stage as a series and reducing it back to a t-polynomial.
std::vector<TPoly> l_polynomials(int alpha_max);
/// The same polynomials from ell(alpha+1, n) = sum_k ell(alpha, k) a(k, n) (or b).
std::vector<TPoly> l_polynomials_by_recursion(int alpha_max);

/// Lower bound for nu_5(ell(alpha, n)), alpha >= 1.
std::int64_t l_valuation_bound(int alpha, std::int64_t n);
/// Least admissible t-order of L_alpha: 2 for odd alpha >= 3, otherwise 1.
std::int64_t l_order_bound(int alpha);

struct LValuationRow {
  int alpha = 0;
  std::int64_t ord_t = 0;
  std::int64_t degree = 0;
  /// min over n of nu_5(ell(alpha, n)) - bound; kInfiniteValuation for the zero polynomial.
  std::int64_t slack = 0;
  /// Coefficients of L_alpha times the c_f normalizer matching c_f(5^alpha n + lambda_alpha).
  bool cf_consistent = false;
  std::int64_t cf_terms = 0;
  bool pass = false;
};

struct LValuationReport {
  std::vector<LValuationRow> rows;
  std::vector<TPoly> polynomials;
  bool routes_agree = false;
  bool pass = false;
  double seconds = 0;
};

/// Computes L_1 .. L_alpha_max both ways and checks the nu_5 bounds, the
/// t-orders and the c_f extraction on the first cf_terms coefficients.
LValuationReport verify_l_sequence_valuations(int alpha_max, std::int64_t cf_terms = 12);

/// nu_5(s(j, l)) >= floor((3l + j) / 4) for every coefficient of sigma_j.
bool check_sigma_valuations();
/// Seed polynomials k = -4 .. 0: group A against floor((3n - k - 2) / 4),
/// group B against floor((3n - k) / 4).
bool check_seed_valuations();
/// a(k, n) >= floor((3n - k) / 4) and b(k, n) >= floor((3n - k + 2) / 4) for 1 <= k <= kmax.
bool check_family_valuations(std::int64_t kmax);

struct CongruenceReport {
  std::string id;
  std::int64_t prime = 5;
  int alpha = 0;
  Integer modulus;
  std::int64_t n_min = 0;
  std::int64_t n_max = 0;
  std::vector<std::int64_t> failures;
  double seconds = 0;

  bool pass() const noexcept { return failures.empty(); }
};

/// a_f(5^a n + delta_a) + a_f(5^(a-2) n + delta_(a-2)) == 0 mod 5^floor(a/2), 0 <= n <= n_max, a >= 3.
CongruenceReport check_rank_parity_mod5(int alpha, std::int64_t n_max);
CongruenceReport check_rank_parity_mod5(int alpha, std::int64_t n_max, const ResidueTable& table);
/// a_f(7^a n + delta_a) - a_f(7^(a-2) n + delta_(a-2)) == 0 mod 7^floor((a-1)/2), a >= 3.
CongruenceReport check_rank_parity_mod7(int alpha, std::int64_t n_max);
CongruenceReport check_rank_parity_mod7(int alpha, std::int64_t n_max, const ResidueTable& table);
/// c_f(5^(2a) n + lambda_(2a)) == 0 mod 5^a (odd = false) or
/// c_f(5^(2a+1) n + lambda_(2a+1)) == 0 mod 5^(a+1) (odd = true), a >= 1.
CongruenceReport check_cf_congruence(int alpha, bool odd, std::int64_t n_max);
CongruenceReport check_cf_congruence(int alpha, bool odd, std::int64_t n_max, const ResidueTable& table);

/// Table size needed by each scan.
std::int64_t rank_parity_table_size(std::int64_t p, int alpha, std::int64_t n_max);
std::int64_t cf_table_size(int alpha, bool odd, std::int64_t n_max);

}  // namespace qcert
