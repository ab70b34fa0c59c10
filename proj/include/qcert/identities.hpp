#pragma once

// The concrete identities reproduced by the suite, built in code. The
// matching text files under identities/ must parse to the same specs.

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "qcert/spec_format.hpp"
#include "qcert/upalgebra.hpp"

namespace qcert {

/// l with every product multiplied by e.
LinearCombination times(const LinearCombination& l, const EtaQuotient& e);
/// v p(t) expanded into eta-quotient terms.
LinearCombination times_tpoly(const LinearCombination& v, const TPoly& p, const EtaQuotient& t = hauptmodul_t());

/// 1 + sum_j sigma_j(5 tau) t^(j-5) = 0 on Gamma0(50).
IdentitySpec modular_equation_spec(const std::array<TPoly, 5>& sigma = sigma_set());
/// U_5(g) = 5 f1 + 2 f2 with g on Gamma0(100).
IdentitySpec u5_example_spec();
/// The ten-term generalized eta identity on Gamma1(20) behind the 5-dissection of f(q).
IdentitySpec theta_identity_spec();
/// U_A(P_A t^k) = P_B p(t) (group 'A') or U_B(P_B t^k) = P_A p(t) (group 'B').
IdentitySpec seed_identity_spec(char group, std::int64_t k, const TPoly& p);
/// The ten seed identities in the order A0..A-4, B0..B-4.
std::vector<IdentitySpec> seed_identity_specs();
/// Every identity proven by the suite.
std::vector<IdentitySpec> standard_identities();

/// c q^shift prod_d J_d^{m_d} with integer shift.
struct JTerm {
  Integer coef;
  std::int64_t shift = 0;
  std::map<std::int64_t, std::int64_t> jexps;
};
Series j_combination(const std::vector<JTerm>& terms, std::int64_t prec);

}  // namespace qcert
