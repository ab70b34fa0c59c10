#pragma once

#include <string>
#include <vector>

#include "qcert/arith.hpp"
#include "qcert/cusps.hpp"
#include "qcert/etaq.hpp"

namespace qcert {

struct ModularityCheck {
  bool modular = true;
  /// Human-readable list of the failed conditions.
  std::vector<std::string> violations;
};

/// Newman's four conditions for an eta-quotient on Gamma0(level).
ModularityCheck newman_check(const EtaQuotient& f);
bool newman_is_modular(const EtaQuotient& f);

/// Robins' sufficient conditions for a generalized eta-quotient on Gamma1(level).
/// A failure means modularity is unknown.
ModularityCheck robins_check(const GeneralizedEtaQuotient& f);
bool robins_is_modular(const GeneralizedEtaQuotient& f);

/// Invariant order sum_d gcd(d, c)^2 m_d / (24 d) at a/c; throws NotModular.
Rational ligozat_ord(const EtaQuotient& f, const Cusp& z);
/// Same formula without the modularity gate.
Rational ligozat_ord_unchecked(const EtaQuotient& f, const Cusp& z);

/// eps^2 / (2 delta) P2(a g / eps), eps = gcd(delta, c).
Rational robins_ord(std::int64_t delta, std::int64_t g, const Cusp& z);
Rational gen_ord(const GeneralizedEtaQuotient& f, const Cusp& z);

Rational invariant_order(const Product& p, const Cusp& z);

struct OrderRow {
  Cusp cusp;
  std::int64_t width = 1;
  Rational ord;
  /// width * ord.
  Rational ORD;
};

struct OrderReport {
  std::string term;
  Group group;
  std::vector<OrderRow> rows;
};

/// Orders of p at every cusp of the table. The product's level must divide the group level.
OrderReport order_report(const Product& p, const CuspTable& table, const std::string& term = "");

}  // namespace qcert
