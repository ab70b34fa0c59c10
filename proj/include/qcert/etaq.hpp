#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qcert/arith.hpp"
#include "qcert/series.hpp"

namespace qcert {

/// prod_{d | N} eta(d tau)^{m_d}. An empty map is the constant 1.
struct EtaQuotient {
  std::int64_t level = 1;
  std::map<std::int64_t, std::int64_t> exps;

  /// Throws InvalidProduct unless every key is a positive divisor of the level.
  void validate() const;
  /// Drops zero exponents.
  EtaQuotient normalized() const;
  /// Sum d m_d / 24, the order at infinity.
  Rational infinity_order() const;
  /// The same product at a multiple of the level.
  EtaQuotient at_level(std::int64_t n) const;
  /// f(k tau).
  EtaQuotient dilated(std::int64_t k) const;
  friend EtaQuotient operator*(const EtaQuotient& a, const EtaQuotient& b);
  friend EtaQuotient inverse(const EtaQuotient& a);
  friend bool operator==(const EtaQuotient&, const EtaQuotient&) = default;
};

/// prod eta_{delta,g}(tau)^{r_{delta,g}} with 0 < g < delta, delta | N.
/// r is a half-integer only when g = delta / 2.
struct GeneralizedEtaQuotient {
  std::int64_t level = 1;
  std::map<std::pair<std::int64_t, std::int64_t>, Rational> exps;

  void validate() const;
  GeneralizedEtaQuotient normalized() const;
  /// Sum r (delta / 2) P2(g / delta).
  Rational infinity_order() const;
  friend bool operator==(const GeneralizedEtaQuotient&, const GeneralizedEtaQuotient&) = default;
};

using Product = std::variant<EtaQuotient, GeneralizedEtaQuotient>;

/// coef * q^shift * product.
struct Term {
  Rational coef = 1;
  Rational shift = 0;
  Product product;
  friend bool operator==(const Term&, const Term&) = default;
};

struct LinearCombination {
  std::vector<Term> terms;
  friend bool operator==(const LinearCombination&, const LinearCombination&) = default;
};

std::int64_t product_level(const Product& p);
Rational infinity_order(const Product& p);

/// eta(d tau) on grid 24, known below q^prec.
Series eta_expand(std::int64_t d, const Rational& prec);
Series expand(const EtaQuotient& f, const Rational& prec);
Series gen_expand(const GeneralizedEtaQuotient& f, const Rational& prec);
Series expand(const Product& p, const Rational& prec);
/// J_b = (q^b; q^b)_inf below q^prec.
Series jb(std::int64_t b, std::int64_t prec);
/// J_{a,b} below q^prec.
Series jab(std::int64_t a, std::int64_t b, std::int64_t prec);
/// prod J_d^{m_d} below q^prec (integer exponents).
Series expand_j(const std::map<std::int64_t, std::int64_t>& jexps, std::int64_t prec);

/// f * (prod J_d^{m_d}) computed with sparse passes; keeps f's precision.
Series multiply_by_j(const Series& f, const std::map<std::int64_t, std::int64_t>& jexps);
/// f * e as a series, q^(sum d m_d / 24) included.
Series multiply_by_eta(const Series& f, const EtaQuotient& e);

/// Expansion of L * sum coef_i q^shift_i product_i, where L is the least
/// common denominator of the coefficients. Returns the series and L.
std::pair<Series, Integer> expand_combination_scaled(const LinearCombination& l, const Rational& prec);
/// Throws InvalidProduct if the combination has non-integral coefficients.
Series expand_combination(const LinearCombination& l, const Rational& prec);

std::string to_string(const EtaQuotient& f);
std::string to_string(const GeneralizedEtaQuotient& f);

}  // namespace qcert
