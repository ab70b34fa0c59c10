#include "qcert/orders.hpp"

#include "qcert/errors.hpp"

namespace qcert {

ModularityCheck newman_check(const EtaQuotient& f) {
  f.validate();
  ModularityCheck out;
  std::int64_t sum = 0, weighted = 0, coweighted = 0;
  std::map<std::int64_t, std::int64_t> prime_exps;
  for (auto [d, m] : f.exps) {
    sum += m;
    weighted += d * m;
    coweighted += (f.level / d) * m;
    std::int64_t rest = d;
    for (auto p : prime_factors(d)) {
      int v = 0;
      while (rest % p == 0) {
        rest /= p;
        ++v;
      }
      prime_exps[p] += v * (m < 0 ? -m : m);
    }
  }
  if (sum != 0) out.violations.push_back("sum of exponents is " + std::to_string(sum) + ", not 0");
  if (mod(weighted, 24) != 0)
    out.violations.push_back("sum d*m_d = " + std::to_string(weighted) + " is not divisible by 24");
  if (mod(coweighted, 24) != 0)
    out.violations.push_back("sum (N/d)*m_d = " + std::to_string(coweighted) + " is not divisible by 24");
  for (auto [p, e] : prime_exps) {
    if (e % 2 != 0) {
      out.violations.push_back("prod d^|m_d| is not a square (odd power of " + std::to_string(p) + ")");
      break;
    }
  }
  out.modular = out.violations.empty();
  return out;
}

bool newman_is_modular(const EtaQuotient& f) { return newman_check(f).modular; }

ModularityCheck robins_check(const GeneralizedEtaQuotient& f) {
  f.validate();
  ModularityCheck out;
  Rational first = 0, second = 0;
  for (const auto& [key, r] : f.exps) {
    auto [delta, g] = key;
    first += Rational(Integer(static_cast<long>(delta))) * bernoulli_p2(make_rational(g, delta)) * r;
    second += make_rational(f.level / delta, 6) * r;
  }
  auto even_integer = [](const Rational& x) { return is_integral(x) && mpz_even_p(x.get_num_mpz_t()); };
  if (!even_integer(first))
    out.violations.push_back("sum delta*P2(g/delta)*r = " + first.get_str() + " is not an even integer");
  if (!even_integer(second))
    out.violations.push_back("sum (N/delta)*P2(0)*r = " + second.get_str() + " is not an even integer");
  out.modular = out.violations.empty();
  return out;
}

bool robins_is_modular(const GeneralizedEtaQuotient& f) { return robins_check(f).modular; }

Rational ligozat_ord_unchecked(const EtaQuotient& f, const Cusp& z) {
  Rational s = 0;
  for (auto [d, m] : f.exps) {
    const std::int64_t e = z.c == 0 ? d : gcd64(d, z.c);
    s += make_rational(e * e * m, 24 * d);
  }
  return s;
}

Rational ligozat_ord(const EtaQuotient& f, const Cusp& z) {
  auto check = newman_check(f);
  if (!check.modular) throw NotModular(to_string(f) + " is not modular on Gamma0(" + std::to_string(f.level) +
                                       "): " + check.violations.front());
  return ligozat_ord_unchecked(f, z);
}

Rational robins_ord(std::int64_t delta, std::int64_t g, const Cusp& z) {
  const std::int64_t eps = z.c == 0 ? delta : gcd64(delta, z.c);
  return make_rational(eps * eps, 2 * delta) * bernoulli_p2(make_rational(z.a * g, eps));
}

Rational gen_ord(const GeneralizedEtaQuotient& f, const Cusp& z) {
  Rational s = 0;
  for (const auto& [key, r] : f.exps) s += r * robins_ord(key.first, key.second, z);
  return s;
}

Rational invariant_order(const Product& p, const Cusp& z) {
  if (auto e = std::get_if<EtaQuotient>(&p)) return ligozat_ord_unchecked(*e, z);
  return gen_ord(std::get<GeneralizedEtaQuotient>(p), z);
}

OrderReport order_report(const Product& p, const CuspTable& table, const std::string& term) {
  if (table.group.level % product_level(p) != 0)
    throw InvalidProduct("product level " + std::to_string(product_level(p)) + " does not divide group level " +
                         std::to_string(table.group.level));
  OrderReport report{term, table.group, {}};
  for (const auto& entry : table.entries) {
    Rational ord = invariant_order(p, entry.cusp);
    report.rows.push_back({entry.cusp, entry.width, ord, ord * Rational(Integer(static_cast<long>(entry.width)))});
  }
  return report;
}

}  // namespace qcert
