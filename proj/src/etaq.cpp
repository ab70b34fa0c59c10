#include "qcert/etaq.hpp"

#include <sstream>

#include "qcert/errors.hpp"
#include "qcert/products.hpp"

namespace qcert {

namespace {

// power-th power of J_b (a == 0) or J_{a,b}.
struct JPower {
  std::int64_t a;
  std::int64_t b;
  std::int64_t power;
};

void apply_j_powers(std::vector<Integer>& v, std::int64_t grid, const std::vector<JPower>& factors) {
  const std::int64_t n = static_cast<std::int64_t>(v.size());
  auto factor = [&](const JPower& j) {
    return j.a == 0 ? euler_factor(j.b * grid, n) : triple_factor(j.a * grid, j.b * grid, n);
  };
  for (const auto& j : factors)
    if (j.power > 0) apply_power(v, factor(j), j.power);
  for (const auto& j : factors)
    if (j.power < 0) apply_power(v, factor(j), j.power);
}

std::vector<JPower> j_powers(const EtaQuotient& f) {
  std::vector<JPower> out;
  for (auto [d, m] : f.exps)
    if (m != 0) out.push_back({0, d, m});
  return out;
}

std::vector<JPower> j_powers(const GeneralizedEtaQuotient& f) {
  std::vector<JPower> out;
  for (const auto& [key, r] : f.exps) {
    auto [delta, g] = key;
    if (r == 0) continue;
    if (2 * g == delta) {
      // eta_{delta,delta/2} = q^(-delta/24) ((q^(delta/2); q^delta)_inf)^2.
      const std::int64_t k = to_int64(Rational(2 * r));
      out.push_back({0, delta / 2, k});
      out.push_back({0, delta, -k});
    } else {
      const std::int64_t k = to_int64(r);
      out.push_back({g, delta, k});
      out.push_back({0, delta, -k});
    }
  }
  return out;
}

Series expand_j_powers(const std::vector<JPower>& factors, const Rational& shift, const Rational& prec) {
  const Integer count = ceil(prec - shift);
  if (count <= 0) return Series::zero(prec);
  const std::int64_t n = to_int64(count);
  std::vector<Integer> v(static_cast<std::size_t>(n));
  v[0] = 1;
  apply_j_powers(v, 1, factors);
  return Series::from_coefficients(std::move(v), 0, n, 1).shifted(shift).truncated(prec);
}

}  // namespace

void EtaQuotient::validate() const {
  if (level < 1) throw InvalidProduct("level must be positive");
  for (auto [d, m] : exps) {
    (void)m;
    if (d < 1 || level % d != 0)
      throw InvalidProduct("eta index " + std::to_string(d) + " does not divide level " + std::to_string(level));
  }
}

EtaQuotient EtaQuotient::normalized() const {
  EtaQuotient out{level, {}};
  for (auto [d, m] : exps)
    if (m != 0) out.exps[d] = m;
  return out;
}

Rational EtaQuotient::infinity_order() const {
  std::int64_t s = 0;
  for (auto [d, m] : exps) s += d * m;
  return make_rational(s, 24);
}

EtaQuotient EtaQuotient::at_level(std::int64_t n) const {
  if (n % level != 0) throw InvalidProduct("new level must be a multiple of the old one");
  return EtaQuotient{n, exps};
}

EtaQuotient EtaQuotient::dilated(std::int64_t k) const {
  EtaQuotient out{level * k, {}};
  for (auto [d, m] : exps) out.exps[d * k] = m;
  return out;
}

EtaQuotient operator*(const EtaQuotient& a, const EtaQuotient& b) {
  EtaQuotient out{lcm64(a.level, b.level), a.exps};
  for (auto [d, m] : b.exps) out.exps[d] += m;
  return out.normalized();
}

EtaQuotient inverse(const EtaQuotient& a) {
  EtaQuotient out = a;
  for (auto& [d, m] : out.exps) m = -m;
  return out;
}

void GeneralizedEtaQuotient::validate() const {
  if (level < 1) throw InvalidProduct("level must be positive");
  for (const auto& [key, r] : exps) {
    auto [delta, g] = key;
    if (delta < 1 || level % delta != 0)
      throw InvalidProduct("delta " + std::to_string(delta) + " does not divide level " + std::to_string(level));
    if (!(0 < g && g < delta))
      throw InvalidProduct("need 0 < g < delta for eta_{" + std::to_string(delta) + "," + std::to_string(g) + "}");
    if (2 * g == delta) {
      if (!is_integral(Rational(2 * r))) throw InvalidProduct("exponent of eta_{delta,delta/2} must be in Z/2");
    } else if (!is_integral(r)) {
      throw InvalidProduct("exponent of eta_{" + std::to_string(delta) + "," + std::to_string(g) +
                           "} must be an integer");
    }
  }
}

GeneralizedEtaQuotient GeneralizedEtaQuotient::normalized() const {
  GeneralizedEtaQuotient out{level, {}};
  for (const auto& [key, r] : exps)
    if (r != 0) out.exps[key] = r;
  return out;
}

Rational GeneralizedEtaQuotient::infinity_order() const {
  Rational s = 0;
  for (const auto& [key, r] : exps) {
    auto [delta, g] = key;
    s += r * make_rational(delta, 2) * bernoulli_p2(make_rational(g, delta));
  }
  return s;
}

std::int64_t product_level(const Product& p) {
  return std::visit([](const auto& f) { return f.level; }, p);
}

Rational infinity_order(const Product& p) {
  return std::visit([](const auto& f) { return f.infinity_order(); }, p);
}

Series eta_expand(std::int64_t d, const Rational& prec) { return expand(EtaQuotient{d, {{d, 1}}}, prec); }

Series expand(const EtaQuotient& f, const Rational& prec) {
  f.validate();
  return expand_j_powers(j_powers(f), f.infinity_order(), prec);
}

Series gen_expand(const GeneralizedEtaQuotient& f, const Rational& prec) {
  f.validate();
  return expand_j_powers(j_powers(f), f.infinity_order(), prec);
}

Series expand(const Product& p, const Rational& prec) {
  return std::visit(
      [&](const auto& f) -> Series {
        if constexpr (std::is_same_v<std::decay_t<decltype(f)>, EtaQuotient>)
          return expand(f, prec);
        else
          return gen_expand(f, prec);
      },
      p);
}

Series jb(std::int64_t b, std::int64_t prec) {
  return Series::from_coefficients(jb_coefficients(b, prec), 0, prec, 1);
}

Series jab(std::int64_t a, std::int64_t b, std::int64_t prec) {
  return Series::from_coefficients(jab_coefficients(a, b, prec), 0, prec, 1);
}

Series expand_j(const std::map<std::int64_t, std::int64_t>& jexps, std::int64_t prec) {
  std::vector<JPower> factors;
  for (auto [d, m] : jexps)
    if (m != 0) factors.push_back({0, d, m});
  return expand_j_powers(factors, 0, Rational(Integer(static_cast<long>(prec))));
}

Series multiply_by_j(const Series& f, const std::map<std::int64_t, std::int64_t>& jexps) {
  if (f.is_zero()) return f;
  std::vector<JPower> factors;
  for (auto [d, m] : jexps)
    if (m != 0) factors.push_back({0, d, m});
  const std::int64_t count = f.precision_numerator() - f.low();
  auto v = f.dense_on_grid(f.grid(), f.low(), count);
  apply_j_powers(v, f.grid(), factors);
  return Series::from_coefficients(std::move(v), f.low(), f.precision_numerator(), f.grid());
}

Series multiply_by_eta(const Series& f, const EtaQuotient& e) {
  return multiply_by_j(f, e.exps).shifted(e.infinity_order());
}

std::pair<Series, Integer> expand_combination_scaled(const LinearCombination& l, const Rational& prec) {
  Integer den = 1;
  for (const auto& t : l.terms) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coef.get_den_mpz_t());
  Series sum = Series::zero(prec);
  bool first = true;
  for (const auto& t : l.terms) {
    Rational c = t.coef * Rational(den);
    Series s = expand(t.product, prec - t.shift).shifted(t.shift).scaled(c.get_num());
    sum = first ? s : sum + s;
    first = false;
  }
  return {sum, den};
}

Series expand_combination(const LinearCombination& l, const Rational& prec) {
  auto [s, den] = expand_combination_scaled(l, prec);
  if (den == 1) return s;
  std::vector<Integer> c(s.coefficients().begin(), s.coefficients().end());
  for (auto& x : c) {
    if (!mpz_divisible_p(x.get_mpz_t(), den.get_mpz_t()))
      throw InvalidProduct("linear combination does not have integer coefficients");
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), den.get_mpz_t());
  }
  return Series::from_coefficients(std::move(c), s.low(), s.precision_numerator(), s.grid());
}

std::string to_string(const EtaQuotient& f) {
  std::ostringstream out;
  out << "eta{";
  bool first = true;
  for (auto [d, m] : f.exps) {
    out << (first ? "" : ",") << d << ":" << m;
    first = false;
  }
  out << "}";
  return out.str();
}

std::string to_string(const GeneralizedEtaQuotient& f) {
  std::ostringstream out;
  out << "geta{";
  bool first = true;
  for (const auto& [key, r] : f.exps) {
    out << (first ? "" : ",") << "[" << key.first << "," << key.second << "]:" << r.get_str();
    first = false;
  }
  out << "}";
  return out.str();
}

}  // namespace qcert
