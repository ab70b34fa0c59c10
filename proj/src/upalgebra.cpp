#include "qcert/upalgebra.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

#include "qcert/errors.hpp"
#include "qcert/identities.hpp"
#include "qcert/products.hpp"

namespace qcert {

TPoly TPoly::monomial(const Integer& c, std::int64_t n) {
  TPoly p;
  p.set(n, c);
  return p;
}

TPoly TPoly::from_coefficients(std::int64_t low, const std::vector<Integer>& coeffs) {
  TPoly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.set(low + static_cast<std::int64_t>(i), coeffs[i]);
  return p;
}

Integer TPoly::coefficient(std::int64_t n) const {
  auto it = terms_.find(n);
  return it == terms_.end() ? Integer(0) : it->second;
}

void TPoly::set(std::int64_t n, const Integer& c) {
  if (c == 0)
    terms_.erase(n);
  else
    terms_[n] = c;
}

std::int64_t TPoly::min_degree() const {
  if (terms_.empty()) throw std::logic_error("degree of the zero polynomial");
  return terms_.begin()->first;
}

std::int64_t TPoly::max_degree() const {
  if (terms_.empty()) throw std::logic_error("degree of the zero polynomial");
  return terms_.rbegin()->first;
}

TPoly TPoly::shifted(std::int64_t k) const {
  TPoly out;
  for (const auto& [n, c] : terms_) out.terms_[n + k] = c;
  return out;
}

TPoly TPoly::scaled(const Integer& c) const {
  TPoly out;
  if (c == 0) return out;
  for (const auto& [n, x] : terms_) out.terms_[n] = x * c;
  return out;
}

TPoly operator+(const TPoly& a, const TPoly& b) {
  TPoly out = a;
  for (const auto& [n, c] : b.terms_) out.set(n, out.coefficient(n) + c);
  return out;
}

TPoly operator-(const TPoly& a) { return a.scaled(-1); }

TPoly operator-(const TPoly& a, const TPoly& b) { return a + (-b); }

TPoly operator*(const TPoly& a, const TPoly& b) {
  std::map<std::int64_t, Integer> acc;
  for (const auto& [n, x] : a.terms_)
    for (const auto& [m, y] : b.terms_) mpz_addmul(acc[n + m].get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  TPoly out;
  for (const auto& [n, c] : acc) out.set(n, c);
  return out;
}

std::string to_string(const TPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [n, c] = *it;
    Integer mag = abs(c);
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    if (n == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << "t";
    if (n != 1) out << "^" << n;
  }
  return out.str();
}

EtaQuotient hauptmodul_t() { return EtaQuotient{10, {{1, 2}, {2, -4}, {5, -2}, {10, 4}}}; }
EtaQuotient multiplier_a() { return EtaQuotient{50, {{1, 4}, {2, -2}, {25, -4}, {50, 2}}}; }
EtaQuotient multiplier_b() { return EtaQuotient{25, {{1, -1}, {25, 1}}}; }

LinearCombination prefactor_pa() {
  return {{{1, 0, EtaQuotient{20, {{1, -5}, {2, 6}, {4, -3}, {5, 1}, {10, 2}, {20, -1}}}},
           {-4, 0, EtaQuotient{20, {{1, -2}, {2, -3}, {4, 3}, {5, 2}, {10, -1}, {20, 1}}}}}};
}

LinearCombination prefactor_pb() {
  return {{{1, 0, EtaQuotient{20, {{1, 1}, {2, 2}, {4, -1}, {5, -5}, {10, 6}, {20, -3}}}},
           {4, 0, EtaQuotient{20, {{1, 2}, {2, -1}, {4, 1}, {5, -2}, {10, -3}, {20, 3}}}}}};
}

const std::array<TPoly, 5>& sigma_set() {
  static const std::array<TPoly, 5> sigma = [] {
    auto poly = [](std::initializer_list<std::pair<std::int64_t, long>> terms) {
      TPoly p;
      for (auto [n, c] : terms) p.set(n, Integer(c));
      return p;
    };
    return std::array<TPoly, 5>{
        poly({{1, -1}}),
        poly({{2, -5}, {1, 10}}),
        poly({{3, -25}, {2, 50}, {1, -35}}),
        poly({{4, -125}, {3, 250}, {2, -175}, {1, 60}}),
        poly({{5, -625}, {4, 1250}, {3, -875}, {2, 300}, {1, -55}}),
    };
  }();
  return sigma;
}

Series u_p_series(const Series& f, std::int64_t p) { return u_p(f, p); }

Series u_a(const Series& f) { return u_p(multiply_by_eta(f, multiplier_a()), 5); }

Series u_b(const Series& f) { return u_p(multiply_by_eta(f, multiplier_b()), 5); }

namespace {

std::map<std::int64_t, std::int64_t> scaled_exps(const EtaQuotient& e, std::int64_t k) {
  std::map<std::int64_t, std::int64_t> out;
  for (auto [d, m] : e.exps) out[d] = m * k;
  return out;
}

void require_unit_order(const EtaQuotient& t) {
  if (t.infinity_order() != 1) throw GridError("the Hauptmodul must have order 1 at infinity");
}

}  // namespace

Series evaluate(const TPoly& p, std::int64_t prec, const EtaQuotient& t) {
  require_unit_order(t);
  if (p.is_zero()) return Series::zero(Rational(Integer(static_cast<long>(prec))));
  const std::int64_t lo = p.min_degree(), hi = p.max_degree();
  const std::int64_t n = prec - lo;
  if (n <= 0) return Series::zero(Rational(Integer(static_cast<long>(prec))));
  // p(t) = q^lo u^lo H with t = q u and H = sum_i c_(lo+i) (q u)^i.
  const Series u = expand_j(t.exps, n);
  const std::vector<Integer> uv(u.coefficients().begin(), u.coefficients().end());
  std::vector<Integer> r(static_cast<std::size_t>(n));
  r[0] = p.coefficient(hi);
  for (std::int64_t i = hi - 1; i >= lo; --i) {
    auto prod = detail::mul_truncated(r, uv, static_cast<std::size_t>(n - 1));
    r[0] = p.coefficient(i);
    for (std::size_t j = 0; j + 1 < r.size(); ++j) r[j + 1] = std::move(prod[j]);
  }
  Series h = Series::from_coefficients(std::move(r), 0, n, 1);
  if (lo != 0) h = multiply_by_j(h, scaled_exps(t, lo));
  return h.shifted(Rational(Integer(static_cast<long>(lo))));
}

TPoly reduce_to_tpoly(const Series& s, const Series& v, std::int64_t floor_t_order, const ReduceOptions& options,
                      const EtaQuotient& t) {
  require_unit_order(t);
  if (s.is_zero()) return {};
  Series w = s * invert(v);
  if (w.grid() != 1) throw GridError("quotient s/v does not have integer exponents");
  if (w.is_zero()) return {};
  if (w.low() < floor_t_order)
    throw ResidualNonzero("s/v has a q^" + std::to_string(w.low()) + " term below t-order " +
                          std::to_string(floor_t_order));
  const std::int64_t prec = w.precision_numerator();
  const std::int64_t len = prec - floor_t_order;
  auto wv = w.dense_on_grid(1, floor_t_order, len);
  // tp holds t^n / q^n, starting at n = floor_t_order.
  std::vector<Integer> tp(static_cast<std::size_t>(len));
  tp[0] = 1;
  std::vector<std::pair<SparseFactor, std::int64_t>> u_factors;
  for (auto [d, m] : t.exps) u_factors.emplace_back(euler_factor(d, len), m);
  auto times_u = [&](std::vector<Integer>& v, std::int64_t power) {
    for (const auto& [f, m] : u_factors)
      if (m * power > 0) apply_power(v, f, m * power);
    for (const auto& [f, m] : u_factors)
      if (m * power < 0) apply_power(v, f, m * power);
  };
  if (floor_t_order != 0) times_u(tp, floor_t_order);
  const std::int64_t limit = prec - 1 - options.margin;
  TPoly result;
  std::size_t nonzero_from = 0;
  for (std::int64_t n = floor_t_order; n < prec; ++n) {
    const std::size_t idx = static_cast<std::size_t>(n - floor_t_order);
    nonzero_from = std::max(nonzero_from, idx);
    while (nonzero_from < wv.size() && wv[nonzero_from] == 0) ++nonzero_from;
    if (nonzero_from == wv.size()) break;
    const Integer c = wv[idx];
    if (c != 0) {
      if (n > limit)
        throw NonTerminating("t-expansion reaches degree " + std::to_string(n) + " within " +
                             std::to_string(options.margin) + " of the precision " + std::to_string(prec));
      if (options.max_degree && n > *options.max_degree)
        throw ResidualNonzero("nonzero residual beyond degree bound " + std::to_string(*options.max_degree));
      result.set(n, c);
      for (std::size_t j = 0; j < tp.size(); ++j)
        if (tp[j] != 0) mpz_submul(wv[idx + j].get_mpz_t(), c.get_mpz_t(), tp[j].get_mpz_t());
    }
    tp.pop_back();
    times_u(tp, 1);
  }
  return result;
}

TPoly fundamental_step(const std::array<TPoly, 5>& prev) {
  TPoly out;
  const auto& sigma = sigma_set();
  for (std::size_t j = 0; j < 5; ++j) out = out - sigma[j] * prev[j];
  return out;
}

std::map<std::int64_t, TPoly> extend_family(const std::map<std::int64_t, TPoly>& seeds, std::int64_t kmax) {
  auto family = seeds;
  for (std::int64_t k = -4; k <= 0; ++k)
    if (!family.count(k)) throw std::invalid_argument("seed family needs k = -4 .. 0");
  for (std::int64_t k = 1; k <= kmax; ++k) {
    std::array<TPoly, 5> prev;
    for (std::int64_t j = 0; j < 5; ++j) prev[static_cast<std::size_t>(j)] = family.at(k + j - 5);
    family[k] = fundamental_step(prev);
  }
  return family;
}

namespace {

TPoly poly(std::initializer_list<std::pair<std::int64_t, long>> terms) {
  TPoly p;
  for (auto [n, c] : terms) p.set(n, Integer(c));
  return p;
}

InitialTables seed_tables() {
  InitialTables t;
  t.group_a[0] = poly({{5, 625}, {4, -875}, {3, 350}, {2, -50}, {1, 1}});
  t.group_a[-1] = poly({{1, -1}});
  t.group_a[-2] = poly({{2, -5}});
  t.group_a[-3] = poly({{3, -25}});
  t.group_a[-4] = poly({{4, -125}});
  t.group_b[0] = poly({{0, 1}});
  t.group_b[-1] = poly({{1, -5}, {0, 2}});
  t.group_b[-2] = poly({{2, 25}, {1, -40}, {0, 8}});
  t.group_b[-3] = poly({{3, 125}, {1, -170}, {0, 34}});
  t.group_b[-4] = poly({{4, -625}, {3, 2000}, {2, -900}, {1, -640}, {0, 150}});
  return t;
}

// U(P t^k) against Q p(t) to 60 terms through the series engine.
bool seed_series_check(char group, std::int64_t k, const TPoly& p) {
  constexpr std::int64_t terms = 60;
  const bool a = group == 'A';
  const auto& src = a ? prefactor_pa() : prefactor_pb();
  const auto& dst = a ? prefactor_pb() : prefactor_pa();
  const Rational in_prec(Integer(static_cast<long>(5 * terms)));
  Series tk = evaluate(TPoly::monomial(1, k), 5 * terms - k);
  Series lhs_in = expand_combination(src, in_prec) * tk;
  Series lhs = a ? u_a(lhs_in) : u_b(lhs_in);
  Series rhs = expand_combination(dst, Rational(Integer(static_cast<long>(terms)))) * evaluate(p, terms + 2);
  const Series diff = lhs - rhs;
  return diff.is_zero() && diff.precision() >= Rational(50);
}

}  // namespace

const InitialTables& initial_tables(bool certify) {
  static const InitialTables tables = seed_tables();
  if (!certify) return tables;
  static std::once_flag once;
  std::call_once(once, [] {
    for (char group : {'A', 'B'}) {
      const auto& family = group == 'A' ? tables.group_a : tables.group_b;
      for (const auto& [k, p] : family) {
        IdentitySpec spec = seed_identity_spec(group, k, p);
        auto cert = prove_up_identity(spec.prime, spec.group.level, spec.up_terms, spec.terms);
        if (cert.verdict != Verdict::Proven)
          throw CertificationFailed(spec.name + ": valence-formula check gave " + to_string(cert.verdict));
        if (!seed_series_check(group, k, p)) throw CertificationFailed(spec.name + ": series check failed");
      }
    }
  });
  return tables;
}

ValuationLedger valuation_ledger(const std::map<std::int64_t, TPoly>& family, unsigned long p) {
  ValuationLedger ledger;
  for (const auto& [k, poly] : family)
    for (const auto& [n, c] : poly.terms()) ledger[{k, n}] = valuation(c, p);
  return ledger;
}

bool check_valuation_bounds(const ValuationLedger& ledger,
                            const std::function<std::int64_t(std::int64_t, std::int64_t)>& bound) {
  for (const auto& [key, v] : ledger)
    if (v != kInfiniteValuation && v < bound(key.first, key.second)) return false;
  return true;
}

ProofCertificate verify_modular_equation() {
  IdentitySpec spec = modular_equation_spec();
  ProofCertificate cert = prove_eta_identity(spec.terms, spec.group.level);
  constexpr std::int64_t terms = 200;
  const Series t = expand(hauptmodul_t(), Rational(terms + 1));
  const Series t5 = t.dilated(5);
  Series residual = pow(t, 5);
  Series tj = Series::constant(1, Rational(terms + 5));
  for (std::size_t j = 0; j < 5; ++j) {
    Series s = Series::zero(Rational(5 * terms));
    for (const auto& [l, c] : sigma_set()[j].terms()) s = s + pow(t5, l).scaled(c);
    residual = residual + s * tj;
    tj = tj * t;
  }
  if (!residual.is_zero() || residual.precision() < Rational(terms))
    throw CertificationFailed("modular equation fails as a series identity below q^" + std::to_string(terms));
  cert.notes.push_back("also checked as a series identity below q^" + std::to_string(terms));
  return cert;
}

}  // namespace qcert
