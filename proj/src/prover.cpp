#include "qcert/prover.hpp"

#include <algorithm>
#include <functional>

#include "qcert/errors.hpp"

namespace qcert {

namespace {

const EtaQuotient& require_eta(const Term& t, std::int64_t level, const char* what) {
  auto e = std::get_if<EtaQuotient>(&t.product);
  if (!e) throw InvalidProduct(std::string(what) + " terms must be eta-quotients");
  if (t.shift != 0) throw InvalidProduct("monomial shifts are only allowed in series identities");
  if (level % e->level != 0)
    throw InvalidProduct("term " + to_string(*e) + " has level " + std::to_string(e->level) +
                         " which does not divide " + std::to_string(level));
  return *e;
}

void require_newman(const EtaQuotient& e, std::int64_t level, std::vector<std::string>& checks) {
  EtaQuotient lifted = e.at_level(level);
  auto check = newman_check(lifted);
  if (!check.modular)
    throw NotModular(to_string(e) + " is not modular on Gamma0(" + std::to_string(level) + "): " +
                     check.violations.front());
  checks.push_back(to_string(e) + " is a modular function on Gamma0(" + std::to_string(level) + ")");
}

Rational rational_of(std::int64_t x) { return Rational(Integer(static_cast<long>(x))); }

Rational sum_of_minima(ProofCertificate& cert, bool cap_at_zero) {
  const std::size_t n = cert.cusps.entries.size();
  cert.minima.assign(n, 0);
  Rational b = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<Rational> m;
    if (cap_at_zero) m = 0;
    for (const auto& row : cert.orders)
      if (!m || row.values[i] < *m) m = row.values[i];
    cert.minima[i] = m.value_or(0);
    if (i != cert.infinity_index) b += cert.minima[i];
  }
  return b;
}

// expander(d) returns L * g known below q^d together with L.
void settle(ProofCertificate& cert, const ProverOptions& options,
            const std::function<std::pair<Series, Integer>(std::int64_t)>& expander) {
  cert.required_depth = to_int64(floor(-cert.B)) + 1;
  std::int64_t target = cert.required_depth + 1;
  if (options.depth_cap) {
    if (*options.depth_cap < cert.required_depth) {
      cert.verified_depth = *options.depth_cap;
      cert.verdict = Verdict::InsufficientPrecision;
      cert.notes.push_back("depth cap " + std::to_string(*options.depth_cap) + " is below the required depth");
      return;
    }
    target = std::min(target, *options.depth_cap);
  }
  auto [s, den] = expander(target);
  cert.verified_depth = target;
  if (s.precision() < rational_of(target)) {
    cert.verdict = Verdict::InsufficientPrecision;
    return;
  }
  if (!s.is_zero() && s.order() < rational_of(target)) {
    cert.verdict = Verdict::Counterexample;
    cert.counterexample_exponent = s.order();
    cert.counterexample_coefficient = Rational(s.leading_coefficient()) / Rational(den);
    return;
  }
  cert.verdict = Verdict::Proven;
}

Rational ord_at(const EtaQuotient& f, const Group& g, const Cusp& z) {
  return rational_of(width(g, z)) * ligozat_ord_unchecked(f, z);
}

LinearCombination scaled_combination(const LinearCombination& l, const Integer& den) {
  LinearCombination out = l;
  for (auto& t : out.terms) t.coef *= Rational(den);
  return out;
}

Integer common_denominator(const LinearCombination& a, const LinearCombination& b = {}) {
  Integer den = 1;
  for (const auto* l : {&a, &b})
    for (const auto& t : l->terms) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coef.get_den_mpz_t());
  return den;
}

bool is_constant(const Term& t) {
  if (t.shift != 0) return false;
  return std::visit([](const auto& f) { return f.exps.empty(); }, t.product);
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Proven:
      return "proven";
    case Verdict::Counterexample:
      return "counterexample";
    case Verdict::InsufficientPrecision:
      return "insufficient-precision";
  }
  return "unknown";
}

ProofCertificate prove_eta_identity(const LinearCombination& terms, std::int64_t level,
                                    const ProverOptions& options) {
  ProofCertificate cert;
  cert.kind = "eta";
  cert.group = {GroupKind::Gamma0, level};
  cert.cusps = cusps_gamma0(level);
  cert.infinity_index = cert.cusps.infinity_index();
  for (const auto& t : terms.terms) {
    const EtaQuotient& e = require_eta(t, level, "Gamma0");
    require_newman(e, level, cert.checks);
    if (t.coef == 0) continue;
    TermOrders row{to_string(e), "f", {}, false};
    for (const auto& entry : cert.cusps.entries) row.values.push_back(ord_at(e, cert.group, entry.cusp));
    cert.orders.push_back(std::move(row));
  }
  cert.B = sum_of_minima(cert, false);
  cert.notes.push_back("eta-quotients have no zeros or poles in the upper half-plane");
  settle(cert, options, [&](std::int64_t depth) {
    Integer den = common_denominator(terms);
    return std::pair(expand_combination(scaled_combination(terms, den), rational_of(depth)), den);
  });
  return cert;
}

ProofCertificate prove_gen_identity(const LinearCombination& terms, std::int64_t level,
                                    const ProverOptions& options) {
  ProofCertificate cert;
  cert.kind = "geneta";
  cert.group = {GroupKind::Gamma1, level};
  cert.cusps = cusps_gamma1(level);
  cert.infinity_index = cert.cusps.infinity_index();

  Rational constant = 0;
  std::vector<std::pair<Rational, GeneralizedEtaQuotient>> body;
  for (const auto& t : terms.terms) {
    if (t.shift != 0) throw InvalidProduct("monomial shifts are only allowed in series identities");
    if (is_constant(t)) {
      constant += t.coef;
      continue;
    }
    auto g = std::get_if<GeneralizedEtaQuotient>(&t.product);
    if (!g) throw InvalidProduct("Gamma1 identities take generalized eta-quotients and constants only");
    if (level % g->level != 0)
      throw InvalidProduct("term " + to_string(*g) + " has level " + std::to_string(g->level) +
                           " which does not divide " + std::to_string(level));
    if (t.coef != 0) body.emplace_back(t.coef, g->normalized());
  }
  if (constant == 0 && !body.empty()) {
    std::size_t k = 0;
    for (std::size_t i = 1; i < body.size(); ++i)
      if (body[i].second.infinity_order() < body[k].second.infinity_order()) k = i;
    auto pivot = body[k];
    cert.notes.push_back("divided through by " + to_string(pivot.second) + " to reach the +1 form");
    for (auto& [c, g] : body) {
      for (const auto& [key, r] : pivot.second.exps) g.exps[key] -= r;
      g = g.normalized();
      c /= pivot.first;
    }
    constant = 1;
    body.erase(body.begin() + static_cast<std::ptrdiff_t>(k));
  } else if (constant != 0) {
    for (auto& [c, g] : body) c /= constant;
    constant = 1;
  }

  LinearCombination normalized;
  if (constant != 0) normalized.terms.push_back({1, 0, GeneralizedEtaQuotient{1, {}}});
  for (const auto& [c, g] : body) {
    GeneralizedEtaQuotient lifted{level, g.exps};
    auto check = robins_check(lifted);
    if (!check.modular)
      throw NotModular(to_string(g) + ": modularity on Gamma1(" + std::to_string(level) +
                       ") is unknown: " + check.violations.front());
    cert.checks.push_back(to_string(g) + " is a modular function on Gamma1(" + std::to_string(level) + ")");
    TermOrders row{to_string(g), "f", {}, false};
    for (const auto& entry : cert.cusps.entries)
      row.values.push_back(rational_of(entry.width) * gen_ord(g, entry.cusp));
    cert.orders.push_back(std::move(row));
    normalized.terms.push_back({c, 0, lifted});
  }
  cert.B = sum_of_minima(cert, true);
  cert.notes.push_back("generalized eta-quotients have no zeros or poles in the upper half-plane");
  settle(cert, options, [&](std::int64_t depth) {
    Integer den = common_denominator(normalized);
    return std::pair(expand_combination(scaled_combination(normalized, den), rational_of(depth)), den);
  });
  return cert;
}

GordonHughesBound gordon_hughes(std::int64_t p, std::int64_t level, const EtaQuotient& f, const Cusp& r) {
  if (!is_prime(p)) throw CaseError(std::to_string(p) + " is not prime");
  if (level % p != 0) throw CaseError(std::to_string(p) + " does not divide " + std::to_string(level));
  if (r.c <= 0 || level % r.c != 0) throw CaseError("cusp denominator must be a positive divisor of the level");
  if ((p * level) % f.level != 0) throw CaseError("function level must divide p*N");
  const Group big{GroupKind::Gamma0, p * level};
  const std::int64_t beta = r.a, delta = r.c;
  const int vd = valuation(delta, p), vn = valuation(level, p);
  auto ord = [&](std::int64_t num) { return ord_at(f, big, make_cusp(num, p * delta)); };
  GordonHughesBound out;
  if (2 * vd >= vn) {
    out.case_number = 1;
    out.boundary = 2 * vd == vn;
    out.value = ord(beta) / rational_of(p);
  } else if (vd > 0) {
    out.case_number = 2;
    out.value = ord(beta);
  } else {
    out.case_number = 3;
    out.value = ord(beta);
    for (std::int64_t k = 1; k < p; ++k) out.value = std::min(out.value, ord(beta + k * delta));
  }
  return out;
}

Rational gordon_hughes_bound(std::int64_t p, std::int64_t level, const EtaQuotient& f, const Cusp& r) {
  return gordon_hughes(p, level, f, r).value;
}

ProofCertificate prove_up_identity(std::int64_t p, std::int64_t level, const LinearCombination& g_terms,
                                   const LinearCombination& f_terms, const ProverOptions& options) {
  if (!is_prime(p)) throw CaseError(std::to_string(p) + " is not prime");
  if (level % p != 0) throw CaseError(std::to_string(p) + " does not divide " + std::to_string(level));
  ProofCertificate cert;
  cert.kind = "up";
  cert.prime = p;
  cert.group = {GroupKind::Gamma0, level};
  cert.cusps = cusps_gamma0(level);
  cert.infinity_index = cert.cusps.infinity_index();
  for (const auto& t : f_terms.terms) {
    const EtaQuotient& e = require_eta(t, level, "U_p right-hand");
    require_newman(e, level, cert.checks);
    if (t.coef == 0) continue;
    TermOrders row{to_string(e), "f", {}, false};
    for (const auto& entry : cert.cusps.entries) row.values.push_back(ord_at(e, cert.group, entry.cusp));
    cert.orders.push_back(std::move(row));
  }
  bool boundary = false;
  for (const auto& t : g_terms.terms) {
    const EtaQuotient& e = require_eta(t, p * level, "U_p left-hand");
    require_newman(e, p * level, cert.checks);
    if (t.coef == 0) continue;
    TermOrders row{to_string(e), "U_p(g)", {}, true};
    for (const auto& entry : cert.cusps.entries) {
      auto bound = gordon_hughes(p, level, e, entry.cusp);
      boundary |= bound.boundary;
      row.values.push_back(bound.value);
    }
    cert.orders.push_back(std::move(row));
  }
  if (boundary) cert.notes.push_back("a cusp with nu_p(delta) = nu_p(N)/2 was bounded by the first case");
  cert.notes.push_back("U_p orders are lower bounds");
  cert.B = sum_of_minima(cert, false);
  settle(cert, options, [&](std::int64_t depth) {
    Integer den = common_denominator(g_terms, f_terms);
    Series lhs = u_p(expand_combination(scaled_combination(g_terms, den), rational_of(p * depth)), p);
    Series rhs = expand_combination(scaled_combination(f_terms, den), rational_of(depth));
    return std::pair(lhs - rhs, den);
  });
  return cert;
}

}  // namespace qcert
