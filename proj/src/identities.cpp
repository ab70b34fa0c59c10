#include "qcert/identities.hpp"

namespace qcert {

namespace {

EtaQuotient power(const EtaQuotient& e, std::int64_t k) {
  EtaQuotient out{e.level, {}};
  for (auto [d, m] : e.exps) out.exps[d] = m * k;
  return out.normalized();
}

GeneralizedEtaQuotient geta(std::int64_t level, std::initializer_list<std::tuple<std::int64_t, std::int64_t, long>> f) {
  GeneralizedEtaQuotient g{level, {}};
  for (auto [delta, gg, r] : f) g.exps[{delta, gg}] = Rational(r);
  return g;
}

Term term(long coef, Product p) { return Term{Rational(coef), Rational(0), std::move(p)}; }

std::string seed_name(char group, std::int64_t k) {
  std::string name = group == 'A' ? "ua-pa-t" : "ub-pb-t";
  return name + (k < 0 ? "m" + std::to_string(-k) : std::to_string(k));
}

}  // namespace

LinearCombination times(const LinearCombination& l, const EtaQuotient& e) {
  LinearCombination out = l;
  for (auto& t : out.terms) t.product = std::get<EtaQuotient>(t.product) * e;
  return out;
}

LinearCombination times_tpoly(const LinearCombination& v, const TPoly& p, const EtaQuotient& t) {
  LinearCombination out;
  for (const auto& [n, c] : p.terms()) {
    for (Term term : times(v, power(t, n)).terms) {
      term.coef *= Rational(c);
      out.terms.push_back(std::move(term));
    }
  }
  return out;
}

IdentitySpec modular_equation_spec(const std::array<TPoly, 5>& sigma) {
  IdentitySpec spec;
  spec.name = "modular-equation";
  spec.kind = IdentityKind::Eta;
  spec.group = {GroupKind::Gamma0, 50};
  const EtaQuotient t = hauptmodul_t();
  const EtaQuotient t5 = t.dilated(5);
  spec.terms.terms.push_back(term(1, EtaQuotient{50, {}}));
  for (std::int64_t j = 0; j < 5; ++j)
    for (const auto& [l, c] : sigma[static_cast<std::size_t>(j)].terms())
      spec.terms.terms.push_back(Term{Rational(c), 0, power(t5, l) * power(t, j - 5)});
  spec.canonicalize();
  return spec;
}

IdentitySpec u5_example_spec() {
  IdentitySpec spec;
  spec.name = "u5-eta-example";
  spec.kind = IdentityKind::Up;
  spec.group = {GroupKind::Gamma0, 20};
  spec.prime = 5;
  spec.up_terms.terms.push_back(
      term(1, EtaQuotient{100, {{1, -2}, {2, 3}, {4, 3}, {5, 4}, {10, -8}, {25, -2}, {50, 5}, {100, -3}}}));
  spec.terms.terms.push_back(term(5, EtaQuotient{20, {{1, 4}, {2, -8}, {5, -4}, {10, 8}}}));
  spec.terms.terms.push_back(term(2, EtaQuotient{20, {{1, 2}, {2, -1}, {4, -1}, {5, -2}, {10, 5}, {20, -3}}}));
  spec.canonicalize();
  return spec;
}

IdentitySpec theta_identity_spec() {
  IdentitySpec spec;
  spec.name = "geneta-5-dissection";
  spec.kind = IdentityKind::GenEta;
  spec.group = {GroupKind::Gamma1, 20};
  auto& t = spec.terms.terms;
  t.push_back(term(1, GeneralizedEtaQuotient{20, {}}));
  t.push_back(term(-1, geta(20, {{10, 1, 6}, {10, 4, 4}, {10, 2, -4}, {10, 3, -6}})));
  t.push_back(term(4, geta(20, {{10, 2, 2}, {10, 3, 1}, {10, 4, -2}, {10, 5, -1}})));
  t.push_back(term(4, geta(20, {{10, 1, 7}, {10, 4, 6}, {10, 2, -6}, {10, 3, -6}, {10, 5, -1}})));
  t.push_back(term(-8, geta(20, {{10, 1, 2}, {10, 4, 1}, {10, 2, -1}, {10, 3, -1}, {10, 5, -1}})));
  t.push_back(term(8, geta(20, {{10, 1, 5}, {10, 4, 3}, {10, 2, -3}, {10, 3, -4}, {10, 5, -1}})));
  t.push_back(term(-3, geta(20, {{10, 1, 1}, {10, 2, 1}, {10, 3, -1}, {10, 4, -1}})));
  t.push_back(term(-3, geta(20, {{5, 1, 5}, {5, 2, -5}})));
  t.push_back(term(4, geta(20, {{20, 1, 9}, {20, 3, 3}, {20, 4, 7}, {20, 6, 4}, {20, 7, 3}, {20, 8, 3}, {20, 9, 9},
                                {20, 10, -2}})));
  t.push_back(term(-1, geta(20, {{20, 1, 6}, {20, 2, 6}, {20, 4, 7}, {20, 6, 10}, {20, 8, 3}, {20, 9, 6},
                                 {20, 10, 2}, {20, 5, -4}})));
  spec.canonicalize();
  return spec;
}

IdentitySpec seed_identity_spec(char group, std::int64_t k, const TPoly& p) {
  const bool a = group == 'A';
  IdentitySpec spec;
  spec.name = seed_name(group, k);
  spec.kind = IdentityKind::Up;
  spec.group = {GroupKind::Gamma0, 20};
  spec.prime = 5;
  const EtaQuotient mult = (a ? multiplier_a() : multiplier_b()) * power(hauptmodul_t(), k);
  spec.up_terms = times(a ? prefactor_pa() : prefactor_pb(), mult);
  spec.terms = times_tpoly(a ? prefactor_pb() : prefactor_pa(), p);
  spec.canonicalize();
  return spec;
}

std::vector<IdentitySpec> seed_identity_specs() {
  const auto& tables = initial_tables(false);
  std::vector<IdentitySpec> out;
  for (char group : {'A', 'B'}) {
    const auto& family = group == 'A' ? tables.group_a : tables.group_b;
    for (std::int64_t k = 0; k >= -4; --k) out.push_back(seed_identity_spec(group, k, family.at(k)));
  }
  return out;
}

std::vector<IdentitySpec> standard_identities() {
  std::vector<IdentitySpec> out{modular_equation_spec(), u5_example_spec(), theta_identity_spec()};
  for (auto& s : seed_identity_specs()) out.push_back(std::move(s));
  return out;
}

Series j_combination(const std::vector<JTerm>& terms, std::int64_t prec) {
  Series sum = Series::zero(Rational(Integer(static_cast<long>(prec))));
  bool first = true;
  for (const auto& t : terms) {
    Series s = expand_j(t.jexps, prec - t.shift).shifted(Rational(Integer(static_cast<long>(t.shift)))).scaled(t.coef);
    sum = first ? s : sum + s;
    first = false;
  }
  return sum;
}

}  // namespace qcert
