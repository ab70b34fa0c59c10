#include <doctest.h>

#include "oracles.hpp"
#include "qcert/etaq.hpp"
#include "qcert/products.hpp"

using namespace qcert;

namespace {

Rational r(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

// (q^a; q^b)_inf (q^(b-a); q^b)_inf below q^n, one binomial at a time.
std::vector<Integer> theta_pair(std::int64_t a, std::int64_t b, std::int64_t n) {
  std::vector<Integer> v(static_cast<std::size_t>(n));
  v[0] = 1;
  for (std::int64_t start : {a, b - a})
    for (std::int64_t k = start; k < n; k += b)
      for (std::int64_t i = n - 1; i >= k; --i) v[i] -= v[i - k];
  return v;
}

}  // namespace

TEST_CASE("Euler's product agrees with the pentagonal expansion") {
  CHECK(jb_coefficients(1, 400) == oracle::j_product({{1, 1}}, 400));
  CHECK(jb_coefficients(7, 300) == oracle::j_product({{7, 1}}, 300));
  std::vector<Integer> v = oracle::j_product({{3, 2}}, 200);
  divide_in_place(v, euler_factor(3, 200));
  CHECK(v == oracle::j_product({{3, 1}}, 200));
}

TEST_CASE("triple products J_{a,b}") {
  for (auto [a, b] : {std::pair<std::int64_t, std::int64_t>{1, 5}, {2, 5}, {3, 10}, {5, 10}, {1, 2}})
    CHECK(jab_coefficients(a, b, 250) == oracle::multiply(theta_pair(a, b, 250), jb_coefficients(b, 250), 250));
}

TEST_CASE("eta-quotient expansions match the binomial-by-binomial oracle") {
  for (int trial = 0; trial < 25; ++trial) {
    EtaQuotient f{20, {}};
    for (std::int64_t d : divisors(20)) f.exps[d] = oracle::uniform(-4, 4);
    f = f.normalized();
    const Series s = expand(f, r(120));
    const Rational o = f.infinity_order();
    const std::int64_t n = to_int64(qcert::floor(r(120) - o));
    const auto ref = oracle::j_product(f.exps, n);
    const Series body = s.shifted(-o);
    for (std::int64_t i = 0; i < std::min<std::int64_t>(n, 100); ++i) CHECK(body.coefficient(r(i)) == ref[i]);
  }
}

TEST_CASE("infinity orders") {
  CHECK(EtaQuotient{10, {{1, 2}, {2, -4}, {5, -2}, {10, 4}}}.infinity_order() == 1);
  CHECK(EtaQuotient{1, {{1, 1}}}.infinity_order() == r(1, 24));
  // eta_{delta,g} has order (delta/2) P2(g/delta).
  CHECK(GeneralizedEtaQuotient{5, {{{5, 1}, 1}}}.infinity_order() == r(5, 2) * bernoulli_p2(r(1, 5)));
}

TEST_CASE("generalized eta-quotients expand to theta pairs") {
  for (auto [delta, g] : {std::pair<std::int64_t, std::int64_t>{5, 1}, {5, 2}, {10, 3}, {20, 7}}) {
    GeneralizedEtaQuotient f{delta, {{{delta, g}, 1}}};
    const Series s = gen_expand(f, r(150));
    const auto ref = theta_pair(g, delta, 140);
    const Series body = s.shifted(-f.infinity_order());
    for (std::int64_t i = 0; i < 140; ++i) CHECK(body.coefficient(r(i)) == ref[i]);
  }
  // g = delta/2: eta_{delta,delta/2} = q^(...) (q^(delta/2); q^delta)^2.
  GeneralizedEtaQuotient half{10, {{{10, 5}, Rational(1, 2)}}};
  const Series body = gen_expand(half, r(80)).shifted(-half.infinity_order());
  const auto pair = theta_pair(5, 10, 80);
  std::vector<Integer> single(80);
  single[0] = 1;
  for (std::int64_t k = 5; k < 80; k += 10)
    for (std::int64_t i = 79; i >= k; --i) single[i] -= single[i - k];
  CHECK(pair == oracle::multiply(single, single, 80));
  for (std::int64_t i = 0; i < 70; ++i) CHECK(body.coefficient(r(i)) == single[i]);
}

TEST_CASE("validation of products") {
  CHECK_THROWS_AS((EtaQuotient{10, {{3, 1}}}.validate()), InvalidProduct);
  CHECK_THROWS_AS((GeneralizedEtaQuotient{10, {{{10, 10}, 1}}}.validate()), InvalidProduct);
  CHECK_THROWS_AS((GeneralizedEtaQuotient{10, {{{10, 3}, Rational(1, 2)}}}.validate()), InvalidProduct);
  CHECK_NOTHROW((GeneralizedEtaQuotient{10, {{{10, 5}, Rational(1, 2)}}}.validate()));
  CHECK(EtaQuotient{20, {{1, 0}, {2, 3}}}.normalized() == EtaQuotient{20, {{2, 3}}});
}

TEST_CASE("linear combinations") {
  LinearCombination l;
  l.terms.push_back({Rational(1, 2), 0, EtaQuotient{1, {}}});
  l.terms.push_back({Rational(1, 2), 1, EtaQuotient{1, {}}});
  auto [s, den] = expand_combination_scaled(l, r(10));
  CHECK(den == 2);
  CHECK(s.coefficient(r(1)) == 1);
  CHECK_THROWS_AS(expand_combination(l, r(10)), InvalidProduct);
  // eta(24 tau) - q = -q^25 + ...
  LinearCombination z;
  z.terms.push_back({1, 0, EtaQuotient{24, {{24, 1}}}});
  z.terms.push_back({-1, 1, EtaQuotient{24, {}}});
  const Series d = expand_combination(z, r(30));
  CHECK(d.order() == 25);
  CHECK(d.leading_coefficient() == -1);
  CHECK(to_string(EtaQuotient{20, {{1, 4}, {2, -8}}}) == "eta{1:4,2:-8}");
  CHECK(to_string(GeneralizedEtaQuotient{20, {{{10, 5}, Rational(1, 2)}}}) == "geta{[10,5]:1/2}");
}
