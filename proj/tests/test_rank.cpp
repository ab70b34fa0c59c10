#include <doctest.h>

#include "oracles.hpp"
#include "qcert/rank.hpp"

using namespace qcert;

namespace {

std::int64_t power(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

TEST_CASE("first coefficients of f(q)") {
  const RankParityTable t = af_table(12);
  const std::vector<long> expected{1, 1, -2, 3, -3, 3, -5, 7, -6, 6, -10, 12, -11};
  for (std::int64_t n = 0; n <= 12; ++n) CHECK(t.at(n) == expected[static_cast<std::size_t>(n)]);
  CHECK(t.at(std::int64_t{-1}) == 0);
  CHECK(t.at(make_rational(7, 5)) == 0);
  CHECK(t.at(make_rational(10, 5)) == -2);
  CHECK_THROWS_AS(t.at(std::int64_t{13}), TableTooSmall);
}

TEST_CASE("a_f(n) counts partitions by rank parity") {
  const RankParityTable t = af_table(30);
  const auto ref = oracle::rank_parity_by_partitions(30);
  for (std::int64_t n = 0; n <= 30; ++n) CHECK(t.at(n) == ref[static_cast<std::size_t>(n)]);
}

TEST_CASE("bilateral and Eulerian routes agree") {
  const RankParityTable t = af_table(300);
  const auto e = af_eulerian(300);
  REQUIRE(e.size() == 301);
  for (std::int64_t n = 0; n <= 300; ++n) CHECK(t.at(n) == e[static_cast<std::size_t>(n)]);
  for (std::int64_t m : {5, 7, 125, 343}) {
    const ResidueTable res = af_residues(300, m);
    for (std::int64_t n = 0; n <= 300; ++n) {
      Integer x = t.at(n) % m;
      if (x < 0) x += m;
      CHECK(res.at(n) == to_int64(x));
    }
  }
}

TEST_CASE("c_f from the table") {
  const RankParityTable t = af_table(200);
  const ResidueTable res = af_residues(200, 25);
  for (std::int64_t n = 0; n <= 40; ++n) {
    const Integer expected = t.at(5 * n - 1) + (n % 5 == 0 ? t.at(n / 5) : Integer(0));
    CHECK(cf(t, n) == expected);
    Integer x = expected % 25;
    if (x < 0) x += 25;
    CHECK(cf(res, n) == to_int64(x));
  }
  // c_f(20) = a_f(99) + a_f(4) vanishes mod 5.
  CHECK((cf(t, 20) % 5) == 0);
}

TEST_CASE("delta and lambda") {
  const std::vector<long> d5{4, 24, 99, 599};
  for (int a = 1; a <= 4; ++a) {
    CHECK(delta(a) == d5[static_cast<std::size_t>(a - 1)]);
    CHECK(delta(a) == oracle::inverse_of_24(power(5, a)));
    CHECK(delta(a, 7) == oracle::inverse_of_24(power(7, a)));
  }
  CHECK(delta(1, 7) == 5);
  const std::vector<long> l{0, 0, -5, -5, -130, -130};
  for (int a = 0; a < 6; ++a) CHECK(lambda(a) == l[static_cast<std::size_t>(a)]);
}

TEST_CASE("5- and 7-dissection identities") {
  CHECK(verify_af5id(200));
  CHECK(verify_af7id(200));
  CHECK(verify_j1_dissection(300));
  CHECK(verify_b_identity(300));
}

TEST_CASE("L_alpha through the series and through the family recursion") {
  const auto series = l_polynomials(3);
  const auto recursion = l_polynomials_by_recursion(3);
  REQUIRE(series.size() >= 3);
  CHECK(series == recursion);
  CHECK(series[1] == TPoly::from_coefficients(1, {1, -50, 350, -875, 625}));
  CHECK(l_valuation_bound(1, 5) == 3);
  CHECK(l_order_bound(3) == 2);
  CHECK(l_order_bound(2) == 1);
  CHECK_THROWS_AS(l_sequence(2, 0), PrecisionExhausted);
  const auto l = l_sequence(1, 30);
  REQUIRE(l.size() == 2);
  CHECK(agree(l[1], expand_combination(prefactor_pb(), make_rational(30, 1)) * evaluate(series[1], 30)));
}

TEST_CASE("valuation families") {
  CHECK(check_sigma_valuations());
  CHECK(check_seed_valuations());
  CHECK(check_family_valuations(25));
}

TEST_CASE("congruence scans") {
  CHECK(check_rank_parity_mod5(3, 60).pass());
  CHECK(check_rank_parity_mod7(3, 20).pass());
  CHECK(check_cf_congruence(1, false, 100).pass());
  CHECK(check_cf_congruence(1, true, 60).pass());
  const auto report = check_rank_parity_mod5(3, 10);
  CHECK(report.id == "rank-parity-mod5-a3");
  CHECK(report.modulus == 5);
  CHECK(rank_parity_table_size(5, 3, 10) >= 125 * 10 + 99);
}

TEST_CASE("a corrupted table breaks the congruence") {
  ResidueTable res = af_residues(rank_parity_table_size(5, 3, 5), 5);
  res.values[static_cast<std::size_t>(125 * 2 + 99)] = (res.values[static_cast<std::size_t>(125 * 2 + 99)] + 1) % 5;
  const auto report = check_rank_parity_mod5(3, 5, res);
  CHECK_FALSE(report.pass());
  CHECK(report.failures == std::vector<std::int64_t>{2});
}
