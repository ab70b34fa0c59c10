#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "qcert/cusps.hpp"

using namespace qcert;

namespace {

std::vector<std::pair<std::string, std::int64_t>> listing(const CuspTable& t) {
  std::vector<std::pair<std::string, std::int64_t>> out;
  for (const auto& e : t.entries) out.emplace_back(to_string(e.cusp), e.width);
  return out;
}

}  // namespace

TEST_CASE("Gamma0(50) cusps and widths") {
  const std::vector<std::pair<std::string, std::int64_t>> expected{
      {"0", 50}, {"1/2", 25}, {"1/5", 2}, {"2/5", 2}, {"3/5", 2},  {"4/5", 2},
      {"1/10", 1}, {"3/10", 1}, {"7/10", 1}, {"9/10", 1}, {"1/25", 2}, {"1/50", 1}};
  const CuspTable t = cusps_gamma0(50);
  CHECK(listing(t) == expected);
  CHECK(to_string(t.entries[t.infinity_index()].cusp) == "1/50");
}

TEST_CASE("Gamma0(20) cusps and widths") {
  const std::vector<std::pair<std::string, std::int64_t>> expected{{"0", 20}, {"1/2", 5},   {"1/4", 5},
                                                                    {"1/5", 4}, {"1/10", 1}, {"1/20", 1}};
  CHECK(listing(cusps_gamma0(20)) == expected);
}

TEST_CASE("Gamma0(N) tables: count, width sum and covering for N <= 60") {
  for (std::int64_t n = 1; n <= 60; ++n) {
    const CuspTable t = cusps_gamma0(n);
    CHECK(static_cast<std::int64_t>(t.entries.size()) == oracle::gamma0_cusp_count(n));
    std::int64_t widths = 0;
    for (const auto& e : t.entries) widths += e.width;
    CHECK(widths == oracle::gamma0_index(n));
    CHECK(gamma0_index(n) == oracle::gamma0_index(n));
    if (n > 30) continue;
    for (std::size_t i = 0; i < t.entries.size(); ++i)
      for (std::size_t j = i + 1; j < t.entries.size(); ++j)
        CHECK_FALSE(equivalent_gamma0(n, t.entries[i].cusp, t.entries[j].cusp));
    for (std::int64_t c = 1; c <= 2 * n; ++c)
      for (std::int64_t a = -c; a <= c; ++a) {
        if (std::gcd(a, c) != 1) continue;
        int hits = 0;
        for (const auto& e : t.entries) hits += equivalent_gamma0(n, make_cusp(a, c), e.cusp) ? 1 : 0;
        CHECK(hits == 1);
      }
  }
}

TEST_CASE("Gamma1(N) tables") {
  CHECK(cusps_gamma1(20).entries.size() == 20);
  for (std::int64_t n = 5; n <= 40; ++n) {
    const CuspTable t = cusps_gamma1(n);
    CHECK(static_cast<std::int64_t>(t.entries.size()) == oracle::gamma1_cusp_count(n));
    CHECK(gamma1_cusp_count_formula(n) == oracle::gamma1_cusp_count(n));
    if (n > 24) continue;
    for (std::size_t i = 0; i < t.entries.size(); ++i)
      for (std::size_t j = i + 1; j < t.entries.size(); ++j)
        CHECK_FALSE(equivalent_gamma1(n, t.entries[i].cusp, t.entries[j].cusp));
    for (std::int64_t c = 1; c <= n; ++c)
      for (std::int64_t a = 0; a < c; ++a) {
        if (std::gcd(a, c) != 1) continue;
        int hits = 0;
        for (const auto& e : t.entries) hits += equivalent_gamma1(n, make_cusp(a, c), e.cusp) ? 1 : 0;
        CHECK(hits == 1);
      }
  }
}

TEST_CASE("cusp text round trip") {
  for (const auto& e : cusps_gamma0(100).entries) CHECK(parse_cusp(to_string(e.cusp)) == e.cusp);
  CHECK(make_cusp(2, -4) == Cusp{-1, 2});
  CHECK(Cusp{1, 0}.is_infinity());
  CHECK(to_string(Group{GroupKind::Gamma1, 20}) == "Gamma1(20)");
}
