#include <doctest.h>

#include "oracles.hpp"
#include "qcert/series.hpp"

using namespace qcert;

namespace {

Rational r(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

Series random_series(int bits = 40) {
  const std::int64_t grid = oracle::uniform(1, 3);
  const std::int64_t low = oracle::uniform(-4, 4);
  const std::int64_t len = oracle::uniform(0, 70);
  std::vector<Integer> c(static_cast<std::size_t>(len));
  for (auto& x : c) x = oracle::uniform(0, 3) == 0 ? Integer(0) : oracle::random_integer(bits);
  return Series::from_coefficients(std::move(c), low, low + len + oracle::uniform(0, 5), grid);
}

}  // namespace

TEST_CASE("normalization chooses the smallest grid and drops leading zeros") {
  const Series half = Series::monomial(1, r(1, 2), r(3));
  CHECK(half.grid() == 2);
  const Series sq = half * half;
  CHECK(sq.grid() == 1);
  CHECK(sq.order() == 1);
  // Known below q^(7/2) on grid 2; grid 1 cannot vouch for q^(7/2) itself.
  CHECK(sq.precision() == 3);
  const Series s = Series::from_coefficients({0, 0, 3, 0}, 0, 6);
  CHECK(s.low() == 2);
  CHECK(s.coefficient(std::int64_t{3}) == 0);
  CHECK_THROWS_AS(s.coefficient(std::int64_t{6}), PrecisionExceeded);
  CHECK_THROWS_AS(Series::zero(r(5)).order(), ZeroUpToPrecision);
}

TEST_CASE("product precision is min(pa + ob, pb + oa)") {
  const Series a = Series::from_coefficients({1, 1}, -1, 5);  // known below q^5, order -1
  const Series b = Series::from_coefficients({2}, 2, 4);      // known below q^4, order 2
  CHECK((a * b).precision() == std::min(r(5 + 2), r(4 - 1)));
}

TEST_CASE("ring axioms hold on random truncated series") {
  for (int trial = 0; trial < 150; ++trial) {
    const Series a = random_series(), b = random_series(), c = random_series();
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(agree(a * (b + c), a * b + a * c));
    CHECK((a - a).is_zero());
    CHECK(agree((a + b) - b, a));
  }
}

TEST_CASE("Kronecker and schoolbook multiplication agree") {
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t la = static_cast<std::size_t>(oracle::uniform(1, 400));
    const std::size_t lb = static_cast<std::size_t>(oracle::uniform(1, 400));
    const int bits = static_cast<int>(oracle::uniform(1, 600));
    std::vector<Integer> a(la), b(lb);
    for (auto& x : a) x = oracle::random_integer(bits);
    for (auto& x : b) x = oracle::random_integer(bits);
    const std::size_t n = static_cast<std::size_t>(oracle::uniform(1, static_cast<std::int64_t>(la + lb)));
    const auto ref = oracle::multiply(a, b, n);
    CHECK(detail::mul_kronecker(a, b, n) == ref);
    CHECK(detail::mul_truncated(a, b, n) == ref);
  }
}

TEST_CASE("inverse satisfies a * invert(a) = 1 on both the direct and Newton paths") {
  for (std::int64_t len : {5, 90, 500}) {
    std::vector<Integer> c(static_cast<std::size_t>(len));
    c[0] = -1;
    for (std::size_t i = 1; i < c.size(); ++i) c[i] = oracle::random_integer(50);
    const Series a = Series::from_coefficients(c, 3, 3 + len);
    const Series prod = a * invert(a);
    CHECK(prod == Series::constant(1, r(len)));
  }
  CHECK_THROWS_AS(invert(Series::from_coefficients({2, 1}, 0, 4)), NonUnitLeading);
}

TEST_CASE("pow matches repeated multiplication and inversion") {
  const Series a = Series::from_coefficients({1, -3, 2, 7}, 1, 30);
  CHECK(pow(a, 3) == a * a * a);
  CHECK(pow(a, -2) == invert(a * a));
  CHECK(pow(a, 0).coefficient(std::int64_t{0}) == 1);
}

TEST_CASE("u_p picks every p-th coefficient") {
  std::vector<Integer> c(50);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<long>(i * i) - 7;
  const Series s = Series::from_coefficients(c, -6, 44);
  for (std::int64_t p : {2, 5, 7}) {
    const Series u = u_p(s, p);
    CHECK(u.precision() == r(ceil_div(44, p)));
    for (std::int64_t m = ceil_div(-6, p); m < ceil_div(44, p); ++m)
      CHECK(u.coefficient(m) == s.coefficient(p * m));
  }
  CHECK_THROWS_AS(u_p(Series::monomial(1, r(1, 2), r(4)), 5), GridError);
}

TEST_CASE("dilation and shifting") {
  const Series s = Series::from_coefficients({1, 2, 3}, 0, 3);
  const Series d = s.dilated(5);
  CHECK(d.precision() == 15);
  CHECK(d.coefficient(std::int64_t{10}) == 3);
  CHECK(d.coefficient(std::int64_t{11}) == 0);
  const Series sh = s.shifted(r(-1, 3));
  CHECK(sh.order() == r(-1, 3));
  CHECK(sh.precision() == r(8, 3));
  CHECK(sh.shifted(r(1, 3)) == s);
}
