#include <doctest.h>

#include "qcert/arith.hpp"

using namespace qcert;

TEST_CASE("floor, ceil and fractional part of rationals") {
  CHECK(qcert::floor(Rational(-7, 2)) == -4);
  CHECK(qcert::ceil(Rational(-7, 2)) == -3);
  CHECK(qcert::floor(Rational(6, 3)) == 2);
  CHECK(frac(Rational(-1, 3)) == Rational(2, 3));
  CHECK(frac(Rational(5)) == 0);
}

TEST_CASE("integer division rounds toward the correct side") {
  for (std::int64_t a = -30; a <= 30; ++a)
    for (std::int64_t b = 1; b <= 7; ++b) {
      const Rational q(a, b);
      CHECK(floor_div(a, b) == to_int64(qcert::floor(q)));
      CHECK(ceil_div(a, b) == to_int64(qcert::ceil(q)));
    }
}

TEST_CASE("parse_rational accepts p, -p and p/q only") {
  CHECK(parse_rational("-18/5") == Rational(-18, 5));
  CHECK(parse_rational("+4") == 4);
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("p-adic valuations") {
  CHECK(valuation(std::int64_t{250}, 5) == 3);
  CHECK(valuation(Integer(-625), 5) == 4);
  CHECK(valuation(Integer(0), 5) == kInfiniteValuation);
  CHECK(valuation(std::int64_t{0}, 7) == kInfiniteValuation);
}

TEST_CASE("divisors, primes and phi") {
  CHECK(divisors(50) == std::vector<std::int64_t>{1, 2, 5, 10, 25, 50});
  CHECK(prime_factors(100) == std::vector<std::int64_t>{2, 5});
  CHECK(euler_phi(20) == 8);
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK(mod_inverse(24, 125) == 99);
  CHECK(mod(-1, 5) == 4);
  CHECK_THROWS(mod_inverse(10, 25));
}

TEST_CASE("second periodic Bernoulli polynomial") {
  CHECK(bernoulli_p2(Rational(1, 2)) == Rational(-1, 12));
  CHECK(bernoulli_p2(Rational(0)) == Rational(1, 6));
  CHECK(bernoulli_p2(Rational(7, 5)) == bernoulli_p2(Rational(2, 5)));
}
