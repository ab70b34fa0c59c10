#pragma once

// Exact integer / rational helpers shared by every module. Nothing in the
// library uses floating point.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace qcert {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

Integer floor(const Rational& x);
Integer ceil(const Rational& x);

/// Fractional part {x} = x - floor(x), always in [0, 1).
Rational frac(const Rational& x);

bool is_integral(const Rational& x);

/// Converts, throwing std::overflow_error when the value does not fit.
std::int64_t to_int64(const Integer& x);
std::int64_t to_int64(const Rational& x);

/// "p/q" or "p" for integral values.
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

/// Parses "p", "-p" or "p/q"; throws std::invalid_argument.
Rational parse_rational(const std::string& text);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

/// floor(a / b) for b > 0.
std::int64_t floor_div(std::int64_t a, std::int64_t b);
/// ceil(a / b) for b > 0.
std::int64_t ceil_div(std::int64_t a, std::int64_t b);

/// p-adic valuation of a nonzero integer.
int valuation(std::int64_t n, std::int64_t p);
/// Stands for +infinity, the valuation of zero.
inline constexpr int kInfiniteValuation = 1 << 30;
/// p-adic valuation; zero maps to kInfiniteValuation.
int valuation(const Integer& n, unsigned long p);

std::vector<std::int64_t> divisors(std::int64_t n);
std::vector<std::int64_t> prime_factors(std::int64_t n);
bool is_prime(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);

/// Inverse of a modulo m (a coprime to m, m > 1); result in [0, m).
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);
/// Nonnegative residue.
std::int64_t mod(std::int64_t a, std::int64_t m);

/// Second periodic Bernoulli polynomial P2(x) = {x}^2 - {x} + 1/6.
Rational bernoulli_p2(const Rational& x);

}  // namespace qcert
