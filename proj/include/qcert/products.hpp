#pragma once

// Sparse monic q-products: (q^d; q^d)_inf and the Jacobi triple products
// J_{a,b}, applied to dense integer coefficient vectors in place.

#include <cstdint>
#include <utility>
#include <vector>

#include "qcert/arith.hpp"

namespace qcert {

/// Integer polynomial with constant term 1, stored as (exponent, coefficient)
/// pairs sorted by exponent; the constant term is implicit.
struct SparseFactor {
  std::vector<std::pair<std::int64_t, std::int64_t>> terms;
};

/// (q^d; q^d)_inf truncated below q^n, from the pentagonal number theorem.
SparseFactor euler_factor(std::int64_t d, std::int64_t n);
/// J_{a,b} = (q^a, q^(b-a), q^b; q^b)_inf truncated below q^n; requires 0 < a < b.
SparseFactor triple_factor(std::int64_t a, std::int64_t b, std::int64_t n);

/// v <- v * f, truncated to v.size() entries.
void multiply_in_place(std::vector<Integer>& v, const SparseFactor& f);
/// v <- v / f, truncated to v.size() entries.
void divide_in_place(std::vector<Integer>& v, const SparseFactor& f);
/// Applies f^k (k of either sign).
void apply_power(std::vector<Integer>& v, const SparseFactor& f, std::int64_t k);

/// Dense coefficients of J_b = (q^b; q^b)_inf below q^n.
std::vector<Integer> jb_coefficients(std::int64_t b, std::int64_t n);
/// Dense coefficients of J_{a,b} below q^n.
std::vector<Integer> jab_coefficients(std::int64_t a, std::int64_t b, std::int64_t n);

}  // namespace qcert
