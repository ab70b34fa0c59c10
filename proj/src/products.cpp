#include "qcert/products.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qcert {

SparseFactor euler_factor(std::int64_t d, std::int64_t n) {
  SparseFactor f;
  if (d < 1) throw std::invalid_argument("euler_factor needs d >= 1");
  for (std::int64_t k = 1;; ++k) {
    const std::int64_t e1 = d * (k * (3 * k - 1) / 2);
    const std::int64_t e2 = d * (k * (3 * k + 1) / 2);
    if (e1 >= n) break;
    const std::int64_t s = (k % 2 == 0) ? 1 : -1;
    f.terms.emplace_back(e1, s);
    if (e2 < n) f.terms.emplace_back(e2, s);
  }
  return f;
}

SparseFactor triple_factor(std::int64_t a, std::int64_t b, std::int64_t n) {
  if (!(0 < a && a < b)) throw std::invalid_argument("triple_factor needs 0 < a < b");
  std::map<std::int64_t, std::int64_t> acc;
  // Exponent b m(m-1)/2 + a m is increasing in |m| on each side of 0.
  for (int side : {1, -1}) {
    for (std::int64_t k = 1;; ++k) {
      const std::int64_t m = side * k;
      const std::int64_t e = b * (m * (m - 1) / 2) + a * m;
      if (e >= n) break;
      acc[e] += (k % 2 == 0) ? 1 : -1;
    }
  }
  SparseFactor f;
  for (auto [e, c] : acc)
    if (c != 0) f.terms.emplace_back(e, c);
  return f;
}

namespace {

void addmul_si(Integer& acc, const Integer& x, std::int64_t c) {
  if (c > 0)
    mpz_addmul_ui(acc.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(c));
  else
    mpz_submul_ui(acc.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(-c));
}

}  // namespace

void multiply_in_place(std::vector<Integer>& v, const SparseFactor& f) {
  const std::int64_t n = static_cast<std::int64_t>(v.size());
  for (std::int64_t i = n - 1; i > 0; --i) {
    for (auto [e, c] : f.terms) {
      if (e > i) break;
      if (v[static_cast<std::size_t>(i - e)] != 0) addmul_si(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(i - e)], c);
    }
  }
}

void divide_in_place(std::vector<Integer>& v, const SparseFactor& f) {
  const std::int64_t n = static_cast<std::int64_t>(v.size());
  for (std::int64_t i = 1; i < n; ++i) {
    for (auto [e, c] : f.terms) {
      if (e > i) break;
      if (v[static_cast<std::size_t>(i - e)] != 0) addmul_si(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(i - e)], -c);
    }
  }
}

void apply_power(std::vector<Integer>& v, const SparseFactor& f, std::int64_t k) {
  for (std::int64_t i = 0; i < k; ++i) multiply_in_place(v, f);
  for (std::int64_t i = 0; i < -k; ++i) divide_in_place(v, f);
}

std::vector<Integer> jb_coefficients(std::int64_t b, std::int64_t n) {
  std::vector<Integer> v(static_cast<std::size_t>(std::max<std::int64_t>(n, 0)));
  if (n <= 0) return v;
  v[0] = 1;
  for (auto [e, c] : euler_factor(b, n).terms) v[static_cast<std::size_t>(e)] += c;
  return v;
}

std::vector<Integer> jab_coefficients(std::int64_t a, std::int64_t b, std::int64_t n) {
  std::vector<Integer> v(static_cast<std::size_t>(std::max<std::int64_t>(n, 0)));
  if (n <= 0) return v;
  v[0] = 1;
  for (auto [e, c] : triple_factor(a, b, n).terms) v[static_cast<std::size_t>(e)] += c;
  return v;
}

}  // namespace qcert
