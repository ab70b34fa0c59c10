#include "oracles.hpp"

#include <functional>
#include <numeric>

namespace oracle {

namespace {

std::int64_t phi(std::int64_t n) {
  std::int64_t count = 0;
  for (std::int64_t k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++count;
  return count;
}

}  // namespace

std::vector<Integer> j_product(const std::map<std::int64_t, std::int64_t>& jexps, std::int64_t n) {
  std::vector<Integer> v(static_cast<std::size_t>(n));
  v[0] = 1;
  for (auto [d, m] : jexps) {
    for (std::int64_t rep = 0; rep < std::abs(m); ++rep) {
      for (std::int64_t k = d; k < n; k += d) {
        if (m > 0) {
          for (std::int64_t i = n - 1; i >= k; --i) v[i] -= v[i - k];
        } else {
          for (std::int64_t i = k; i < n; ++i) v[i] += v[i - k];
        }
      }
    }
  }
  return v;
}

std::vector<Integer> multiply(const std::vector<Integer>& a, const std::vector<Integer>& b, std::size_t n) {
  std::vector<Integer> out(n);
  for (std::size_t i = 0; i < a.size() && i < n; ++i)
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) out[i + j] += a[i] * b[j];
  return out;
}

std::int64_t gamma0_cusp_count(std::int64_t n) {
  std::int64_t s = 0;
  for (std::int64_t d = 1; d <= n; ++d)
    if (n % d == 0) s += phi(std::gcd(d, n / d));
  return s;
}

std::int64_t gamma0_index(std::int64_t n) {
  std::int64_t num = n, den = 1;
  std::int64_t m = n;
  for (std::int64_t p = 2; p <= m; ++p) {
    if (m % p != 0) continue;
    num *= p + 1;
    den *= p;
    while (m % p == 0) m /= p;
  }
  return num / den;
}

std::int64_t gamma1_cusp_count(std::int64_t n) {
  std::int64_t s = 0;
  for (std::int64_t d = 1; d <= n; ++d)
    if (n % d == 0) s += phi(d) * phi(n / d);
  return s / 2;
}

std::vector<Integer> rank_parity_by_partitions(int nmax) {
  std::vector<Integer> out(static_cast<std::size_t>(nmax + 1));
  out[0] = 1;
  // parts in nonincreasing order; rank = largest part - number of parts.
  std::function<void(int, int, int, int, int)> walk = [&](int remaining, int max_part, int largest, int parts, int total) {
    if (remaining == 0) {
      out[static_cast<std::size_t>(total)] += ((largest - parts) % 2 == 0) ? 1 : -1;
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p)
      walk(remaining - p, p, largest == 0 ? p : largest, parts + 1, total);
  };
  for (int n = 1; n <= nmax; ++n) walk(n, n, 0, 0, n);
  return out;
}

std::int64_t inverse_of_24(std::int64_t m) {
  for (std::int64_t x = 0; x < m; ++x)
    if ((24 * x) % m == 1 % m) return x;
  return -1;
}

std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240531);
  return gen;
}

std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

Integer random_integer(int bits) {
  Integer r = 0;
  for (int b = 0; b < bits; b += 30) r = (r << 30) + Integer(static_cast<unsigned long>(uniform(0, (1 << 30) - 1)));
  if (bits % 30) r >>= (30 - bits % 30);
  return uniform(0, 1) ? r : Integer(-r);
}

}  // namespace oracle
