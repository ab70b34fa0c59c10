#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qcert {

/// Reduced fraction a/c with c >= 0; infinity is 1/0.
struct Cusp {
  std::int64_t a = 1;
  std::int64_t c = 0;

  bool is_infinity() const noexcept { return c == 0; }
  friend bool operator==(const Cusp&, const Cusp&) = default;
};

/// Reduces a/c and moves the sign to the numerator; (1, 0) for any a/0.
Cusp make_cusp(std::int64_t a, std::int64_t c);
/// "a/c", or "a" when c = 1.
std::string to_string(const Cusp& z);
/// Accepts "a/c", "a" and "infinity".
Cusp parse_cusp(const std::string& text);

enum class GroupKind { Gamma0, Gamma1 };

struct Group {
  GroupKind kind = GroupKind::Gamma0;
  std::int64_t level = 1;
  friend bool operator==(const Group&, const Group&) = default;
};

std::string to_string(const Group& g);

struct CuspEntry {
  Cusp cusp;
  std::int64_t width = 1;
};

struct CuspTable {
  Group group;
  std::vector<CuspEntry> entries;

  /// Index of the representative equivalent to infinity.
  std::size_t infinity_index() const;
};

/// Chua-Lang representatives x/d, d | N, smallest x per unit class mod gcd(d, N/d).
CuspTable cusps_gamma0(std::int64_t n);
/// One representative per Gamma1(N) class, each the lexicographically
/// smallest (c, a) with c >= 0, a >= 0 in its class; sorted by (c, a).
CuspTable cusps_gamma1(std::int64_t n);
CuspTable cusp_table(const Group& g);

bool equivalent_gamma0(std::int64_t n, const Cusp& z1, const Cusp& z2);
/// (a', c') = +-(a + k c, c) mod N for some k.
bool equivalent_gamma1(std::int64_t n, const Cusp& z1, const Cusp& z2);
bool equivalent(const Group& g, const Cusp& z1, const Cusp& z2);

/// N / gcd(N, c^2) on Gamma0(N); N / gcd(c, N) on Gamma1(N) except width 1
/// at the irregular cusps of Gamma1(4). gcd(N, 0) = N.
std::int64_t width(const Group& g, const Cusp& z);

/// [SL2(Z) : Gamma0(N)] = N prod_{p | N} (1 + 1/p).
std::int64_t gamma0_index(std::int64_t n);
/// (1/2) sum_{d | N} phi(d) phi(N/d) for N > 4.
std::int64_t gamma1_cusp_count_formula(std::int64_t n);

}  // namespace qcert
