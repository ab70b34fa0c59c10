#include "qcert/cusps.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "qcert/arith.hpp"

namespace qcert {

namespace {

void check_level(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("level must be positive");
}

std::int64_t gcd_with_level(std::int64_t c, std::int64_t n) { return c == 0 ? n : gcd64(c, n); }

// Invariant of a Gamma1(N) class: (c mod N, a mod gcd(c, N)) up to a common sign.
std::pair<std::int64_t, std::int64_t> gamma1_key(std::int64_t n, const Cusp& z) {
  const std::int64_t g = gcd_with_level(z.c, n);
  std::pair<std::int64_t, std::int64_t> plus{mod(z.c, n), mod(z.a, g)};
  std::pair<std::int64_t, std::int64_t> minus{mod(-z.c, n), mod(-z.a, g)};
  return std::min(plus, minus);
}

// Smallest s >= s0 with s = s0 mod m and gcd(s, n) = 1.
std::int64_t lift_unit(std::int64_t s0, std::int64_t m, std::int64_t n) {
  for (std::int64_t s = s0;; s += m)
    if (gcd64(s, n) == 1) return s;
}

}  // namespace

Cusp make_cusp(std::int64_t a, std::int64_t c) {
  if (a == 0 && c == 0) throw std::invalid_argument("0/0 is not a cusp");
  if (c == 0) return {1, 0};
  if (c < 0) {
    a = -a;
    c = -c;
  }
  const std::int64_t g = gcd64(a, c);
  return {a / g, c / g};
}

std::string to_string(const Cusp& z) {
  if (z.c == 1) return std::to_string(z.a);
  return std::to_string(z.a) + "/" + std::to_string(z.c);
}

Cusp parse_cusp(const std::string& text) {
  if (text == "infinity" || text == "oo" || text == "inf") return {1, 0};
  auto slash = text.find('/');
  try {
    std::size_t used = 0;
    std::int64_t a = std::stoll(text.substr(0, slash), &used);
    if (used != text.substr(0, slash).size()) throw std::invalid_argument("trailing characters");
    std::int64_t c = 1;
    if (slash != std::string::npos) {
      std::string den = text.substr(slash + 1);
      c = std::stoll(den, &used);
      if (used != den.size()) throw std::invalid_argument("trailing characters");
    }
    return make_cusp(a, c);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("malformed cusp '" + text + "'");
  }
}

std::string to_string(const Group& g) {
  return std::string(g.kind == GroupKind::Gamma0 ? "Gamma0(" : "Gamma1(") + std::to_string(g.level) + ")";
}

std::size_t CuspTable::infinity_index() const {
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (equivalent(group, entries[i].cusp, Cusp{1, 0})) return i;
  throw std::logic_error("cusp table has no representative of infinity");
}

CuspTable cusps_gamma0(std::int64_t n) {
  check_level(n);
  CuspTable table{{GroupKind::Gamma0, n}, {}};
  for (std::int64_t d : divisors(n)) {
    const std::int64_t e = gcd64(d, n / d);
    std::set<std::int64_t> seen;
    for (std::int64_t x = 0; x < std::max<std::int64_t>(d, 1); ++x) {
      if (gcd64(x, d) != 1) continue;
      if (!seen.insert(mod(x, e)).second) continue;
      Cusp z{x, d};
      table.entries.push_back({z, width(table.group, z)});
    }
  }
  return table;
}

CuspTable cusps_gamma1(std::int64_t n) {
  check_level(n);
  const Group group{GroupKind::Gamma1, n};
  // Cho-Koo-Park construction: for c | N, s runs over units mod N taken mod
  // N/c up to sign, a over units mod N taken mod c (up to sign when c is N/2
  // or N); the cusp is y/x with x = c s, y = a mod N and gcd(x, y) = 1.
  std::map<std::pair<std::int64_t, std::int64_t>, Cusp> classes;
  for (std::int64_t c : divisors(n)) {
    const std::int64_t m = n / c;
    std::vector<std::int64_t> ss, as;
    std::set<std::int64_t> seen;
    for (std::int64_t s0 = 0; s0 < m; ++s0) {
      if (gcd64(s0, m) != 1) continue;
      if (seen.count(mod(-s0, m))) continue;
      seen.insert(s0);
      ss.push_back(lift_unit(m == 1 ? 1 : s0, m, n));
    }
    seen.clear();
    const bool pm = (c == n || 2 * c == n);
    for (std::int64_t a0 = 0; a0 < c; ++a0) {
      if (gcd64(a0, c) != 1) continue;
      if (pm && seen.count(mod(-a0, c))) continue;
      seen.insert(a0);
      as.push_back(lift_unit(c == 1 ? 1 : a0, c, n));
    }
    for (std::int64_t s : ss) {
      for (std::int64_t a : as) {
        const std::int64_t x = c * s;
        std::int64_t y = a;
        while (gcd64(x, y) != 1) y += n;
        Cusp z = make_cusp(y, x);
        classes.emplace(gamma1_key(n, z), z);
      }
    }
  }
  // Canonical representative: lexicographically smallest (c, a) in the class.
  std::map<std::pair<std::int64_t, std::int64_t>, Cusp> canonical;
  for (std::int64_t c = 0; c <= n && canonical.size() < classes.size(); ++c) {
    const std::int64_t g = gcd_with_level(c, n);
    const std::int64_t abound = c == 0 ? 2 : g * std::max<std::int64_t>(c, 1) + n;
    for (std::int64_t a = 0; a < abound; ++a) {
      if (gcd64(a, c) != 1) continue;
      Cusp z{a, c};
      auto key = gamma1_key(n, z);
      if (!classes.count(key)) continue;
      canonical.emplace(key, z);
    }
  }
  if (canonical.size() != classes.size()) throw std::logic_error("failed to canonicalize Gamma1 cusps");
  CuspTable table{group, {}};
  for (const auto& [key, z] : canonical) table.entries.push_back({z, width(group, z)});
  std::sort(table.entries.begin(), table.entries.end(), [](const CuspEntry& x, const CuspEntry& y) {
    return std::pair(x.cusp.c, x.cusp.a) < std::pair(y.cusp.c, y.cusp.a);
  });
  return table;
}

CuspTable cusp_table(const Group& g) {
  return g.kind == GroupKind::Gamma0 ? cusps_gamma0(g.level) : cusps_gamma1(g.level);
}

bool equivalent_gamma0(std::int64_t n, const Cusp& z1, const Cusp& z2) {
  check_level(n);
  const std::int64_t g = gcd_with_level(z1.c, n);
  if (g != gcd_with_level(z2.c, n)) return false;
  for (std::int64_t u = 1; u <= n; ++u) {
    if (gcd64(u, n) != 1) continue;
    if (mod(z2.c - u * z1.c, n) != 0) continue;
    if (mod(z2.a * u - z1.a, g) == 0) return true;
  }
  return false;
}

bool equivalent_gamma1(std::int64_t n, const Cusp& z1, const Cusp& z2) {
  check_level(n);
  for (std::int64_t s : {1, -1}) {
    if (mod(z2.c - s * z1.c, n) != 0) continue;
    if (mod(s * z2.a - z1.a, gcd_with_level(z1.c, n)) == 0) return true;
  }
  return false;
}

bool equivalent(const Group& g, const Cusp& z1, const Cusp& z2) {
  return g.kind == GroupKind::Gamma0 ? equivalent_gamma0(g.level, z1, z2) : equivalent_gamma1(g.level, z1, z2);
}

std::int64_t width(const Group& g, const Cusp& z) {
  const std::int64_t n = g.level;
  if (g.kind == GroupKind::Gamma0) {
    const std::int64_t c = z.c % n;
    return n / gcd_with_level(c * c % n, n);
  }
  const std::int64_t e = gcd_with_level(z.c, n);
  if (n == 4 && e == 2) return 1;
  return n / e;
}

std::int64_t gamma0_index(std::int64_t n) {
  std::int64_t idx = n;
  for (auto p : prime_factors(n)) idx = idx / p * (p + 1);
  return idx;
}

std::int64_t gamma1_cusp_count_formula(std::int64_t n) {
  std::int64_t s = 0;
  for (auto d : divisors(n)) s += euler_phi(d) * euler_phi(n / d);
  return s / 2;
}

}  // namespace qcert
