#include "qcert/rank.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>

#include "qcert/etaq.hpp"
#include "qcert/identities.hpp"
#include "qcert/products.hpp"

namespace qcert {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Rational rat(std::int64_t n) { return Rational(Integer(static_cast<long>(n))); }

Integer ipow(std::int64_t p, int e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
  return r;
}

std::int64_t ipow64(std::int64_t p, int e) { return to_int64(ipow(p, e)); }

// Numerator of 1 + 4 sum_{m>=1} (-1)^m q^{m(3m+1)/2} / (1 + q^m), each
// 1/(1+q^m) expanded geometrically; add(e, s) receives exponent and sign.
template <class Add>
void bilateral_numerator(std::int64_t len, Add add) {
  for (std::int64_t m = 1;; ++m) {
    const std::int64_t e0 = m * (3 * m + 1) / 2;
    if (e0 >= len) break;
    int sign = (m % 2 == 0) ? 1 : -1;
    for (std::int64_t e = e0; e < len; e += m, sign = -sign) add(e, sign);
  }
}

// Both sides must be known below q^depth.
bool same_below(const Series& a, const Series& b, std::int64_t depth) {
  const Rational d = rat(depth);
  if (a.precision() < d || b.precision() < d)
    throw PrecisionExhausted("series known only below q^" + to_string(std::min(a.precision(), b.precision())));
  return a.truncated(d) == b.truncated(d);
}

// B(q) = J_{2,5} / J_{1,5} below q^prec.
Series b_quotient(std::int64_t prec) { return jab(2, 5, prec) * invert(jab(1, 5, prec)); }

}  // namespace

Integer RankParityTable::at(std::int64_t n) const {
  if (n < 0) return 0;
  if (n > nmax) throw TableTooSmall("a_f(" + std::to_string(n) + ") is beyond the table size " + std::to_string(nmax));
  return values[static_cast<std::size_t>(n)];
}

Integer RankParityTable::at(const Rational& x) const {
  if (!is_integral(x)) return 0;
  return at(to_int64(x));
}

std::int64_t ResidueTable::at(std::int64_t n) const {
  if (n < 0) return 0;
  if (n > nmax) throw TableTooSmall("a_f(" + std::to_string(n) + ") is beyond the table size " + std::to_string(nmax));
  return values[static_cast<std::size_t>(n)];
}

RankParityTable af_table(std::int64_t nmax) {
  if (nmax < 0) throw std::invalid_argument("af_table needs nmax >= 0");
  const std::int64_t len = nmax + 1;
  std::vector<Integer> v(static_cast<std::size_t>(len));
  v[0] = 1;
  bilateral_numerator(len, [&](std::int64_t e, int s) { v[static_cast<std::size_t>(e)] += 4 * s; });
  divide_in_place(v, euler_factor(1, len));
  return {nmax, std::move(v)};
}

std::vector<Integer> af_eulerian(std::int64_t nmax) {
  if (nmax < 0) throw std::invalid_argument("af_eulerian needs nmax >= 0");
  const std::size_t len = static_cast<std::size_t>(nmax + 1);
  // term holds 1 / (-q; q)_n^2.
  std::vector<Integer> term(len), out(len);
  term[0] = 1;
  out[0] = 1;
  for (std::size_t n = 1; n * n < len; ++n) {
    for (int twice = 0; twice < 2; ++twice)
      for (std::size_t i = n; i < len; ++i) term[i] -= term[i - n];
    for (std::size_t i = 0; i + n * n < len; ++i) out[i + n * n] += term[i];
  }
  return out;
}

ResidueTable af_residues(std::int64_t nmax, std::int64_t modulus) {
  if (nmax < 0 || modulus < 1) throw std::invalid_argument("af_residues needs nmax >= 0 and modulus >= 1");
  const std::int64_t len = nmax + 1;
  std::vector<std::int64_t> v(static_cast<std::size_t>(len));
  v[0] = 1 % modulus;
  bilateral_numerator(len, [&](std::int64_t e, int s) {
    auto& x = v[static_cast<std::size_t>(e)];
    x = mod(x + 4 * s, modulus);
  });
  const SparseFactor euler = euler_factor(1, len);
  for (std::int64_t i = 0; i < len; ++i) {
    std::int64_t acc = v[static_cast<std::size_t>(i)];
    for (auto [e, c] : euler.terms) {
      if (e > i) break;
      acc -= c * v[static_cast<std::size_t>(i - e)];
    }
    v[static_cast<std::size_t>(i)] = mod(acc, modulus);
  }
  return {modulus, nmax, std::move(v)};
}

Integer cf(const RankParityTable& table, std::int64_t n) {
  Integer r = table.at(5 * n - 1);
  if (n >= 0 && n % 5 == 0) r += table.at(n / 5);
  return r;
}

std::int64_t cf(const ResidueTable& table, std::int64_t n) {
  std::int64_t r = table.at(5 * n - 1);
  if (n >= 0 && n % 5 == 0) r += table.at(n / 5);
  return mod(r, table.modulus);
}

bool verify_af5id(std::int64_t depth) {
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  const RankParityTable table = af_table(5 * depth);
  std::vector<Integer> lhs(static_cast<std::size_t>(depth));
  for (std::int64_t n = 0; n < depth; ++n) lhs[static_cast<std::size_t>(n)] = cf(table, n);
  const Series rhs = j_combination({{1, 0, {{2, 4}, {10, 2}, {1, -1}, {4, -3}, {20, -1}}},
                                    {-4, 1, {{1, 2}, {4, 3}, {5, 1}, {20, 1}, {2, -5}, {10, -1}}}},
                                   depth);
  return same_below(Series::from_coefficients(std::move(lhs), 0, depth), rhs, depth);
}

bool verify_af7id(std::int64_t depth) {
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  const RankParityTable table = af_table(7 * depth);
  std::vector<Integer> lhs(static_cast<std::size_t>(depth));
  for (std::int64_t n = 0; n < depth; ++n) {
    Integer v = -table.at(7 * n - 2);
    if (n % 7 == 0) v += table.at(n / 7);
    lhs[static_cast<std::size_t>(n)] = v;
  }
  const Series rhs = j_combination({{1, 0, {{1, 3}, {7, 6}, {2, -5}, {14, -3}}},
                                    {6, 2, {{14, 4}, {1, 4}, {2, -6}, {7, -1}}}},
                                   depth);
  return same_below(Series::from_coefficients(std::move(lhs), 0, depth), rhs, depth);
}

bool verify_j1_dissection(std::int64_t depth) {
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  const std::int64_t inner = depth / 5 + 2;
  const Series b5 = b_quotient(inner).dilated(5);
  const Series q = Series::monomial(1, 1, rat(depth));
  const Series q2 = Series::monomial(1, 2, rat(depth));
  const Series rhs = jb(25, depth) * (b5 - q - q2 * invert(b5));
  return same_below(jb(1, depth), rhs, depth);
}

bool verify_b_identity(std::int64_t depth) {
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  const Series b5 = pow(b_quotient(depth + 2), 5);
  const Series rhs = b5 - Series::monomial(11, 1, rat(depth)) - Series::monomial(1, 2, rat(depth)) * invert(b5);
  return same_below(expand_j({{1, 6}, {5, -6}}, depth), rhs, depth);
}

Integer delta(int alpha, std::int64_t p) {
  if (alpha < 1) throw std::invalid_argument("delta needs alpha >= 1");
  const Integer m = ipow(p, alpha);
  Integer r;
  const Integer twenty_four = 24;
  if (mpz_invert(r.get_mpz_t(), twenty_four.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::invalid_argument("24 is not invertible modulo " + m.get_str());
  return r;
}

Integer lambda(int alpha) {
  if (alpha < 0) throw std::invalid_argument("lambda needs alpha >= 0");
  const Integer r = 5 * (1 - ipow(25, alpha / 2));
  return r / 24;
}

std::vector<Series> l_sequence(int alpha_max, std::int64_t depth) {
  if (alpha_max < 0 || depth < 1) throw PrecisionExhausted("l_sequence needs alpha_max >= 0 and depth >= 1");
  std::int64_t in_prec = depth;
  for (int a = alpha_max - 1; a >= 0; --a) in_prec = 5 * in_prec - (a % 2 == 1 ? 1 : 0);
  std::vector<Series> out;
  out.push_back(expand_combination(prefactor_pa(), rat(in_prec)));
  for (int a = 0; a < alpha_max; ++a) out.push_back(a % 2 == 0 ? u_a(out.back()) : u_b(out.back()));
  for (const auto& s : out)
    if (s.precision() < rat(depth))
      throw PrecisionExhausted("L_alpha known only below q^" + to_string(s.precision()));
  return out;
}

std::vector<TPoly> l_polynomials(int alpha_max) {
  constexpr std::int64_t kMargin = 10;
  std::vector<TPoly> polys{TPoly::monomial(1, 0)};
  for (int a = 0; a < alpha_max; ++a) {
    const bool even = a % 2 == 0;
    const TPoly& p = polys.back();
    if (p.is_zero()) {
      polys.emplace_back();
      continue;
    }
    const std::int64_t deg = p.max_degree();
    const std::int64_t bound = even ? 5 * deg + 5 : 5 * deg;
    const std::int64_t out_prec = bound + kMargin + 2;
    const std::int64_t in_prec = 5 * out_prec;
    const Series s = expand_combination(even ? prefactor_pa() : prefactor_pb(), rat(in_prec)) * evaluate(p, in_prec + 2);
    const Series image = even ? u_a(s) : u_b(s);
    const Series v = expand_combination(even ? prefactor_pb() : prefactor_pa(), rat(out_prec + 4));
    polys.push_back(reduce_to_tpoly(image, v, 0, {bound, kMargin}));
  }
  return polys;
}

std::vector<TPoly> l_polynomials_by_recursion(int alpha_max) {
  const InitialTables& seeds = initial_tables(false);
  std::vector<TPoly> polys{TPoly::monomial(1, 0)};
  for (int a = 0; a < alpha_max; ++a) {
    const TPoly& p = polys.back();
    TPoly next;
    if (!p.is_zero()) {
      if (p.min_degree() < -4) throw std::logic_error("L-polynomial below the seed range");
      const auto family = extend_family(a % 2 == 0 ? seeds.group_a : seeds.group_b, std::max<std::int64_t>(0, p.max_degree()));
      for (const auto& [k, c] : p.terms()) next = next + family.at(k).scaled(c);
    }
    polys.push_back(std::move(next));
  }
  return polys;
}

std::int64_t l_valuation_bound(int alpha, std::int64_t n) {
  if (alpha < 1) throw std::invalid_argument("valuation bounds start at alpha = 1");
  if (alpha == 1) return floor_div(3 * n - 2, 4);
  if (alpha % 2 == 0) return alpha / 2 + floor_div(3 * n - 3, 4);
  return alpha / 2 + 1 + floor_div(3 * n - 6, 4);
}

std::int64_t l_order_bound(int alpha) { return (alpha >= 3 && alpha % 2 == 1) ? 2 : 1; }

LValuationReport verify_l_sequence_valuations(int alpha_max, std::int64_t cf_terms) {
  if (alpha_max < 1) throw std::invalid_argument("verify_l_sequence_valuations needs alpha_max >= 1");
  const auto start = Clock::now();
  LValuationReport report;
  report.polynomials = l_polynomials(alpha_max);
  report.routes_agree = report.polynomials == l_polynomials_by_recursion(alpha_max);

  std::int64_t table_size = 0;
  for (int a = 1; a <= alpha_max; ++a)
    table_size = std::max(table_size, to_int64(Integer(5 * (ipow(5, a) * (cf_terms - 1) + lambda(a)))));
  const RankParityTable table = af_table(table_size);

  report.pass = report.routes_agree;
  for (int a = 1; a <= alpha_max; ++a) {
    const TPoly& p = report.polynomials[static_cast<std::size_t>(a)];
    LValuationRow row;
    row.alpha = a;
    row.cf_terms = cf_terms;
    row.slack = kInfiniteValuation;
    bool ok = true;
    if (!p.is_zero()) {
      row.ord_t = p.min_degree();
      row.degree = p.max_degree();
      ok = row.ord_t >= l_order_bound(a);
      for (const auto& [n, c] : p.terms())
        row.slack = std::min<std::int64_t>(row.slack, valuation(c, 5) - l_valuation_bound(a, n));
      ok = ok && row.slack >= 0;
    }
    // L_a times J_1^4/(J_5 J_2^2) (even a) or J_5^4/(J_10^2 J_1) (odd a) generates c_f(5^a n + lambda_a).
    const bool even = a % 2 == 0;
    const Series l = expand_combination(even ? prefactor_pa() : prefactor_pb(), rat(cf_terms + 2)) *
                     evaluate(p, cf_terms + 4);
    const Series gen = multiply_by_j(l, even ? std::map<std::int64_t, std::int64_t>{{1, 4}, {5, -1}, {2, -2}}
                                             : std::map<std::int64_t, std::int64_t>{{5, 4}, {10, -2}, {1, -1}});
    row.cf_consistent = gen.precision() >= rat(cf_terms);
    const Integer step = ipow(5, a), shift = lambda(a);
    for (std::int64_t n = 0; row.cf_consistent && n < cf_terms; ++n)
      row.cf_consistent = gen.coefficient(rat(n)) == cf(table, to_int64(Integer(step * n + shift)));
    row.pass = ok && row.cf_consistent;
    report.pass = report.pass && row.pass;
    report.rows.push_back(row);
  }
  report.seconds = seconds_since(start);
  return report;
}

bool check_sigma_valuations() {
  const auto& sigma = sigma_set();
  std::map<std::int64_t, TPoly> rows;
  for (std::size_t j = 0; j < sigma.size(); ++j) rows[static_cast<std::int64_t>(j)] = sigma[j];
  return check_valuation_bounds(valuation_ledger(rows),
                                [](std::int64_t j, std::int64_t l) { return floor_div(3 * l + j, 4); });
}

bool check_seed_valuations() {
  const InitialTables& seeds = initial_tables(false);
  return check_valuation_bounds(valuation_ledger(seeds.group_a),
                                [](std::int64_t k, std::int64_t n) { return floor_div(3 * n - k - 2, 4); }) &&
         check_valuation_bounds(valuation_ledger(seeds.group_b),
                                [](std::int64_t k, std::int64_t n) { return floor_div(3 * n - k, 4); });
}

bool check_family_valuations(std::int64_t kmax) {
  const InitialTables& seeds = initial_tables(false);
  auto positive = [](std::map<std::int64_t, TPoly> family) {
    std::erase_if(family, [](const auto& kv) { return kv.first < 1; });
    return family;
  };
  return check_valuation_bounds(valuation_ledger(positive(extend_family(seeds.group_a, kmax))),
                                [](std::int64_t k, std::int64_t n) { return floor_div(3 * n - k, 4); }) &&
         check_valuation_bounds(valuation_ledger(positive(extend_family(seeds.group_b, kmax))),
                                [](std::int64_t k, std::int64_t n) { return floor_div(3 * n - k + 2, 4); });
}

std::int64_t rank_parity_table_size(std::int64_t p, int alpha, std::int64_t n_max) {
  return ipow64(p, alpha) * n_max + to_int64(delta(alpha, p));
}

std::int64_t cf_table_size(int alpha, bool odd, std::int64_t n_max) {
  const int e = 2 * alpha + (odd ? 1 : 0);
  return std::max<std::int64_t>(0, 5 * (ipow64(5, e) * n_max + to_int64(lambda(e))) - 1);
}

namespace {

CongruenceReport rank_parity_scan(std::int64_t p, int alpha, std::int64_t n_max, const ResidueTable& table) {
  if (alpha < 3) throw std::invalid_argument("rank-parity congruences need alpha >= 3");
  const auto start = Clock::now();
  CongruenceReport r;
  r.prime = p;
  r.alpha = alpha;
  r.id = "rank-parity-mod" + std::to_string(p) + "-a" + std::to_string(alpha);
  r.modulus = ipow(p, p == 5 ? alpha / 2 : (alpha - 1) / 2);
  r.n_max = n_max;
  const std::int64_t m = to_int64(r.modulus);
  if (table.modulus % m != 0)
    throw std::invalid_argument("residue table modulus " + std::to_string(table.modulus) + " is not a multiple of " +
                                std::to_string(m));
  const std::int64_t needed = rank_parity_table_size(p, alpha, n_max);
  if (table.nmax < needed)
    throw TableTooSmall("scan needs a_f up to " + std::to_string(needed) + ", table has " + std::to_string(table.nmax));
  const std::int64_t big = ipow64(p, alpha), small = ipow64(p, alpha - 2);
  const std::int64_t d_big = to_int64(delta(alpha, p)), d_small = to_int64(delta(alpha - 2, p));
  const int sign = p == 5 ? 1 : -1;
  for (std::int64_t n = 0; n <= n_max; ++n) {
    const std::int64_t v = table.at(big * n + d_big) + sign * table.at(small * n + d_small);
    if (mod(v, m) != 0) r.failures.push_back(n);
  }
  r.seconds = seconds_since(start);
  return r;
}

}  // namespace

CongruenceReport check_rank_parity_mod5(int alpha, std::int64_t n_max, const ResidueTable& table) {
  return rank_parity_scan(5, alpha, n_max, table);
}

CongruenceReport check_rank_parity_mod5(int alpha, std::int64_t n_max) {
  const auto start = Clock::now();
  auto r = rank_parity_scan(5, alpha, n_max,
                            af_residues(rank_parity_table_size(5, alpha, n_max), ipow64(5, std::max(1, alpha / 2))));
  r.seconds = seconds_since(start);
  return r;
}

CongruenceReport check_rank_parity_mod7(int alpha, std::int64_t n_max, const ResidueTable& table) {
  return rank_parity_scan(7, alpha, n_max, table);
}

CongruenceReport check_rank_parity_mod7(int alpha, std::int64_t n_max) {
  const auto start = Clock::now();
  auto r = rank_parity_scan(7, alpha, n_max,
                            af_residues(rank_parity_table_size(7, alpha, n_max), ipow64(7, std::max(1, (alpha - 1) / 2))));
  r.seconds = seconds_since(start);
  return r;
}

CongruenceReport check_cf_congruence(int alpha, bool odd, std::int64_t n_max, const ResidueTable& table) {
  if (alpha < 1) throw std::invalid_argument("c_f congruences need alpha >= 1");
  const auto start = Clock::now();
  const int e = 2 * alpha + (odd ? 1 : 0);
  CongruenceReport r;
  r.prime = 5;
  r.alpha = e;
  r.id = "cf-mod5-a" + std::to_string(e);
  r.modulus = ipow(5, odd ? alpha + 1 : alpha);
  r.n_max = n_max;
  const std::int64_t m = to_int64(r.modulus);
  if (table.modulus % m != 0)
    throw std::invalid_argument("residue table modulus " + std::to_string(table.modulus) + " is not a multiple of " +
                                std::to_string(m));
  const std::int64_t needed = cf_table_size(alpha, odd, n_max);
  if (table.nmax < needed)
    throw TableTooSmall("scan needs a_f up to " + std::to_string(needed) + ", table has " + std::to_string(table.nmax));
  const std::int64_t step = ipow64(5, e), shift = to_int64(lambda(e));
  for (std::int64_t n = 0; n <= n_max; ++n)
    if (mod(cf(table, step * n + shift), m) != 0) r.failures.push_back(n);
  r.seconds = seconds_since(start);
  return r;
}

CongruenceReport check_cf_congruence(int alpha, bool odd, std::int64_t n_max) {
  const auto start = Clock::now();
  auto r = check_cf_congruence(alpha, odd, n_max,
                               af_residues(cf_table_size(alpha, odd, n_max), ipow64(5, odd ? alpha + 1 : alpha)));
  r.seconds = seconds_since(start);
  return r;
}

}  // namespace qcert
