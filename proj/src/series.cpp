#include "qcert/series.hpp"

#include <algorithm>
#include <bit>
#include <cstring>

namespace qcert {

namespace {

constexpr std::size_t kKroneckerThreshold = 48;
constexpr std::size_t kNewtonThreshold = 96;

std::int64_t num_on_grid(const Rational& e, std::int64_t grid) {
  Rational scaled = e * Rational(Integer(static_cast<long>(grid)));
  return to_int64(scaled);
}

}  // namespace

Series Series::zero(const Rational& precision) {
  Series s;
  s.grid_ = to_int64(Integer(precision.get_den()));
  s.prec_ = to_int64(Integer(precision.get_num()));
  s.low_ = s.prec_;
  s.normalize();
  return s;
}

Series Series::constant(const Integer& c, const Rational& precision) {
  return monomial(c, Rational(0), precision);
}

Series Series::monomial(const Integer& c, const Rational& exponent, const Rational& precision) {
  std::int64_t grid = lcm64(to_int64(Integer(exponent.get_den())), to_int64(Integer(precision.get_den())));
  std::int64_t e = num_on_grid(exponent, grid);
  std::int64_t p = num_on_grid(precision, grid);
  if (e >= p || c == 0) return zero(precision);
  return from_coefficients({c}, e, p, grid);
}

Series Series::from_coefficients(std::vector<Integer> coeffs, std::int64_t low, std::int64_t precision,
                                 std::int64_t grid) {
  if (grid <= 0) throw GridError("grid must be positive");
  Series s;
  s.grid_ = grid;
  s.low_ = low;
  s.prec_ = precision;
  if (low >= precision) {
    coeffs.clear();
  } else if (static_cast<std::int64_t>(coeffs.size()) > precision - low) {
    coeffs.resize(static_cast<std::size_t>(precision - low));
  }
  s.coeffs_ = std::move(coeffs);
  s.normalize();
  return s;
}

void Series::normalize() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
  } else {
    low_ += first - coeffs_.begin();
    coeffs_.erase(coeffs_.begin(), first);
    while (coeffs_.back() == 0) coeffs_.pop_back();
  }
  if (coeffs_.empty()) {
    prec_ = floor_div(prec_, grid_);
    grid_ = 1;
    low_ = prec_;
    return;
  }
  std::int64_t g = grid_;
  for (std::size_t i = 0; i < coeffs_.size() && g > 1; ++i)
    if (coeffs_[i] != 0) g = gcd64(g, low_ + static_cast<std::int64_t>(i));
  if (g > 1) {
    std::vector<Integer> reduced;
    reduced.reserve(coeffs_.size() / g + 1);
    for (std::size_t i = 0; i < coeffs_.size(); i += static_cast<std::size_t>(g)) reduced.push_back(std::move(coeffs_[i]));
    coeffs_ = std::move(reduced);
    grid_ /= g;
    low_ /= g;
    prec_ = floor_div(prec_, g);
  }
}

Rational Series::precision() const { return make_rational(prec_, grid_); }

Rational Series::order() const {
  if (is_zero()) throw ZeroUpToPrecision("series vanishes up to its precision " + to_string(precision()));
  return make_rational(low_, grid_);
}

const Integer& Series::leading_coefficient() const {
  if (is_zero()) throw ZeroUpToPrecision("series vanishes up to its precision " + to_string(precision()));
  return coeffs_.front();
}

Integer Series::coefficient(const Rational& e) const {
  if (e >= precision())
    throw PrecisionExceeded("coefficient of q^" + to_string(e) + " requested beyond precision " +
                            to_string(precision()));
  Rational scaled = e * Rational(Integer(static_cast<long>(grid_)));
  if (!is_integral(scaled)) return 0;
  std::int64_t n = to_int64(scaled);
  if (n < low_ || n >= low_ + static_cast<std::int64_t>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(n - low_)];
}

Integer Series::coefficient(std::int64_t n) const { return coefficient(Rational(Integer(static_cast<long>(n)))); }

std::vector<Integer> Series::dense_on_grid(std::int64_t d, std::int64_t low, std::int64_t count) const {
  if (d % grid_ != 0) throw GridError("target grid is not a multiple of the series grid");
  const std::int64_t k = d / grid_;
  if (low + count > prec_ * k) throw PrecisionExceeded("dense view requested beyond precision");
  std::vector<Integer> out(static_cast<std::size_t>(std::max<std::int64_t>(count, 0)));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    std::int64_t e = (low_ + static_cast<std::int64_t>(i)) * k - low;
    if (e < 0) continue;
    if (e >= count) break;
    out[static_cast<std::size_t>(e)] = coeffs_[i];
  }
  return out;
}

Series Series::truncated(const Rational& precision) const {
  Rational scaled = precision * Rational(Integer(static_cast<long>(grid_)));
  std::int64_t p = std::min(prec_, to_int64(ceil(scaled)));
  std::vector<Integer> c(coeffs_.begin(), coeffs_.end());
  return from_coefficients(std::move(c), low_, p, grid_);
}

Series Series::shifted(const Rational& e) const {
  std::int64_t d = lcm64(grid_, to_int64(Integer(e.get_den())));
  std::int64_t k = d / grid_;
  std::int64_t s = num_on_grid(e, d);
  std::int64_t count = static_cast<std::int64_t>(coeffs_.size());
  std::int64_t new_low = is_zero() ? prec_ * k : low_ * k;
  auto dense = is_zero() ? std::vector<Integer>{} : dense_on_grid(d, new_low, (count - 1) * k + 1);
  return from_coefficients(std::move(dense), new_low + s, prec_ * k + s, d);
}

Series Series::dilated(std::int64_t k) const {
  if (k < 1) throw GridError("dilation factor must be positive");
  std::vector<Integer> out;
  if (!coeffs_.empty()) {
    out.resize((coeffs_.size() - 1) * static_cast<std::size_t>(k) + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * static_cast<std::size_t>(k)] = coeffs_[i];
  }
  return from_coefficients(std::move(out), low_ * k, prec_ * k, grid_);
}

Series Series::scaled(const Integer& c) const {
  std::vector<Integer> out(coeffs_.begin(), coeffs_.end());
  for (auto& x : out) x *= c;
  return from_coefficients(std::move(out), low_, prec_, grid_);
}

Series operator+(const Series& a, const Series& b) {
  const std::int64_t d = lcm64(a.grid_, b.grid_);
  const std::int64_t ka = d / a.grid_, kb = d / b.grid_;
  const std::int64_t prec = std::min(a.prec_ * ka, b.prec_ * kb);
  std::int64_t low = prec;
  if (!a.is_zero()) low = std::min(low, a.low_ * ka);
  if (!b.is_zero()) low = std::min(low, b.low_ * kb);
  const std::int64_t count = prec - low;
  if (count <= 0) return Series::from_coefficients({}, prec, prec, d);
  auto sum = a.dense_on_grid(d, low, count);
  auto other = b.dense_on_grid(d, low, count);
  for (std::size_t i = 0; i < sum.size(); ++i)
    if (other[i] != 0) sum[i] += other[i];
  return Series::from_coefficients(std::move(sum), low, prec, d);
}

Series operator-(const Series& a) { return a.scaled(-1); }

Series operator-(const Series& a, const Series& b) { return a + (-b); }

Series operator*(const Series& a, const Series& b) {
  const std::int64_t d = lcm64(a.grid_, b.grid_);
  const std::int64_t ka = d / a.grid_, kb = d / b.grid_;
  const std::int64_t pa = a.prec_ * ka, pb = b.prec_ * kb;
  // A series that vanishes up to its precision has order at least that precision.
  const std::int64_t oa = a.is_zero() ? pa : a.low_ * ka;
  const std::int64_t ob = b.is_zero() ? pb : b.low_ * kb;
  const std::int64_t prec = std::min(pa + ob, pb + oa);
  if (a.is_zero() || b.is_zero()) return Series::from_coefficients({}, prec, prec, d);
  const std::int64_t low = oa + ob;
  const std::int64_t count = prec - low;
  if (count <= 0) return Series::from_coefficients({}, prec, prec, d);
  std::vector<Integer> da, db;
  std::span<const Integer> sa = a.coeffs_, sb = b.coeffs_;
  if (ka != 1) {
    da = a.dense_on_grid(d, oa, std::min<std::int64_t>(count, pa - oa));
    sa = da;
  }
  if (kb != 1) {
    db = b.dense_on_grid(d, ob, std::min<std::int64_t>(count, pb - ob));
    sb = db;
  }
  auto c = detail::mul_truncated(sa, sb, static_cast<std::size_t>(count));
  return Series::from_coefficients(std::move(c), low, prec, d);
}

Series invert(const Series& a) {
  if (a.is_zero()) throw NonUnitLeading("cannot invert a series that vanishes up to its precision");
  const Integer& lead = a.leading_coefficient();
  if (lead != 1 && lead != -1)
    throw NonUnitLeading("leading coefficient " + lead.get_str() + " is not a unit");
  const std::int64_t rel = a.precision_numerator() - a.low();
  auto inv = detail::inverse_truncated(a.coefficients(), static_cast<std::size_t>(rel));
  return Series::from_coefficients(std::move(inv), -a.low(), rel - a.low(), a.grid());
}

Series pow(const Series& a, std::int64_t k) {
  if (k < 0) return pow(invert(a), -k);
  if (k == 0) {
    const std::int64_t rel = a.is_zero() ? 0 : a.precision_numerator() - a.low();
    return Series::from_coefficients({Integer(1)}, 0, rel, a.grid());
  }
  Series result;
  bool have = false;
  Series base = a;
  while (k > 0) {
    if (k & 1) {
      result = have ? result * base : base;
      have = true;
    }
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

bool agree(const Series& a, const Series& b) { return (a - b).is_zero(); }

Series u_p(const Series& f, std::int64_t p) {
  if (f.grid() != 1) throw GridError("U_p needs integer exponents; series is on grid " + std::to_string(f.grid()));
  if (p < 2) throw GridError("U_p needs p >= 2");
  const std::int64_t prec = ceil_div(f.precision_numerator(), p);
  if (f.is_zero()) return Series::from_coefficients({}, prec, prec, 1);
  const std::int64_t low = ceil_div(f.low(), p);
  std::vector<Integer> out;
  auto c = f.coefficients();
  for (std::int64_t m = low; m < prec; ++m) {
    std::int64_t idx = p * m - f.low();
    out.push_back(idx < static_cast<std::int64_t>(c.size()) ? c[static_cast<std::size_t>(idx)] : Integer(0));
  }
  return Series::from_coefficients(std::move(out), low, prec, 1);
}

namespace detail {

std::vector<Integer> mul_schoolbook(std::span<const Integer> a, std::span<const Integer> b, std::size_t n) {
  std::vector<Integer> c(n);
  const std::size_t la = std::min(a.size(), n);
  for (std::size_t i = 0; i < la; ++i) {
    if (a[i] == 0) continue;
    const std::size_t lim = std::min(b.size(), n - i);
    mpz_srcptr ai = a[i].get_mpz_t();
    for (std::size_t j = 0; j < lim; ++j) mpz_addmul(c[i + j].get_mpz_t(), ai, b[j].get_mpz_t());
  }
  return c;
}

namespace {

std::size_t max_bits(std::span<const Integer> v) {
  std::size_t bits = 0;
  for (const auto& x : v)
    if (x != 0) bits = std::max(bits, mpz_sizeinbase(x.get_mpz_t(), 2));
  return bits;
}

// Evaluates the coefficient vector at X = 2^(64 w) as one signed integer.
Integer pack(std::span<const Integer> v, std::size_t w) {
  std::vector<mp_limb_t> pos(v.size() * w, 0), neg(v.size() * w, 0);
  bool any_neg = false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    mpz_srcptr z = v[i].get_mpz_t();
    const int s = mpz_sgn(z);
    if (s == 0) continue;
    const std::size_t len = mpz_size(z);
    auto& dst = s > 0 ? pos : neg;
    any_neg |= s < 0;
    std::memcpy(dst.data() + i * w, mpz_limbs_read(z), len * sizeof(mp_limb_t));
  }
  mpz_t view;
  Integer out(mpz_roinit_n(view, pos.data(), static_cast<mp_size_t>(pos.size())));
  if (any_neg) {
    mpz_t nview;
    mpz_sub(out.get_mpz_t(), out.get_mpz_t(), mpz_roinit_n(nview, neg.data(), static_cast<mp_size_t>(neg.size())));
  }
  return out;
}

// Reads n balanced digits of base 2^(64 w) back out of the product.
std::vector<Integer> unpack(const Integer& c, std::size_t w, std::size_t n) {
  std::vector<Integer> out(n);
  const int sign = mpz_sgn(c.get_mpz_t());
  if (sign == 0) return out;
  const mp_limb_t* limbs = mpz_limbs_read(c.get_mpz_t());
  const std::size_t size = mpz_size(c.get_mpz_t());
  const std::size_t slot_bits = 64 * w;
  Integer base;
  mpz_ui_pow_ui(base.get_mpz_t(), 2, slot_bits);
  bool carry = false;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t start = i * w;
    if (start >= size && !carry) break;
    Integer v;
    if (start < size) {
      mpz_t view;
      const std::size_t len = std::min(w, size - start);
      v = Integer(mpz_roinit_n(view, limbs + start, static_cast<mp_size_t>(len)));
    }
    if (carry) v += 1;
    if (v != 0 && mpz_sizeinbase(v.get_mpz_t(), 2) >= slot_bits) {
      v -= base;
      carry = true;
    } else {
      carry = false;
    }
    out[i] = sign < 0 ? Integer(-v) : v;
  }
  return out;
}

}  // namespace

std::vector<Integer> mul_kronecker(std::span<const Integer> a, std::span<const Integer> b, std::size_t n) {
  a = a.subspan(0, std::min(a.size(), n));
  b = b.subspan(0, std::min(b.size(), n));
  const std::size_t ba = max_bits(a), bb = max_bits(b);
  if (ba == 0 || bb == 0) return std::vector<Integer>(n);
  const std::size_t terms = std::min(a.size(), b.size());
  const std::size_t slot_bits = ba + bb + static_cast<std::size_t>(std::bit_width(terms)) + 2;
  const std::size_t w = (slot_bits + 63) / 64;
  Integer pa = pack(a, w);
  Integer pb = pack(b, w);
  Integer pc = pa * pb;
  return unpack(pc, w, n);
}

std::vector<Integer> mul_truncated(std::span<const Integer> a, std::span<const Integer> b, std::size_t n) {
  const std::size_t la = std::min(a.size(), n), lb = std::min(b.size(), n);
  if (std::min(la, lb) < kKroneckerThreshold) return mul_schoolbook(a, b, n);
  return mul_kronecker(a, b, n);
}

std::vector<Integer> inverse_truncated(std::span<const Integer> a, std::size_t n) {
  if (n == 0) return {};
  const Integer& a0 = a[0];
  if (n <= kNewtonThreshold) {
    std::vector<Integer> b(n);
    b[0] = a0;
    Integer s;
    for (std::size_t k = 1; k < n; ++k) {
      s = 0;
      const std::size_t lim = std::min(k, a.size() - 1);
      for (std::size_t i = 1; i <= lim; ++i) mpz_addmul(s.get_mpz_t(), a[i].get_mpz_t(), b[k - i].get_mpz_t());
      b[k] = a0 > 0 ? Integer(-s) : s;
    }
    return b;
  }
  const std::size_t h = (n + 1) / 2;
  auto b = inverse_truncated(a, h);
  auto e = mul_truncated(a.subspan(0, std::min(a.size(), n)), b, n);
  // e = 1 + O(q^h); correct the upper half.
  std::span<const Integer> tail(e.data() + h, n - h);
  auto d = mul_truncated(b, tail, n - h);
  b.resize(n);
  for (std::size_t j = 0; j < n - h; ++j) b[h + j] = -d[j];
  return b;
}

}  // namespace detail

}  // namespace qcert
