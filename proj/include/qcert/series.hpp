#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qcert/arith.hpp"
#include "qcert/errors.hpp"

namespace qcert {

/// Truncated formal Laurent series in q^(1/D) with integer coefficients.
///
/// Exponents are stored as numerators over the grid D. Coefficients are
/// stored densely from the leading exponent; every coefficient with exponent
/// numerator below `precision_numerator()` is known exactly, everything at or
/// beyond it is unknown. Values are normalized on construction: the leading
/// stored coefficient is nonzero, trailing zeros are dropped and the grid is
/// the smallest one that carries every nonzero exponent.
class Series {
 public:
  /// Zero up to precision 0.
  Series() = default;

  static Series zero(const Rational& precision);
  static Series constant(const Integer& c, const Rational& precision);
  static Series monomial(const Integer& c, const Rational& exponent, const Rational& precision);
  /// coeffs[i] is the coefficient of q^((low + i) / grid); precision is a numerator on the same grid.
  static Series from_coefficients(std::vector<Integer> coeffs, std::int64_t low, std::int64_t precision,
                                  std::int64_t grid = 1);

  std::int64_t grid() const noexcept { return grid_; }
  /// Numerator of the leading exponent; equals the precision numerator for a zero series.
  std::int64_t low() const noexcept { return low_; }
  std::int64_t precision_numerator() const noexcept { return prec_; }
  Rational precision() const;

  /// True when every known coefficient vanishes.
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Exponent of the first nonzero coefficient; throws ZeroUpToPrecision.
  Rational order() const;
  const Integer& leading_coefficient() const;
  /// Exact coefficient of q^e; throws PrecisionExceeded if e >= precision.
  Integer coefficient(const Rational& e) const;
  /// Coefficient of q^n for an integer exponent; series must be on grid 1.
  Integer coefficient(std::int64_t n) const;
  std::span<const Integer> coefficients() const noexcept { return coeffs_; }

  Series truncated(const Rational& precision) const;
  /// q^e * f.
  Series shifted(const Rational& e) const;
  /// f(q^k), k >= 1.
  Series dilated(std::int64_t k) const;
  Series scaled(const Integer& c) const;
  /// Same series written on grid d (d a multiple of the current grid); not normalized.
  std::vector<Integer> dense_on_grid(std::int64_t d, std::int64_t low, std::int64_t count) const;

  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator-(const Series& a);
  friend Series operator*(const Series& a, const Series& b);

  /// Structural equality of the normalized representation (including precision).
  friend bool operator==(const Series& a, const Series& b) = default;

 private:
  void normalize();

  std::int64_t grid_ = 1;
  std::int64_t low_ = 0;
  std::int64_t prec_ = 0;
  std::vector<Integer> coeffs_;
};

/// Multiplicative inverse; the leading coefficient must be +1 or -1.
Series invert(const Series& a);
/// k-th power; negative k goes through invert.
Series pow(const Series& a, std::int64_t k);
/// a == b on the range where both are known.
bool agree(const Series& a, const Series& b);
/// Atkin's U_p on an integer-exponent series: sum over p*m >= m0 of a(p m) q^m.
Series u_p(const Series& f, std::int64_t p);

namespace detail {
/// Product of two dense coefficient vectors truncated to n entries. Switches
/// to Kronecker substitution once both inputs are long.
std::vector<Integer> mul_truncated(std::span<const Integer> a, std::span<const Integer> b, std::size_t n);
std::vector<Integer> mul_schoolbook(std::span<const Integer> a, std::span<const Integer> b, std::size_t n);
std::vector<Integer> mul_kronecker(std::span<const Integer> a, std::span<const Integer> b, std::size_t n);
/// Inverse of a dense vector with a[0] = +-1, truncated to n entries.
std::vector<Integer> inverse_truncated(std::span<const Integer> a, std::size_t n);
}  // namespace detail

}  // namespace qcert
