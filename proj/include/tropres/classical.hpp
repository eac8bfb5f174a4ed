#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tropres/scalar.hpp"

namespace tropres {

/// Univariate polynomial over Q, coefficients leading-first. The zero
/// polynomial has no coefficients; otherwise the leading one is nonzero.
class RationalPoly {
 public:
  RationalPoly() = default;
  /// Leading zeros are stripped.
  explicit RationalPoly(std::vector<Rational> coeffs);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  const Rational& leading() const { return coeffs_.front(); }

  /// Coefficient of t^k (0 when k exceeds the degree).
  Rational coeff_of_power(std::size_t k) const;
  Rational evaluate(const Rational& x) const;

  /// Leading-first coefficients padded with zeros to exactly `degree + 1`.
  std::vector<Rational> padded(std::size_t degree) const;

  std::string to_string() const;

  friend bool operator==(const RationalPoly&, const RationalPoly&) = default;
  friend RationalPoly operator+(const RationalPoly& x, const RationalPoly& y);
  friend RationalPoly operator-(const RationalPoly& x, const RationalPoly& y);
  friend RationalPoly operator*(const RationalPoly& x, const RationalPoly& y);

 private:
  std::vector<Rational> coeffs_;
};

struct DivMod {
  RationalPoly quotient;
  RationalPoly remainder;
};

/// Throws Error(PreconditionViolated) for a zero divisor.
DivMod divmod(const RationalPoly& x, const RationalPoly& y);

RationalPoly make_monic(const RationalPoly& p);

/// Monic gcd by the Euclidean algorithm. Throws Error(BothZero).
RationalPoly rational_gcd(const RationalPoly& p, const RationalPoly& q);

/// Determinant of the Sylvester matrix with formal degrees a.size() - 1 and
/// b.size() - 1 (leading zeros allowed), by fraction-free elimination.
Rational sylvester_determinant(std::span<const Rational> a, std::span<const Rational> b);

/// Resultant at the actual degrees. Throws Error(DegreeZero) if either is 0.
Rational numeric_resultant(const RationalPoly& p, const RationalPoly& q);

/// r(t) = Res_{m,n}(p + t f, q + t g), recovered by interpolation through
/// t = 0, 1, ..., m + n.
RationalPoly resultant_pencil(const RationalPoly& p, const RationalPoly& q, const RationalPoly& f,
                              const RationalPoly& g, std::size_t m, std::size_t n);

/// Index of the lowest nonzero coefficient; throws Error(ZeroPolynomial).
std::size_t valuation(const RationalPoly& r);

struct ResultantOrder {
  std::size_t order = 0;                     // minimum over trials
  std::vector<std::size_t> trial_valuations;
  std::size_t redraws = 0;
};

/// Order of the (m, n) resultant at the coefficient point of (p, q): the
/// t-valuation of Res(p + t f, q + t g) for random integer f, g of exact
/// degrees m and n (coefficients in [-1e6, 1e6]), minimized over `trials`
/// draws. (0, 0) returns m + n. Throws Error(DegenerateDraw) if redraws keep
/// producing an identically zero pencil.
ResultantOrder resultant_order_at(const RationalPoly& p, const RationalPoly& q, std::size_t m,
                                  std::size_t n, std::size_t trials, std::uint64_t seed);

/// Degree of gcd of the homogenizations of p and q to degrees m and n. This is
/// the affine gcd degree plus any shared factor of y coming from degree drops.
std::size_t homogeneous_gcd_degree(const RationalPoly& p, const RationalPoly& q, std::size_t m,
                                   std::size_t n);

}  // namespace tropres
