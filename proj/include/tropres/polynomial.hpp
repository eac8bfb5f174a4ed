#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "tropres/scalar.hpp"

namespace tropres {

/// Univariate tropical polynomial c0*x^d + c1*x^(d-1) + ... + cd, stored
/// leading-first. The leading coefficient is always finite.
class TropicalPolynomial {
 public:
  /// Throws Error(InvalidPolynomial) if `coeffs` is empty or starts with -inf.
  explicit TropicalPolynomial(std::vector<TropicalScalar> coeffs);

  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  const std::vector<TropicalScalar>& coeffs() const noexcept { return coeffs_; }
  const TropicalScalar& operator[](std::size_t i) const { return coeffs_[i]; }
  const TropicalScalar& leading() const { return coeffs_.front(); }

  /// Comma-separated coefficient list, e.g. `0,5,8,9`.
  std::string to_string() const;

  friend bool operator==(const TropicalPolynomial&, const TropicalPolynomial&) = default;

 private:
  std::vector<TropicalScalar> coeffs_;
};

struct Root {
  TropicalScalar value;
  std::size_t multiplicity = 0;

  friend bool operator==(const Root&, const Root&) = default;
};

/// Corner locus of a tropical polynomial. Finite roots are strictly
/// descending; the multiplicity of -inf is kept apart.
struct RootList {
  std::vector<Root> finite_roots;
  std::size_t zero_root_multiplicity = 0;

  std::size_t total_multiplicity() const;
  friend bool operator==(const RootList&, const RootList&) = default;
};

/// max_i (c_i + (d - i) * x) with -inf absorbing.
TropicalScalar evaluate(const TropicalPolynomial& p, const TropicalScalar& x);

/// Roots via the upper hull of the points (d - i, c_i). Collinear hull points
/// are merged so each edge of horizontal length l yields one root of
/// multiplicity l. The -inf root gets multiplicity equal to the number of
/// trailing -inf coefficients; this is a convention, the function itself
/// does not define it.
RootList roots(const TropicalPolynomial& p);

/// c_i = leading + r_1 + ... + r_i. Roots must be finite and non-increasing,
/// otherwise throws Error(UnsortedRoots).
TropicalPolynomial from_roots(const TropicalScalar& leading, std::span<const TropicalScalar> roots);

/// Tropical division of every coefficient by the leading one.
TropicalPolynomial make_monic(const TropicalPolynomial& p);

bool is_simple_nonzero(const TropicalPolynomial& p);

/// Sorted-descending list of shared finite roots. Both inputs must have
/// simple non-zero roots, else throws Error(AssumptionViolated).
std::vector<TropicalScalar> common_roots(const TropicalPolynomial& a, const TropicalPolynomial& b);

/// Finite roots listed with repetition, descending (alpha_1 >= alpha_2 >= ...).
std::vector<TropicalScalar> root_sequence(const TropicalPolynomial& p);

}  // namespace tropres
