#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "tropres/scalar.hpp"
#include "tropres/sylvester.hpp"

namespace tropres {

/// Exponent vector. For resultant polynomials the layout is a0..am, b0..bn.
using Exponent = std::vector<unsigned>;

/// Sparse multivariate polynomial with exact integer coefficients. Terms are
/// kept in descending lexicographic exponent order so iteration (and any
/// output built from it) is deterministic.
class SparseIntPoly {
 public:
  using TermMap = std::map<Exponent, Integer, std::greater<>>;

  explicit SparseIntPoly(std::size_t variables) : variables_(variables) {}

  /// Adds coeff * x^exponent, dropping the term if it cancels to zero.
  void add(const Exponent& exponent, const Integer& coeff);

  std::size_t variables() const noexcept { return variables_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Rational evaluate(std::span<const Rational> point) const;

 private:
  std::size_t variables_;
  TermMap terms_;
};

/// One term of a tropical polynomial: coefficient (x) monomial.
struct TropicalTerm {
  Exponent exponent;
  TropicalScalar coefficient = TropicalScalar::one();
};

/// Tropical polynomial in several variables. The tropicalization of an
/// integer polynomial has every coefficient equal to the tropical one.
struct TropicalForm {
  std::size_t variables = 0;
  std::vector<TropicalTerm> terms;

  TropicalScalar term_value(std::size_t term, std::span<const TropicalScalar> point) const;
};

struct TermValue {
  Exponent monomial;
  TropicalScalar value;
};

/// Determinant of the symbolic Sylvester matrix of a0 x^m + ... + am and
/// b0 x^n + ... + bn, over Z[a, b]. Requires m, n >= 1 and m + n <= 8.
SparseIntPoly symbolic_resultant(std::size_t m, std::size_t n);

/// Support of `r` with tropical-one coefficients. Throws Error(ZeroPolynomial).
TropicalForm tropicalize(const SparseIntPoly& r);

/// Value, number of maximizing terms and log2 of that number at `point`.
/// Throws Error(PreconditionViolated) on a length mismatch and
/// Error(TropicalZeroResultant) if every term is -inf.
OrderReport order_at(const TropicalForm& f, std::span<const TropicalScalar> point);

/// Every support monomial of the (m, n) resultant evaluated tropically at
/// (a, b), sorted by descending value (ties in descending exponent order).
std::vector<TermValue> resultant_term_values(std::size_t m, std::size_t n,
                                             std::span<const TropicalScalar> a,
                                             std::span<const TropicalScalar> b);

/// Monomial a_{nu_1-1} ... a_{nu_n-n} b_{mu_1-1} ... b_{mu_m-m} selected by a
/// split permutation of the (m, n) Sylvester matrix.
Exponent split_monomial(std::size_t m, std::size_t n, const SplitPermutation& s);

std::vector<std::string> resultant_variable_names(std::size_t m, std::size_t n);

/// `a0 a2 b1^2 b2`; "1" for the empty monomial.
std::string format_monomial(const Exponent& e, const std::vector<std::string>& names);

/// Lines of the form `-1 * a0 a1 b1`, in the polynomial's term order.
std::vector<std::string> format_terms(const SparseIntPoly& r, const std::vector<std::string>& names);

}  // namespace tropres
