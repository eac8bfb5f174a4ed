#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tropres {

using Rational = mpq_class;
using Integer = mpz_class;

/// Element of the max-plus semifield: an exact rational or the tropical
/// zero -inf. Tropical addition is max, multiplication is ordinary addition.
class TropicalScalar {
 public:
  /// Default-constructs the tropical zero.
  TropicalScalar() = default;
  TropicalScalar(const Rational& value) : value_(value) { value_->canonicalize(); }
  TropicalScalar(long value) : value_(Rational(value)) {}
  TropicalScalar(int value) : value_(Rational(value)) {}

  static TropicalScalar neg_inf() { return TropicalScalar(); }
  static TropicalScalar one() { return TropicalScalar(0); }

  bool is_finite() const noexcept { return value_.has_value(); }
  bool is_neg_inf() const noexcept { return !value_.has_value(); }

  /// The finite value; throws std::bad_optional_access on -inf.
  const Rational& value() const { return value_.value(); }

  friend bool operator==(const TropicalScalar& x, const TropicalScalar& y) {
    if (x.is_finite() != y.is_finite()) return false;
    return x.is_neg_inf() || *x.value_ == *y.value_;
  }
  friend std::strong_ordering operator<=>(const TropicalScalar& x, const TropicalScalar& y) {
    if (x.is_neg_inf() || y.is_neg_inf()) return x.is_finite() <=> y.is_finite();
    const int c = cmp(*x.value_, *y.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// `-inf`, an integer, or `p/q` in lowest terms.
  std::string to_string() const;

  /// Accepts `-inf`, signed integers and `p/q` with q != 0. Throws ParseError.
  static TropicalScalar parse(std::string_view text);

 private:
  std::optional<Rational> value_;
};

std::ostream& operator<<(std::ostream& os, const TropicalScalar& x);

TropicalScalar trop_add(const TropicalScalar& x, const TropicalScalar& y);
TropicalScalar trop_mul(const TropicalScalar& x, const TropicalScalar& y);
/// Throws Error(DivisionByTropicalZero) when y is -inf.
TropicalScalar trop_div(const TropicalScalar& x, const TropicalScalar& y);
TropicalScalar trop_pow(const TropicalScalar& x, unsigned long k);

}  // namespace tropres
