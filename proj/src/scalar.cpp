#include "tropres/scalar.hpp"

#include <cctype>

#include "tropres/error.hpp"

namespace tropres {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DivisionByTropicalZero: return "DivisionByTropicalZero";
    case ErrorKind::InvalidPolynomial: return "InvalidPolynomial";
    case ErrorKind::UnsortedRoots: return "UnsortedRoots";
    case ErrorKind::AssumptionViolated: return "AssumptionViolated";
    case ErrorKind::DegreeZero: return "DegreeZero";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::TropicalZeroResultant: return "TropicalZeroResultant";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::BothZero: return "BothZero";
    case ErrorKind::DegenerateDraw: return "DegenerateDraw";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::LeadingZeroError: return "LeadingZeroError";
  }
  return "Unknown";
}

std::string TropicalScalar::to_string() const {
  return is_finite() ? value_->get_str() : std::string("-inf");
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

TropicalScalar TropicalScalar::parse(std::string_view text) {
  if (text == "-inf") return neg_inf();
  std::string_view body = text;
  std::size_t sign = 0;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    body.remove_prefix(1);
    sign = 1;
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  if (!all_digits(num)) throw ParseError(ErrorKind::ParseError, sign, "rational or '-inf'");
  if (slash == std::string_view::npos) {
    Rational r(std::string(text[0] == '+' ? text.substr(1) : text), 10);
    return TropicalScalar(r);
  }
  const std::string_view den = body.substr(slash + 1);
  if (!all_digits(den))
    throw ParseError(ErrorKind::ParseError, sign + slash + 1, "denominator digits");
  Integer d(std::string(den), 10);
  if (d == 0) throw ParseError(ErrorKind::ParseError, sign + slash + 1, "nonzero denominator");
  Integer n(std::string(num), 10);
  if (sign && text[0] == '-') n = -n;
  return TropicalScalar(Rational(n, d));
}

std::ostream& operator<<(std::ostream& os, const TropicalScalar& x) { return os << x.to_string(); }

TropicalScalar trop_add(const TropicalScalar& x, const TropicalScalar& y) {
  return x < y ? y : x;
}

TropicalScalar trop_mul(const TropicalScalar& x, const TropicalScalar& y) {
  if (x.is_neg_inf() || y.is_neg_inf()) return TropicalScalar::neg_inf();
  return TropicalScalar(Rational(x.value() + y.value()));
}

TropicalScalar trop_div(const TropicalScalar& x, const TropicalScalar& y) {
  if (y.is_neg_inf()) throw Error(ErrorKind::DivisionByTropicalZero, "divisor is -inf");
  if (x.is_neg_inf()) return x;
  return TropicalScalar(Rational(x.value() - y.value()));
}

TropicalScalar trop_pow(const TropicalScalar& x, unsigned long k) {
  if (k == 0) return TropicalScalar::one();
  if (x.is_neg_inf()) return x;
  return TropicalScalar(Rational(x.value() * k));
}

}  // namespace tropres
