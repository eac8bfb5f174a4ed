#include "tropres/parse.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "tropres/error.hpp"

namespace tropres {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }
  std::size_t pos() const { return pos_; }

  bool consume(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void expect(std::string_view token) {
    if (!consume(token)) throw ParseError(ErrorKind::ParseError, pos_, "'" + std::string(token) + "'");
  }

  /// Scalar token: `-inf`, or [sign] digits [ '/' digits ].
  TropicalScalar scalar(bool allow_neg_inf) {
    skip_space();
    const std::size_t start = pos_;
    if (text_.substr(pos_, 4) == "-inf") {
      if (!allow_neg_inf) throw ParseError(ErrorKind::ParseError, start, "finite rational");
      pos_ += 4;
      return TropicalScalar::neg_inf();
    }
    std::size_t end = pos_;
    if (end < text_.size() && (text_[end] == '-' || text_[end] == '+')) ++end;
    while (end < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[end])) || text_[end] == '/'))
      ++end;
    if (end == start) throw ParseError(ErrorKind::ParseError, start, "rational or '-inf'");
    try {
      TropicalScalar value = TropicalScalar::parse(text_.substr(start, end - start));
      pos_ = end;
      return value;
    } catch (const ParseError& e) {
      throw ParseError(ErrorKind::ParseError, start + e.offset(), e.expected());
    }
  }

  bool starts_roots_form() const { return text_.find("roots", pos_) != std::string_view::npos; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

TropicalPolynomial parse_roots_form(Cursor& cur) {
  TropicalScalar leading = TropicalScalar::one();
  if (!cur.consume("roots")) {
    leading = cur.scalar(false);
    cur.expect("*");
    cur.expect("roots");
  }
  cur.expect(":");
  std::vector<TropicalScalar> roots;
  if (cur.at_end()) return from_roots(leading, roots);
  roots.push_back(cur.scalar(false));
  while (!cur.at_end()) {
    const std::size_t at = cur.pos();
    if (cur.consume(">=")) {
      roots.push_back(cur.scalar(false));
      if (roots.back() > roots[roots.size() - 2])
        throw ParseError(ErrorKind::ParseError, at, "non-increasing roots");
    } else if (cur.consume(">")) {
      roots.push_back(cur.scalar(false));
      if (!(roots.back() < roots[roots.size() - 2]))
        throw ParseError(ErrorKind::ParseError, at, "strictly decreasing roots after '>'");
    } else {
      throw ParseError(ErrorKind::ParseError, cur.pos(), "'>' or '>='");
    }
  }
  return from_roots(leading, roots);
}

}  // namespace

TropicalPolynomial parse_poly(std::string_view text) {
  Cursor cur(text);
  if (cur.at_end()) throw ParseError(ErrorKind::ParseError, 0, "coefficient list or 'roots:'");
  if (cur.starts_roots_form()) return parse_roots_form(cur);

  std::vector<TropicalScalar> coeffs;
  const std::size_t lead_pos = cur.pos();
  coeffs.push_back(cur.scalar(true));
  if (coeffs.front().is_neg_inf())
    throw ParseError(ErrorKind::LeadingZeroError, lead_pos, "finite leading coefficient");
  while (!cur.at_end()) {
    cur.expect(",");
    coeffs.push_back(cur.scalar(true));
  }
  return TropicalPolynomial(std::move(coeffs));
}

RationalPoly parse_rational_poly(std::string_view text) {
  Cursor cur(text);
  std::vector<Rational> coeffs;
  coeffs.push_back(cur.scalar(false).value());
  while (!cur.at_end()) {
    cur.expect(",");
    coeffs.push_back(cur.scalar(false).value());
  }
  return RationalPoly(std::move(coeffs));
}

}  // namespace tropres
