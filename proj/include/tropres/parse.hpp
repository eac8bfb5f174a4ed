#pragma once

#include <string_view>

#include "tropres/classical.hpp"
#include "tropres/polynomial.hpp"

namespace tropres {

/// Parses a polynomial given leading coefficient first.
///
///   coeffs := term (',' term)*          e.g. `0,5,8,9` or `0, 1/2, -inf`
///   term   := rational | '-inf'
///   roots  := [rational '*'] 'roots:' rational (('>' | '>=') rational)*
///
/// The root form goes through from_roots, e.g. `roots: 5 > 3 > 1` is
/// `0,5,8,9` and `2 * roots: 3 >= 3` is `2,5,8`. Errors are ParseError with
/// the byte offset of the offending token; a -inf leading coefficient raises
/// kind LeadingZeroError.
TropicalPolynomial parse_poly(std::string_view text);

/// Comma-separated rationals, leading first; `0` is the zero polynomial.
RationalPoly parse_rational_poly(std::string_view text);

}  // namespace tropres
