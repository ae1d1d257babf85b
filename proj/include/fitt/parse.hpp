#pragma once

#include <string_view>
#include <vector>

#include "fitt/polynomial.hpp"

namespace fitt {

/// Parses a polynomial in the grammar
///
///   poly  := term (("+"|"-") term)*
///   term  := coeff ("*" monom)? | monom
///   monom := factor ("*" factor)*
///   factor:= ident ("^" uint)?
///   coeff := int | int "/" uint
///
/// A single leading sign is also accepted. Whitespace is ignored and
/// coefficients are reduced into the ring's field. Throws ParseError (with a
/// character offset) for syntax errors and unknown variables, DivisionByZero
/// when a denominator is not invertible.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// Comma-separated polynomial list; an empty string yields no polynomials.
std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring);

}  // namespace fitt
