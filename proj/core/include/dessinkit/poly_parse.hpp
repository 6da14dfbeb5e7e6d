#pragma once

#include <string_view>

#include "dessinkit/number_field.hpp"
#include "dessinkit/rational_poly.hpp"

namespace dessinkit {

/**
 * Parses a univariate polynomial expression over Q, e.g. "1 - (x^3 - 1)^2"
 * or "27/4 x(1-x)^2". Supported: + - * ^ (non-negative integer exponents),
 * parentheses, integer and p/q literals, division by a literal, and
 * implicit multiplication. Any single identifier is the variable.
 * Throws ParseError.
 */
RatPoly parse_rat_poly(std::string_view text);

/// As parse_rat_poly, with the field's generator name (e.g. "a") standing
/// for the algebraic generator; the one other identifier is the variable.
NFPoly parse_nf_poly(std::string_view text, const FieldPtr& field);

}  // namespace dessinkit
