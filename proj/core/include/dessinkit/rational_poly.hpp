#pragma once

#include <string>
#include <vector>

#include "dessinkit/polynomial.hpp"

namespace dessinkit {

using RatPoly = Poly<Rational>;

/// Builds a polynomial from integer coefficients, lowest degree first.
RatPoly rat_poly(std::initializer_list<long> coeffs);

/// Human-readable form such as "x^3 - 3*x + 1/2".
std::string to_string(const RatPoly& p, const std::string& var = "x");

std::string to_string(const Rational& q);

/// Scales p to a primitive integer polynomial with positive leading
/// coefficient (same roots).
std::vector<Integer> primitive_integer_coeffs(const RatPoly& p);

/**
 * Distinct rational roots, ascending. Uses Sturm-sequence isolation of the
 * real roots, then an exact test of the unique candidate k/a_n inside each
 * isolating interval narrower than 1/|a_n|; no integer factoring is needed.
 * Throws ZeroPolynomial for p = 0.
 */
std::vector<Rational> rational_roots(const RatPoly& p);

/// Product of the irreducible factors of p of degree >= 2 (monic): p with
/// all rational roots divided out, made squarefree.
RatPoly remove_rational_roots(const RatPoly& squarefree, const std::vector<Rational>& roots);

}  // namespace dessinkit
