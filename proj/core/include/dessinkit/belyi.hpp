#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dessinkit/number_field.hpp"
#include "dessinkit/rational_poly.hpp"

namespace dessinkit {

/// Finite critical values of a polynomial over Q.
struct CriticalReport {
  /// Squarefree, monic; its roots are exactly the finite critical values.
  RatPoly critvals_sqfree;
  /// The rational critical values, ascending.
  std::vector<Rational> rational_values;
  /// Product of the irreducible factors of degree >= 2 (monic; 1 if none).
  RatPoly nonrational_factor;
};

/// Squarefree part of Res_x(f'(x), y - f(x)) with rational roots split off.
/// Throws ZeroPolynomial if deg f < 1.
CriticalReport critical_values(const RatPoly& f);

/// All finite critical values lie in {0, 1}.
bool is_belyi_polynomial(const RatPoly& f);

/// Same test with coefficients in a number field.
bool is_belyi_over_number_field(const NFPoly& f);

/**
 * The normalized power map P(x) = (m+n)^(m+n) / (m^m n^n) x^m (1-x)^n.
 * Its critical points are 0, 1 and m/(m+n), with values 0, 0 and 1. The
 * degree m + n can be astronomically large, so it is kept symbolic.
 */
struct PowerMap {
  Integer m;
  Integer n;

  friend bool operator==(const PowerMap&, const PowerMap&) = default;
};

/// Limits on exact work that would otherwise be unbounded.
struct ExactBudget {
  /// Maximum estimated size, in bits, of an exact value of a power map.
  std::size_t max_power_bits = std::size_t{1} << 22;
  /// Maximum degree materialized when expanding a power map.
  std::size_t max_expand_degree = 2048;
};

/// P(t) exactly. Throws ResourceLimit if the value would exceed the budget.
Rational evaluate(const PowerMap& p, const Rational& t, const ExactBudget& budget = {});

/// Dense form of P. Throws ResourceLimit past budget.max_expand_degree.
RatPoly expand(const PowerMap& p, const ExactBudget& budget = {});

using ChainFactor = std::variant<RatPoly, PowerMap>;

/// A composition g_k o ... o g_1, stored in application order (factors[0]
/// is applied first).
struct PolyChain {
  std::vector<ChainFactor> factors;

  Integer degree() const;
  Rational evaluate(const Rational& t, const ExactBudget& budget = {}) const;
  /// The composite as a dense polynomial when its degree is at most
  /// max_degree; empty otherwise.
  std::optional<RatPoly> expand(std::size_t max_degree,
                                const ExactBudget& budget = {}) const;
  /// One line per factor.
  std::string describe(const std::string& var = "x") const;
};

/**
 * A finite set of algebraic numbers, closed under Galois conjugation: some
 * rationals plus the roots of a squarefree polynomial without rational
 * roots.
 */
struct ValueSet {
  std::vector<Rational> rationals;  // ascending, distinct
  RatPoly algebraic = RatPoly::constant(Rational(1));

  bool empty() const { return rationals.empty() && algebraic.degree() <= 0; }
  /// True iff every element is 0 or 1.
  bool within_01() const;
};

/// Critical values of one factor.
ValueSet critical_value_set(const ChainFactor& g, const ExactBudget& budget = {});

/// g(S) for a finite set S.
ValueSet image(const ValueSet& s, const ChainFactor& g, const ExactBudget& budget = {});

/**
 * Critical values of the composite, by the chain rule:
 * crit(g o F) = g(crit F) u crit(g) for nonconstant F. Exact; no expansion
 * of the composite is needed.
 */
ValueSet chain_critical_values(const PolyChain& chain, const ExactBudget& budget = {});

/// True iff the composite map has all finite critical values in {0, 1}.
bool is_belyi_chain(const PolyChain& chain, const ExactBudget& budget = {});

struct RationalReduction {
  /// g_1, g_2, ...: each is the monic tracker polynomial of the previous step.
  std::vector<RatPoly> chain;
  /// Rational points that must still be sent into {0, 1}, ascending.
  std::vector<Rational> rational_set;
  /// Degree of the tracker before each step, then the final (zero) degree.
  std::vector<int> tracker_degrees;
};

/**
 * Composes with minimal polynomials of the irrational special values until
 * none remain. Rational roots of m (and any initial rationals) are carried
 * as special points through every step.
 */
RationalReduction reduce_to_rational(const RatPoly& m,
                                     const std::vector<Rational>& initial_rationals = {},
                                     const ExactBudget& budget = {});

/**
 * A composite h of affine maps, power maps and a final quadratic sending
 * every point of S into {0, 1}, with all critical values of h in {0, 1}.
 * Throws EmptySet for S empty and ResourceLimit when an intermediate power
 * map cannot be evaluated exactly within the budget.
 */
PolyChain consolidate_rationals(const std::vector<Rational>& s,
                                const ExactBudget& budget = {});

struct BelyiReduction {
  /// f, then the rationalizing chain, then the consolidation.
  PolyChain map;
  RationalReduction rationalization;
  /// The rational special set handed to the consolidation step.
  std::vector<Rational> special_set;
};

/**
 * Belyi's reduction for a polynomial f: returns B = h o g_k o ... o g_1 o f
 * with all finite critical values in {0, 1}, verified exactly through
 * is_belyi_chain. Throws ResourceLimit when a step exceeds the budget.
 */
BelyiReduction belyi_reduce(const RatPoly& f, const ExactBudget& budget = {});

}  // namespace dessinkit
