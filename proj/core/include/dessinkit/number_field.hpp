#pragma once

#include <memory>
#include <string>

#include "dessinkit/rational_poly.hpp"

namespace dessinkit {

/// Q(alpha) = Q[t]/(P) for a monic irreducible P.
class NumberField {
 public:
  /**
   * Makes P monic and checks irreducibility. Degrees 1-3 are certified by
   * exact rational-root exclusion (a cubic without rational roots is
   * irreducible). Higher degrees are only checked for rational roots;
   * arithmetic then reports NotInvertible if a zero divisor shows up.
   * Throws NotInvertible if P is reducible by that test.
   */
  static std::shared_ptr<const NumberField> create(const RatPoly& min_poly,
                                                   std::string generator_name = "a");

  const RatPoly& min_poly() const noexcept { return min_poly_; }
  std::size_t degree() const noexcept { return static_cast<std::size_t>(min_poly_.degree()); }
  const std::string& generator_name() const noexcept { return name_; }
  bool irreducibility_certified() const noexcept { return certified_; }

 private:
  NumberField(RatPoly p, std::string name, bool certified)
      : min_poly_(std::move(p)), name_(std::move(name)), certified_(certified) {}

  RatPoly min_poly_;
  std::string name_;
  bool certified_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/**
 * An element of a number field, stored as its reduced residue mod the
 * minimal polynomial. Rational elements may omit the field; the field is
 * picked up from the other operand when needed.
 */
class NFElement {
 public:
  NFElement() = default;
  NFElement(long v) : rep_(RatPoly::constant(Rational(v))) {}  // NOLINT
  NFElement(const Rational& v) : rep_(RatPoly::constant(v)) {}  // NOLINT
  NFElement(FieldPtr field, const RatPoly& rep);

  /// The class of t, i.e. the root alpha.
  static NFElement generator(FieldPtr field);

  const RatPoly& rep() const noexcept { return rep_; }
  const FieldPtr& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return rep_.is_zero(); }
  bool is_rational() const noexcept { return rep_.degree() <= 0; }

  /// Throws NotInvertible for zero or a zero divisor.
  NFElement inverse() const;

  std::string to_string() const;

  friend NFElement operator+(const NFElement& a, const NFElement& b);
  friend NFElement operator-(const NFElement& a, const NFElement& b);
  friend NFElement operator*(const NFElement& a, const NFElement& b);
  friend NFElement operator/(const NFElement& a, const NFElement& b);
  friend bool operator==(const NFElement& a, const NFElement& b) {
    return a.rep_ == b.rep_;
  }

 private:
  RatPoly rep_;
  FieldPtr field_;
};

inline bool is_zero(const NFElement& e) { return e.is_zero(); }

using NFPoly = Poly<NFElement>;

std::string to_string(const NFPoly& p, const std::string& var = "z");

/// Lifts a rational polynomial into the field.
NFPoly to_nf_poly(const RatPoly& p);

}  // namespace dessinkit
