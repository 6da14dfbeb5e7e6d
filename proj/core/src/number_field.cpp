#include "dessinkit/number_field.hpp"

namespace dessinkit {

namespace {

const FieldPtr& common_field(const NFElement& a, const NFElement& b) {
  if (a.field() && b.field() && a.field() != b.field() &&
      !(a.field()->min_poly() == b.field()->min_poly())) {
    throw Error("arithmetic between elements of different number fields");
  }
  return a.field() ? a.field() : b.field();
}

NFElement make(const FieldPtr& field, RatPoly rep) {
  if (rep.degree() <= 0) return NFElement(rep.coeff(0));
  return NFElement(field, rep);
}

}  // namespace

std::shared_ptr<const NumberField> NumberField::create(const RatPoly& min_poly,
                                                       std::string generator_name) {
  if (min_poly.degree() < 1) {
    throw NotInvertible("a number field needs a minimal polynomial of degree >= 1");
  }
  RatPoly p = monic(min_poly);
  if (!(squarefree_part(p) == p)) {
    throw NotInvertible("minimal polynomial " + dessinkit::to_string(p) +
                        " has a repeated factor");
  }
  if (p.degree() >= 2 && !rational_roots(p).empty()) {
    throw NotInvertible("minimal polynomial " + dessinkit::to_string(p) +
                        " has a rational root");
  }
  const bool certified = p.degree() <= 3;
  return std::shared_ptr<const NumberField>(
      new NumberField(std::move(p), std::move(generator_name), certified));
}

NFElement::NFElement(FieldPtr field, const RatPoly& rep) : field_(std::move(field)) {
  rep_ = field_ ? divmod(rep, field_->min_poly()).second : rep;
  if (!field_ && rep_.degree() > 0) {
    throw Error("a non-rational element needs a number field");
  }
}

NFElement NFElement::generator(FieldPtr field) {
  return NFElement(std::move(field), RatPoly::variable());
}

NFElement NFElement::inverse() const {
  if (rep_.is_zero()) throw NotInvertible("division by zero in a number field");
  if (is_rational()) return NFElement(Rational(1) / rep_.coeff(0));
  auto [g, s, t] = extended_gcd(rep_, field_->min_poly());
  if (g.degree() != 0) {
    throw NotInvertible("element " + to_string() +
                        " is a zero divisor; the minimal polynomial is reducible");
  }
  return make(field_, s);
}

std::string NFElement::to_string() const {
  const std::string name = field_ ? field_->generator_name() : "a";
  return dessinkit::to_string(rep_, name);
}

NFElement operator+(const NFElement& a, const NFElement& b) {
  return make(common_field(a, b), a.rep_ + b.rep_);
}

NFElement operator-(const NFElement& a, const NFElement& b) {
  return make(common_field(a, b), a.rep_ - b.rep_);
}

NFElement operator*(const NFElement& a, const NFElement& b) {
  const FieldPtr& f = common_field(a, b);
  RatPoly prod = a.rep_ * b.rep_;
  if (f && prod.degree() >= static_cast<int>(f->degree())) {
    prod = divmod(prod, f->min_poly()).second;
  }
  return make(f, std::move(prod));
}

NFElement operator/(const NFElement& a, const NFElement& b) {
  return a * b.inverse();
}

std::string to_string(const NFPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const NFElement& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    if (i >= 1) out += "*" + var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

NFPoly to_nf_poly(const RatPoly& p) {
  std::vector<NFElement> coeffs;
  for (const auto& c : p.coeffs()) coeffs.emplace_back(c);
  return NFPoly(std::move(coeffs));
}

}  // namespace dessinkit
