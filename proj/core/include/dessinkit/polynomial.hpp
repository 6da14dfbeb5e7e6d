#pragma once

#include <algorithm>
#include <cstddef>
#include <tuple>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "dessinkit/errors.hpp"

namespace dessinkit {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

namespace detail {
template <class F>
bool coeff_is_zero(const F& v) {
  return is_zero(v);
}
}  // namespace detail

/**
 * Dense univariate polynomial over an exact field F, lowest degree first.
 *
 * F must be default-constructible to zero, constructible from long, and
 * provide + - * / == together with an ADL-visible is_zero(F). Trailing zero
 * coefficients are stripped, so the zero polynomial has no coefficients.
 */
template <class F>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(const F& c) { return Poly(std::vector<F>{c}); }
  static Poly monomial(const F& c, std::size_t k) {
    std::vector<F> v(k + 1);
    v[k] = c;
    return Poly(std::move(v));
  }
  static Poly variable() { return monomial(F(1L), 1); }

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }

  const std::vector<F>& coeffs() const noexcept { return c_; }
  F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F(); }
  const F& leading() const {
    if (c_.empty()) throw ZeroPolynomial("zero polynomial has no leading coefficient");
    return c_.back();
  }

  F operator()(const F& v) const {
    F acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc = acc * v;
      acc = acc + *it;
    }
    return acc;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<F> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
    return Poly(std::move(out));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<F> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) - b.coeff(i);
    return Poly(std::move(out));
  }
  friend Poly operator-(const Poly& a) { return Poly() - a; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<F> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::coeff_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        F term = a.c_[i] * b.c_[j];
        out[i + j] = out[i + j] + term;
      }
    }
    return Poly(std::move(out));
  }
  friend Poly operator*(const F& s, const Poly& a) {
    std::vector<F> out(a.c_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = s * a.c_[i];
    return Poly(std::move(out));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<F> c_;
};

template <class F>
Poly<F> pow(Poly<F> base, unsigned long e) {
  Poly<F> result = Poly<F>::constant(F(1L));
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

template <class F>
Poly<F> derivative(const Poly<F>& p) {
  if (p.degree() < 1) return Poly<F>();
  std::vector<F> out(p.coeffs().size() - 1);
  for (std::size_t i = 1; i < p.coeffs().size(); ++i) {
    out[i - 1] = F(static_cast<long>(i)) * p.coeffs()[i];
  }
  return Poly<F>(std::move(out));
}

/// Quotient and remainder. Throws ZeroPolynomial on division by zero.
template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b) {
  if (b.is_zero()) throw ZeroPolynomial("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly<F>(), a};
  std::vector<F> rem = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<F> quot(rem.size() - db);
  const F inv_lead = F(1L) / b.leading();
  for (std::size_t k = quot.size(); k-- > 0;) {
    F q = rem[k + db] * inv_lead;
    quot[k] = q;
    if (is_zero(q)) continue;
    for (std::size_t j = 0; j <= db; ++j) {
      F t = q * b.coeffs()[j];
      rem[k + j] = rem[k + j] - t;
    }
  }
  rem.resize(db);
  return {Poly<F>(std::move(quot)), Poly<F>(std::move(rem))};
}

template <class F>
Poly<F> monic(const Poly<F>& p) {
  if (p.is_zero()) return p;
  return (F(1L) / p.leading()) * p;
}

/// Monic greatest common divisor. Throws ZeroPolynomial if both are zero.
template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  if (a.is_zero() && b.is_zero()) throw ZeroPolynomial("gcd(0, 0) is undefined");
  while (!b.is_zero()) {
    Poly<F> r = divmod(a, b).second;
    a = std::move(b);
    b = monic(r);
  }
  return monic(a);
}

/// (g, s, t) with s a + t b = g = gcd(a, b), g monic.
template <class F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> extended_gcd(const Poly<F>& a,
                                                   const Poly<F>& b) {
  if (a.is_zero() && b.is_zero()) throw ZeroPolynomial("gcd(0, 0) is undefined");
  Poly<F> r0 = a, r1 = b;
  Poly<F> s0 = Poly<F>::constant(F(1L)), s1;
  Poly<F> t0, t1 = Poly<F>::constant(F(1L));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  const F inv = F(1L) / r0.leading();
  return {inv * r0, inv * s0, inv * t0};
}

/// f / gcd(f, f'), made monic. Throws ZeroPolynomial for f = 0.
template <class F>
Poly<F> squarefree_part(const Poly<F>& f) {
  if (f.is_zero()) throw ZeroPolynomial("squarefree part of the zero polynomial");
  if (f.degree() == 0) return Poly<F>::constant(F(1L));
  return monic(divmod(f, gcd(f, derivative(f))).first);
}

/// f(g(x)).
template <class F>
Poly<F> compose(const Poly<F>& f, const Poly<F>& g) {
  Poly<F> acc;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
    acc = acc * g + Poly<F>::constant(*it);
  }
  return acc;
}

/**
 * Res(a, b) = lc(a)^deg(b) * prod_{a(r)=0} b(r), via the Euclidean
 * recurrence Res(a, b) = (-1)^{mn} lc(b)^{m-k} Res(b, a mod b).
 * Throws ZeroPolynomial if either argument is zero.
 */
template <class F>
F resultant(Poly<F> a, Poly<F> b) {
  if (a.is_zero() || b.is_zero()) throw ZeroPolynomial("resultant with the zero polynomial");
  F acc(1L);
  for (;;) {
    const int m = a.degree();
    const int n = b.degree();
    if (n == 0) {
      F p(1L);
      for (int i = 0; i < m; ++i) p = p * b.leading();
      return acc * p;
    }
    if (m == 0) {
      F p(1L);
      for (int i = 0; i < n; ++i) p = p * a.leading();
      return acc * p;
    }
    Poly<F> r = divmod(a, b).second;
    if (r.is_zero()) return F();
    const int k = r.degree();
    if ((m % 2 == 1) && (n % 2 == 1)) acc = F(-1L) * acc;
    for (int i = 0; i < m - k; ++i) acc = acc * b.leading();
    a = std::move(b);
    b = std::move(r);
  }
}

/// Lagrange interpolation through (xs[i], ys[i]) with distinct xs.
template <class F>
Poly<F> interpolate(const std::vector<F>& xs, const std::vector<F>& ys) {
  Poly<F> result;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Poly<F> basis = Poly<F>::constant(F(1L));
    F denom(1L);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * Poly<F>(std::vector<F>{F() - xs[j], F(1L)});
      denom = denom * (xs[i] - xs[j]);
    }
    F scale = ys[i] / denom;
    result = result + scale * basis;
  }
  return result;
}

/// Res_x(p(x), y - q(x)) as a polynomial in y, computed by evaluating at
/// deg(p) + 1 integer points and interpolating.
template <class F>
Poly<F> resultant_in_y(const Poly<F>& p, const Poly<F>& q) {
  const int d = p.degree();
  if (d < 0) throw ZeroPolynomial("resultant with the zero polynomial");
  std::vector<F> xs, ys;
  for (int k = 0; k <= d; ++k) {
    F y(static_cast<long>(k));
    xs.push_back(y);
    ys.push_back(resultant(p, Poly<F>::constant(y) - q));
  }
  return interpolate(xs, ys);
}

/// Polynomial in y whose roots are the finite critical values of f, with
/// multiplicity: Res_x(f'(x), y - f(x)).
template <class F>
Poly<F> critical_value_resultant(const Poly<F>& f) {
  if (f.degree() < 1) throw ZeroPolynomial("critical values need degree >= 1");
  return resultant_in_y(derivative(f), f);
}

/// True iff b divides a.
template <class F>
bool divides(const Poly<F>& b, const Poly<F>& a) {
  return divmod(a, b).second.is_zero();
}

/**
 * Belyi test by resultant: the squarefree critical-value polynomial divides
 * y (y - 1).
 */
template <class F>
bool critical_values_in_01(const Poly<F>& f) {
  const Poly<F> crit = squarefree_part(critical_value_resultant(f));
  const Poly<F> target(std::vector<F>{F(), F(-1L), F(1L)});
  return divides(crit, target);
}

/**
 * Belyi test by critical points: every root of f' is a root of f (f - 1),
 * i.e. squarefree(f') divides f (f - 1). Independent of the resultant route.
 */
template <class F>
bool critical_points_map_into_01(const Poly<F>& f) {
  if (f.degree() < 1) throw ZeroPolynomial("critical values need degree >= 1");
  const Poly<F> df = derivative(f);
  if (df.degree() == 0) return true;
  const Poly<F> crit = squarefree_part(df);
  const Poly<F> f_minus_1 = f - Poly<F>::constant(F(1L));
  return divides(crit, f * f_minus_1);
}

}  // namespace dessinkit
