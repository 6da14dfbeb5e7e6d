#include "dessinkit/rational_poly.hpp"

#include <algorithm>

namespace dessinkit {

namespace {

int sign(const Rational& q) { return sgn(q); }

std::vector<RatPoly> sturm_sequence(const RatPoly& p) {
  std::vector<RatPoly> seq{p, derivative(p)};
  while (!seq.back().is_zero() && seq.back().degree() > 0) {
    RatPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return seq;
}

int sign_changes(const std::vector<RatPoly>& seq, const Rational& t) {
  int changes = 0;
  int last = 0;
  for (const auto& s : seq) {
    const int v = sign(s(t));
    if (v == 0) continue;
    if (last != 0 && v != last) ++changes;
    last = v;
  }
  return changes;
}

// Candidate k/|an| in (lo, hi] when hi - lo < 1/|an|: at most one such k.
void test_candidate(const RatPoly& p, const Integer& an, const Rational& lo,
                    const Rational& hi, std::vector<Rational>& out) {
  Rational scaled_hi = hi * an;
  Integer k;
  mpz_fdiv_q(k.get_mpz_t(), scaled_hi.get_num_mpz_t(), scaled_hi.get_den_mpz_t());
  Rational candidate(k, an);
  candidate.canonicalize();
  if (candidate > lo && candidate <= hi && is_zero(p(candidate))) {
    out.push_back(candidate);
  }
}

void isolate(const RatPoly& p, const std::vector<RatPoly>& seq, const Integer& an,
             const Rational& lo, const Rational& hi, int v_lo, int v_hi,
             std::vector<Rational>& out) {
  const int count = v_lo - v_hi;
  if (count <= 0) return;
  const Rational width = hi - lo;
  if (count == 1 && width * an < 1) {
    test_candidate(p, an, lo, hi, out);
    return;
  }
  const Rational mid = (lo + hi) / 2;
  const int v_mid = sign_changes(seq, mid);
  isolate(p, seq, an, lo, mid, v_lo, v_mid, out);
  isolate(p, seq, an, mid, hi, v_mid, v_hi, out);
}

}  // namespace

RatPoly rat_poly(std::initializer_list<long> coeffs) {
  std::vector<Rational> v;
  for (long c : coeffs) v.emplace_back(c);
  return RatPoly(std::move(v));
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const RatPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (is_zero(c)) continue;
    const bool negative = sgn(c) < 0;
    Rational mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = mag == 1;
    if (i == 0 || !unit) {
      out += mag.get_str();
      if (i > 0) out += "*";
    }
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

std::vector<Integer> primitive_integer_coeffs(const RatPoly& p) {
  Integer lcm_den = 1;
  for (const auto& c : p.coeffs()) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<Integer> out;
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    Rational scaled = c * lcm_den;
    out.push_back(scaled.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (g == 0) return out;
  if (!out.empty() && sgn(out.back()) < 0) g = -g;
  for (auto& c : out) c /= g;
  return out;
}

std::vector<Rational> rational_roots(const RatPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("rational roots of the zero polynomial");
  std::vector<Rational> out;
  if (p.degree() < 1) return out;
  RatPoly q = squarefree_part(p);
  // Split off the root 0 so the Cauchy bound is tight.
  if (is_zero(q.coeff(0))) {
    out.emplace_back(0);
    q = divmod(q, RatPoly::variable()).first;
  }
  if (q.degree() >= 1) {
    const std::vector<Integer> ints = primitive_integer_coeffs(q);
    const Integer an = abs(ints.back());
    // Cauchy bound: all roots satisfy |r| < 1 + max |a_i / a_n|.
    Rational bound = 0;
    for (std::size_t i = 0; i + 1 < ints.size(); ++i) {
      Rational r(abs(ints[i]), an);
      r.canonicalize();
      if (r > bound) bound = r;
    }
    bound += 1;
    const auto seq = sturm_sequence(q);
    const Rational lo = -bound;
    isolate(q, seq, an, lo, bound, sign_changes(seq, lo), sign_changes(seq, bound), out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

RatPoly remove_rational_roots(const RatPoly& squarefree,
                              const std::vector<Rational>& roots) {
  RatPoly q = monic(squarefree);
  for (const auto& r : roots) {
    q = divmod(q, RatPoly(std::vector<Rational>{-r, Rational(1)})).first;
  }
  return monic(q);
}

}  // namespace dessinkit
