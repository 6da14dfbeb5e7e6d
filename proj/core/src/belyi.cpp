#include "dessinkit/belyi.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dessinkit {

namespace {

const RatPoly kOne = RatPoly::constant(Rational(1));

void sort_unique(std::vector<Rational>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::size_t bit_size(const Integer& z) {
  return mpz_sizeinbase(z.get_mpz_t(), 2);
}

unsigned long to_ulong(const Integer& z, const char* what) {
  if (sgn(z) < 0 || !z.fits_ulong_p()) {
    throw ResourceLimit(std::string(what) + " exponent does not fit a machine word");
  }
  return z.get_ui();
}

Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rational qpow(const Rational& base, unsigned long e) {
  Rational r(ipow(base.get_num(), e), ipow(base.get_den(), e));
  r.canonicalize();
  return r;
}

// Splits a squarefree polynomial into its rational roots and the rest.
void absorb(ValueSet& set, const RatPoly& squarefree) {
  if (squarefree.degree() < 1) return;
  auto roots = rational_roots(squarefree);
  RatPoly rest = remove_rational_roots(squarefree, roots);
  set.rationals.insert(set.rationals.end(), roots.begin(), roots.end());
  sort_unique(set.rationals);
  if (rest.degree() >= 1) {
    // lcm(algebraic, rest), monic and squarefree.
    RatPoly g = gcd(set.algebraic, rest);
    set.algebraic = monic(divmod(set.algebraic * rest, g).first);
  }
}

ValueSet merge(ValueSet a, const ValueSet& b) {
  a.rationals.insert(a.rationals.end(), b.rationals.begin(), b.rationals.end());
  sort_unique(a.rationals);
  absorb(a, b.algebraic);
  return a;
}

RatPoly affine(const Rational& scale, const Rational& shift) {
  return RatPoly(std::vector<Rational>{shift, scale});
}

}  // namespace

CriticalReport critical_values(const RatPoly& f) {
  const RatPoly resultant = critical_value_resultant(f);
  CriticalReport report;
  report.critvals_sqfree = squarefree_part(resultant);
  report.rational_values = rational_roots(report.critvals_sqfree);
  report.nonrational_factor =
      remove_rational_roots(report.critvals_sqfree, report.rational_values);
  return report;
}

bool is_belyi_polynomial(const RatPoly& f) {
  const CriticalReport report = critical_values(f);
  return divides(report.critvals_sqfree, rat_poly({0, -1, 1}));
}

bool is_belyi_over_number_field(const NFPoly& f) {
  return critical_values_in_01(f);
}

Rational evaluate(const PowerMap& p, const Rational& t, const ExactBudget& budget) {
  const Integer total = p.m + p.n;
  if (is_zero(t) || t == 1) return Rational(0);
  Rational mid(p.m, total);
  mid.canonicalize();
  if (t == mid) return Rational(1);
  if (total > budget.max_power_bits) {
    throw ResourceLimit("evaluating a power map of degree " + total.get_str() +
                        " exceeds the exact-size budget");
  }
  const unsigned long m = to_ulong(p.m, "power map");
  const unsigned long n = to_ulong(p.n, "power map");
  const Rational one_minus = 1 - t;
  const std::size_t estimate =
      (m + n) * (bit_size(total) + bit_size(t.get_num()) + bit_size(t.get_den()) +
                 bit_size(one_minus.get_num()));
  if (estimate > budget.max_power_bits) {
    throw ResourceLimit("evaluating a power map of degree " + total.get_str() +
                        " needs about " + std::to_string(estimate) + " bits");
  }
  Rational coeff(ipow(total, m + n), ipow(p.m, m) * ipow(p.n, n));
  coeff.canonicalize();
  return coeff * qpow(t, m) * qpow(one_minus, n);
}

RatPoly expand(const PowerMap& p, const ExactBudget& budget) {
  const Integer total = p.m + p.n;
  if (!total.fits_ulong_p() || total.get_ui() > budget.max_expand_degree) {
    throw ResourceLimit("power map of degree " + total.get_str() +
                        " is too large to expand");
  }
  const unsigned long m = p.m.get_ui();
  const unsigned long n = p.n.get_ui();
  Rational coeff(ipow(total, m + n), ipow(p.m, m) * ipow(p.n, n));
  coeff.canonicalize();
  RatPoly one_minus_x = rat_poly({1, -1});
  return coeff * (RatPoly::monomial(Rational(1), m) * pow(one_minus_x, n));
}

Integer PolyChain::degree() const {
  Integer d = 1;
  for (const auto& f : factors) {
    if (const auto* poly = std::get_if<RatPoly>(&f)) {
      d *= poly->degree();
    } else {
      const auto& pm = std::get<PowerMap>(f);
      d *= pm.m + pm.n;
    }
  }
  return d;
}

Rational PolyChain::evaluate(const Rational& t, const ExactBudget& budget) const {
  Rational v = t;
  for (const auto& f : factors) {
    if (const auto* poly = std::get_if<RatPoly>(&f)) {
      v = (*poly)(v);
    } else {
      v = dessinkit::evaluate(std::get<PowerMap>(f), v, budget);
    }
  }
  return v;
}

std::optional<RatPoly> PolyChain::expand(std::size_t max_degree,
                                         const ExactBudget& budget) const {
  if (degree() > max_degree) return std::nullopt;
  RatPoly acc = RatPoly::variable();
  for (const auto& f : factors) {
    if (const auto* poly = std::get_if<RatPoly>(&f)) {
      acc = compose(*poly, acc);
    } else {
      acc = compose(dessinkit::expand(std::get<PowerMap>(f), budget), acc);
    }
  }
  return acc;
}

std::string PolyChain::describe(const std::string& var) const {
  std::ostringstream out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    out << "step " << i + 1 << ": ";
    if (const auto* poly = std::get_if<RatPoly>(&factors[i])) {
      out << to_string(*poly, var);
    } else {
      const auto& pm = std::get<PowerMap>(factors[i]);
      out << "P[m=" << pm.m.get_str() << ",n=" << pm.n.get_str() << "] = (m+n)^(m+n)/(m^m n^n) * "
          << var << "^m * (1 - " << var << ")^n";
    }
    out << '\n';
  }
  return out.str();
}

bool ValueSet::within_01() const {
  if (algebraic.degree() > 0) return false;
  return std::all_of(rationals.begin(), rationals.end(),
                     [](const Rational& q) { return is_zero(q) || q == 1; });
}

ValueSet critical_value_set(const ChainFactor& g, const ExactBudget&) {
  ValueSet out;
  if (const auto* poly = std::get_if<RatPoly>(&g)) {
    const CriticalReport report = critical_values(*poly);
    out.rationals = report.rational_values;
    out.algebraic = report.nonrational_factor;
    return out;
  }
  const auto& pm = std::get<PowerMap>(g);
  // Critical points 0 (if m >= 2), 1 (if n >= 2) and m/(m+n).
  if (pm.m >= 2 || pm.n >= 2) out.rationals.emplace_back(0);
  out.rationals.emplace_back(1);
  return out;
}

ValueSet image(const ValueSet& s, const ChainFactor& g, const ExactBudget& budget) {
  ValueSet out;
  for (const auto& r : s.rationals) {
    if (const auto* poly = std::get_if<RatPoly>(&g)) {
      out.rationals.push_back((*poly)(r));
    } else {
      out.rationals.push_back(evaluate(std::get<PowerMap>(g), r, budget));
    }
  }
  sort_unique(out.rationals);
  if (s.algebraic.degree() >= 1) {
    const RatPoly dense = std::holds_alternative<RatPoly>(g)
                              ? std::get<RatPoly>(g)
                              : expand(std::get<PowerMap>(g), budget);
    absorb(out, squarefree_part(resultant_in_y(s.algebraic, dense)));
  }
  return out;
}

ValueSet chain_critical_values(const PolyChain& chain, const ExactBudget& budget) {
  ValueSet current;
  for (const auto& g : chain.factors) {
    current = merge(image(current, g, budget), critical_value_set(g, budget));
  }
  return current;
}

bool is_belyi_chain(const PolyChain& chain, const ExactBudget& budget) {
  return chain_critical_values(chain, budget).within_01();
}

RationalReduction reduce_to_rational(const RatPoly& m,
                                     const std::vector<Rational>& initial_rationals,
                                     const ExactBudget&) {
  RationalReduction out;
  out.rational_set = initial_rationals;
  RatPoly tracker = kOne;
  if (m.degree() >= 1) {
    const RatPoly sq = squarefree_part(m);
    auto roots = rational_roots(sq);
    out.rational_set.insert(out.rational_set.end(), roots.begin(), roots.end());
    tracker = remove_rational_roots(sq, roots);
  }
  sort_unique(out.rational_set);
  while (tracker.degree() > 0) {
    out.tracker_degrees.push_back(tracker.degree());
    const RatPoly g = tracker;
    std::vector<Rational> next{Rational(0)};
    for (const auto& r : out.rational_set) next.push_back(g(r));
    const CriticalReport report = critical_values(g);
    next.insert(next.end(), report.rational_values.begin(), report.rational_values.end());
    sort_unique(next);
    out.rational_set = std::move(next);
    tracker = report.nonrational_factor;
    out.chain.push_back(g);
  }
  out.tracker_degrees.push_back(0);
  return out;
}

PolyChain consolidate_rationals(const std::vector<Rational>& s, const ExactBudget& budget) {
  if (s.empty()) throw EmptySet("consolidation needs at least one rational point");
  std::vector<Rational> current = s;
  sort_unique(current);
  PolyChain h;
  auto apply = [&](const ChainFactor& g, std::vector<Rational> extra) {
    std::vector<Rational> next = std::move(extra);
    for (const auto& q : current) {
      if (const auto* poly = std::get_if<RatPoly>(&g)) {
        next.push_back((*poly)(q));
      } else {
        next.push_back(evaluate(std::get<PowerMap>(g), q, budget));
      }
    }
    sort_unique(next);
    current = std::move(next);
    h.factors.push_back(g);
  };

  for (;;) {
    const bool done = std::all_of(current.begin(), current.end(), [](const Rational& q) {
      return is_zero(q) || q == 1;
    });
    if (done) return h;
    if (current.size() == 1) {
      apply(affine(Rational(1), -current[0]), {});
    } else if (current.size() == 2) {
      // Send q1, q2 to 0, 1; then -4x(x-1) folds both to 0 with critical value 1.
      const Rational span = current[1] - current[0];
      apply(affine(1 / span, -current[0] / span), {});
      apply(rat_poly({0, 4, -4}), {Rational(1)});
    } else {
      // Pick a < b < c minimizing the height of (b - a)/(c - a): the power
      // map's exponents come from that ratio, and small exponents keep the
      // images of the remaining points small.
      std::size_t ia = 0, ic = 2;
      Rational best_t;
      Integer best_height = -1;
      for (std::size_t a = 0; a < current.size(); ++a) {
        for (std::size_t b = a + 1; b < current.size(); ++b) {
          for (std::size_t c = b + 1; c < current.size(); ++c) {
            const Rational t = (current[b] - current[a]) / (current[c] - current[a]);
            const Integer height = t.get_den();
            if (best_height < 0 || height < best_height) {
              best_height = height;
              best_t = t;
              ia = a;
              ic = c;
            }
          }
        }
      }
      const Rational span = current[ic] - current[ia];
      const Rational shift = -current[ia] / span;
      const Rational scale = 1 / span;
      if (!(scale == 1 && is_zero(shift))) apply(affine(scale, shift), {});
      const Rational t = best_t;
      PowerMap pm{t.get_num(), t.get_den() - t.get_num()};
      apply(pm, critical_value_set(pm).rationals);
    }
  }
}

BelyiReduction belyi_reduce(const RatPoly& f, const ExactBudget& budget) {
  if (f.degree() < 1) throw ZeroPolynomial("Belyi reduction needs degree >= 1");
  BelyiReduction out;
  out.map.factors.push_back(f);
  const CriticalReport report = critical_values(f);
  out.rationalization =
      reduce_to_rational(report.nonrational_factor, report.rational_values, budget);
  for (const auto& g : out.rationalization.chain) out.map.factors.push_back(g);
  out.special_set = out.rationalization.rational_set;
  if (!out.special_set.empty()) {
    PolyChain h = consolidate_rationals(out.special_set, budget);
    for (auto& g : h.factors) out.map.factors.push_back(std::move(g));
  }
  if (!is_belyi_chain(out.map, budget)) {
    throw std::logic_error("Belyi reduction produced a map with stray critical values");
  }
  return out;
}

}  // namespace dessinkit
