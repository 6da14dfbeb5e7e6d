#include <gtest/gtest.h>

#include <random>

#include "dessinkit/belyi.hpp"
#include "dessinkit/errors.hpp"
#include "dessinkit/poly_parse.hpp"

using namespace dessinkit;

namespace {

RatPoly random_poly(std::mt19937_64& rng, int degree) {
  std::vector<Rational> c(degree + 1);
  for (auto& v : c) v = static_cast<long>(rng() % 11) - 5;
  while (c.back() == 0) c.back() = static_cast<long>(rng() % 11) - 5;
  return RatPoly(c);
}

// Oracle: f' = c * prod (x - r_i)^(e_i) with chosen rational critical points;
// the critical values are then exactly {f(r_i)}.
std::vector<Rational> designed_critical_values(std::mt19937_64& rng, RatPoly& f) {
  RatPoly fp = RatPoly::constant(Rational(static_cast<long>(rng() % 3) + 1));
  std::vector<Rational> points;
  const int k = 1 + static_cast<int>(rng() % 3);
  for (int i = 0; i < k; ++i) {
    Rational r(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
    r.canonicalize();
    points.push_back(r);
    fp = fp * pow(RatPoly(std::vector<Rational>{-r, Rational(1)}), 1 + rng() % 2);
  }
  // Antiderivative with constant term 0.
  std::vector<Rational> c(fp.degree() + 2, 0);
  for (int i = 0; i <= fp.degree(); ++i) c[i + 1] = fp.coeff(i) / (i + 1);
  c[0] = Rational(static_cast<long>(rng() % 7) - 3);
  f = RatPoly(c);
  std::vector<Rational> values;
  for (const auto& r : points) values.push_back(f(r));
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

}  // namespace

TEST(Belyi, ClassicExamples) {
  EXPECT_TRUE(is_belyi_polynomial(parse_rat_poly("1 - (x^3 - 1)^2")));
  EXPECT_TRUE(is_belyi_polynomial(parse_rat_poly("x^5")));
  EXPECT_TRUE(is_belyi_polynomial(parse_rat_poly("4x(1-x)")));
  EXPECT_FALSE(is_belyi_polynomial(parse_rat_poly("x^2 - 2")));
  const auto report = critical_values(parse_rat_poly("x^3 - 3x"));
  EXPECT_EQ(report.rational_values, (std::vector<Rational>{-2, 2}));
  EXPECT_FALSE(is_belyi_polynomial(parse_rat_poly("x^3 - 3x")));
}

TEST(Belyi, NonRationalCriticalValues) {
  // x^4 - 2x^2 + x has three irrational critical points.
  const auto report = critical_values(parse_rat_poly("x^4 - 2x^2 + x"));
  EXPECT_GE(report.nonrational_factor.degree(), 1);
}

TEST(BelyiOracle, CriticalValuesOfDesignedPolynomials) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    RatPoly f;
    const auto expected = designed_critical_values(rng, f);
    const auto report = critical_values(f);
    EXPECT_EQ(report.rational_values, expected) << to_string(f);
    EXPECT_EQ(report.nonrational_factor.degree(), 0) << to_string(f);
  }
}

TEST(PowerMap, BelyiForSmallExponents) {
  for (long m = 1; m <= 6; ++m) {
    for (long n = 1; n <= 6; ++n) {
      const PowerMap p{m, n};
      const Rational peak = Rational(m) / Rational(m + n);
      const RatPoly dense = expand(p);
      EXPECT_EQ(dense.degree(), m + n);
      EXPECT_EQ(dense(Rational(0)), 0);
      EXPECT_EQ(dense(Rational(1)), 0);
      EXPECT_EQ(dense(peak), 1);
      EXPECT_EQ(evaluate(p, peak), 1);
      EXPECT_EQ(evaluate(p, Rational(2, 7)), dense(Rational(2, 7)));
      EXPECT_TRUE(is_belyi_polynomial(dense)) << m << "," << n;
      EXPECT_TRUE(critical_points_map_into_01(dense));
      // Symbolic critical values agree with the dense computation.
      const ValueSet sym = critical_value_set(p);
      const auto report = critical_values(dense);
      EXPECT_EQ(sym.rationals, report.rational_values) << m << "," << n;
    }
  }
}

TEST(PowerMap, HugeExponentsStaySymbolic) {
  const PowerMap p{Integer("123456789012345678901234567890"), Integer(7)};
  EXPECT_EQ(evaluate(p, Rational(0)), 0);
  EXPECT_EQ(evaluate(p, Rational(1)), 0);
  EXPECT_THROW(evaluate(p, Rational(1, 2)), ResourceLimit);
  EXPECT_THROW(expand(p), ResourceLimit);
}

TEST(Consolidate, SmallSets) {
  EXPECT_THROW(consolidate_rationals({}), EmptySet);
  EXPECT_TRUE(consolidate_rationals({Rational(0), Rational(1)}).factors.empty());
  for (const std::vector<Rational>& s : std::vector<std::vector<Rational>>{
           {Rational(5)},
           {Rational(-2), Rational(3)},
           {Rational(0), Rational(1, 3), Rational(1)},
           {Rational(-1), Rational(2), Rational(7, 2)},
           {Rational(-1), Rational(0), Rational(2), Rational(5)}}) {
    const PolyChain h = consolidate_rationals(s);
    for (const auto& q : s) {
      const Rational v = h.evaluate(q);
      EXPECT_TRUE(v == 0 || v == 1) << to_string(q) << " -> " << to_string(v);
    }
    EXPECT_TRUE(is_belyi_chain(h)) << h.describe();
  }
}

TEST(Reduce, ExamplesAndDualCheck) {
  for (const char* text : {"x^2 - 2", "x^3 - 3x", "x^3 + x + 1", "x^4 - 2x^2 + x", "2x^3 - x"}) {
    const auto r = belyi_reduce(parse_rat_poly(text));
    EXPECT_TRUE(is_belyi_chain(r.map)) << text;
    const auto& td = r.rationalization.tracker_degrees;
    for (std::size_t i = 0; i + 1 < td.size(); ++i) EXPECT_GT(td[i], td[i + 1]) << text;
    if (auto dense = r.map.expand(512)) {
      EXPECT_TRUE(is_belyi_polynomial(*dense)) << text;
      EXPECT_TRUE(critical_points_map_into_01(*dense)) << text;
    }
  }
  EXPECT_THROW(belyi_reduce(RatPoly::constant(Rational(3))), ZeroPolynomial);
}

TEST(Reduce, ChainEvaluationMatchesExpansion) {
  const auto r = belyi_reduce(parse_rat_poly("x^3 - 3x"));
  const auto dense = r.map.expand(4096);
  ASSERT_TRUE(dense);
  for (long t = -3; t <= 3; ++t) EXPECT_EQ(r.map.evaluate(Rational(t) / 2), (*dense)(Rational(t) / 2));
}

TEST(ReduceProperty, RandomLowDegree) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    const RatPoly f = random_poly(rng, 1 + static_cast<int>(rng() % 3));
    const auto r = belyi_reduce(f);
    EXPECT_TRUE(is_belyi_chain(r.map)) << to_string(f);
    const auto& td = r.rationalization.tracker_degrees;
    ASSERT_FALSE(td.empty());
    EXPECT_EQ(td.back(), 0);
    for (std::size_t i = 0; i + 1 < td.size(); ++i) EXPECT_GT(td[i], td[i + 1]);
  }
}

TEST(BelyiNumberField, TreePolynomials) {
  const auto k = NumberField::create(parse_rat_poly("25x^3 - 12x^2 - 24x - 16"));
  // As printed, both extra critical values coincide but differ from 1.
  EXPECT_FALSE(is_belyi_over_number_field(parse_nf_poly("1 - z^3(z+1)^2(z+a)", k)));
  EXPECT_FALSE(is_belyi_over_number_field(parse_nf_poly("1 - z^3(z+1)^2(z+0)", k)));
  // Scaling by the common extra critical value v = -(a^2 + 52a - 32)/1500
  // of z^3(z+1)^2(z+a) gives a genuine Belyi polynomial.
  const NFElement a = NFElement::generator(k);
  const NFElement v = (NFElement(0) - (a * a + NFElement(52) * a - NFElement(32))) /
                      NFElement(1500);
  const NFPoly g = parse_nf_poly("z^3(z+1)^2(z+a)", k);
  const NFPoly f = NFPoly::constant(NFElement(Rational(1))) - v.inverse() * g;
  EXPECT_TRUE(is_belyi_over_number_field(f));
  EXPECT_TRUE(critical_points_map_into_01(f));
}
