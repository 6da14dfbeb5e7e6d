#include <gtest/gtest.h>

#include <random>

#include "dessinkit/errors.hpp"
#include "dessinkit/group.hpp"
#include "test_support.hpp"

using namespace dessinkit;
using dktest::corpus_dessin;

TEST(Closure, CorpusOrders) {
  EXPECT_EQ(closure(corpus_dessin("cube")).order(), 12u);
  EXPECT_EQ(closure(corpus_dessin("d0")).order(), 576u);
  EXPECT_EQ(closure(corpus_dessin("d0_quotient6")).order(), 18u);
  EXPECT_EQ(closure(corpus_dessin("tree_top")).order(), 720u);
  EXPECT_EQ(closure(Dessin::trivial()).order(), 1u);
}

TEST(Closure, WordsRealizeElements) {
  const auto d0 = corpus_dessin("d0");
  const auto g = closure(d0);
  EXPECT_TRUE(g.element(0).is_identity());
  for (std::size_t i = 0; i < g.order(); i += 17) {
    EXPECT_EQ(evaluate_word(g.word(i), d0.x(), d0.y()), g.element(i));
    EXPECT_EQ(g.index_of(g.element(i)), i);
  }
}

TEST(Closure, CapIsEnforced) {
  EXPECT_THROW(closure(corpus_dessin("d0"), 100), GroupTooLarge);
  EXPECT_THROW(closure(corpus_dessin("rabbit24")), GroupTooLarge);
}

TEST(Regularity, CubeIsRegularD0IsNot) {
  EXPECT_TRUE(is_regular(corpus_dessin("cube")));
  EXPECT_FALSE(is_regular(corpus_dessin("d0")));
  EXPECT_EQ(automorphisms(corpus_dessin("cube")).order(), 12u);
  EXPECT_EQ(automorphisms(corpus_dessin("d0")).order(), 2u);
}

TEST(RegularCover, D0CoverHasGenus145) {
  const auto rc = regular_cover(corpus_dessin("d0"));
  EXPECT_EQ(rc.degree(), 576u);
  EXPECT_TRUE(is_regular(rc));
  EXPECT_EQ(genus(rc), 145u);
  EXPECT_EQ(dessin_type(rc).to_string(), "(6,4,12)");
  EXPECT_TRUE(find_morphism(rc, corpus_dessin("d0")));
}

TEST(RegularCover, TreeCoversHaveGenus61) {
  for (const char* name : {"tree_top", "tree_middle", "tree_bottom"}) {
    const auto rc = regular_cover(corpus_dessin(name));
    EXPECT_EQ(rc.degree(), 720u) << name;
    EXPECT_EQ(genus(rc), 61u) << name;
  }
}

TEST(RegularCover, RegularDessinIsItsOwnCover) {
  const auto cube = corpus_dessin("cube");
  EXPECT_TRUE(is_isomorphic(regular_cover(cube), cube));
}

TEST(Center, D0CenterAndQuotient) {
  const auto g = closure(corpus_dessin("d0"));
  const auto z = center(g);
  ASSERT_EQ(z.size(), 2u);
  EXPECT_TRUE(z[0].is_identity() || z[1].is_identity());
  const auto& swap = z[0].is_identity() ? z[1] : z[0];
  EXPECT_EQ(swap.to_string(), "(1 7)(2 8)(3 9)(4 10)(5 11)(6 12)");

  const Dessin rc = regular_cover(g);
  std::vector<Permutation> translations;
  for (const auto& c : z) translations.push_back(left_translation(g, c));
  for (const auto& t : translations) {
    EXPECT_TRUE(commute(t, rc.x()));
    EXPECT_TRUE(commute(t, rc.y()));
  }
  const Dessin q = quotient_by_central_subgroup(rc, translations);
  EXPECT_EQ(q.degree(), 288u);
  EXPECT_TRUE(is_regular(q));
  EXPECT_EQ(dessin_type(q).to_string(), "(6,4,6)");
  EXPECT_EQ(genus(q), 61u);
}

TEST(Quotient, HalvesOfD0) {
  Partition blocks;
  for (Point i = 1; i <= 6; ++i) blocks.push_back({i, static_cast<Point>(i + 6)});
  const Dessin q = quotient_by_partition(corpus_dessin("d0"), blocks);
  EXPECT_EQ(q.x().to_string(), "(1 2 3)");
  EXPECT_EQ(q.y().to_string(), "(1 4)(2 5)(3 6)");
  EXPECT_EQ(closure(q).order(), 18u);
}

TEST(Quotient, RejectsBadInput) {
  const auto d0 = corpus_dessin("d0");
  Partition blocks;
  for (Point i = 1; i <= 11; i += 2) blocks.push_back({i, static_cast<Point>(i + 1)});
  EXPECT_THROW(quotient_by_partition(d0, blocks), NotInvariant);

  const auto g = closure(d0);
  const Dessin rc = regular_cover(g);
  // A non-central element.
  const std::vector<Permutation> bad = {Permutation::identity(576), rc.x()};
  EXPECT_THROW(quotient_by_central_subgroup(rc, bad), NotCentral);
  // Central but not closed under products: missing the identity.
  const auto z = center(g);
  std::vector<Permutation> partial;
  for (const auto& c : z)
    if (!c.is_identity()) partial.push_back(left_translation(g, c));
  EXPECT_THROW(quotient_by_central_subgroup(rc, partial), NotSubgroup);
}

TEST(GenusFormula, QuotedValues) {
  EXPECT_EQ(genus_regular_formula(576, 6, 4, 12), 145u);
  EXPECT_EQ(genus_regular_formula(288, 6, 4, 6), 61u);
  EXPECT_EQ(genus_regular_formula(720, 2, 6, 6), 61u);
  EXPECT_EQ(genus_regular_formula(12, 3, 3, 2), 0u);
  EXPECT_THROW(genus_regular_formula(7, 2, 3, 5), NonIntegralGenus);
}

TEST(GenusFormula, MatchesEulerOnRegularCovers) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const Dessin d = dktest::random_dessin(2 + rng() % 5, rng);
    const auto g = closure(d);
    if (g.order() > 5000) continue;
    const Dessin rc = regular_cover(g);
    const DessinType t = dessin_type(rc);
    EXPECT_EQ(genus(rc), genus_regular_formula(g.order(), t.l, t.m, t.n));
    EXPECT_EQ(dessin_type(d), t);
    EXPECT_TRUE(is_isomorphic(regular_cover(rc), rc));
  }
}

TEST(RealModuli, Rabbit24IsObstructed) {
  const auto rabbit = corpus_dessin("rabbit24");
  const auto aut = automorphisms(rabbit);
  ASSERT_EQ(aut.order(), 2u);
  for (const auto& a : aut.elements) {
    if (a.is_identity()) continue;
    for (Point i = 1; i <= 24; ++i) EXPECT_EQ(a(i), (i + 11) % 24 + 1);
  }
  const auto r = real_moduli_test(rabbit);
  EXPECT_EQ(r.status, ModuliStatus::Obstructed);
  EXPECT_EQ(r.coset.size(), 2u);
  for (const auto& w : r.coset) EXPECT_EQ(order(w), 4u);
  EXPECT_EQ(*r.witness_order, 4u);
}

TEST(RealModuli, CubeAndD1) {
  EXPECT_EQ(real_moduli_test(corpus_dessin("cube")).status, ModuliStatus::DefinableOverReal);
  EXPECT_EQ(real_moduli_test(corpus_dessin("d1")).status, ModuliStatus::NotRealModuli);
  EXPECT_EQ(real_moduli_test(corpus_dessin("d0")).status, ModuliStatus::DefinableOverReal);
}

TEST(RealModuli, WitnessesConjugateToInverses) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const Dessin d = dktest::random_dessin(1 + rng() % 8, rng);
    const auto r = real_moduli_test(d);
    for (const auto& w : r.coset) {
      EXPECT_EQ(conjugate(d.x(), w), inverse(d.x()));
      EXPECT_EQ(conjugate(d.y(), w), inverse(d.y()));
    }
    if (!r.coset.empty()) {
      EXPECT_EQ(r.coset.size(), automorphisms(d).order());
    }
  }
}
