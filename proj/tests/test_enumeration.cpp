#include <gtest/gtest.h>

#include <set>

#include "dessinkit/enumeration.hpp"
#include "dessinkit/errors.hpp"
#include "dessinkit/group.hpp"
#include "test_support.hpp"

using namespace dessinkit;

namespace {

// Independent Hall recursion over machine integers, valid for small n:
// a_n = n (n!)^(r-1) - sum_{k<n} ((n-k)!)^(r-1) a_k with r = 2 generators.
std::vector<std::uint64_t> hall_oracle(std::size_t max_n) {
  std::vector<std::uint64_t> fact(max_n + 1, 1), a(max_n + 1, 0);
  for (std::size_t i = 1; i <= max_n; ++i) fact[i] = fact[i - 1] * i;
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::uint64_t v = n * fact[n];
    for (std::size_t k = 1; k < n; ++k) v -= fact[n - k] * a[k];
    a[n] = v;
  }
  return a;
}

}  // namespace

TEST(Enumeration, HallNumbers) {
  const auto oracle = hall_oracle(7);
  const std::uint64_t published[] = {0, 1, 3, 13, 71, 461, 3447, 29093};
  for (std::size_t n = 1; n <= 7; ++n) {
    EXPECT_EQ(oracle[n], published[n]);
    EXPECT_EQ(count_pointed(n), mpz_class(static_cast<unsigned long>(oracle[n])));
  }
}

TEST(Enumeration, PointedCountsMatchHall) {
  const auto oracle = hall_oracle(6);
  for (std::size_t n = 1; n <= 6; ++n) {
    EXPECT_EQ(enumerate_dessins({n, std::nullopt, true}).size(), oracle[n]) << n;
  }
}

TEST(Enumeration, UnpointedCountsMatchBruteForceOrbits) {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::set<std::pair<std::vector<Point>, std::vector<Point>>> forms;
    for (const auto& d : dktest::all_dessins(n)) {
      const Dessin c = canonical_form(d);
      forms.insert({c.x().images(), c.y().images()});
    }
    EXPECT_EQ(enumerate_dessins({n, std::nullopt, false}).size(), forms.size()) << n;
  }
}

TEST(Enumeration, KnownUnpointedCounts) {
  const std::size_t expected[] = {0, 1, 3, 7, 26, 97, 624};
  for (std::size_t n = 1; n <= 6; ++n) {
    EXPECT_EQ(enumerate_dessins({n, std::nullopt, false}).size(), expected[n]);
  }
}

TEST(Enumeration, OrbitCountCrossCheck) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto c = orbit_count(n);
    EXPECT_TRUE(c.agree()) << n << ": " << c.direct << " vs " << c.from_classes;
    EXPECT_EQ(c.direct, count_transitive_pairs(n));
    EXPECT_EQ(c.direct, dktest::all_dessins(n).size());
  }
}

TEST(Enumeration, ThreeTreesWithThePassport) {
  const auto trees = enumerate_dessins({6, Passport::parse("2,2,1,1/3,2,1/6"), false});
  ASSERT_EQ(trees.size(), 3u);
  std::vector<Dessin> corpus = {dktest::corpus_dessin("tree_top"),
                                dktest::corpus_dessin("tree_middle"),
                                dktest::corpus_dessin("tree_bottom")};
  for (const auto& t : trees) {
    EXPECT_EQ(closure(t).order(), 720u);
    int matches = 0;
    for (const auto& c : corpus) matches += is_isomorphic(t, c).has_value();
    EXPECT_EQ(matches, 1);
  }
}

TEST(Enumeration, OutputIsSortedAndCanonical) {
  const auto all = enumerate_dessins({5, std::nullopt, false});
  for (std::size_t i = 0; i + 1 < all.size(); ++i) EXPECT_TRUE(dessin_less(all[i], all[i + 1]));
  for (const auto& d : all) EXPECT_EQ(canonical_form(d), d);
}

TEST(Enumeration, ThreadsDoNotChangeOutput) {
  EnumerationOptions many;
  many.threads = 4;
  EXPECT_EQ(enumerate_dessins({6, std::nullopt, false}, many),
            enumerate_dessins({6, std::nullopt, false}));
  EXPECT_EQ(enumerate_dessins({5, std::nullopt, true}, many),
            enumerate_dessins({5, std::nullopt, true}));
}

TEST(Enumeration, Caps) {
  EXPECT_THROW(enumerate_dessins({8, std::nullopt, false}), DegreeTooLarge);
  EXPECT_THROW(enumerate_dessins({7, std::nullopt, true}), DegreeTooLarge);
  EXPECT_THROW(enumerate_dessins({5, Passport::parse("2,2/3,1/4"), false}), ParseError);
  EXPECT_EQ(enumerate_dessins({1, std::nullopt, false}).size(), 1u);
}
