#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "dessinkit/corpus.hpp"
#include "dessinkit/dessin.hpp"
#include "dessinkit/dessin_io.hpp"
#include "dessinkit/permutation.hpp"

namespace dktest {

using namespace dessinkit;

inline std::string corpus_path(const std::string& name) {
  return std::string(DESSINKIT_TEST_CORPUS) + "/" + name + ".dsn";
}

inline Dessin corpus_dessin(const std::string& name) {
  return read_dessin_file(corpus_path(name)).dessin;
}

inline std::vector<CorpusEntry> load_corpus() {
  std::vector<CorpusEntry> out;
  for (const auto& f : corpus_files(DESSINKIT_TEST_CORPUS)) out.push_back(read_corpus_entry(f));
  return out;
}

inline Dessin make(std::size_t n, const char* x, const char* y) {
  return Dessin(Permutation::parse(x, n), Permutation::parse(y, n));
}

/// Every permutation of {1..n} in lexicographic order of image vectors.
inline std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_zero_based(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

/// Every transitive pair on {1..n}.
inline std::vector<Dessin> all_dessins(std::size_t n) {
  const auto perms = all_permutations(n);
  std::vector<Dessin> out;
  for (const auto& x : perms)
    for (const auto& y : perms)
      if (is_transitive(x, y)) out.emplace_back(x, y);
  return out;
}

/// Whether phi (0-based index, 1-based values) intertwines both generators.
inline bool equivariant(const Dessin& a, const Dessin& b, const std::vector<Point>& phi) {
  for (Point i = 1; i <= a.degree(); ++i) {
    if (phi[a.x()(i) - 1] != b.x()(phi[i - 1])) return false;
    if (phi[a.y()(i) - 1] != b.y()(phi[i - 1])) return false;
  }
  return true;
}

/// Tries every map {1..n1} -> {1..n2}.
inline bool brute_force_morphism(const Dessin& a, const Dessin& b) {
  const std::size_t n1 = a.degree(), n2 = b.degree();
  std::vector<Point> phi(n1, 1);
  for (;;) {
    if (equivariant(a, b, phi)) return true;
    std::size_t k = 0;
    while (k < n1 && phi[k] == n2) phi[k++] = 1;
    if (k == n1) return false;
    ++phi[k];
  }
}

/// A random transitive pair of degree n (rejection sampling).
inline Dessin random_dessin(std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Permutation x = random_permutation(n, rng);
    Permutation y = random_permutation(n, rng);
    if (is_transitive(x, y)) return Dessin(std::move(x), std::move(y));
  }
}

}  // namespace dktest
