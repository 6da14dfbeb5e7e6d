#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "dessinkit/dessin.hpp"

namespace dessinkit {

struct EnumerationRequest {
  std::size_t degree = 1;
  std::optional<Passport> passport_filter;
  /// Pointed classes (dessins with a base edge) correspond one-to-one with
  /// index-n subgroups of the free group F2.
  bool pointed = false;
};

struct EnumerationOptions {
  std::size_t max_degree_unpointed = 7;
  std::size_t max_degree_pointed = 6;
  unsigned threads = 1;
};

/**
 * All dessins of the requested degree, one per isomorphism class (or per
 * pointed class), each in BFS-standard form from edge 1. Unpointed results
 * are canonical forms. Output is sorted lexicographically.
 *
 * Throws DegreeTooLarge past the caps in `options`.
 */
std::vector<Dessin> enumerate_dessins(const EnumerationRequest& request,
                                      const EnumerationOptions& options = {});

/// Number of index-n subgroups of F2 by Hall's recursion
/// a_n = n (n!) - sum_{k<n} (n-k)! a_k.
mpz_class count_pointed(std::size_t n);

/// Number of transitive pairs (x, y) in S_n x S_n by exhaustive search.
std::uint64_t count_transitive_pairs(std::size_t n);

struct OrbitCount {
  std::uint64_t direct = 0;        // exhaustive labeled count
  std::uint64_t from_classes = 0;  // sum of n!/|Aut| over classes
  bool agree() const noexcept { return direct == from_classes; }
};

/// Counts labeled transitive pairs two ways. Throws DegreeTooLarge.
OrbitCount orbit_count(std::size_t n, const EnumerationOptions& options = {});

bool orbit_count_crosscheck(std::size_t n, const EnumerationOptions& options = {});

}  // namespace dessinkit
