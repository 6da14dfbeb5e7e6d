#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "dessinkit/dessin_io.hpp"
#include "dessinkit/group.hpp"

namespace dessinkit {

/// The relation word X^3 Y^2 (X^3 Y^2)^X (X^3 Y^2)^(X^2) used to separate D0, D1, D2.
inline constexpr const char* kRelationWord = "x^3y^2(x^3y^2)^x(x^3y^2)^(x^2)";

/// One "# expect key=value [TAG]" line of a corpus file.
struct Expectation {
  std::string key;
  std::string value;
  std::string tag;  // upper-case provenance label
  std::size_t line = 0;
};

/// One "# printed x=<cycles>" line: a generator exactly as published.
struct PrintedGenerator {
  char generator = 'x';
  std::string cycles;
  std::size_t line = 0;
};

struct CorpusEntry {
  std::string name;  // file stem
  std::filesystem::path path;
  DessinFile file;
  std::vector<Expectation> expected;
  std::vector<PrintedGenerator> printed;

  const Dessin& dessin() const noexcept { return file.dessin; }
};

/// Parses a corpus file. Expectations without a provenance tag are a ParseError.
CorpusEntry read_corpus_entry(const std::filesystem::path& path);

/// All *.dsn files in a directory, sorted by name. Empty if none.
std::vector<std::filesystem::path> corpus_files(const std::filesystem::path& dir);

/**
 * Computes the named invariant of an entry as a string, in the same format
 * the corpus stores. Supported keys:
 *   degree passport genus type black white faces aut closure regular one_face
 *   rc_degree rc_genus rc_type rc_regular center center_quotient_degree
 *   center_quotient_genus center_quotient_type center_quotient_regular
 *   moduli moduli_witness_order relation_word halves_x halves_y halves_closure
 *   iso:<entry name>
 * Throws std::invalid_argument for an unknown key.
 */
std::string corpus_invariant(const std::string& key, const CorpusEntry& entry,
                             const std::vector<CorpusEntry>& corpus,
                             std::size_t max_group_order = kDefaultMaxGroupOrder);

struct SelftestOptions {
  std::size_t relabel_trials = 100;
  std::uint64_t seed = 0x5eed'de55;
  std::size_t max_group_order = kDefaultMaxGroupOrder;
  /// Regular-cover idempotence is checked when the closure is at most this.
  std::size_t cover_check_limit = 1000;
};

struct EntryVerdict {
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool ok() const noexcept { return failures.empty(); }
};

/// Checks an entry's expectations, printed generators, round trip and the
/// invariant battery (relabeling invariance, regular-cover idempotence).
EntryVerdict verify_entry(const CorpusEntry& entry, const std::vector<CorpusEntry>& corpus,
                          const SelftestOptions& options = {});

/// Random permutation of {1..n} by Fisher-Yates. Draws raw engine output
/// so the sequence is identical across standard libraries.
template <class Rng>
Permutation random_permutation(std::size_t n, Rng& rng) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  for (std::size_t i = n; i > 1; --i) {
    std::swap(img[i - 1], img[static_cast<std::size_t>(rng() % i)]);
  }
  return Permutation::from_zero_based(std::move(img));
}

}  // namespace dessinkit
