#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dessinkit/permutation.hpp"

namespace dessinkit {

/// A generator of the free group on {x, y} or its inverse.
enum class Letter : std::int8_t { X = 1, XInv = -1, Y = 2, YInv = -2 };

constexpr Letter inverse(Letter l) noexcept {
  return static_cast<Letter>(-static_cast<std::int8_t>(l));
}

enum class Generator : std::int8_t { X = 1, Y = 2 };

/**
 * A freely reduced word in x, y and their inverses.
 *
 * Reduction happens at construction and is the only normalization; no
 * cyclic reduction is performed, so conjugates keep their written form.
 */
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(const std::vector<Letter>& letters);

  static FreeWord x() { return FreeWord({Letter::X}); }
  static FreeWord y() { return FreeWord({Letter::Y}); }

  /**
   * Parses words such as "x^3y^2(x^3y^2)^x(x^3y^2)^(x^2)".
   *
   * Atoms are x, y, X (= x^-1), Y (= y^-1) or a parenthesised word. An atom
   * may be followed by "^k" for an integer power, or by "^atom" meaning
   * conjugation a^b = b^-1 a b. "1" or an empty string is the identity.
   */
  static FreeWord parse(std::string_view text);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool is_identity() const noexcept { return letters_.empty(); }

  /// Compact text form using X and Y for inverses, e.g. "xxxyyX".
  std::string to_string() const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<Letter> letters_;
};

FreeWord operator*(const FreeWord& a, const FreeWord& b);
FreeWord inverse(const FreeWord& w);
FreeWord power(const FreeWord& w, long long k);

/// b^-1 w b.
FreeWord conjugate(const FreeWord& w, const FreeWord& by);

/// Substitutes px for x and py for y and multiplies left to right under the
/// right-action convention. Throws DegreeMismatch.
Permutation evaluate_word(const FreeWord& w, const Permutation& px,
                          const Permutation& py);

/// Signed number of occurrences of a generator.
long long exponent_sum(const FreeWord& w, Generator g);

/// Applies the endomorphism x -> image_x, y -> image_y.
FreeWord substitute(const FreeWord& w, const FreeWord& image_x,
                    const FreeWord& image_y);

}  // namespace dessinkit
