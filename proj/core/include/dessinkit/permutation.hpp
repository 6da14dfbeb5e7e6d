#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dessinkit {

/// A point of {1..n}. Public APIs are 1-indexed.
using Point = std::uint32_t;

/**
 * A bijection of {1..n}.
 *
 * Products follow the right-action convention used throughout the library:
 * compose(p, q) is "p then q", i.e. i -> q(p(i)). Images are stored
 * 0-indexed internally; zero_based() exposes that array for hot loops.
 */
class Permutation {
 public:
  /// Identity on a single point.
  Permutation() : img_{0} {}

  static Permutation identity(std::size_t degree);

  /// images[i-1] is the image of point i (1-indexed values).
  static Permutation from_images(std::span<const Point> images);

  /// Same as from_images but the input is 0-indexed.
  static Permutation from_zero_based(std::vector<Point> images);

  /// Builds a permutation of the given degree from disjoint cycles; points
  /// not mentioned are fixed.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  /**
   * Parses cycle notation such as "(1 2 3)(6 12)". Points may be separated
   * by whitespace or commas; "()" and "id" denote the identity. Fixed points
   * may be omitted. Throws ParseError on malformed input.
   */
  static Permutation parse(std::string_view text, std::size_t degree);

  std::size_t degree() const noexcept { return img_.size(); }

  /// Image of a 1-indexed point.
  Point operator()(Point point) const { return img_[point - 1] + 1; }

  std::span<const Point> zero_based() const noexcept { return img_; }

  /// 1-indexed image list.
  std::vector<Point> images() const;

  bool is_identity() const noexcept;

  /// Cycle notation with 1-indexed points, fixed points omitted; "()" for
  /// the identity.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.img_ <=> b.img_;
  }

 private:
  explicit Permutation(std::vector<Point> img) : img_(std::move(img)) {}

  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);
  friend Permutation conjugate(const Permutation&, const Permutation&);

  std::vector<Point> img_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// "p then q": i -> q(p(i)). Throws DegreeMismatch.
Permutation compose(const Permutation& p, const Permutation& q);

Permutation inverse(const Permutation& p);

/// p^k for any integer k.
Permutation power(const Permutation& p, long long k);

/// Disjoint cycles, fixed points included, each starting at its minimum,
/// sorted by minimum.
std::vector<std::vector<Point>> cycles(const Permutation& p);

/// Cycle lengths sorted in descending order.
std::vector<std::size_t> cycle_type(const Permutation& p);

std::size_t cycle_count(const Permutation& p);

/// Least k >= 1 with p^k = 1. Throws ResourceLimit if it overflows 64 bits.
std::uint64_t order(const Permutation& p);

/// g^-1 p g in the right-action convention (the exponent notation p^g).
Permutation conjugate(const Permutation& p, const Permutation& g);

bool commute(const Permutation& p, const Permutation& q);

}  // namespace dessinkit
