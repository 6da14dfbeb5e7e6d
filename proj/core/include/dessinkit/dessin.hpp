#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dessinkit/permutation.hpp"

namespace dessinkit {

/**
 * A dessin d'enfant given by its monodromy: a transitive pair (x, y) of
 * permutations of the edge set {1..n}. x rotates edges around black
 * vertices, y around white vertices, and z = (xy)^-1 around faces.
 */
class Dessin {
 public:
  /// Throws DegreeMismatch or NotTransitive.
  Dessin(Permutation x, Permutation y);

  /// The degree-1 dessin.
  static Dessin trivial();

  std::size_t degree() const noexcept { return x_.degree(); }
  const Permutation& x() const noexcept { return x_; }
  const Permutation& y() const noexcept { return y_; }
  const Permutation& z() const noexcept { return z_; }

  friend bool operator==(const Dessin& a, const Dessin& b) {
    return a.x_ == b.x_ && a.y_ == b.y_;
  }

 private:
  Permutation x_;
  Permutation y_;
  Permutation z_;
};

/// True iff <x, y> acts transitively on {1..n}.
bool is_transitive(const Permutation& x, const Permutation& y);

/// Ramification data over 0, 1 and infinity; each part sorted descending.
struct Passport {
  std::vector<std::size_t> black;
  std::vector<std::size_t> white;
  std::vector<std::size_t> faces;

  /// "2,2,1,1/3,2,1/6".
  std::string to_string() const;
  /// Inverse of to_string; parts may be given in any order.
  static Passport parse(std::string_view text);

  friend bool operator==(const Passport&, const Passport&) = default;
};

/// Orders of x, y and z.
struct DessinType {
  std::uint64_t l = 1;
  std::uint64_t m = 1;
  std::uint64_t n = 1;

  std::string to_string() const;
  friend bool operator==(const DessinType&, const DessinType&) = default;
};

/// Equivariant map between edge sets; image[i-1] is the image of edge i.
struct Morphism {
  std::vector<Point> image;

  Point operator()(Point edge) const { return image[edge - 1]; }
};

Permutation z_of(const Dessin& d);
Passport passport(const Dessin& d);
std::size_t genus(const Dessin& d);
DessinType dessin_type(const Dessin& d);
bool one_face(const Dessin& d);

/// Vertex, edge and face counts.
struct CellCounts {
  std::size_t black = 0;
  std::size_t white = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
};
CellCounts cell_counts(const Dessin& d);

/// (phi^-1 x phi, phi^-1 y phi): the same dessin with edge i renamed phi(i).
Dessin relabel(const Dessin& d, const Permutation& phi);

/**
 * The unique map f with f(1) = base_image and f(g(i)) = g'(f(i)) for
 * g in {x, y}, if one exists. Every morphism of dessins is of this form.
 */
std::optional<Morphism> equivariant_map(const Dessin& from, const Dessin& to,
                                        Point base_image);

/// A simultaneous conjugator phi with x2 = x1^phi and y2 = y1^phi.
std::optional<Permutation> is_isomorphic(const Dessin& d1, const Dessin& d2);

/// Every simultaneous conjugator from d1 to d2 (a coset of Aut(d1)).
std::vector<Permutation> all_isomorphisms(const Dessin& d1, const Dessin& d2);

/// A covering map d1 -> d2, if d1 covers d2.
std::optional<Morphism> find_morphism(const Dessin& d1, const Dessin& d2);

/**
 * Relabels edges in breadth-first order from a base edge, exploring
 * neighbours in the order x, x^-1, y, y^-1. Returns the relabeling
 * permutation (old edge -> new edge).
 */
Permutation bfs_labeling(const Dessin& d, Point base);

/// relabel(d, bfs_labeling(d, base)).
Dessin pointed_form(const Dessin& d, Point base);

/// Lexicographically least pointed form over all base edges. Two dessins
/// are isomorphic iff their canonical forms are equal.
Dessin canonical_form(const Dessin& d);

/// Lexicographic order on (images(x), images(y)); used for deterministic
/// output ordering.
bool dessin_less(const Dessin& a, const Dessin& b);

}  // namespace dessinkit
