#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "dessinkit/dessin.hpp"
#include "dessinkit/free_word.hpp"
#include "dessinkit/permutation.hpp"

namespace dessinkit {

inline constexpr std::size_t kDefaultMaxGroupOrder = 1'000'000;

/**
 * The cartographic (monodromy) group <x, y> of a dessin, enumerated
 * element by element. Element 0 is the identity; every element carries a
 * word in x, y that realizes it.
 */
class CartographicGroup {
 public:
  std::size_t degree() const noexcept { return elements_.front().degree(); }
  std::size_t order() const noexcept { return elements_.size(); }

  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  const Permutation& element(std::size_t index) const { return elements_[index]; }
  const FreeWord& word(std::size_t index) const { return words_[index]; }

  const Permutation& x() const noexcept { return x_; }
  const Permutation& y() const noexcept { return y_; }

  std::optional<std::size_t> index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const { return index_of(p).has_value(); }

 private:
  friend CartographicGroup closure(const Dessin&, std::size_t);

  Permutation x_;
  Permutation y_;
  std::vector<Permutation> elements_;
  std::vector<FreeWord> words_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
};

/// Breadth-first enumeration of <x, y>. Throws GroupTooLarge past max_order.
CartographicGroup closure(const Dessin& d,
                          std::size_t max_order = kDefaultMaxGroupOrder);

/// Permutations commuting with x and y; element 0 is the identity.
struct AutomorphismGroup {
  std::vector<Permutation> elements;

  std::size_t order() const noexcept { return elements.size(); }
};

AutomorphismGroup automorphisms(const Dessin& d);

/**
 * True iff |<x, y>| equals the degree. The automorphism count is used as an
 * independent cross-check; a disagreement is a logic error.
 */
bool is_regular(const Dessin& d, std::size_t max_order = kDefaultMaxGroupOrder);

/// Right-regular action of <x, y> on itself: edges are group elements
/// (numbered as in closure()), x and y act by right multiplication.
Dessin regular_cover(const CartographicGroup& group);
Dessin regular_cover(const Dessin& d,
                     std::size_t max_order = kDefaultMaxGroupOrder);

/// Elements of the group commuting with both generators.
std::vector<Permutation> center(const CartographicGroup& group);

/// The permutation of {1..|G|} induced by h -> g h, an automorphism of
/// regular_cover(group). Throws NotSubgroup if g is not in the group.
Permutation left_translation(const CartographicGroup& group,
                             const Permutation& g);

using Partition = std::vector<std::vector<Point>>;

/// Dessin induced on a block system; blocks are renumbered by their minimum.
/// Throws NotInvariant.
Dessin quotient_by_partition(const Dessin& d, const Partition& blocks);

/// Quotient of a regular dessin by a group of automorphisms commuting with
/// x and y. Throws NotCentral or NotSubgroup.
Dessin quotient_by_central_subgroup(const Dessin& regular,
                                    const std::vector<Permutation>& subgroup);

/**
 * Riemann-Hurwitz for a regular dessin with group order |G| and type
 * (l, m, n): 2g - 2 = |G| (1 - 1/l - 1/m - 1/n). Throws NonIntegralGenus.
 */
std::uint64_t genus_regular_formula(std::uint64_t group_order, std::uint64_t l,
                                    std::uint64_t m, std::uint64_t n);

enum class ModuliStatus { NotRealModuli, DefinableOverReal, Obstructed };

const char* to_string(ModuliStatus status);

/// Result of searching for omega with x^omega = x^-1 and y^omega = y^-1.
/// The witness is an omega of least order.
struct ModuliRealReport {
  ModuliStatus status = ModuliStatus::NotRealModuli;
  std::optional<Permutation> witness;
  std::optional<std::uint64_t> witness_order;
  /// The full coset Aut(d) * omega, in discovery order.
  std::vector<Permutation> coset;
};

/// Complex-conjugation test: the field of moduli is real iff omega exists,
/// and the dessin is definable over R iff some omega has order <= 2.
ModuliRealReport real_moduli_test(const Dessin& d);

}  // namespace dessinkit
