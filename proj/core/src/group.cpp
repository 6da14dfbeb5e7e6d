#include "dessinkit/group.hpp"

#include <algorithm>
#include <stdexcept>

#include "dessinkit/errors.hpp"

namespace dessinkit {

std::optional<std::size_t> CartographicGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

CartographicGroup closure(const Dessin& d, std::size_t max_order) {
  CartographicGroup g;
  g.x_ = d.x();
  g.y_ = d.y();
  const std::pair<Permutation, Letter> steps[] = {
      {d.x(), Letter::X},
      {d.y(), Letter::Y},
      {inverse(d.x()), Letter::XInv},
      {inverse(d.y()), Letter::YInv},
  };
  auto add = [&](Permutation p, FreeWord w) {
    if (g.elements_.size() >= max_order) {
      throw GroupTooLarge("cartographic group exceeds " +
                          std::to_string(max_order) + " elements");
    }
    g.index_.emplace(p, g.elements_.size());
    g.elements_.push_back(std::move(p));
    g.words_.push_back(std::move(w));
  };
  add(Permutation::identity(d.degree()), FreeWord());
  for (std::size_t head = 0; head < g.elements_.size(); ++head) {
    for (const auto& [gen, letter] : steps) {
      Permutation next = compose(g.elements_[head], gen);
      if (g.index_.count(next)) continue;
      FreeWord w = g.words_[head] * FreeWord({letter});
      add(std::move(next), std::move(w));
    }
  }
  return g;
}

AutomorphismGroup automorphisms(const Dessin& d) {
  return AutomorphismGroup{all_isomorphisms(d, d)};
}

bool is_regular(const Dessin& d, std::size_t max_order) {
  const bool by_aut = automorphisms(d).order() == d.degree();
  bool by_closure = false;
  try {
    // A group larger than the degree already decides the question.
    by_closure = closure(d, std::min(max_order, d.degree() + 1)).order() == d.degree();
  } catch (const GroupTooLarge&) {
    if (max_order <= d.degree()) throw;
    by_closure = false;
  }
  if (by_aut != by_closure) {
    throw std::logic_error("regularity tests disagree on a degree-" +
                           std::to_string(d.degree()) + " dessin");
  }
  return by_closure;
}

Dessin regular_cover(const CartographicGroup& group) {
  const std::size_t n = group.order();
  std::vector<Point> x_img(n), y_img(n);
  for (std::size_t i = 0; i < n; ++i) {
    x_img[i] = static_cast<Point>(*group.index_of(compose(group.element(i), group.x())));
    y_img[i] = static_cast<Point>(*group.index_of(compose(group.element(i), group.y())));
  }
  return Dessin(Permutation::from_zero_based(std::move(x_img)),
                Permutation::from_zero_based(std::move(y_img)));
}

Dessin regular_cover(const Dessin& d, std::size_t max_order) {
  return regular_cover(closure(d, max_order));
}

std::vector<Permutation> center(const CartographicGroup& group) {
  std::vector<Permutation> out;
  for (const auto& g : group.elements()) {
    if (commute(g, group.x()) && commute(g, group.y())) out.push_back(g);
  }
  return out;
}

Permutation left_translation(const CartographicGroup& group,
                             const Permutation& g) {
  if (!group.contains(g)) {
    throw NotSubgroup("element " + g.to_string() + " is not in the group");
  }
  const std::size_t n = group.order();
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) {
    img[i] = static_cast<Point>(*group.index_of(compose(g, group.element(i))));
  }
  return Permutation::from_zero_based(std::move(img));
}

Dessin quotient_by_partition(const Dessin& d, const Partition& blocks) {
  const std::size_t n = d.degree();
  if (blocks.empty()) throw NotInvariant("empty block system");
  constexpr Point kUnset = ~Point{0};
  std::vector<Point> block_of(n, kUnset);
  const std::size_t size = blocks.front().size();
  // Renumber blocks by their minimum element.
  std::vector<std::size_t> by_min(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) by_min[b] = b;
  std::vector<Point> mins;
  for (const auto& block : blocks) {
    if (block.empty() || block.size() != size) {
      throw NotInvariant("blocks must be nonempty and of equal size");
    }
    mins.push_back(*std::min_element(block.begin(), block.end()));
  }
  std::sort(by_min.begin(), by_min.end(),
            [&](std::size_t a, std::size_t b) { return mins[a] < mins[b]; });
  for (std::size_t rank = 0; rank < by_min.size(); ++rank) {
    for (Point p : blocks[by_min[rank]]) {
      if (p == 0 || p > n || block_of[p - 1] != kUnset) {
        throw NotInvariant("blocks do not partition {1.." + std::to_string(n) + "}");
      }
      block_of[p - 1] = static_cast<Point>(rank);
    }
  }
  if (std::find(block_of.begin(), block_of.end(), kUnset) != block_of.end()) {
    throw NotInvariant("blocks do not cover {1.." + std::to_string(n) + "}");
  }

  auto induced = [&](const Permutation& g, char name) {
    std::vector<Point> img(blocks.size(), kUnset);
    for (std::size_t i = 0; i < n; ++i) {
      const Point src = block_of[i];
      const Point dst = block_of[g.zero_based()[i]];
      if (img[src] == kUnset) {
        img[src] = dst;
      } else if (img[src] != dst) {
        throw NotInvariant(std::string(1, name) + " does not preserve the block system");
      }
    }
    return Permutation::from_zero_based(std::move(img));
  };
  return Dessin(induced(d.x(), 'x'), induced(d.y(), 'y'));
}

Dessin quotient_by_central_subgroup(const Dessin& regular,
                                    const std::vector<Permutation>& subgroup) {
  const std::size_t n = regular.degree();
  if (subgroup.empty()) throw NotSubgroup("subgroup must contain the identity");
  bool has_identity = false;
  for (const auto& g : subgroup) {
    if (g.degree() != n) throw DegreeMismatch("subgroup element has wrong degree");
    if (!commute(g, regular.x()) || !commute(g, regular.y())) {
      throw NotCentral(g.to_string() + " does not commute with x and y");
    }
    has_identity = has_identity || g.is_identity();
  }
  if (!has_identity) throw NotSubgroup("subgroup must contain the identity");
  for (const auto& a : subgroup) {
    for (const auto& b : subgroup) {
      if (std::find(subgroup.begin(), subgroup.end(), compose(a, b)) == subgroup.end()) {
        throw NotSubgroup("subgroup is not closed under composition");
      }
    }
  }

  Partition blocks;
  std::vector<char> seen(n, 0);
  for (Point p = 1; p <= n; ++p) {
    if (seen[p - 1]) continue;
    std::vector<Point> orbit;
    for (const auto& g : subgroup) {
      Point q = g(p);
      if (!seen[q - 1]) {
        seen[q - 1] = 1;
        orbit.push_back(q);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    blocks.push_back(std::move(orbit));
  }
  return quotient_by_partition(regular, blocks);
}

std::uint64_t genus_regular_formula(std::uint64_t group_order, std::uint64_t l,
                                    std::uint64_t m, std::uint64_t n) {
  if (group_order == 0 || l == 0 || m == 0 || n == 0) {
    throw NonIntegralGenus("group order and type must be positive");
  }
  using Wide = __int128;
  // 2g - 2 = |G| (lmn - mn - ln - lm) / lmn.
  const Wide lmn = Wide(l) * m * n;
  const Wide num = Wide(group_order) * (lmn - Wide(m) * n - Wide(l) * n - Wide(l) * m);
  if (num % lmn != 0) {
    throw NonIntegralGenus("2g - 2 is not an integer for |G|=" +
                           std::to_string(group_order));
  }
  const Wide two_g = num / lmn + 2;
  if (two_g < 0 || two_g % 2 != 0) {
    throw NonIntegralGenus("genus is not a nonnegative integer for |G|=" +
                           std::to_string(group_order));
  }
  return static_cast<std::uint64_t>(two_g / 2);
}

const char* to_string(ModuliStatus status) {
  switch (status) {
    case ModuliStatus::NotRealModuli: return "NotRealModuli";
    case ModuliStatus::DefinableOverReal: return "DefinableOverReal";
    case ModuliStatus::Obstructed: return "Obstructed";
  }
  return "?";
}

ModuliRealReport real_moduli_test(const Dessin& d) {
  ModuliRealReport report;
  const Dessin mirrored(inverse(d.x()), inverse(d.y()));
  report.coset = all_isomorphisms(d, mirrored);
  if (report.coset.empty()) return report;
  // Report the element of least order; the first one wins ties.
  std::size_t best = 0;
  std::uint64_t best_order = order(report.coset[0]);
  for (std::size_t i = 1; i < report.coset.size(); ++i) {
    const std::uint64_t o = order(report.coset[i]);
    if (o < best_order) {
      best = i;
      best_order = o;
    }
  }
  report.status = best_order <= 2 ? ModuliStatus::DefinableOverReal : ModuliStatus::Obstructed;
  report.witness = report.coset[best];
  report.witness_order = best_order;
  return report;
}

}  // namespace dessinkit
