#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "dessinkit/dessin.hpp"
#include "dessinkit/group.hpp"

namespace dessinkit {

/// Summary of the combinatorial and group-theoretic invariants of a dessin.
struct InvariantReport {
  std::size_t degree = 1;
  Passport passport;
  std::size_t genus = 0;
  DessinType type;
  CellCounts cells;
  std::size_t aut_order = 1;
  /// Empty when the cartographic group exceeds the order cap.
  std::optional<std::size_t> closure_order = 1;
  std::size_t closure_cap = kDefaultMaxGroupOrder;
  bool regular = true;
};

/// Regularity is decided by |Aut| = degree, so it is known even when the
/// closure is too large to enumerate.
InvariantReport invariant_report(const Dessin& d,
                                 std::size_t max_group_order = kDefaultMaxGroupOrder);

/// Human-readable, aligned text.
std::string format_text(const InvariantReport& report);

/// One "key=value" per line, in a fixed order.
std::string format_kv(const InvariantReport& report);

}  // namespace dessinkit
