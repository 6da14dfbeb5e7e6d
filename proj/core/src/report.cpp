#include "dessinkit/report.hpp"

#include <sstream>
#include <utility>
#include <vector>

#include "dessinkit/errors.hpp"

namespace dessinkit {

InvariantReport invariant_report(const Dessin& d, std::size_t max_group_order) {
  InvariantReport r;
  r.degree = d.degree();
  r.passport = passport(d);
  r.genus = genus(d);
  r.type = dessin_type(d);
  r.cells = cell_counts(d);
  r.aut_order = automorphisms(d).order();
  r.closure_cap = max_group_order;
  try {
    r.closure_order = closure(d, max_group_order).order();
  } catch (const GroupTooLarge&) {
    r.closure_order.reset();
  }
  r.regular = r.aut_order == r.degree;
  return r;
}

namespace {

std::vector<std::pair<std::string, std::string>> fields(const InvariantReport& r) {
  return {
      {"degree", std::to_string(r.degree)},
      {"passport", r.passport.to_string()},
      {"genus", std::to_string(r.genus)},
      {"type", r.type.to_string()},
      {"black", std::to_string(r.cells.black)},
      {"white", std::to_string(r.cells.white)},
      {"faces", std::to_string(r.cells.faces)},
      {"aut", std::to_string(r.aut_order)},
      {"closure", r.closure_order ? std::to_string(*r.closure_order)
                                  : ">" + std::to_string(r.closure_cap)},
      {"regular", r.regular ? "true" : "false"},
  };
}

}  // namespace

std::string format_text(const InvariantReport& report) {
  std::ostringstream out;
  for (const auto& [key, value] : fields(report)) {
    out << key << std::string(10 - key.size(), ' ') << value << '\n';
  }
  return out.str();
}

std::string format_kv(const InvariantReport& report) {
  std::ostringstream out;
  for (const auto& [key, value] : fields(report)) out << key << '=' << value << '\n';
  return out.str();
}

}  // namespace dessinkit
