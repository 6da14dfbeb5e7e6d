#include "dessinkit/dessin.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <sstream>

#include "dessinkit/errors.hpp"

namespace dessinkit {

namespace {

std::vector<std::size_t> parse_part(std::string_view text) {
  std::vector<std::size_t> part;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ',' || text[i] == ' ')) ++i;
    if (i >= text.size()) break;
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc{} || ptr == text.data() + i || value == 0) {
      throw ParseError("bad passport part \"" + std::string(text) + "\"");
    }
    part.push_back(value);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  if (part.empty()) throw ParseError("empty passport part");
  std::sort(part.begin(), part.end(), std::greater<>());
  return part;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

// Relabeled images of x and y under the BFS labeling from `base`, written
// into out_x / out_y (0-indexed). `label` and `order` are scratch buffers.
void bfs_relabel(const Dessin& d, const Permutation& x_inv,
                 const Permutation& y_inv, Point base,
                 std::vector<Point>& label, std::vector<Point>& order,
                 std::vector<Point>& out_x, std::vector<Point>& out_y) {
  const std::size_t n = d.degree();
  constexpr Point kUnset = ~Point{0};
  std::fill(label.begin(), label.end(), kUnset);
  order.clear();
  const std::array<std::span<const Point>, 4> gens{
      d.x().zero_based(), x_inv.zero_based(), d.y().zero_based(),
      y_inv.zero_based()};
  label[base - 1] = 0;
  order.push_back(base - 1);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Point p = order[head];
    for (const auto& g : gens) {
      const Point q = g[p];
      if (label[q] == kUnset) {
        label[q] = static_cast<Point>(order.size());
        order.push_back(q);
      }
    }
  }
  const auto x = d.x().zero_based();
  const auto y = d.y().zero_based();
  for (std::size_t k = 0; k < n; ++k) {
    out_x[k] = label[x[order[k]]];
    out_y[k] = label[y[order[k]]];
  }
}

}  // namespace

bool is_transitive(const Permutation& x, const Permutation& y) {
  if (x.degree() != y.degree()) return false;
  const auto a = x.zero_based();
  const auto b = y.zero_based();
  std::vector<char> seen(a.size(), 0);
  std::vector<Point> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Point p = stack.back();
    stack.pop_back();
    for (Point q : {a[p], b[p]}) {
      if (!seen[q]) {
        seen[q] = 1;
        ++reached;
        stack.push_back(q);
      }
    }
  }
  return reached == a.size();
}

Dessin::Dessin(Permutation x, Permutation y)
    : x_(std::move(x)), y_(std::move(y)) {
  if (x_.degree() != y_.degree()) {
    throw DegreeMismatch("x has degree " + std::to_string(x_.degree()) +
                         " but y has degree " + std::to_string(y_.degree()));
  }
  if (!is_transitive(x_, y_)) {
    throw NotTransitive("<x, y> does not act transitively on {1.." +
                        std::to_string(x_.degree()) + "}");
  }
  z_ = inverse(compose(x_, y_));
}

Dessin Dessin::trivial() {
  return Dessin(Permutation::identity(1), Permutation::identity(1));
}

std::string Passport::to_string() const {
  return join(black) + "/" + join(white) + "/" + join(faces);
}

Passport Passport::parse(std::string_view text) {
  auto first = text.find('/');
  auto second = first == std::string_view::npos ? first : text.find('/', first + 1);
  if (second == std::string_view::npos ||
      text.find('/', second + 1) != std::string_view::npos) {
    throw ParseError("passport must have the form black/white/faces");
  }
  Passport p{parse_part(text.substr(0, first)),
             parse_part(text.substr(first + 1, second - first - 1)),
             parse_part(text.substr(second + 1))};
  return p;
}

std::string DessinType::to_string() const {
  return "(" + std::to_string(l) + "," + std::to_string(m) + "," +
         std::to_string(n) + ")";
}

Permutation z_of(const Dessin& d) { return d.z(); }

Passport passport(const Dessin& d) {
  return Passport{cycle_type(d.x()), cycle_type(d.y()), cycle_type(d.z())};
}

CellCounts cell_counts(const Dessin& d) {
  return CellCounts{cycle_count(d.x()), cycle_count(d.y()), d.degree(),
                    cycle_count(d.z())};
}

std::size_t genus(const Dessin& d) {
  const CellCounts c = cell_counts(d);
  // 2 - 2g = V - E + F; transitivity guarantees the right side is even and <= 2.
  const long long euler = static_cast<long long>(c.black + c.white + c.faces) -
                          static_cast<long long>(c.edges);
  return static_cast<std::size_t>((2 - euler) / 2);
}

DessinType dessin_type(const Dessin& d) {
  return DessinType{order(d.x()), order(d.y()), order(d.z())};
}

bool one_face(const Dessin& d) { return cycle_count(d.z()) == 1; }

Dessin relabel(const Dessin& d, const Permutation& phi) {
  return Dessin(conjugate(d.x(), phi), conjugate(d.y(), phi));
}

std::optional<Morphism> equivariant_map(const Dessin& from, const Dessin& to,
                                        Point base_image) {
  const std::size_t n1 = from.degree();
  constexpr Point kUnset = ~Point{0};
  std::vector<Point> image(n1, kUnset);
  const auto x1 = from.x().zero_based();
  const auto y1 = from.y().zero_based();
  const auto x2 = to.x().zero_based();
  const auto y2 = to.y().zero_based();
  image[0] = base_image - 1;
  std::vector<Point> stack{0};
  while (!stack.empty()) {
    const Point p = stack.back();
    stack.pop_back();
    const Point fp = image[p];
    for (auto [g1, g2] : {std::pair{x1, x2}, std::pair{y1, y2}}) {
      const Point q = g1[p];
      const Point want = g2[fp];
      if (image[q] == kUnset) {
        image[q] = want;
        stack.push_back(q);
      } else if (image[q] != want) {
        return std::nullopt;
      }
    }
  }
  Morphism m;
  m.image.resize(n1);
  for (std::size_t i = 0; i < n1; ++i) m.image[i] = image[i] + 1;
  return m;
}

std::vector<Permutation> all_isomorphisms(const Dessin& d1, const Dessin& d2) {
  std::vector<Permutation> out;
  if (d1.degree() != d2.degree()) return out;
  for (Point j = 1; j <= d2.degree(); ++j) {
    if (auto m = equivariant_map(d1, d2, j)) {
      // Equivariant maps between transitive sets of equal size are bijections.
      out.push_back(Permutation::from_images(m->image));
    }
  }
  return out;
}

std::optional<Permutation> is_isomorphic(const Dessin& d1, const Dessin& d2) {
  if (d1.degree() != d2.degree()) return std::nullopt;
  if (passport(d1) != passport(d2)) return std::nullopt;
  for (Point j = 1; j <= d2.degree(); ++j) {
    if (auto m = equivariant_map(d1, d2, j)) {
      return Permutation::from_images(m->image);
    }
  }
  return std::nullopt;
}

std::optional<Morphism> find_morphism(const Dessin& d1, const Dessin& d2) {
  if (d1.degree() % d2.degree() != 0) return std::nullopt;
  for (Point j = 1; j <= d2.degree(); ++j) {
    if (auto m = equivariant_map(d1, d2, j)) return m;
  }
  return std::nullopt;
}

Permutation bfs_labeling(const Dessin& d, Point base) {
  const std::size_t n = d.degree();
  const Permutation x_inv = inverse(d.x());
  const Permutation y_inv = inverse(d.y());
  std::vector<Point> label(n), order, out_x(n), out_y(n);
  bfs_relabel(d, x_inv, y_inv, base, label, order, out_x, out_y);
  return Permutation::from_zero_based(std::move(label));
}

Dessin pointed_form(const Dessin& d, Point base) {
  return relabel(d, bfs_labeling(d, base));
}

Dessin canonical_form(const Dessin& d) {
  const std::size_t n = d.degree();
  const Permutation x_inv = inverse(d.x());
  const Permutation y_inv = inverse(d.y());
  std::vector<Point> label(n), order;
  std::vector<Point> best_x, best_y, cur_x(n), cur_y(n);
  for (Point base = 1; base <= n; ++base) {
    bfs_relabel(d, x_inv, y_inv, base, label, order, cur_x, cur_y);
    if (best_x.empty() || std::tie(cur_x, cur_y) < std::tie(best_x, best_y)) {
      best_x = cur_x;
      best_y = cur_y;
    }
  }
  return Dessin(Permutation::from_zero_based(std::move(best_x)),
                Permutation::from_zero_based(std::move(best_y)));
}

bool dessin_less(const Dessin& a, const Dessin& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::tie(a.x(), a.y()) < std::tie(b.x(), b.y());
}

}  // namespace dessinkit
