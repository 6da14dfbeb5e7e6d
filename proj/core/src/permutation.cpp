#include "dessinkit/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "dessinkit/errors.hpp"

namespace dessinkit {

namespace {

void require_same_degree(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw DegreeMismatch("permutation degrees differ: " +
                         std::to_string(p.degree()) + " vs " +
                         std::to_string(q.degree()));
  }
}

void validate_bijection(const std::vector<Point>& img) {
  if (img.empty()) throw InvalidPermutation("permutation degree must be >= 1");
  std::vector<char> seen(img.size(), 0);
  for (Point v : img) {
    if (v >= img.size() || seen[v]) {
      throw InvalidPermutation("image list is not a bijection of {1.." +
                               std::to_string(img.size()) + "}");
    }
    seen[v] = 1;
  }
}

}  // namespace

Permutation Permutation::identity(std::size_t degree) {
  if (degree == 0) throw InvalidPermutation("permutation degree must be >= 1");
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  return Permutation(std::move(img));
}

Permutation Permutation::from_images(std::span<const Point> images) {
  std::vector<Point> img;
  img.reserve(images.size());
  for (Point v : images) {
    if (v == 0) throw InvalidPermutation("points are 1-indexed");
    img.push_back(v - 1);
  }
  validate_bijection(img);
  return Permutation(std::move(img));
}

Permutation Permutation::from_zero_based(std::vector<Point> images) {
  validate_bijection(images);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(
    std::size_t degree, const std::vector<std::vector<Point>>& cycle_list) {
  Permutation p = identity(degree);
  std::vector<char> used(degree, 0);
  for (const auto& cycle : cycle_list) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point a = cycle[i];
      if (a == 0 || a > degree) {
        throw InvalidPermutation("point " + std::to_string(a) +
                                 " outside {1.." + std::to_string(degree) +
                                 "}");
      }
      if (used[a - 1]) {
        throw InvalidPermutation("point " + std::to_string(a) +
                                 " appears in more than one cycle position");
      }
      used[a - 1] = 1;
      p.img_[a - 1] = cycle[(i + 1) % cycle.size()] - 1;
    }
  }
  return p;
}

Permutation Permutation::parse(std::string_view text, std::size_t degree) {
  auto trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
    trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
    trimmed.remove_suffix(1);
  if (trimmed == "id") return identity(degree);

  std::vector<std::vector<Point>> cycle_list;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < trimmed.size() &&
           (std::isspace(static_cast<unsigned char>(trimmed[i])) || trimmed[i] == ','))
      ++i;
  };
  skip_space();
  while (i < trimmed.size()) {
    if (trimmed[i] != '(') {
      throw ParseError("expected '(' in cycle notation near \"" +
                       std::string(trimmed.substr(i)) + "\"");
    }
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      skip_space();
      if (i >= trimmed.size()) throw ParseError("unterminated cycle");
      if (trimmed[i] == ')') {
        ++i;
        break;
      }
      unsigned long value = 0;
      auto [ptr, ec] = std::from_chars(trimmed.data() + i,
                                       trimmed.data() + trimmed.size(), value);
      if (ec != std::errc{} || ptr == trimmed.data() + i) {
        throw ParseError("expected a point number near \"" +
                         std::string(trimmed.substr(i)) + "\"");
      }
      i = static_cast<std::size_t>(ptr - trimmed.data());
      if (value == 0 || value > degree) {
        throw ParseError("point " + std::to_string(value) + " outside {1.." +
                         std::to_string(degree) + "}");
      }
      cycle.push_back(static_cast<Point>(value));
    }
    if (!cycle.empty()) cycle_list.push_back(std::move(cycle));
    skip_space();
  }
  try {
    return from_cycles(degree, cycle_list);
  } catch (const InvalidPermutation& e) {
    throw ParseError(e.what());
  }
}

std::vector<Point> Permutation::images() const {
  std::vector<Point> out(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) out[i] = img_[i] + 1;
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::string out;
  for (const auto& cycle : cycles(*this)) {
    if (cycle.size() == 1) continue;
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image array.
  std::size_t h = 1469598103934665603ull;
  for (Point v : p.zero_based()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  require_same_degree(p, q);
  auto a = p.zero_based();
  auto b = q.zero_based();
  std::vector<Point> img(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) img[i] = b[a[i]];
  return Permutation(std::move(img));
}

Permutation inverse(const Permutation& p) {
  auto a = p.zero_based();
  std::vector<Point> img(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) img[a[i]] = static_cast<Point>(i);
  return Permutation(std::move(img));
}

Permutation power(const Permutation& p, long long k) {
  Permutation base = k < 0 ? inverse(p) : p;
  unsigned long long e = k < 0 ? 0ull - static_cast<unsigned long long>(k)
                               : static_cast<unsigned long long>(k);
  Permutation result = Permutation::identity(p.degree());
  while (e) {
    if (e & 1u) result = compose(result, base);
    base = compose(base, base);
    e >>= 1u;
  }
  return result;
}

std::vector<std::vector<Point>> cycles(const Permutation& p) {
  auto img = p.zero_based();
  std::vector<char> seen(img.size(), 0);
  std::vector<std::vector<Point>> out;
  for (std::size_t start = 0; start < img.size(); ++start) {
    if (seen[start]) continue;
    std::vector<Point> cycle;
    for (Point j = static_cast<Point>(start); !seen[j]; j = img[j]) {
      seen[j] = 1;
      cycle.push_back(j + 1);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<std::size_t> cycle_type(const Permutation& p) {
  std::vector<std::size_t> lengths;
  for (const auto& c : cycles(p)) lengths.push_back(c.size());
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

std::size_t cycle_count(const Permutation& p) {
  auto img = p.zero_based();
  std::vector<char> seen(img.size(), 0);
  std::size_t count = 0;
  for (std::size_t start = 0; start < img.size(); ++start) {
    if (seen[start]) continue;
    ++count;
    for (Point j = static_cast<Point>(start); !seen[j]; j = img[j]) seen[j] = 1;
  }
  return count;
}

std::uint64_t order(const Permutation& p) {
  std::uint64_t result = 1;
  for (std::size_t len : cycle_type(p)) {
    std::uint64_t g = std::gcd(result, static_cast<std::uint64_t>(len));
    std::uint64_t factor = len / g;
    if (result > UINT64_MAX / factor) {
      throw ResourceLimit("permutation order exceeds 64 bits");
    }
    result *= factor;
  }
  return result;
}

Permutation conjugate(const Permutation& p, const Permutation& g) {
  require_same_degree(p, g);
  // g^-1 p g maps g(i) -> g(p(i)).
  auto a = p.zero_based();
  auto c = g.zero_based();
  std::vector<Point> img(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) img[c[i]] = c[a[i]];
  return Permutation(std::move(img));
}

bool commute(const Permutation& p, const Permutation& q) {
  require_same_degree(p, q);
  auto a = p.zero_based();
  auto b = q.zero_based();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[a[i]] != a[b[i]]) return false;
  return true;
}

}  // namespace dessinkit
