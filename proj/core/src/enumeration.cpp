#include "dessinkit/enumeration.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <numeric>

#include "dessinkit/errors.hpp"
#include "dessinkit/group.hpp"

namespace dessinkit {

namespace {

constexpr Point kUnset = ~Point{0};

// Columns in BFS scan order: x, x^-1, y, y^-1. Column c ^ 1 is its inverse.
struct CosetTable {
  std::size_t n = 0;
  std::size_t defined = 1;
  std::vector<std::array<Point, 4>> rows;

  explicit CosetTable(std::size_t degree) : n(degree), rows(degree) {
    for (auto& r : rows) r.fill(kUnset);
  }
};

// Low-index style backtracking over standard coset tables: the first
// undefined entry in scan order is always filled next, either with an
// existing point whose inverse slot is free or with the next new point.
// Complete tables are exactly the pointed dessins in BFS-standard form.
class TableSearch {
 public:
  template <class Sink>
  static void run(CosetTable& t, Sink&& sink, std::size_t split_depth = 0,
                  std::vector<CosetTable>* frontier = nullptr) {
    search(t, sink, 0, split_depth, frontier);
  }

 private:
  template <class Sink>
  static void search(CosetTable& t, Sink& sink, std::size_t depth,
                     std::size_t split_depth, std::vector<CosetTable>* frontier) {
    if (frontier && depth == split_depth) {
      frontier->push_back(t);
      return;
    }
    std::size_t row = 0, col = 0;
    bool found = false;
    for (row = 0; row < t.defined && !found; ++row) {
      for (col = 0; col < 4; ++col) {
        if (t.rows[row][col] == kUnset) {
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) {
      if (t.defined == t.n) sink(t);
      return;
    }
    const std::size_t inv = col ^ 1u;
    for (std::size_t q = 0; q < t.defined; ++q) {
      if (t.rows[q][inv] != kUnset) continue;
      t.rows[row][col] = static_cast<Point>(q);
      t.rows[q][inv] = static_cast<Point>(row);
      search(t, sink, depth + 1, split_depth, frontier);
      t.rows[row][col] = kUnset;
      t.rows[q][inv] = kUnset;
    }
    if (t.defined < t.n) {
      const std::size_t q = t.defined++;
      t.rows[row][col] = static_cast<Point>(q);
      t.rows[q][inv] = static_cast<Point>(row);
      search(t, sink, depth + 1, split_depth, frontier);
      t.rows[row][col] = kUnset;
      t.rows[q][inv] = kUnset;
      --t.defined;
    }
  }
};

Dessin table_to_dessin(const CosetTable& t) {
  std::vector<Point> x(t.n), y(t.n);
  for (std::size_t i = 0; i < t.n; ++i) {
    x[i] = t.rows[i][0];
    y[i] = t.rows[i][2];
  }
  return Dessin(Permutation::from_zero_based(std::move(x)),
                Permutation::from_zero_based(std::move(y)));
}

std::vector<Dessin> collect(const EnumerationRequest& request,
                            CosetTable& start) {
  std::vector<Dessin> out;
  TableSearch::run(start, [&](const CosetTable& t) {
    Dessin d = table_to_dessin(t);
    if (!request.pointed && !(canonical_form(d) == d)) return;
    if (request.passport_filter && passport(d) != *request.passport_filter) return;
    out.push_back(std::move(d));
  });
  return out;
}

}  // namespace

std::vector<Dessin> enumerate_dessins(const EnumerationRequest& request,
                                      const EnumerationOptions& options) {
  const std::size_t n = request.degree;
  if (n == 0) throw DegreeTooLarge("degree must be positive");
  const std::size_t cap =
      request.pointed ? options.max_degree_pointed : options.max_degree_unpointed;
  if (n > cap) {
    throw DegreeTooLarge("degree " + std::to_string(n) + " exceeds the " +
                         (request.pointed ? "pointed" : "unpointed") +
                         " enumeration cap " + std::to_string(cap));
  }
  if (request.passport_filter) {
    const Passport& p = *request.passport_filter;
    for (const auto* part : {&p.black, &p.white, &p.faces}) {
      if (std::accumulate(part->begin(), part->end(), std::size_t{0}) != n) {
        throw ParseError("passport parts must each sum to the degree");
      }
    }
  }

  std::vector<Dessin> out;
  CosetTable root(n);
  if (options.threads <= 1) {
    out = collect(request, root);
  } else {
    std::vector<CosetTable> frontier;
    TableSearch::run(root, [&](const CosetTable& t) {
      // Tables completed above the split depth.
      CosetTable copy = t;
      auto found = collect(request, copy);
      out.insert(out.end(), found.begin(), found.end());
    }, 6, &frontier);
    std::vector<std::future<std::vector<Dessin>>> jobs;
    const std::size_t workers = std::min<std::size_t>(options.threads, frontier.size());
    for (std::size_t w = 0; w < workers; ++w) {
      jobs.push_back(std::async(std::launch::async, [&, w] {
        std::vector<Dessin> local;
        for (std::size_t i = w; i < frontier.size(); i += workers) {
          CosetTable t = frontier[i];
          auto found = collect(request, t);
          local.insert(local.end(), found.begin(), found.end());
        }
        return local;
      }));
    }
    for (auto& job : jobs) {
      auto found = job.get();
      out.insert(out.end(), found.begin(), found.end());
    }
  }
  std::sort(out.begin(), out.end(), dessin_less);
  return out;
}

mpz_class count_pointed(std::size_t n) {
  std::vector<mpz_class> a(n + 1), fact(n + 1);
  fact[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) fact[k] = fact[k - 1] * static_cast<unsigned long>(k);
  for (std::size_t m = 1; m <= n; ++m) {
    mpz_class value = fact[m] * static_cast<unsigned long>(m);
    for (std::size_t k = 1; k < m; ++k) value -= fact[m - k] * a[k];
    a[m] = value;
  }
  return a[n];
}

std::uint64_t count_transitive_pairs(std::size_t n) {
  std::vector<Point> base(n);
  std::iota(base.begin(), base.end(), Point{0});
  std::vector<Permutation> all;
  do {
    all.push_back(Permutation::from_zero_based(base));
  } while (std::next_permutation(base.begin(), base.end()));
  std::uint64_t count = 0;
  for (const auto& x : all)
    for (const auto& y : all)
      if (is_transitive(x, y)) ++count;
  return count;
}

OrbitCount orbit_count(std::size_t n, const EnumerationOptions& options) {
  if (n > options.max_degree_unpointed) {
    throw DegreeTooLarge("degree " + std::to_string(n) +
                         " exceeds the orbit-count cap " +
                         std::to_string(options.max_degree_unpointed));
  }
  OrbitCount result;
  result.direct = count_transitive_pairs(n);
  std::uint64_t factorial = 1;
  for (std::size_t k = 2; k <= n; ++k) factorial *= k;
  EnumerationRequest request;
  request.degree = n;
  for (const auto& d : enumerate_dessins(request, options)) {
    result.from_classes += factorial / automorphisms(d).order();
  }
  return result;
}

bool orbit_count_crosscheck(std::size_t n, const EnumerationOptions& options) {
  return orbit_count(n, options).agree();
}

}  // namespace dessinkit
