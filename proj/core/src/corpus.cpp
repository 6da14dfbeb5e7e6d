#include "dessinkit/corpus.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "dessinkit/errors.hpp"
#include "dessinkit/free_word.hpp"
#include "dessinkit/report.hpp"

namespace dessinkit {

namespace {

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

Expectation parse_expectation(std::string_view body, std::size_t line) {
  const std::size_t open = body.rfind('[');
  if (open == std::string_view::npos || body.back() != ']') {
    throw ParseError("expectation lacks a provenance tag", line);
  }
  Expectation e;
  e.line = line;
  e.tag = std::string(body.substr(open + 1, body.size() - open - 2));
  const bool upper = !e.tag.empty() && std::all_of(e.tag.begin(), e.tag.end(), [](char c) {
    return c >= 'A' && c <= 'Z';
  });
  if (!upper) throw ParseError("malformed provenance tag [" + e.tag + "]", line);
  const std::string_view kv = trim(body.substr(0, open));
  const std::size_t eq = kv.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    throw ParseError("expectation must read key=value", line);
  }
  e.key = std::string(trim(kv.substr(0, eq)));
  e.value = std::string(trim(kv.substr(eq + 1)));
  return e;
}

const CorpusEntry* find_entry(const std::vector<CorpusEntry>& corpus, std::string_view name) {
  for (const auto& e : corpus) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) h = (h ^ c) * 0x100000001b3ULL;
  return h;
}

std::string bool_string(bool b) { return b ? "true" : "false"; }

Dessin center_quotient(const Dessin& d, std::size_t max_group_order) {
  const CartographicGroup group = closure(d, max_group_order);
  const Dessin cover = regular_cover(group);
  std::vector<Permutation> translations;
  for (const auto& c : center(group)) translations.push_back(left_translation(group, c));
  return quotient_by_central_subgroup(cover, translations);
}

Dessin halves_quotient(const Dessin& d) {
  const std::size_t n = d.degree();
  if (n % 2 != 0) throw NotInvariant("odd degree has no {i, i+n/2} partition");
  Partition blocks;
  for (Point i = 1; i <= n / 2; ++i) blocks.push_back({i, static_cast<Point>(i + n / 2)});
  return quotient_by_partition(d, blocks);
}

}  // namespace

CorpusEntry read_corpus_entry(const std::filesystem::path& path) {
  CorpusEntry entry;
  entry.name = path.stem().string();
  entry.path = path;
  entry.file = read_dessin_file(path);
  for (std::size_t i = 0; i < entry.file.comments.size(); ++i) {
    const std::string_view c = entry.file.comments[i];
    const std::size_t line = entry.file.comment_lines[i];
    if (starts_with(c, "expect ")) {
      entry.expected.push_back(parse_expectation(trim(c.substr(7)), line));
    } else if (starts_with(c, "printed ")) {
      const std::string_view body = trim(c.substr(8));
      if (body.size() < 3 || (body[0] != 'x' && body[0] != 'y') || body[1] != '=') {
        throw ParseError("printed line must read printed x=<cycles>", line);
      }
      entry.printed.push_back({body[0], std::string(body.substr(2)), line});
    }
  }
  return entry;
}

std::vector<std::filesystem::path> corpus_files(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) return files;
  for (const auto& item : std::filesystem::directory_iterator(dir, ec)) {
    if (item.is_regular_file() && item.path().extension() == ".dsn") files.push_back(item.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

std::string corpus_invariant(const std::string& key, const CorpusEntry& entry,
                             const std::vector<CorpusEntry>& corpus,
                             std::size_t max_group_order) {
  const Dessin& d = entry.dessin();
  if (key == "degree") return std::to_string(d.degree());
  if (key == "passport") return passport(d).to_string();
  if (key == "genus") return std::to_string(genus(d));
  if (key == "type") return dessin_type(d).to_string();
  if (key == "black") return std::to_string(cell_counts(d).black);
  if (key == "white") return std::to_string(cell_counts(d).white);
  if (key == "faces") return std::to_string(cell_counts(d).faces);
  if (key == "one_face") return bool_string(one_face(d));
  if (key == "aut") return std::to_string(automorphisms(d).order());
  if (key == "closure") return std::to_string(closure(d, max_group_order).order());
  if (key == "regular") return bool_string(is_regular(d, max_group_order));
  if (starts_with(key, "rc_")) {
    const Dessin rc = regular_cover(d, max_group_order);
    if (key == "rc_degree") return std::to_string(rc.degree());
    if (key == "rc_genus") return std::to_string(genus(rc));
    if (key == "rc_type") return dessin_type(rc).to_string();
    if (key == "rc_regular") return bool_string(is_regular(rc, max_group_order));
  }
  if (key == "center") return std::to_string(center(closure(d, max_group_order)).size());
  if (starts_with(key, "center_quotient_")) {
    const Dessin q = center_quotient(d, max_group_order);
    if (key == "center_quotient_degree") return std::to_string(q.degree());
    if (key == "center_quotient_genus") return std::to_string(genus(q));
    if (key == "center_quotient_type") return dessin_type(q).to_string();
    if (key == "center_quotient_regular") return bool_string(is_regular(q, max_group_order));
  }
  if (key == "moduli") return to_string(real_moduli_test(d).status);
  if (key == "moduli_witness_order") {
    const auto report = real_moduli_test(d);
    return report.witness_order ? std::to_string(*report.witness_order) : "none";
  }
  if (key == "relation_word") {
    return evaluate_word(FreeWord::parse(kRelationWord), d.x(), d.y()).to_string();
  }
  if (starts_with(key, "halves_")) {
    const Dessin q = halves_quotient(d);
    if (key == "halves_x") return q.x().to_string();
    if (key == "halves_y") return q.y().to_string();
    if (key == "halves_closure") return std::to_string(closure(q, max_group_order).order());
  }
  if (starts_with(key, "iso:")) {
    const CorpusEntry* other = find_entry(corpus, key.substr(4));
    if (!other) throw std::invalid_argument("no corpus entry named " + key.substr(4));
    return bool_string(is_isomorphic(d, other->dessin()).has_value());
  }
  throw std::invalid_argument("unknown invariant key " + key);
}

EntryVerdict verify_entry(const CorpusEntry& entry, const std::vector<CorpusEntry>& corpus,
                          const SelftestOptions& options) {
  EntryVerdict verdict;
  verdict.name = entry.name;
  auto check = [&](bool ok, const std::string& what) {
    ++verdict.checks;
    if (!ok) verdict.failures.push_back(what);
  };
  const Dessin& d = entry.dessin();

  try {
    for (const auto& e : entry.expected) {
      const std::string actual = corpus_invariant(e.key, entry, corpus, options.max_group_order);
      check(actual == e.value, "line " + std::to_string(e.line) + ": " + e.key + " expected " +
                                   e.value + ", got " + actual);
    }

    for (const auto& p : entry.printed) {
      const Permutation printed = Permutation::parse(p.cycles, d.degree());
      const Permutation& stored = p.generator == 'x' ? d.x() : d.y();
      check(printed == stored, "line " + std::to_string(p.line) + ": printed " +
                                   std::string(1, p.generator) + " differs from the stored " +
                                   "generator");
    }

    const DessinFile again = parse_dessin_file(format_dessin(d, entry.file.comments));
    check(again.dessin == d, "serialization does not round-trip");

    // Relabeling invariance.
    const InvariantReport base = invariant_report(d, options.max_group_order);
    // A relabeled closure must match exactly, so the base order is a tight
    // cap; an over-cap base only needs the copies to overflow too.
    const std::size_t relabel_cap = base.closure_order
                                        ? *base.closure_order
                                        : std::min<std::size_t>(options.max_group_order, 4096);
    const Dessin canonical = canonical_form(d);
    const ModuliStatus moduli = real_moduli_test(d).status;
    std::mt19937_64 rng(options.seed ^ fnv1a(entry.name));
    std::size_t bad = 0;
    for (std::size_t t = 0; t < options.relabel_trials; ++t) {
      const Dessin r = relabel(d, random_permutation(d.degree(), rng));
      const InvariantReport other = invariant_report(r, relabel_cap);
      const bool same = other.passport == base.passport && other.genus == base.genus &&
                        other.type == base.type && other.aut_order == base.aut_order &&
                        other.closure_order == base.closure_order &&
                        other.regular == base.regular && canonical_form(r) == canonical &&
                        is_isomorphic(d, r).has_value() &&
                        real_moduli_test(r).status == moduli;
      if (!same) ++bad;
    }
    verdict.checks += options.relabel_trials;
    if (bad) {
      verdict.failures.push_back(std::to_string(bad) + " of " +
                                 std::to_string(options.relabel_trials) +
                                 " relabelings changed an invariant");
    }

    if (base.closure_order && *base.closure_order <= options.cover_check_limit) {
      const Dessin cover = regular_cover(d, options.max_group_order);
      const Dessin twice = regular_cover(cover, options.max_group_order);
      check(is_isomorphic(cover, twice).has_value(), "regular cover is not idempotent");
      check(find_morphism(cover, d).has_value(), "regular cover does not map onto the dessin");
    }
  } catch (const std::exception& e) {
    verdict.failures.push_back(std::string("error: ") + e.what());
  }
  return verdict;
}

}  // namespace dessinkit
