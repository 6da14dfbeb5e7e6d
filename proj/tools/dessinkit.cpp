// dessinkit command-line front end.
//
// Exit codes: 0 success / yes, 1 no / mismatch, 2 usage, 3 input error,
// 4 resource cap.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dessinkit/belyi.hpp"
#include "dessinkit/corpus.hpp"
#include "dessinkit/dessin_io.hpp"
#include "dessinkit/enumeration.hpp"
#include "dessinkit/errors.hpp"
#include "dessinkit/group.hpp"
#include "dessinkit/poly_parse.hpp"
#include "dessinkit/report.hpp"

#ifndef DESSINKIT_DEFAULT_CORPUS
#define DESSINKIT_DEFAULT_CORPUS "corpus"
#endif

namespace dk = dessinkit;

namespace {

enum Exit : int { kOk = 0, kNo = 1, kUsage = 2, kInput = 3, kResource = 4 };

std::size_t max_group_order() {
  if (const char* env = std::getenv("DESSINKIT_MAX_GROUP")) {
    try {
      const unsigned long long v = std::stoull(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring malformed DESSINKIT_MAX_GROUP=" << env << '\n';
  }
  return dk::kDefaultMaxGroupOrder;
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw dk::ParseError("cannot write " + path);
  out << text;
}

std::string rationals_to_string(const std::vector<dk::Rational>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += (i ? ", " : "") + dk::to_string(values[i]);
  }
  return out + "}";
}

int cmd_invariants(const std::string& path, bool kv) {
  const dk::Dessin d = dk::read_dessin_file(path).dessin;
  const auto report = dk::invariant_report(d, max_group_order());
  std::cout << (kv ? dk::format_kv(report) : dk::format_text(report));
  return kOk;
}

int cmd_iso(const std::string& a, const std::string& b) {
  const dk::Dessin d1 = dk::read_dessin_file(a).dessin;
  const dk::Dessin d2 = dk::read_dessin_file(b).dessin;
  if (auto omega = dk::is_isomorphic(d1, d2)) {
    std::cout << "isomorphic=true\nomega=" << omega->to_string() << '\n';
    return kOk;
  }
  std::cout << "isomorphic=false\n";
  return kNo;
}

int cmd_regular_cover(const std::string& in, const std::string& out) {
  const dk::Dessin d = dk::read_dessin_file(in).dessin;
  const dk::CartographicGroup group = dk::closure(d, max_group_order());
  const dk::Dessin cover = dk::regular_cover(group);
  const std::vector<std::string> notes = {
      "regular cover of " + in,
      "group_order=" + std::to_string(group.order()),
      "genus=" + std::to_string(dk::genus(cover)),
      "type=" + dk::dessin_type(cover).to_string(),
  };
  write_text(out, dk::format_dessin(cover, notes));
  if (out != "-") {
    std::cout << "degree=" << cover.degree() << "\ngenus=" << dk::genus(cover) << '\n';
  }
  return kOk;
}

int cmd_moduli_real(const std::string& path) {
  const dk::Dessin d = dk::read_dessin_file(path).dessin;
  const auto report = dk::real_moduli_test(d);
  std::cout << "status=" << dk::to_string(report.status) << '\n';
  std::cout << "witness=" << (report.witness ? report.witness->to_string() : "none") << '\n';
  std::cout << "witness_order="
            << (report.witness_order ? std::to_string(*report.witness_order) : "none") << '\n';
  std::cout << "coset_size=" << report.coset.size() << '\n';
  return kOk;
}

int cmd_belyi_check(const std::string& expr, const std::string& field_poly,
                    const std::string& generator) {
  if (!field_poly.empty()) {
    const auto field = dk::NumberField::create(dk::parse_rat_poly(field_poly), generator);
    const dk::NFPoly f = dk::parse_nf_poly(expr, field);
    std::cout << "field=Q[" << generator << "]/(" << dk::to_string(field->min_poly(), "x")
              << ")\n";
    if (!field->irreducibility_certified()) {
      std::cout << "note=irreducibility of the minimal polynomial is not certified\n";
    }
    std::cout << "polynomial=" << dk::to_string(f, "z") << '\n';
    const bool belyi = dk::is_belyi_over_number_field(f);
    std::cout << "belyi=" << (belyi ? "true" : "false") << '\n';
    return belyi ? kOk : kNo;
  }
  const dk::RatPoly f = dk::parse_rat_poly(expr);
  const auto report = dk::critical_values(f);
  std::cout << "polynomial=" << dk::to_string(f) << '\n';
  std::cout << "critical_value_poly=" << dk::to_string(report.critvals_sqfree, "y") << '\n';
  std::cout << "rational_values=" << rationals_to_string(report.rational_values) << '\n';
  std::cout << "irrational_factor=" << dk::to_string(report.nonrational_factor, "y") << '\n';
  const bool belyi = dk::is_belyi_polynomial(f);
  std::cout << "belyi=" << (belyi ? "true" : "false") << '\n';
  return belyi ? kOk : kNo;
}

int cmd_belyi_reduce(const std::string& expr) {
  const dk::RatPoly f = dk::parse_rat_poly(expr);
  const auto r = dk::belyi_reduce(f);
  std::cout << "polynomial=" << dk::to_string(f) << '\n';
  std::cout << "tracker_degrees=";
  for (std::size_t i = 0; i < r.rationalization.tracker_degrees.size(); ++i) {
    std::cout << (i ? "," : "") << r.rationalization.tracker_degrees[i];
  }
  std::cout << "\nspecial_set=" << rationals_to_string(r.special_set) << '\n';
  std::cout << "chain:\n" << r.map.describe("x");
  std::cout << "degree=" << r.map.degree().get_str() << '\n';
  if (auto dense = r.map.expand(256)) {
    std::cout << "belyi_polynomial=" << dk::to_string(*dense) << '\n';
    std::cout << "belyi_polynomial_check=" << (dk::is_belyi_polynomial(*dense) ? "true" : "false")
              << '\n';
  }
  const bool belyi = dk::is_belyi_chain(r.map);
  std::cout << "belyi=" << (belyi ? "true" : "false") << '\n';
  return belyi ? kOk : kNo;
}

int cmd_enumerate(std::size_t degree, bool pointed, const std::string& passport,
                  unsigned threads) {
  dk::EnumerationRequest request;
  request.degree = degree;
  request.pointed = pointed;
  if (!passport.empty()) request.passport_filter = dk::Passport::parse(passport);
  dk::EnumerationOptions options;
  options.threads = threads;
  const auto found = dk::enumerate_dessins(request, options);
  std::cout << "count=" << found.size() << '\n';
  for (const auto& d : found) {
    std::cout << "x=" << d.x().to_string() << " y=" << d.y().to_string() << '\n';
  }
  return kOk;
}

int cmd_export_dot(const std::string& in, const std::string& out) {
  write_text(out, dk::export_dot(dk::read_dessin_file(in).dessin));
  return kOk;
}

int cmd_selftest(const std::string& dir, std::size_t trials) {
  const auto files = dk::corpus_files(dir);
  if (files.empty()) {
    std::cerr << "no corpus found in " << dir << '\n';
    return kInput;
  }
  std::vector<dk::CorpusEntry> corpus;
  int status = kOk;
  for (const auto& f : files) {
    try {
      corpus.push_back(dk::read_corpus_entry(f));
    } catch (const dk::Error& e) {
      std::cout << "FAIL " << f.stem().string() << ": " << e.what() << '\n';
      status = kNo;
    }
  }
  dk::SelftestOptions options;
  options.relabel_trials = trials;
  options.max_group_order = max_group_order();
  std::size_t passed = 0;
  for (const auto& entry : corpus) {
    const auto verdict = dk::verify_entry(entry, corpus, options);
    if (verdict.ok()) {
      ++passed;
      std::cout << "PASS " << verdict.name << " (" << verdict.checks << " checks)\n";
    } else {
      status = kNo;
      std::cout << "FAIL " << verdict.name << ": " << verdict.failures.front();
      if (verdict.failures.size() > 1) {
        std::cout << " (+" << verdict.failures.size() - 1 << " more)";
      }
      std::cout << '\n';
    }
  }
  std::cout << "verified " << passed << " of " << files.size() << " entries\n";
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dessinkit: dessins d'enfants, cartographic groups and Belyi maps"};
  app.require_subcommand(1);
  unsigned threads = 1;
  app.add_option("--threads", threads, "Worker threads for library-internal parallelism")
      ->check(CLI::Range(1u, 256u));

  std::string file1, file2;
  bool kv = false;
  auto* inv = app.add_subcommand("invariants", "Print the invariants of a dessin file");
  inv->add_option("file", file1, "Dessin file")->required();
  inv->add_flag("--kv", kv, "Machine-readable key=value output");

  auto* iso = app.add_subcommand("iso", "Test two dessins for isomorphism");
  iso->add_option("first", file1)->required();
  iso->add_option("second", file2)->required();

  auto* cover = app.add_subcommand("regular-cover", "Write the regular cover of a dessin");
  cover->add_option("file", file1)->required();
  cover->add_option("out", file2, "Output file, or - for stdout")->required();

  auto* moduli = app.add_subcommand("moduli-real", "Test whether the field of moduli is real");
  moduli->add_option("file", file1)->required();

  std::string expr, field_poly, generator = "a";
  auto* belyi = app.add_subcommand("belyi", "Belyi polynomial tools");
  belyi->require_subcommand(1);
  auto* check = belyi->add_subcommand("check", "Report critical values and the Belyi verdict");
  check->add_option("expression", expr, "Polynomial, e.g. \"1 - (x^3 - 1)^2\"")->required();
  check->add_option("--field", field_poly,
                    "Minimal polynomial of an algebraic generator, e.g. \"25x^3-12x^2-24x-16\"");
  check->add_option("--generator", generator, "Name of the algebraic generator")
      ->capture_default_str();
  auto* reduce = belyi->add_subcommand("reduce", "Compose to a Belyi map and verify it");
  reduce->add_option("expression", expr)->required();

  std::size_t degree = 1;
  bool pointed = false;
  std::string passport;
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate dessins of a given degree");
  enumerate->add_option("degree", degree)->required()->check(CLI::PositiveNumber);
  enumerate->add_flag("--pointed", pointed, "Count pointed dessins (with a base edge)");
  enumerate->add_option("--passport", passport, "Filter, e.g. \"2,2,1,1/3,2,1/6\"");

  auto* dot = app.add_subcommand("export-dot", "Write the bipartite graph in DOT format");
  dot->add_option("file", file1)->required();
  dot->add_option("out", file2, "Output file, or - for stdout")->required();

  std::string corpus_dir = DESSINKIT_DEFAULT_CORPUS;
  std::size_t trials = 100;
  auto* selftest = app.add_subcommand("selftest", "Verify every corpus entry");
  selftest->add_option("--corpus", corpus_dir, "Corpus directory")->capture_default_str();
  selftest->add_option("--trials", trials, "Random relabelings per entry")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*inv) return cmd_invariants(file1, kv);
    if (*iso) return cmd_iso(file1, file2);
    if (*cover) return cmd_regular_cover(file1, file2);
    if (*moduli) return cmd_moduli_real(file1);
    if (*check) return cmd_belyi_check(expr, field_poly, generator);
    if (*reduce) return cmd_belyi_reduce(expr);
    if (*enumerate) return cmd_enumerate(degree, pointed, passport, threads);
    if (*dot) return cmd_export_dot(file1, file2);
    if (*selftest) return cmd_selftest(corpus_dir, trials);
  } catch (const dk::GroupTooLarge& e) {
    std::cerr << "resource cap: " << e.what() << '\n';
    return kResource;
  } catch (const dk::ResourceLimit& e) {
    std::cerr << "resource cap: " << e.what() << '\n';
    return kResource;
  } catch (const dk::DegreeTooLarge& e) {
    std::cerr << "resource cap: " << e.what() << '\n';
    return kResource;
  } catch (const dk::ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const dk::Error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  }
  return kUsage;
}
