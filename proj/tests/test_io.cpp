#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>

#include "dessinkit/corpus.hpp"
#include "dessinkit/dessin_io.hpp"
#include "dessinkit/errors.hpp"
#include "dessinkit/report.hpp"
#include "test_support.hpp"

using namespace dessinkit;

namespace {

std::size_t line_of(const std::string& text) {
  try {
    parse_dessin_file(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

std::size_t count_matches(const std::string& text, const std::string& pattern) {
  const std::regex re(pattern);
  return static_cast<std::size_t>(
      std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

}  // namespace

TEST(DessinFile, ParsesWithCommentsAnywhere) {
  const auto f = parse_dessin_file("# head\n\ndegree 3\n# mid\nx (1 2)\ny (2 3)\n# tail\n");
  EXPECT_EQ(f.dessin.degree(), 3u);
  EXPECT_EQ(f.comments, (std::vector<std::string>{"head", "mid", "tail"}));
  EXPECT_EQ(f.comment_lines, (std::vector<std::size_t>{1, 4, 7}));
}

TEST(DessinFile, ErrorsCarryLineNumbers) {
  EXPECT_EQ(line_of("degree 3\nx (1 2)\ny (1 4)\n"), 3u);
  EXPECT_EQ(line_of("degree 3\nx (1 2\ny ()\n"), 2u);
  EXPECT_EQ(line_of("degree three\nx ()\ny ()\n"), 1u);
  EXPECT_EQ(line_of("# c\ndegree 3\nz (1 2)\n"), 3u);
  EXPECT_EQ(line_of("degree 3\nx (1 2)\nx (1 2)\n"), 3u);
  EXPECT_GT(line_of("degree 3\nx (1 2)\n"), 0u);
  EXPECT_THROW(parse_dessin_file("degree 3\nx (1 2)\ny ()\n"), NotTransitive);
}

TEST(DessinFile, CorpusRoundTrips) {
  for (const auto& entry : dktest::load_corpus()) {
    const std::string text = format_dessin(entry.dessin(), entry.file.comments);
    const auto again = parse_dessin_file(text);
    EXPECT_EQ(again.dessin, entry.dessin()) << entry.name;
    EXPECT_EQ(again.comments, entry.file.comments) << entry.name;
    EXPECT_EQ(format_dessin(again.dessin, again.comments), text);
  }
}

TEST(Dot, NodeAndEdgeCounts) {
  const struct {
    const char* name;
    std::size_t nodes, edges;
  } cases[] = {{"cube", 8, 12}, {"trivial", 2, 1}, {"d0", 11, 12}};
  for (const auto& c : cases) {
    const std::string dot = export_dot(dktest::corpus_dessin(c.name));
    EXPECT_EQ(count_matches(dot, R"(\n  [bw]\d+ \[)"), c.nodes) << c.name;
    EXPECT_EQ(count_matches(dot, " -- "), c.edges) << c.name;
    EXPECT_EQ(count_matches(dot, "fillcolor=black"), cycle_count(dktest::corpus_dessin(c.name).x()));
  }
  const std::string d0 = export_dot(dktest::corpus_dessin("d0"));
  EXPECT_NE(d0.find("// face 1: (1 4 9 12 8 11 7 10 3 6 2 5)"), std::string::npos);
}

TEST(Report, KeyValueFormat) {
  const auto r = invariant_report(dktest::corpus_dessin("cube"));
  const std::string kv = format_kv(r);
  EXPECT_NE(kv.find("genus=0\n"), std::string::npos);
  EXPECT_NE(kv.find("closure=12\n"), std::string::npos);
  EXPECT_NE(kv.find("regular=true\n"), std::string::npos);
  EXPECT_NE(kv.find("faces=6\n"), std::string::npos);
  const auto rabbit = invariant_report(dktest::corpus_dessin("rabbit24"));
  EXPECT_FALSE(rabbit.closure_order);
  EXPECT_NE(format_kv(rabbit).find("closure=>1000000\n"), std::string::npos);
}

TEST(Corpus, EveryExpectationIsTaggedAndEveryEntryVerifies) {
  const auto corpus = dktest::load_corpus();
  ASSERT_GE(corpus.size(), 10u);
  SelftestOptions options;
  options.relabel_trials = 10;
  for (const auto& entry : corpus) {
    EXPECT_FALSE(entry.expected.empty()) << entry.name;
    for (const auto& e : entry.expected) EXPECT_FALSE(e.tag.empty());
    const auto verdict = verify_entry(entry, corpus, options);
    EXPECT_TRUE(verdict.ok()) << entry.name << ": "
                              << (verdict.failures.empty() ? "" : verdict.failures.front());
  }
}

TEST(Corpus, PrintedGeneratorsArePresent) {
  std::size_t printed = 0;
  for (const auto& entry : dktest::load_corpus()) {
    for (const auto& p : entry.printed) {
      const auto& stored = p.generator == 'x' ? entry.dessin().x() : entry.dessin().y();
      EXPECT_EQ(Permutation::parse(p.cycles, entry.dessin().degree()), stored) << entry.name;
      ++printed;
    }
  }
  EXPECT_EQ(printed, 12u);
}

TEST(Corpus, NegativeControls) {
  const auto corpus = dktest::load_corpus();
  SelftestOptions options;
  options.relabel_trials = 2;
  for (const auto& entry : corpus) {
    if (entry.name != "d1") continue;
    CorpusEntry broken = entry;
    broken.file.dessin = dktest::make(12, "(1 2 3 7 8 9)(5 10)", "(1 4)(2 5)(7 10)(8 11)(3 6 9 12)");
    const auto verdict = verify_entry(broken, corpus, options);
    EXPECT_FALSE(verdict.ok());
  }
  EXPECT_TRUE(corpus_files("/nonexistent/dessinkit").empty());

  const auto dir = std::filesystem::temp_directory_path() / "dessinkit_untagged";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "bad.dsn") << "degree 1\nx ()\ny ()\n# expect genus=0\n";
  EXPECT_THROW(read_corpus_entry(dir / "bad.dsn"), ParseError);
  std::filesystem::remove_all(dir);
}
