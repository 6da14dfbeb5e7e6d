#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "dessinkit/dessin.hpp"

namespace dessinkit {

/// A parsed dessin file together with its comment lines (without '#').
struct DessinFile {
  Dessin dessin = Dessin::trivial();
  std::vector<std::string> comments;
  /// 1-based line number of each comment.
  std::vector<std::size_t> comment_lines;
};

/**
 * Parses the line-oriented dessin format:
 *
 *     # optional comments
 *     degree 12
 *     x (1 2 3 7 8 9)(6 12)
 *     y (1 4)(2 5)(7 10)(8 11)(3 6 9 12)
 *
 * Throws ParseError (with line number) or NotTransitive.
 */
DessinFile parse_dessin_file(std::string_view text);

DessinFile read_dessin_file(const std::filesystem::path& path);

/// Serializes a dessin; each comment becomes a "# ..." line after the data.
std::string format_dessin(const Dessin& d, const std::vector<std::string>& comments = {});

void write_dessin_file(const std::filesystem::path& path, const Dessin& d,
                       const std::vector<std::string>& comments = {});

/**
 * Bipartite multigraph in Graphviz DOT: one filled node per black vertex
 * (cycle of x), one white node per cycle of y, one edge per dessin edge.
 * Faces (cycles of z) are listed as comments. No embedding is implied.
 */
std::string export_dot(const Dessin& d);

}  // namespace dessinkit
