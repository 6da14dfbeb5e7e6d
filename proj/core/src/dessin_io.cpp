#include "dessinkit/dessin_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "dessinkit/errors.hpp"

namespace dessinkit {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct Field {
  std::string value;
  std::size_t line = 0;
};

}  // namespace

DessinFile parse_dessin_file(std::string_view text) {
  DessinFile file;
  std::optional<Field> degree_field, x_field, y_field;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(start, end - start));
    ++line_no;
    start = end + 1;
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (line.front() == '#') {
      file.comments.emplace_back(trim(line.substr(1)));
      file.comment_lines.push_back(line_no);
      continue;
    }
    const std::size_t split = line.find_first_of(" \t");
    const std::string_view key = line.substr(0, split);
    const std::string_view rest =
        split == std::string_view::npos ? std::string_view{} : trim(line.substr(split));
    std::optional<Field>* slot = nullptr;
    if (key == "degree") slot = &degree_field;
    else if (key == "x") slot = &x_field;
    else if (key == "y") slot = &y_field;
    else throw ParseError("unknown keyword \"" + std::string(key) + "\"", line_no);
    if (slot->has_value()) {
      throw ParseError("duplicate \"" + std::string(key) + "\" line", line_no);
    }
    *slot = Field{std::string(rest), line_no};
  }

  if (!degree_field) throw ParseError("missing \"degree\" line", line_no);
  if (!x_field) throw ParseError("missing \"x\" line", line_no);
  if (!y_field) throw ParseError("missing \"y\" line", line_no);

  std::size_t degree = 0;
  {
    const std::string& v = degree_field->value;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), degree);
    if (ec != std::errc{} || ptr != v.data() + v.size() || degree == 0) {
      throw ParseError("degree must be a positive integer", degree_field->line);
    }
  }
  auto parse_perm = [&](const Field& f) {
    try {
      return Permutation::parse(f.value, degree);
    } catch (const Error& e) {
      throw ParseError(e.what(), f.line);
    }
  };
  file.dessin = Dessin(parse_perm(*x_field), parse_perm(*y_field));
  return file;
}

DessinFile read_dessin_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_dessin_file(buffer.str());
}

std::string format_dessin(const Dessin& d, const std::vector<std::string>& comments) {
  std::string out = "degree " + std::to_string(d.degree()) + "\n";
  out += "x " + d.x().to_string() + "\n";
  out += "y " + d.y().to_string() + "\n";
  for (const auto& c : comments) out += "# " + c + "\n";
  return out;
}

void write_dessin_file(const std::filesystem::path& path, const Dessin& d,
                       const std::vector<std::string>& comments) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());
  out << format_dessin(d, comments);
}

std::string export_dot(const Dessin& d) {
  std::ostringstream out;
  const auto black = cycles(d.x());
  const auto white = cycles(d.y());
  std::vector<std::size_t> black_of(d.degree()), white_of(d.degree());
  for (std::size_t c = 0; c < black.size(); ++c)
    for (Point p : black[c]) black_of[p - 1] = c;
  for (std::size_t c = 0; c < white.size(); ++c)
    for (Point p : white[c]) white_of[p - 1] = c;

  out << "graph dessin {\n";
  out << "  // degree " << d.degree() << ", genus " << genus(d) << "\n";
  const auto faces = cycles(d.z());
  for (std::size_t f = 0; f < faces.size(); ++f) {
    out << "  // face " << f + 1 << ": (";
    for (std::size_t i = 0; i < faces[f].size(); ++i) out << (i ? " " : "") << faces[f][i];
    out << ")\n";
  }
  out << "  node [shape=circle, label=\"\", width=0.2];\n";
  for (std::size_t c = 0; c < black.size(); ++c) {
    out << "  b" << c + 1 << " [style=filled, fillcolor=black];\n";
  }
  for (std::size_t c = 0; c < white.size(); ++c) {
    out << "  w" << c + 1 << " [style=filled, fillcolor=white];\n";
  }
  for (Point e = 1; e <= d.degree(); ++e) {
    out << "  b" << black_of[e - 1] + 1 << " -- w" << white_of[e - 1] + 1
        << " [label=\"" << e << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace dessinkit
