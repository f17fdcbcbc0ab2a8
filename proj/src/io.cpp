// SPDX-License-Identifier: Apache-2.0

#include "oppm/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <string_view>
#include <vector>

#include "oppm/error.hpp"

namespace oppm::io {
namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> split(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

bool blank(std::string_view line) { return split(line).empty(); }

// Reads lines and tracks their numbers for error reporting.
class LineReader {
 public:
  LineReader(std::istream& in, std::string source)
      : in_(in), source_(std::move(source)) {}

  /// Next non-blank line, or nullopt at end of input.
  std::optional<std::string> next_nonblank() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (!blank(line)) return line;
    }
    return std::nullopt;
  }

  std::size_t line_no() const { return line_no_; }
  const std::string& source() const { return source_; }

  [[noreturn]] void fail(std::size_t column, const std::string& msg) const {
    throw ParseError(source_, line_no_, column, msg);
  }

  template <class Int>
  Int integer(const Token& tok) const {
    Int value{};
    const char* first = tok.text.data();
    const char* last = first + tok.text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) {
      fail(tok.column, "integer out of range: '" + std::string(tok.text) + "'");
    }
    if (ec != std::errc{} || ptr != last) {
      fail(tok.column, "expected an integer, got '" + std::string(tok.text) + "'");
    }
    return value;
  }

 private:
  std::istream& in_;
  std::string source_;
  std::size_t line_no_ = 0;
};

// Header "<keyword> n1 n2 ..." with `count` non-negative integers.
std::vector<std::size_t> read_header(LineReader& reader, std::string_view keyword,
                                     std::size_t count) {
  const auto line = reader.next_nonblank();
  if (!line) reader.fail(1, "missing '" + std::string(keyword) + "' header");
  const auto tokens = split(*line);
  if (tokens.size() != count + 1 || tokens[0].text != keyword) {
    reader.fail(1, "header must be '" + std::string(keyword) + "' followed by " +
                       std::to_string(count) + " counts");
  }
  std::vector<std::size_t> values;
  for (std::size_t k = 1; k <= count; ++k) {
    values.push_back(reader.integer<std::size_t>(tokens[k]));
  }
  return values;
}

struct RawEdge {
  std::size_t a;
  std::size_t b;
  Symbol label;
  std::size_t line;
};

std::vector<RawEdge> read_edges(LineReader& reader, std::size_t count,
                                std::string_view shape) {
  std::vector<RawEdge> edges;
  edges.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const auto line = reader.next_nonblank();
    if (!line) {
      reader.fail(1, "expected " + std::to_string(count) + " edge lines, found " +
                         std::to_string(k));
    }
    const auto tokens = split(*line);
    if (tokens.size() != 3) {
      reader.fail(1, "edge line must be '" + std::string(shape) + "'");
    }
    edges.push_back({reader.integer<std::size_t>(tokens[0]),
                     reader.integer<std::size_t>(tokens[1]),
                     reader.integer<Symbol>(tokens[2]), reader.line_no()});
  }
  if (reader.next_nonblank()) reader.fail(1, "unexpected line after the last edge");
  return edges;
}

template <class Fn>
auto open_and(const std::filesystem::path& path, Fn&& parse) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, 0, "cannot open file");
  return parse(in, path.string());
}

}  // namespace

Sequence parse_sequence(std::istream& in, const std::string& source) {
  LineReader reader(in, source);
  Sequence values;
  const auto line = reader.next_nonblank();
  if (!line) return values;
  for (const Token& tok : split(*line)) values.push_back(reader.integer<Symbol>(tok));
  if (reader.next_nonblank()) reader.fail(1, "expected a single line of integers");
  return values;
}

TextTree parse_tree(std::istream& in, const std::string& source) {
  LineReader reader(in, source);
  const std::size_t n = read_header(reader, "tree", 1)[0];
  const std::size_t header_line = reader.line_no();
  if (n == 0) throw ParseError(source, header_line, 1, "tree needs at least one node");
  const auto raw = read_edges(reader, n - 1, "parent child label");

  std::vector<TreeEdge> edges;
  edges.reserve(raw.size());
  for (const RawEdge& e : raw) edges.push_back({e.a, e.b, e.label});
  try {
    return build_tree(n, edges);
  } catch (const ValidationError& err) {
    const std::size_t k = err.offending_edge();
    const std::size_t line = k < raw.size() ? raw[k].line : header_line;
    throw ParseError(source, line, 1, err.what());
  }
}

TextDag parse_dag(std::istream& in, const std::string& source) {
  LineReader reader(in, source);
  const auto counts = read_header(reader, "dag", 2);
  const std::size_t header_line = reader.line_no();
  const auto raw = read_edges(reader, counts[1], "source target label");

  std::vector<DagEdge> edges;
  edges.reserve(raw.size());
  for (const RawEdge& e : raw) edges.push_back({e.a, e.label, e.b});
  try {
    return TextDag(counts[0], std::move(edges));
  } catch (const ValidationError& err) {
    const std::size_t k = err.offending_edge();
    const std::size_t line = k < raw.size() ? raw[k].line : header_line;
    throw ParseError(source, line, 1, err.what());
  }
}

Sequence parse_sequence_file(const std::filesystem::path& path) {
  return open_and(path, [](std::istream& in, const std::string& s) {
    return parse_sequence(in, s);
  });
}

TextTree parse_tree_file(const std::filesystem::path& path) {
  return open_and(path, [](std::istream& in, const std::string& s) {
    return parse_tree(in, s);
  });
}

TextDag parse_dag_file(const std::filesystem::path& path) {
  return open_and(path, [](std::istream& in, const std::string& s) {
    return parse_dag(in, s);
  });
}

void write_sequence(std::ostream& out, const Sequence& s) {
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
  out << '\n';
}

void write_tree(std::ostream& out, const TextTree& tree) {
  out << "tree " << tree.node_count() << '\n';
  for (const TreeEdge& e : tree.edges()) {
    out << e.parent << ' ' << e.child << ' ' << e.label << '\n';
  }
}

void write_dag(std::ostream& out, const TextDag& dag) {
  out << "dag " << dag.vertex_count() << ' ' << dag.edges().size() << '\n';
  for (const DagEdge& e : dag.edges()) {
    out << e.source << ' ' << e.target << ' ' << e.label << '\n';
  }
}

}  // namespace oppm::io
