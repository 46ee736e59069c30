#pragma once

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "domcode/code.hpp"
#include "domcode/error.hpp"
#include "domcode/graph.hpp"

namespace domcode {

class ParseError : public InvalidParameter {
 public:
  using InvalidParameter::InvalidParameter;
};

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

/// Next line that is neither blank nor a '#' comment.
inline bool next_content_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (!line.empty()) return true;
  }
  return false;
}

inline std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameter("cannot open '" + path + "'");
  return in;
}

}  // namespace detail

// Graph file:
//   graph <name> <n>
//   u v        one edge per line, 0-based vertex ids
inline Graph read_graph(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!detail::next_content_line(in, line, lineno)) throw ParseError("graph file: missing header");
  std::istringstream header(line);
  std::string tag, name;
  long long n = -1;
  if (!(header >> tag >> name >> n) || tag != "graph" || n < 0)
    throw ParseError("graph file line " + std::to_string(lineno) + ": expected 'graph <name> <n>'");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  while (detail::next_content_line(in, line, lineno)) {
    std::istringstream row(line);
    long long u = -1, v = -1;
    std::string rest;
    if (!(row >> u >> v) || (row >> rest) || u < 0 || v < 0)
      throw ParseError("graph file line " + std::to_string(lineno) + ": expected 'u v'");
    if (u >= n || v >= n) throw ParseError("graph file line " + std::to_string(lineno) + ": vertex out of range");
    edges.emplace_back(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
  }
  try {
    return Graph::from_edges(static_cast<std::size_t>(n), edges, name);
  } catch (const InvalidParameter& e) {
    throw ParseError(std::string("graph file: ") + e.what());
  }
}

inline Graph read_graph_file(const std::string& path) {
  auto in = detail::open_or_throw(path);
  return read_graph(in);
}

inline void write_graph(std::ostream& out, const Graph& g) {
  out << "graph " << g.name() << ' ' << g.size() << '\n';
  for (std::size_t u = 0; u < g.size(); ++u)
    for_each_vertex(g.closed_nbhd(u), [&](std::size_t v) {
      if (u < v) out << u << ' ' << v << '\n';
    });
}

// Code file:
//   code <graph-name>
//   one vertex per line: a bare integer is a 0-based vertex id, anything else
//   is a coordinate tuple such as (1,2) or (1,2,3) matched against the labels.
struct CodeFile {
  std::string graph_name;
  std::vector<std::size_t> ids;
  std::vector<Label> tuples;
};

inline Label parse_tuple(std::string_view text) {
  std::string s;
  for (char c : text)
    s += (c == '(' || c == ')' || c == ',') ? ' ' : c;
  std::istringstream in(s);
  Label l;
  long long x;
  while (in >> x) l.push_back(static_cast<int>(x));
  in.clear();
  std::string rest;
  if ((in >> rest) || l.empty()) throw ParseError("bad coordinate tuple '" + std::string(text) + "'");
  return l;
}

inline CodeFile read_code(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!detail::next_content_line(in, line, lineno)) throw ParseError("code file: missing header");
  std::istringstream header(line);
  std::string tag;
  CodeFile f;
  if (!(header >> tag) || tag != "code") throw ParseError("code file: expected 'code <graph-name>'");
  std::getline(header, f.graph_name);
  f.graph_name = detail::trim(f.graph_name);
  while (detail::next_content_line(in, line, lineno)) {
    const bool bare = line.find_first_not_of("0123456789") == std::string::npos;
    if (bare) {
      f.ids.push_back(std::stoull(line));
    } else {
      try {
        f.tuples.push_back(parse_tuple(line));
      } catch (const ParseError&) {
        throw ParseError("code file line " + std::to_string(lineno) + ": bad vertex '" + line + "'");
      }
    }
  }
  return f;
}

inline CodeFile read_code_file(const std::string& path) {
  auto in = detail::open_or_throw(path);
  return read_code(in);
}

inline std::string normalize_graph_name(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

/// Resolves a parsed code file on `g`; the header must name `g`.
inline Code to_code(const Graph& g, const CodeFile& f) {
  if (!f.graph_name.empty() && normalize_graph_name(f.graph_name) != normalize_graph_name(g.name()))
    throw InvalidParameter("code file is for graph '" + f.graph_name + "', not '" + g.name() + "'");
  VertexSet s(g.size());
  for (auto id : f.ids) {
    if (id >= g.size()) throw InvalidParameter("code vertex id " + std::to_string(id) + " out of range");
    s.set(id);
  }
  for (const auto& t : f.tuples) s.set(g.at(t));
  return Code(g, std::move(s));
}

inline void write_code(std::ostream& out, const Graph& g, const Code& c) {
  out << "code " << g.name() << '\n';
  for_each_vertex(c.members(), [&](std::size_t v) { out << label_string(g.label(v)) << '\n'; });
}

/// Graph spec language: K(q), cart(A,B), direct(A,B), comp(A), cube(q),
/// king(n), tri(n), file(path).
class GraphSpecParser {
 public:
  explicit GraphSpecParser(std::string_view text) : text_(text) {}

  Graph parse() {
    Graph g = expr();
    skip();
    if (pos_ != text_.size()) error("trailing input");
    return g;
  }

 private:
  [[noreturn]] void error(const std::string& why) const {
    throw ParseError("graph spec '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + why);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != c) error(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::string ident() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])))) ++pos_;
    if (pos_ == start) error("expected a graph constructor");
    return std::string(text_.substr(start, pos_ - start));
  }
  int integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) error("expected a nonnegative integer");
    const auto digits = text_.substr(start, pos_ - start);
    if (digits.size() > 6) error("integer too large");
    return std::stoi(std::string(digits));
  }

  Graph expr() {
    const std::string name = ident();
    expect('(');
    Graph g;
    if (name == "K") {
      g = complete_graph(integer());
    } else if (name == "cube") {
      g = hamming_cube(integer());
    } else if (name == "king") {
      g = king_window(integer());
    } else if (name == "tri") {
      g = triangular_window(integer());
    } else if (name == "comp") {
      g = complement(expr());
    } else if (name == "cart" || name == "direct") {
      Graph a = expr();
      expect(',');
      Graph b = expr();
      g = name == "cart" ? cartesian_product(a, b) : direct_product(a, b);
    } else if (name == "file") {
      skip();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && text_[pos_] != ')') ++pos_;
      g = read_graph_file(trim_copy(text_.substr(start, pos_ - start)));
    } else {
      error("unknown constructor '" + name + "'");
    }
    expect(')');
    return g;
  }

  static std::string trim_copy(std::string_view s) { return detail::trim(s); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline Graph parse_graph_spec(std::string_view text) { return GraphSpecParser(text).parse(); }

}  // namespace domcode
