#pragma once

#include <array>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "domcode/error.hpp"
#include "domcode/graph.hpp"
#include "domcode/vertex_set.hpp"

namespace domcode {

enum class CodeClass { DOM, LD, SLD, DLD, ID };

inline constexpr std::array<CodeClass, 5> kAllClasses = {CodeClass::DOM, CodeClass::LD, CodeClass::SLD,
                                                         CodeClass::DLD, CodeClass::ID};

inline std::string_view to_string(CodeClass c) {
  switch (c) {
    case CodeClass::DOM: return "DOM";
    case CodeClass::LD: return "LD";
    case CodeClass::SLD: return "SLD";
    case CodeClass::DLD: return "DLD";
    case CodeClass::ID: return "ID";
  }
  return "?";
}

/// Case-insensitive.
inline CodeClass parse_code_class(std::string_view s) {
  std::string upper(s);
  for (char& ch : upper) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  for (auto c : kAllClasses)
    if (to_string(c) == upper) return c;
  throw InvalidParameter("unknown code class '" + std::string(s) + "' (expected DOM, LD, SLD, DLD or ID)");
}

/// A vertex subset bound to one graph (by structural fingerprint).
class Code {
 public:
  Code(const Graph& g, VertexSet members) : graph_key_(g.fingerprint()), members_(std::move(members)) {
    if (members_.size() != g.size())
      throw InvalidParameter("code width " + std::to_string(members_.size()) + " does not match graph order " +
                             std::to_string(g.size()));
  }

  static Code from_vertices(const Graph& g, const std::vector<std::size_t>& vs) {
    VertexSet s(g.size());
    for (auto v : vs) {
      if (v >= g.size()) throw InvalidParameter("vertex " + std::to_string(v) + " out of range");
      s.set(v);
    }
    return Code(g, std::move(s));
  }

  static Code from_labels(const Graph& g, const std::vector<Label>& ls) {
    VertexSet s(g.size());
    for (const auto& l : ls) s.set(g.at(l));
    return Code(g, std::move(s));
  }

  static Code all(const Graph& g) { return Code(g, g.all_vertices()); }
  static Code none(const Graph& g) { return Code(g, VertexSet(g.size())); }

  std::uint64_t graph_key() const { return graph_key_; }
  bool belongs_to(const Graph& g) const { return graph_key_ == g.fingerprint() && members_.size() == g.size(); }
  const VertexSet& members() const { return members_; }
  std::size_t size() const { return members_.count(); }
  bool empty() const { return members_.none(); }
  bool contains(std::size_t v) const { return members_.test(v); }
  std::vector<std::size_t> vertices() const { return to_vector(members_); }

  std::vector<Label> labels(const Graph& g) const {
    std::vector<Label> out;
    for_each_vertex(members_, [&](std::size_t v) { out.push_back(g.label(v)); });
    return out;
  }

  friend bool operator==(const Code& a, const Code& b) {
    return a.graph_key_ == b.graph_key_ && a.members_ == b.members_;
  }

 private:
  std::uint64_t graph_key_;
  VertexSet members_;
};

/// Reinterpret a code on another graph with the same vertex set (e.g. moving
/// a code between K_n □ K_m and K_n × K_m).
inline Code rebind(const Code& c, const Graph& g) {
  if (c.members().size() != g.size()) throw InvalidParameter("rebind: vertex counts differ");
  return Code(g, c.members());
}

inline void require_same_graph(const Graph& g, const Code& c) {
  if (!c.belongs_to(g)) throw InvalidParameter("code does not belong to graph " + g.name());
}

/// I(G,C;v) = N[v] ∩ C.
inline VertexSet iset(const Graph& g, const Code& c, std::size_t v) {
  require_same_graph(g, c);
  return g.closed_nbhd(v) & c.members();
}

}  // namespace domcode
