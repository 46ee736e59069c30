#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "domcode/code.hpp"
#include "domcode/graph.hpp"

namespace domcode {

enum class WitnessKind { EmptyIset, EqualIsets, Containment, IntersectionTooBig, EmptyCode };

inline std::string_view to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::EmptyIset: return "empty-iset";
    case WitnessKind::EqualIsets: return "equal-isets";
    case WitnessKind::Containment: return "containment";
    case WitnessKind::IntersectionTooBig: return "intersection-too-big";
    case WitnessKind::EmptyCode: return "empty-code";
  }
  return "?";
}

/// Vertices are graph indices (or grid coordinates, see grid.hpp).
///
///  - EmptyIset: I(u) is empty.
///  - EqualIsets: I(u) == I(v).
///  - Containment: I(u) ⊆ I(v), i.e. I(u) \ I(v) is empty.
///  - IntersectionTooBig: v != u lies in the relevant intersection of N[c], c ∈ I(u).
struct Witness {
  WitnessKind kind;
  std::optional<std::size_t> u;
  std::optional<std::size_t> v;
};

struct Verdict {
  bool ok = true;
  std::optional<Witness> witness;
  std::string detail;

  explicit operator bool() const { return ok; }

  static Verdict pass() { return {}; }
  static Verdict fail(Witness w, std::string detail) { return {false, w, std::move(detail)}; }
};

namespace detail {

inline std::string vname(const Graph& g, std::size_t v) { return label_string(g.label(v)); }

inline Verdict empty_code() { return Verdict::fail({WitnessKind::EmptyCode, {}, {}}, "code is empty"); }

inline Verdict empty_iset(const Graph& g, std::size_t u) {
  return Verdict::fail({WitnessKind::EmptyIset, u, {}}, "I" + vname(g, u) + " is empty");
}

inline Verdict containment(const Graph& g, std::size_t u, std::size_t v) {
  return Verdict::fail({WitnessKind::Containment, u, v},
                       "I" + vname(g, u) + " is contained in I" + vname(g, v));
}

inline Verdict too_big(const Graph& g, std::size_t u, std::size_t v) {
  return Verdict::fail({WitnessKind::IntersectionTooBig, u, v},
                       "intersection of N[c] over I" + vname(g, u) + " also contains " + vname(g, v));
}

/// Nonempty and pairwise distinct I-sets over `scope`.
inline Verdict distinct_isets(const Graph& g, const Code& c, const VertexSet& scope) {
  std::map<VertexSet, std::size_t> seen;
  for (auto u = scope.find_first(); u != VertexSet::npos; u = scope.find_next(u)) {
    VertexSet i = g.closed_nbhd(u) & c.members();
    if (i.none()) return empty_iset(g, u);
    auto [it, fresh] = seen.emplace(std::move(i), u);
    if (!fresh)
      return Verdict::fail({WitnessKind::EqualIsets, it->second, u},
                           "I" + vname(g, it->second) + " equals I" + vname(g, u));
  }
  return Verdict::pass();
}

/// ⋂_{c ∈ I(u)} N[c]; requires I(u) nonempty.
inline VertexSet common_cover(const Graph& g, const VertexSet& iset_u) {
  auto c = iset_u.find_first();
  VertexSet acc = g.closed_nbhd(c);
  for (c = iset_u.find_next(c); c != VertexSet::npos; c = iset_u.find_next(c)) acc &= g.closed_nbhd(c);
  return acc;
}

}  // namespace detail

/// Checks the defining condition of `cls` directly.
///
/// DLD follows the pairwise definition; in addition every non-codeword must
/// have a nonempty I-set (this only matters when exactly one non-codeword
/// exists and keeps DLD ⟹ LD uniform).
inline Verdict verify(const Graph& g, const Code& c, CodeClass cls) {
  require_same_graph(g, c);
  if (c.empty()) return detail::empty_code();
  const VertexSet& members = c.members();
  const VertexSet outside = ~members;

  switch (cls) {
    case CodeClass::DOM:
      for (std::size_t u = 0; u < g.size(); ++u)
        if (!g.closed_nbhd(u).intersects(members)) return detail::empty_iset(g, u);
      return Verdict::pass();

    case CodeClass::ID: return detail::distinct_isets(g, c, g.all_vertices());

    case CodeClass::LD: return detail::distinct_isets(g, c, outside);

    case CodeClass::SLD:
      for (auto u = outside.find_first(); u != VertexSet::npos; u = outside.find_next(u)) {
        const VertexSet i = g.closed_nbhd(u) & members;
        if (i.none()) return detail::empty_iset(g, u);
        VertexSet common = detail::common_cover(g, i);
        common.reset(u);
        if (common.any()) return detail::too_big(g, u, common.find_first());
      }
      return Verdict::pass();

    case CodeClass::DLD: {
      std::vector<std::size_t> non;
      std::vector<VertexSet> isets;
      for (auto u = outside.find_first(); u != VertexSet::npos; u = outside.find_next(u)) {
        non.push_back(u);
        isets.push_back(g.closed_nbhd(u) & members);
      }
      for (std::size_t a = 0; a < non.size(); ++a) {
        if (isets[a].none()) return detail::empty_iset(g, non[a]);
        for (std::size_t b = 0; b < non.size(); ++b)
          if (a != b && isets[a].is_subset_of(isets[b])) return detail::containment(g, non[a], non[b]);
      }
      return Verdict::pass();
    }
  }
  return Verdict::pass();
}

/// SLD and DLD through the alternative characterizations:
///  - SLD: I(u) \ I(v) ≠ ∅ for every non-codeword u and every vertex v ≠ u;
///  - DLD: I(u) ≠ ∅ and (⋂_{c∈I(u)} N[c]) \ C = {u} for every non-codeword u.
/// Equivalent to verify() on connected graphs with at least two vertices.
inline Verdict verify_by_characterization(const Graph& g, const Code& c, CodeClass cls) {
  require_same_graph(g, c);
  if (cls != CodeClass::SLD && cls != CodeClass::DLD)
    throw InvalidParameter("characterization exists only for SLD and DLD");
  if (c.empty()) return detail::empty_code();
  const VertexSet& members = c.members();
  const VertexSet outside = ~members;

  if (cls == CodeClass::SLD) {
    std::vector<VertexSet> isets(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) isets[v] = g.closed_nbhd(v) & members;
    for (auto u = outside.find_first(); u != VertexSet::npos; u = outside.find_next(u))
      for (std::size_t v = 0; v < g.size(); ++v)
        if (v != u && isets[u].is_subset_of(isets[v])) return detail::containment(g, u, v);
    return Verdict::pass();
  }

  for (auto u = outside.find_first(); u != VertexSet::npos; u = outside.find_next(u)) {
    const VertexSet i = g.closed_nbhd(u) & members;
    if (i.none()) return detail::empty_iset(g, u);
    VertexSet common = detail::common_cover(g, i) - members;
    common.reset(u);
    if (common.any()) return detail::too_big(g, u, common.find_first());
  }
  return Verdict::pass();
}

/// All classes the code belongs to, in DOM, LD, SLD, DLD, ID order.
inline std::vector<CodeClass> classify(const Graph& g, const Code& c) {
  std::vector<CodeClass> out;
  for (auto cls : kAllClasses)
    if (verify(g, c, cls).ok) out.push_back(cls);
  return out;
}

/// Re-evaluates the condition a failing witness names, independently of the
/// verifier that produced it. True iff the witness really is a violation.
inline bool witness_holds(const Graph& g, const Code& c, const Witness& w) {
  const VertexSet& members = c.members();
  auto is = [&](std::size_t v) { return g.closed_nbhd(v) & members; };
  switch (w.kind) {
    case WitnessKind::EmptyCode: return c.empty();
    case WitnessKind::EmptyIset: return w.u && is(*w.u).none();
    case WitnessKind::EqualIsets: return w.u && w.v && *w.u != *w.v && is(*w.u) == is(*w.v);
    case WitnessKind::Containment: return w.u && w.v && *w.u != *w.v && is(*w.u).is_subset_of(is(*w.v));
    case WitnessKind::IntersectionTooBig: {
      if (!w.u || !w.v || *w.u == *w.v) return false;
      // every codeword covering u also covers v
      bool all = true;
      for_each_vertex(is(*w.u), [&](std::size_t cw) { all = all && g.closed_nbhd(cw).test(*w.v); });
      return all && is(*w.u).any();
    }
  }
  return false;
}

}  // namespace domcode
