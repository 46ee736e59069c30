#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "domcode/error.hpp"
#include "domcode/vertex_set.hpp"

namespace domcode {

/// Coordinate tuple attached to a vertex. Product graphs use 1-based factor
/// coordinates; grid windows use the raw lattice coordinates.
using Label = std::vector<int>;

inline constexpr std::size_t kDefaultMaxVertices = 4096;

namespace detail {
inline std::atomic<std::size_t>& max_vertices_ref() {
  static std::atomic<std::size_t> cap{kDefaultMaxVertices};
  return cap;
}
}  // namespace detail

inline std::size_t max_vertices() { return detail::max_vertices_ref().load(); }
inline void set_max_vertices(std::size_t cap) { detail::max_vertices_ref().store(cap); }

inline std::string label_string(const Label& l) {
  std::string s = "(";
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(l[i]);
  }
  return s + ")";
}

/// Immutable finite simple graph stored as closed neighbourhood bitsets.
///
/// Every graph carries one label per vertex. Graphs built without explicit
/// labels get the 1-based tuple (v+1), so human-facing output never exposes
/// internal indices.
class Graph {
 public:
  Graph() = default;

  Graph(std::vector<VertexSet> closed, std::vector<Label> labels, std::string name)
      : closed_(std::move(closed)), labels_(std::move(labels)), name_(std::move(name)) {
    const std::size_t n = closed_.size();
    if (n > max_vertices())
      throw InvalidParameter("graph '" + name_ + "' has " + std::to_string(n) +
                             " vertices, above the cap of " + std::to_string(max_vertices()));
    if (labels_.empty()) {
      labels_.reserve(n);
      for (std::size_t v = 0; v < n; ++v) labels_.push_back({static_cast<int>(v) + 1});
    }
    if (labels_.size() != n) throw InvalidParameter("label count does not match vertex count");
    for (std::size_t v = 0; v < n; ++v) {
      if (closed_[v].size() != n) throw InvalidParameter("neighbourhood width mismatch");
      if (!closed_[v].test(v)) throw InvalidParameter("closed neighbourhood misses its vertex");
    }
    for (std::size_t v = 0; v < n; ++v)
      for_each_vertex(closed_[v], [&](std::size_t u) {
        if (!closed_[u].test(v)) throw InvalidParameter("adjacency is not symmetric");
      });
    for (std::size_t v = 0; v < n; ++v) {
      if (!index_.emplace(labels_[v], v).second)
        throw InvalidParameter("duplicate vertex label " + label_string(labels_[v]));
    }
    fingerprint_ = compute_fingerprint();
  }

  static Graph from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                          std::string name, std::vector<Label> labels = {}) {
    if (n > max_vertices())
      throw InvalidParameter("graph has " + std::to_string(n) + " vertices, above the cap");
    std::vector<VertexSet> closed(n, VertexSet(n));
    for (std::size_t v = 0; v < n; ++v) closed[v].set(v);
    for (auto [u, v] : edges) {
      if (u >= n || v >= n) throw InvalidParameter("edge endpoint out of range");
      if (u == v) throw InvalidParameter("self-loop on vertex " + std::to_string(u));
      if (closed[u].test(v)) throw InvalidParameter("multi-edge " + std::to_string(u) + " " + std::to_string(v));
      closed[u].set(v);
      closed[v].set(u);
    }
    return Graph(std::move(closed), std::move(labels), std::move(name));
  }

  std::size_t size() const { return closed_.size(); }
  const VertexSet& closed_nbhd(std::size_t v) const { return closed_.at(v); }
  VertexSet open_nbhd(std::size_t v) const {
    VertexSet s = closed_.at(v);
    s.reset(v);
    return s;
  }
  bool adjacent(std::size_t u, std::size_t v) const { return u != v && closed_.at(u).test(v); }
  std::size_t degree(std::size_t v) const { return closed_.at(v).count() - 1; }
  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (std::size_t v = 0; v < size(); ++v) twice += degree(v);
    return twice / 2;
  }

  const std::vector<Label>& labels() const { return labels_; }
  const Label& label(std::size_t v) const { return labels_.at(v); }
  std::optional<std::size_t> find(const Label& l) const {
    auto it = index_.find(l);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t at(const Label& l) const {
    auto v = find(l);
    if (!v) throw InvalidParameter("no vertex " + label_string(l) + " in " + name_);
    return *v;
  }

  const std::string& name() const { return name_; }
  /// Structural hash of the adjacency; codes record it to detect mismatches.
  std::uint64_t fingerprint() const { return fingerprint_; }

  bool is_connected() const {
    if (size() == 0) return true;
    VertexSet seen(size()), frontier(size());
    frontier.set(0);
    while (frontier.any()) {
      seen |= frontier;
      VertexSet next(size());
      for_each_vertex(frontier, [&](std::size_t v) { next |= closed_[v]; });
      frontier = next - seen;
    }
    return seen.all();
  }

  VertexSet all_vertices() const {
    VertexSet s(size());
    s.set();
    return s;
  }

  Graph with_name(std::string name) const {
    Graph g = *this;
    g.name_ = std::move(name);
    return g;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.closed_ == b.closed_; }

 private:
  std::uint64_t compute_fingerprint() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](std::uint64_t x) {
      h ^= x;
      h *= 1099511628211ull;
    };
    mix(size());
    for (std::size_t v = 0; v < size(); ++v) {
      mix(0xfeedull + v);
      for_each_vertex(closed_[v], [&](std::size_t u) { mix(u); });
    }
    return h;
  }

  std::vector<VertexSet> closed_;
  std::vector<Label> labels_;
  std::string name_;
  std::map<Label, std::size_t> index_;
  std::uint64_t fingerprint_ = 0;
};

inline Graph complete_graph(int q) {
  if (q < 1) throw InvalidParameter("complete_graph: q must be at least 1, got " + std::to_string(q));
  const auto n = static_cast<std::size_t>(q);
  std::vector<VertexSet> closed(n, VertexSet(n));
  for (auto& s : closed) s.set();
  std::vector<Label> labels;
  for (int i = 1; i <= q; ++i) labels.push_back({i});
  return Graph(std::move(closed), std::move(labels), "K(" + std::to_string(q) + ")");
}

namespace detail {

inline Label concat(const Label& a, const Label& b) {
  Label l = a;
  l.insert(l.end(), b.begin(), b.end());
  return l;
}

template <typename Adjacent>
Graph product(const Graph& g1, const Graph& g2, std::string name, Adjacent adjacent) {
  if (g1.size() == 0 || g2.size() == 0) throw InvalidParameter("product factors must be nonempty");
  const std::size_t n1 = g1.size(), n2 = g2.size(), n = n1 * n2;
  if (n > max_vertices())
    throw InvalidParameter("product " + name + " has " + std::to_string(n) + " vertices, above the cap");
  std::vector<VertexSet> closed(n, VertexSet(n));
  std::vector<Label> labels(n);
  for (std::size_t u1 = 0; u1 < n1; ++u1)
    for (std::size_t u2 = 0; u2 < n2; ++u2) {
      const std::size_t u = u1 * n2 + u2;
      labels[u] = concat(g1.label(u1), g2.label(u2));
      closed[u].set(u);
      for (std::size_t v1 = 0; v1 < n1; ++v1)
        for (std::size_t v2 = 0; v2 < n2; ++v2)
          if (adjacent(u1, u2, v1, v2)) closed[u].set(v1 * n2 + v2);
    }
  return Graph(std::move(closed), std::move(labels), std::move(name));
}

}  // namespace detail

/// G1 □ G2. Vertex (u1,u2) has index u1*|G2|+u2 and label label(u1)++label(u2).
inline Graph cartesian_product(const Graph& g1, const Graph& g2) {
  return detail::product(g1, g2, "cart(" + g1.name() + "," + g2.name() + ")",
                         [&](std::size_t u1, std::size_t u2, std::size_t v1, std::size_t v2) {
                           return (u1 == v1 && g2.adjacent(u2, v2)) || (u2 == v2 && g1.adjacent(u1, v1));
                         });
}

/// G1 × G2 (tensor product); same indexing and labels as cartesian_product.
inline Graph direct_product(const Graph& g1, const Graph& g2) {
  return detail::product(g1, g2, "direct(" + g1.name() + "," + g2.name() + ")",
                         [&](std::size_t u1, std::size_t u2, std::size_t v1, std::size_t v2) {
                           return g1.adjacent(u1, v1) && g2.adjacent(u2, v2);
                         });
}

inline Graph complement(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<VertexSet> closed(n);
  for (std::size_t v = 0; v < n; ++v) {
    closed[v] = ~g.closed_nbhd(v);
    closed[v].set(v);
  }
  return Graph(std::move(closed), g.labels(), "comp(" + g.name() + ")");
}

/// K_q □ K_q □ K_q with labels (i,j,k), 1 <= i,j,k <= q.
inline Graph hamming_cube(int q) {
  if (q < 2) throw InvalidParameter("hamming_cube: q must be at least 2, got " + std::to_string(q));
  const Graph k = complete_graph(q);
  return cartesian_product(cartesian_product(k, k), k).with_name("cube(" + std::to_string(q) + ")");
}

namespace detail {

template <typename Offsets>
Graph lattice_window(int n, const Offsets& offsets, std::string name) {
  if (n < 0) throw InvalidParameter("window radius must be nonnegative");
  const std::size_t side = 2 * static_cast<std::size_t>(n) + 1, count = side * side;
  if (count > max_vertices())
    throw InvalidParameter(name + " has " + std::to_string(count) + " vertices, above the cap");
  auto index = [&](int x, int y) { return static_cast<std::size_t>(x + n) * side + static_cast<std::size_t>(y + n); };
  std::vector<VertexSet> closed(count, VertexSet(count));
  std::vector<Label> labels(count);
  for (int x = -n; x <= n; ++x)
    for (int y = -n; y <= n; ++y) {
      const auto v = index(x, y);
      labels[v] = {x, y};
      closed[v].set(v);
      for (auto [dx, dy] : offsets) {
        const int a = x + dx, b = y + dy;
        if (a >= -n && a <= n && b >= -n && b <= n) closed[v].set(index(a, b));
      }
    }
  return Graph(std::move(closed), std::move(labels), std::move(name));
}

}  // namespace detail

inline constexpr std::pair<int, int> kKingOffsets[] = {{-1, -1}, {-1, 0}, {-1, 1}, {0, -1},
                                                       {0, 1},   {1, -1}, {1, 0},  {1, 1}};
/// v(i,j) = i(1,0) + j(1/2, sqrt(3)/2); these are exactly the unit-distance offsets.
inline constexpr std::pair<int, int> kTriangularOffsets[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}};

/// King grid restricted to {(x,y): |x|,|y| <= n}, labels (x,y).
inline Graph king_window(int n) { return detail::lattice_window(n, kKingOffsets, "king(" + std::to_string(n) + ")"); }

/// Triangular grid restricted to {v(i,j): |i|,|j| <= n}, labels (i,j).
inline Graph triangular_window(int n) {
  return detail::lattice_window(n, kTriangularOffsets, "tri(" + std::to_string(n) + ")");
}

// Pipes and layers of K_q^3.

namespace detail {
inline int cube_side(const Graph& g) {
  if (g.size() == 0 || g.label(0).size() != 3) throw InvalidParameter("graph is not a Hamming cube K_q^3");
  int q = 1;
  while (static_cast<std::size_t>(q) * q * q < g.size()) ++q;
  if (static_cast<std::size_t>(q) * q * q != g.size()) throw InvalidParameter("graph is not a Hamming cube K_q^3");
  return q;
}
}  // namespace detail

/// P^axis(a,b): the q vertices whose non-axis coordinates are a (left) and b (right).
inline VertexSet pipe(const Graph& cube, int axis, int a, int b) {
  const int q = detail::cube_side(cube);
  if (axis < 1 || axis > 3) throw InvalidParameter("pipe axis must be 1, 2 or 3");
  if (a < 1 || a > q || b < 1 || b > q) throw InvalidParameter("pipe coordinates out of range");
  VertexSet s(cube.size());
  for (int t = 1; t <= q; ++t) {
    Label l(3);
    l[axis - 1] = t;
    l[axis == 1 ? 1 : 0] = a;
    l[axis == 3 ? 1 : 2] = b;
    s.set(cube.at(l));
  }
  return s;
}

/// L^axis_j: the q^2 vertices whose axis coordinate equals j.
inline VertexSet layer(const Graph& cube, int axis, int j) {
  const int q = detail::cube_side(cube);
  if (axis < 1 || axis > 3) throw InvalidParameter("layer axis must be 1, 2 or 3");
  if (j < 1 || j > q) throw InvalidParameter("layer index out of range");
  VertexSet s(cube.size());
  for (std::size_t v = 0; v < cube.size(); ++v)
    if (cube.label(v)[axis - 1] == j) s.set(v);
  return s;
}

}  // namespace domcode
