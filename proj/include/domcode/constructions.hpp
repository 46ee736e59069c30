#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "domcode/code.hpp"
#include "domcode/error.hpp"
#include "domcode/graph.hpp"
#include "domcode/verify.hpp"

namespace domcode {

/// A code together with the graph it lives on and the class it is claimed to
/// belong to.
struct Construction {
  Graph graph;
  Code code;
  CodeClass cls;
  std::string family;
};

/// Coordinates (column i, row j), 1-based, in K_n ⊗ K_m.
using Cell = std::pair<int, int>;

namespace detail {

inline Code cells_to_code(const Graph& g, const std::vector<Cell>& cells) {
  std::vector<Label> ls;
  for (auto [i, j] : cells) ls.push_back({i, j});
  return Code::from_labels(g, ls);
}

inline void require_sizes(int n, int m, int min_n, std::string_view what) {
  if (n < min_n || m < n)
    throw InvalidParameter(std::string(what) + ": requires " + std::to_string(min_n) + " <= n <= m, got (" +
                           std::to_string(n) + "," + std::to_string(m) + ")");
}

/// No non-codeword of K_n □ K_m has the whole code in its I-set. A Cartesian
/// LD code with this property is also LD in K_n × K_m.
inline bool transfers_to_direct(const Graph& cart, const Code& c) {
  for (std::size_t v = 0; v < cart.size(); ++v)
    if (!c.contains(v) && c.members().is_subset_of(cart.closed_nbhd(v))) return false;
  return true;
}

}  // namespace detail

/// Column P_i = {(i,1..m)}.
inline std::vector<Cell> column_cells(int i, int m) {
  std::vector<Cell> out;
  for (int j = 1; j <= m; ++j) out.push_back({i, j});
  return out;
}

/// A_1 ∪ A_2 ∪ A_3 for K_n × K_m with 2 < n <= m < 2n and n+m ≡ 2 (mod 3).
/// With n' = n-1, m' = m-1 and s = (n'+m')/3:
///   A_1 = {(i,i) : 1 <= i <= s}
///   A_2 = {(2s+1-i, i) : s+1 <= i <= m'}
///   A_3 = {(i+s, i) : 1 <= i <= (2n'-m')/3}
struct A123 {
  std::vector<Cell> a1, a2, a3;
  std::vector<Cell> all() const {
    std::vector<Cell> out = a1;
    out.insert(out.end(), a2.begin(), a2.end());
    out.insert(out.end(), a3.begin(), a3.end());
    return out;
  }
};

inline A123 a123_cells(int n, int m) {
  detail::require_sizes(n, m, 3, "A123");
  if (m >= 2 * n || (n + m) % 3 != 2)
    throw InvalidParameter("A123: requires m < 2n and n+m = 2 (mod 3)");
  const int np = n - 1, mp = m - 1, s = (np + mp) / 3;
  A123 r;
  for (int i = 1; i <= s; ++i) r.a1.push_back({i, i});
  for (int i = s + 1; i <= mp; ++i) r.a2.push_back({2 * s + 1 - i, i});
  for (int i = 1; i <= (2 * np - mp) / 3; ++i) r.a3.push_back({i + s, i});
  return r;
}

/// LD code for K_n × K_m, 2 < n <= m < 2n, n+m ≡ 0 or 1 (mod 3), built in the
/// same shape as A123: inside the first n-1 columns and m-1 rows, x row pairs
/// {(i,i),(s+i,i)} and y column pairs {(j,j),(j,2s+1-j)} cover every column
/// once; the `extra` remaining rows each get one codeword in column 1. Row n
/// and column m stay empty.
inline std::vector<Cell> paired_lines_cells(int n, int m) {
  detail::require_sizes(n, m, 3, "paired lines");
  const int residue = (n + m) % 3;
  if (m >= 2 * n || residue == 2) throw InvalidParameter("paired lines: requires m < 2n and n+m != 2 (mod 3)");
  const int a = n - 1, b = m - 1, extra = residue == 0 ? 1 : 2;
  const int x = (2 * a - b + extra) / 3, y = (2 * b - a - 2 * extra) / 3, s = x + y;
  std::vector<Cell> out;
  for (int i = 1; i <= s; ++i) out.push_back({i, i});
  for (int i = 1; i <= x; ++i) out.push_back({s + i, i});
  for (int j = x + 1; j <= s; ++j) out.push_back({j, 2 * s + 1 - j});
  for (int r = s + y + 1; r <= b; ++r) out.push_back({1, r});
  return out;
}

/// Fixture names: k3x4, k3x5, k4x4, k2_small (m = 2 or 3), k2_large (m >= 5).
/// Codes are optimal LD codes of K_n □ K_m that are also LD in K_n × K_m.
struct Fixture {
  int n, m;
  std::vector<Cell> cells;
};

inline Fixture cartesian_fixture_cells(std::string_view name, int m = 0) {
  if (name == "k3x4") return {3, 4, {{1, 1}, {1, 3}, {2, 2}, {2, 4}}};
  if (name == "k3x5") return {3, 5, {{1, 1}, {1, 3}, {2, 2}, {2, 4}, {3, 5}}};
  if (name == "k4x4") return {4, 4, {{1, 1}, {1, 3}, {2, 2}, {2, 4}, {3, 1}}};
  if (name == "k2_small") {
    if (m != 2 && m != 3) throw InvalidParameter("k2_small: m must be 2 or 3");
    return {2, m, column_cells(1, m)};
  }
  if (name == "k2_large") {
    if (m < 5) throw InvalidParameter("k2_large: m must be at least 5");
    std::vector<Cell> cells = {{2, 1}, {2, 2}};
    for (int j = 4; j <= m; ++j) cells.push_back({1, j});
    return {2, m, cells};
  }
  throw InvalidParameter("unknown fixture '" + std::string(name) + "'");
}

/// The fixture as an LD code of K_n □ K_m.
inline Construction construct_cartesian_fixture(std::string_view name, int m = 0) {
  Fixture f = cartesian_fixture_cells(name, m);
  Graph g = cartesian_product(complete_graph(f.n), complete_graph(f.m));
  Code c = detail::cells_to_code(g, f.cells);
  return {std::move(g), std::move(c), CodeClass::LD, "cartesian_fixtures"};
}

/// Optimal LD code of K_n □ K_m for 2n <= m: one codeword in each of rows
/// 1..m-1, cycling through the columns. Row m is empty.
inline std::vector<Cell> cyclic_rows_cells(int n, int m) {
  std::vector<Cell> out;
  for (int j = 1; j <= m - 1; ++j) out.push_back({(j - 1) % n + 1, j});
  return out;
}

namespace detail {

inline Construction finish_direct(int n, int m, const std::vector<Cell>& cells, CodeClass cls, std::string family) {
  Graph g = direct_product(complete_graph(n), complete_graph(m));
  Code c = cells_to_code(g, cells);
  if (!verify(g, c, cls).ok)
    throw Unsupported(family + ": code for (" + std::to_string(n) + "," + std::to_string(m) + ") does not verify");
  return {std::move(g), std::move(c), cls, std::move(family)};
}

/// Moves a Cartesian LD code to the direct product after checking the
/// transfer condition.
inline Construction transfer_ld(int n, int m, const std::vector<Cell>& cells, std::string family) {
  Graph cart = cartesian_product(complete_graph(n), complete_graph(m));
  Code c = cells_to_code(cart, cells);
  if (!verify(cart, c, CodeClass::LD).ok || !transfers_to_direct(cart, c))
    throw Unsupported(family + ": Cartesian code for (" + std::to_string(n) + "," + std::to_string(m) +
                      ") does not transfer to the direct product");
  return finish_direct(n, m, cells, CodeClass::LD, std::move(family));
}

}  // namespace detail

/// Optimal LD code of K_n × K_m, 2 <= n <= m.
inline Construction construct_direct_ld(int n, int m) {
  detail::require_sizes(n, m, 2, "construct_direct_ld");
  if (n == 2 && m <= 4) return detail::finish_direct(n, m, column_cells(1, m), CodeClass::LD, "direct_ld_general");
  if (n == 2) return detail::transfer_ld(n, m, cartesian_fixture_cells("k2_large", m).cells, "lemma5_fixtures");
  if (n == 3 && m == 3)
    return detail::finish_direct(n, m, {{1, 1}, {1, 2}, {2, 1}}, CodeClass::LD, "lemma5_fixtures");
  if (n == 3 && m == 4) return detail::transfer_ld(n, m, cartesian_fixture_cells("k3x4").cells, "lemma5_fixtures");
  if (n == 4 && m == 4) return detail::transfer_ld(n, m, cartesian_fixture_cells("k4x4").cells, "lemma5_fixtures");
  if (2 * n <= m) return detail::transfer_ld(n, m, cyclic_rows_cells(n, m), "direct_ld_general");
  if ((n + m) % 3 == 2) return detail::finish_direct(n, m, a123_cells(n, m).all(), CodeClass::LD, "direct_ld_A123");
  return detail::finish_direct(n, m, paired_lines_cells(n, m), CodeClass::LD, "direct_ld_general");
}

/// Optimal SLD code of K_n × K_m: the cross {(i,j) : i = 1 or j = 1} for
/// n >= 3, column P_1 for n = 2 < m, every vertex for n = m = 2.
inline Construction construct_direct_sld(int n, int m) {
  detail::require_sizes(n, m, 2, "construct_direct_sld");
  std::vector<Cell> cells;
  if (n == 2 && m == 2) {
    cells = {{1, 1}, {1, 2}, {2, 1}, {2, 2}};
  } else if (n == 2) {
    cells = column_cells(1, m);
  } else {
    for (int j = 1; j <= m; ++j) cells.push_back({1, j});
    for (int i = 2; i <= n; ++i) cells.push_back({i, 1});
  }
  return detail::finish_direct(n, m, cells, CodeClass::SLD, "direct_sld_cross");
}

inline const std::vector<std::string>& construction_families() {
  static const std::vector<std::string> f = {"direct_ld_general", "direct_ld_A123", "direct_sld_cross",
                                             "lemma5_fixtures", "cartesian_fixtures"};
  return f;
}

/// Fixture name by size: (3,4), (3,5), (4,4), (2,2..3), (2,>=5).
inline std::string fixture_name_for(int n, int m) {
  if (n == 3 && m == 4) return "k3x4";
  if (n == 3 && m == 5) return "k3x5";
  if (n == 4 && m == 4) return "k4x4";
  if (n == 2 && (m == 2 || m == 3)) return "k2_small";
  if (n == 2 && m >= 5) return "k2_large";
  throw InvalidParameter("no fixture for (" + std::to_string(n) + "," + std::to_string(m) + ")");
}

/// Construction by family name.
///   lemma5_fixtures     fixture codes on K_n × K_m, including (3,3)
///   cartesian_fixtures  the same fixtures on K_n □ K_m
inline Construction construct(std::string_view family, int n, int m) {
  if (family == "direct_ld_general") return construct_direct_ld(n, m);
  if (family == "direct_ld_A123") {
    if (n == 4 && m == 4) throw InvalidParameter("direct_ld_A123: (4,4) is covered by lemma5_fixtures");
    const auto cells = a123_cells(n, m).all();
    return detail::finish_direct(n, m, cells, CodeClass::LD, "direct_ld_A123");
  }
  if (family == "direct_sld_cross") return construct_direct_sld(n, m);
  if (family == "lemma5_fixtures") {
    if (n == 3 && m == 3)
      return detail::finish_direct(n, m, {{1, 1}, {1, 2}, {2, 1}}, CodeClass::LD, "lemma5_fixtures");
    return detail::transfer_ld(n, m, cartesian_fixture_cells(fixture_name_for(n, m), m).cells, "lemma5_fixtures");
  }
  if (family == "cartesian_fixtures") return construct_cartesian_fixture(fixture_name_for(n, m), m);
  throw InvalidParameter("unknown construction family '" + std::string(family) + "'");
}

}  // namespace domcode
