#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "domcode/formulas.hpp"
#include "domcode/graph.hpp"
#include "domcode/grid.hpp"
#include "domcode/solver.hpp"

namespace domcode {

enum class CellState { Pass, Fail, Unknown };

inline std::string_view to_string(CellState s) {
  switch (s) {
    case CellState::Pass: return "pass";
    case CellState::Fail: return "fail";
    case CellState::Unknown: return "unknown";
  }
  return "?";
}

struct ReproCell {
  std::string label;     ///< e.g. "direct_ld(3,4)" or "king_sld SLD n=20"
  long expected = 0;
  long got = 0;
  CellState state = CellState::Unknown;
  std::string note;
};

struct ReproReport {
  std::string target;
  std::vector<ReproCell> cells;

  bool all_pass() const {
    for (const auto& c : cells)
      if (c.state != CellState::Pass) return false;
    return !cells.empty();
  }
  std::size_t count(CellState s) const {
    std::size_t k = 0;
    for (const auto& c : cells) k += c.state == s;
    return k;
  }
};

struct ReproOptions {
  int max_size = 5;   ///< n, m range for product targets
  int max_q = 3;      ///< cube side range for cube_dld
  long grid_n = 20;   ///< window radius for the grids target
  SolverConfig solver;
};

inline const std::vector<std::string>& reproduce_targets() {
  static const std::vector<std::string> t = {"rook_dom", "cart_ld",    "direct_ld", "dld",
                                             "cart_sld", "direct_sld", "cube_dld",  "grids"};
  return t;
}

namespace detail {

inline ReproCell solver_cell(const Graph& g, CodeClass cls, int expected, std::string label, const SolverConfig& cfg) {
  ReproCell cell;
  cell.label = std::move(label);
  cell.expected = expected;
  const SolveResult r = solve(g, cls, cfg);
  if (r.status != SolveStatus::Optimal) {
    cell.state = CellState::Unknown;
    cell.note = std::string(to_string(r.status));
    cell.got = r.lower_bound;
    return cell;
  }
  cell.got = r.gamma;
  cell.state = r.gamma == expected ? CellState::Pass : CellState::Fail;
  return cell;
}

inline void product_cells(ReproReport& rep, GammaFamily f, const ReproOptions& opt) {
  for (int n = 2; n <= opt.max_size; ++n)
    for (int m = n; m <= opt.max_size; ++m) {
      const Graph a = complete_graph(n), b = complete_graph(m);
      const Graph g = is_direct(f) ? direct_product(a, b) : cartesian_product(a, b);
      rep.cells.push_back(solver_cell(g, family_class(f), gamma_closed_form({f, n, m}),
                                      std::string(to_string(f)) + "(" + std::to_string(n) + "," + std::to_string(m) + ")",
                                      opt.solver));
    }
}

inline ReproCell grid_cell(const GridCode& code, CodeClass cls, long n, bool expect_ok) {
  ReproCell c;
  c.label = code.name + " " + std::string(to_string(cls)) + " n=" + std::to_string(n);
  c.expected = expect_ok;
  const auto v = verify_window(code, cls, n);
  c.got = v.ok;
  c.state = v.ok == expect_ok ? CellState::Pass : CellState::Fail;
  c.note = v.detail;
  return c;
}

}  // namespace detail

/// Solver-versus-formula matrix (or window checks) for one result.
inline ReproReport reproduce(std::string_view target, const ReproOptions& opt = {}) {
  ReproReport rep;
  rep.target = std::string(target);
  if (target == "rook_dom") {
    detail::product_cells(rep, GammaFamily::CartDomRook, opt);
  } else if (target == "cart_ld") {
    detail::product_cells(rep, GammaFamily::CartLD, opt);
  } else if (target == "direct_ld") {
    detail::product_cells(rep, GammaFamily::DirectLD, opt);
  } else if (target == "dld") {
    detail::product_cells(rep, GammaFamily::CartDLD, opt);
    detail::product_cells(rep, GammaFamily::DirectDLD, opt);
  } else if (target == "cart_sld") {
    detail::product_cells(rep, GammaFamily::CartSLD, opt);
  } else if (target == "direct_sld") {
    detail::product_cells(rep, GammaFamily::DirectSLD, opt);
  } else if (target == "cube_dld") {
    for (int q = 2; q <= opt.max_q; ++q)
      rep.cells.push_back(detail::solver_cell(hamming_cube(q), CodeClass::DLD, gamma_cube_dld(q),
                                              "cube_dld(" + std::to_string(q) + ")", opt.solver));
  } else if (target == "grids") {
    rep.cells.push_back(detail::grid_cell(builtin_code("tri_sld"), CodeClass::SLD, opt.grid_n, true));
    rep.cells.push_back(detail::grid_cell(builtin_code("king_dld"), CodeClass::DLD, opt.grid_n, true));
    rep.cells.push_back(detail::grid_cell(builtin_code("king_dld"), CodeClass::SLD, opt.grid_n, false));
    rep.cells.push_back(detail::grid_cell(builtin_code("king_sld"), CodeClass::SLD, opt.grid_n, true));
  } else {
    throw InvalidParameter("unknown reproduce target '" + std::string(target) + "'");
  }
  return rep;
}

}  // namespace domcode
