// Standalone acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "domcode/domcode.hpp"
#include "support/generators.hpp"

using namespace domcode;

namespace {

struct Check {
  std::ostringstream log;
  int failures = 0;
  long checks = 0;

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (cond) return;
    if (++failures <= 5) log << "    " << what << "\n";
  }
};

int run(int id, const char* title, const std::function<void(Check&)>& body) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.failures++;
    c.log << "    exception: " << e.what() << "\n";
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s criterion %d: %s [%ld checks, %.1f s]\n", c.failures ? "FAIL" : "PASS", id, title, c.checks, s);
  if (c.failures) std::printf("%s", c.log.str().c_str());
  std::fflush(stdout);
  return c.failures ? 1 : 0;
}

std::string at(int n, int m) { return "(" + std::to_string(n) + "," + std::to_string(m) + ")"; }

void formulas_vs_solver(Check& c) {
  const GammaFamily families[] = {GammaFamily::CartDomRook, GammaFamily::CartLD,   GammaFamily::CartDLD,
                                  GammaFamily::CartSLD,     GammaFamily::DirectLD, GammaFamily::DirectDLD,
                                  GammaFamily::DirectSLD};
  for (auto f : families)
    for (int n = 2; n <= 5; ++n)
      for (int m = n; m <= 5; ++m) {
        const Graph g = is_direct(f) ? direct_product(complete_graph(n), complete_graph(m))
                                     : cartesian_product(complete_graph(n), complete_graph(m));
        const SolveResult r = solve(g, family_class(f));
        const int want = gamma_closed_form({f, n, m, 0});
        const std::string where = std::string(to_string(f)) + at(n, m);
        c.expect(r.status == SolveStatus::Optimal, where + ": solver status " + std::string(to_string(r.status)));
        c.expect(r.gamma == want, where + ": solver " + std::to_string(r.gamma) + " vs formula " + std::to_string(want));
        c.expect(r.witness && verify(g, *r.witness, family_class(f)).ok, where + ": witness does not verify");
      }
}

// Every 8-subset of the 27 vertices, checked against the raw definition.
bool no_dld_code_of_size_eight(const Graph& g) {
  const int n = static_cast<int>(g.size());
  std::uint32_t s = (1u << 8) - 1;
  while (s < (1u << n)) {
    if (verify(g, Code(g, VertexSet(n, s)), CodeClass::DLD).ok) return false;
    const std::uint32_t low = s & -s, ripple = s + low;
    s = (((ripple ^ s) >> 2) / low) | ripple;
  }
  return true;
}

void cube(Check& c) {
  const Graph q2 = hamming_cube(2);
  const SolveResult r2 = solve(q2, CodeClass::DLD);
  c.expect(r2.status == SolveStatus::Optimal && r2.gamma == 4, "K_2^3: expected 4, got " + std::to_string(r2.gamma));
  c.expect(gamma_cube_dld(2) == 4, "formula at q=2");

  const Graph q3 = hamming_cube(3);
  SolverConfig cfg;
  cfg.time_limit = 1800;
  const SolveResult r3 = solve(q3, CodeClass::DLD, cfg);
  c.expect(r3.status == SolveStatus::Optimal && r3.gamma == 9, "K_3^3: expected 9, got " + std::to_string(r3.gamma));
  c.expect(r3.witness && verify(q3, *r3.witness, CodeClass::DLD).ok, "K_3^3: witness does not verify");
  c.expect(solve_decision(q3, CodeClass::DLD, 8, cfg).status == Feasibility::Infeasible, "K_3^3: k=8 not refuted");
  c.expect(solve_decision(q3, CodeClass::DLD, 9, cfg).status == Feasibility::Feasible, "K_3^3: k=9 not feasible");
  c.expect(no_dld_code_of_size_eight(q3), "K_3^3: exhaustive search found an 8-codeword DLD code");
  c.expect(gamma_cube_dld(3) == 9, "formula at q=3");
}

void constructions(Check& c) {
  const Construction big = construct_direct_ld(10, 10);
  c.expect(big.code.size() == 12, "direct_ld(10,10) has " + std::to_string(big.code.size()) + " codewords");
  c.expect(verify(big.graph, big.code, CodeClass::LD).ok, "direct_ld(10,10) fails LD");

  for (int n = 3; n <= 12; ++n)
    for (int m = n; m <= 12; ++m) {
      const Construction s = construct_direct_sld(n, m);
      c.expect(static_cast<int>(s.code.size()) == n + m - 1, "direct_sld" + at(n, m) + " size");
      c.expect(verify(s.graph, s.code, CodeClass::SLD).ok, "direct_sld" + at(n, m) + " fails SLD");
    }

  std::vector<std::pair<int, int>> sizes = {{2, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 4}};
  for (int m = 5; m <= 12; ++m) sizes.push_back({2, m});
  for (auto [n, m] : sizes) {
    const Construction cart = construct("cartesian_fixtures", n, m);
    const Construction direct = construct("lemma5_fixtures", n, m);
    c.expect(verify(cart.graph, cart.code, CodeClass::LD).ok, "Cartesian fixture" + at(n, m) + " fails LD");
    c.expect(verify(direct.graph, direct.code, CodeClass::LD).ok, "direct fixture" + at(n, m) + " fails LD");
  }
  const Construction k33 = construct("lemma5_fixtures", 3, 3);
  c.expect(k33.code.size() == 3 && verify(k33.graph, k33.code, CodeClass::LD).ok, "direct fixture (3,3)");
}

void grids(Check& c) {
  const GridCode tri = builtin_code("tri_sld");
  const GridCode king_dld = builtin_code("king_dld");
  const GridCode king_sld = builtin_code("king_sld");
  c.expect(verify_window(tri, CodeClass::SLD, 20).ok, "tri_sld fails SLD at n=20");
  c.expect(verify_window(king_dld, CodeClass::DLD, 20).ok, "king_dld fails DLD at n=20");
  c.expect(verify_window(king_sld, CodeClass::SLD, 20).ok, "king_sld fails SLD at n=20");

  const GridVerdict bad = verify_window(king_dld, CodeClass::SLD, 20);
  c.expect(!bad.ok, "king_dld passes SLD at n=20");
  c.expect(bad.kind == GridWitnessKind::IntersectionTooBig, "king_dld SLD witness is not an intersection failure");
  c.expect(bad.intersection.size() == 2, "king_dld SLD intersection has size " + std::to_string(bad.intersection.size()));
  c.expect(bad.u && *bad.u == (Point{2, 0}), "king_dld SLD witness is not at (2,0)");

  for (long n : {10L, 20L, 30L}) {
    const DensityReport d = density(king_sld, n);
    // |count/total - 1/3| <= 1/(2n+1), in integers
    const long lhs = std::labs(3 * d.count - d.total) * (2 * n + 1);
    c.expect(lhs <= 3 * d.total, "king_sld density off at n=" + std::to_string(n));
  }
  for (long n = 1; n <= 30; ++n) {
    const long side = 2 * (n / 2) + 1;
    c.expect(density(tri, n).count == side * side, "tri_sld count at n=" + std::to_string(n));
  }
}

void properties(Check& c) {
  gen::Rng rng(2024);

  for (int t = 0; t < 200; ++t) {
    const Graph g = gen::random_connected_between(rng, 4, 9);
    const int ld = solve(g, CodeClass::LD).gamma, dld = solve(g, CodeClass::DLD).gamma;
    const int sld = solve(g, CodeClass::SLD).gamma;
    c.expect(ld <= dld && dld <= sld, "(a) chain violated on " + std::to_string(g.size()) + " vertices");
  }

  for (int t = 0; t < 500; ++t) {
    const Graph g = gen::random_connected_between(rng, 2, 10);
    const Code small = gen::random_code(rng, g, 0.6);
    const Code big = gen::random_superset(rng, g, small);
    for (auto cls : {CodeClass::DOM, CodeClass::LD, CodeClass::SLD, CodeClass::DLD})
      if (verify(g, small, cls).ok)
        c.expect(verify(g, big, cls).ok, "(b) superset lost " + std::string(to_string(cls)));
  }

  int graphs = 0;
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : gen::connected_catalog(n)) {
      ++graphs;
      for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        const Code code(g, VertexSet(n, mask));
        for (auto cls : {CodeClass::SLD, CodeClass::DLD})
          c.expect(verify(g, code, cls).ok == verify_by_characterization(g, code, cls).ok,
                   "(c) characterization mismatch, n=" + std::to_string(n) + " mask=" + std::to_string(mask));
      }
    }
  c.expect(graphs == 1 + 2 + 6 + 21 + 112, "(c) catalog has " + std::to_string(graphs) + " graphs");

  int complements = 0;
  while (complements < 100) {
    const Graph g = gen::random_connected_between(rng, 6, 9);
    const Graph h = complement(g);
    const std::size_t full = g.size() * (g.size() - 1) / 2;
    if (h.edge_count() == 0 || h.edge_count() == full) continue;
    ++complements;
    const int ld_g = solve(g, CodeClass::LD).gamma, ld_h = solve(h, CodeClass::LD).gamma;
    c.expect(std::abs(ld_g - ld_h) <= 1, "(d) LD differs by more than 1");
    c.expect(solve(g, CodeClass::DLD).gamma == solve(h, CodeClass::DLD).gamma, "(d) DLD differs");
  }

  const Graph k3 = hamming_cube(3);
  std::uniform_real_distribution<double> density(0.15, 0.6);
  for (int t = 0; t < 100; ++t) {
    const Code code = gen::random_code(rng, k3, density(rng));
    for (std::size_t v = 0; v < k3.size(); ++v) {
      const auto is = to_vector(iset(k3, code, v));
      if (is.size() != 2) continue;
      const Label& a = k3.label(is[0]);
      const Label& b = k3.label(is[1]);
      int same = 0;
      for (int k = 0; k < 3; ++k) same += a[k] == b[k];
      if (same == 2) continue;
      int others = 0;
      for (std::size_t w = 0; w < k3.size(); ++w)
        if (w != v && iset(k3, code, w).test(is[0]) && iset(k3, code, w).test(is[1])) ++others;
      c.expect(others == 1, "(e) pair covered by " + std::to_string(others) + " other vertices");
    }
  }
}

void strips(Check& c) {
  c.expect(scan_T_pattern(builtin_code("king_dld"), 15).ok, "king_dld contains an empty T at n=15");
  c.expect(scan_T_pattern(builtin_code("king_sld"), 15).ok, "king_sld contains an empty T at n=15");
  const StripReport r = strip_count(builtin_code("king_dld"), 12);
  c.expect(r.min_count >= 9, "king_dld strip minimum " + std::to_string(r.min_count) + " < 9");
}

}  // namespace

int main() {
  int failed = 0;
  failed += run(1, "closed forms equal exact solver, 2 <= n <= m <= 5", formulas_vs_solver);
  failed += run(2, "DLD of K_2^3 is 4 and of K_3^3 is 9", cube);
  failed += run(3, "constructions verify with the stated sizes", constructions);
  failed += run(4, "grid codes and densities", grids);
  failed += run(5, "property suites (a)-(e)", properties);
  failed += run(6, "T-pattern scan and strip count", strips);
  return failed ? EXIT_FAILURE : EXIT_SUCCESS;
}
