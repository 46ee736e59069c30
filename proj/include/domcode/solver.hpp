#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "domcode/code.hpp"
#include "domcode/graph.hpp"
#include "domcode/verify.hpp"

namespace domcode {

struct SolverConfig {
  double time_limit = 0;       ///< seconds, 0 = unlimited
  std::uint64_t node_limit = 0;  ///< 0 = unlimited
  std::optional<int> lower_bound_hint;
  std::optional<int> upper_bound_hint;
  bool parallel = false;
  unsigned threads = 0;  ///< 0 = hardware concurrency (parallel mode only)
};

enum class SolveStatus { Optimal, Incomplete, Infeasible, InconsistentHint };

inline std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Incomplete: return "incomplete";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::InconsistentHint: return "inconsistent-hint";
  }
  return "?";
}

struct SolveStats {
  std::uint64_t nodes = 0;
  double ms = 0;
};

struct SolveResult {
  CodeClass cls = CodeClass::DOM;
  SolveStatus status = SolveStatus::Optimal;
  int gamma = 0;                ///< exact value when status == Optimal
  std::optional<Code> witness;  ///< best code found (optimal when complete)
  int lower_bound = 0;          ///< every size below this is proven infeasible
  int upper_bound = 0;          ///< size of `witness`, or n+1 if none
  SolveStats stats;
  std::string message;

  bool complete() const { return status == SolveStatus::Optimal || status == SolveStatus::Infeasible; }
};

enum class Feasibility { Feasible, Infeasible, Unknown };

struct DecisionResult {
  Feasibility status = Feasibility::Unknown;
  std::optional<Code> witness;
  SolveStats stats;
};

/// Every class is a hitting-set condition: C is a cls-code iff C meets every
/// returned set. An empty set in the result means no code exists.
///
///   all classes  N[u]                          (u is dominated)
///   ID           N[u] Δ N[v]                   u < v
///   LD           {u,v} ∪ (N[u] Δ N[v])         u < v
///   SLD          {u} ∪ (N[u] \ N[v])           u ≠ v
///   DLD          {u,v} ∪ (N[u] \ N[v])         u ≠ v
///
/// Sets containing another set are dropped; the rest are sorted by size.
inline std::vector<VertexSet> hitting_constraints(const Graph& g, CodeClass cls) {
  const std::size_t n = g.size();
  std::vector<VertexSet> sets;
  for (std::size_t u = 0; u < n; ++u) sets.push_back(g.closed_nbhd(u));
  if (cls != CodeClass::DOM) {
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v) {
        if (u == v) continue;
        const VertexSet& nu = g.closed_nbhd(u);
        const VertexSet& nv = g.closed_nbhd(v);
        switch (cls) {
          case CodeClass::ID:
            if (u < v) sets.push_back(nu ^ nv);
            break;
          case CodeClass::LD:
            if (u < v) {
              VertexSet s = nu ^ nv;
              s.set(u);
              s.set(v);
              sets.push_back(std::move(s));
            }
            break;
          case CodeClass::SLD: {
            VertexSet s = nu - nv;
            s.set(u);
            sets.push_back(std::move(s));
            break;
          }
          case CodeClass::DLD: {
            VertexSet s = nu - nv;
            s.set(u);
            s.set(v);
            sets.push_back(std::move(s));
            break;
          }
          case CodeClass::DOM: break;
        }
      }
  }
  std::stable_sort(sets.begin(), sets.end(), [](const VertexSet& a, const VertexSet& b) { return a.count() < b.count(); });
  std::vector<VertexSet> kept;
  for (auto& s : sets) {
    bool implied = false;
    for (const auto& k : kept)
      if (k.is_subset_of(s)) {
        implied = true;
        break;
      }
    if (!implied) kept.push_back(std::move(s));
  }
  return kept;
}

/// True iff two distinct vertices share a closed neighbourhood (no ID code exists).
inline bool has_closed_twins(const Graph& g) {
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = u + 1; v < g.size(); ++v)
      if (g.closed_nbhd(u) == g.closed_nbhd(v)) return true;
  return false;
}

namespace detail {

template <std::size_t W>
struct Bits {
  std::array<std::uint64_t, W> w{};

  void set(std::size_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
  bool any() const {
    for (auto x : w)
      if (x) return true;
    return false;
  }
  bool intersects(const Bits& o) const {
    for (std::size_t i = 0; i < W; ++i)
      if (w[i] & o.w[i]) return true;
    return false;
  }
  int count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }
  Bits minus(const Bits& o) const {
    Bits r;
    for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] & ~o.w[i];
    return r;
  }
  Bits& operator|=(const Bits& o) {
    for (std::size_t i = 0; i < W; ++i) w[i] |= o.w[i];
    return *this;
  }
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < W; ++i)
      for (std::uint64_t x = w[i]; x; x &= x - 1) f(i * 64 + static_cast<std::size_t>(std::countr_zero(x)));
  }
};

using Clock = std::chrono::steady_clock;

/// Depth-first search for a hitting set of size <= k.
///
/// At each node the unhit set with the fewest non-excluded elements is
/// branched on; its elements are tried in the static vertex order (closed
/// degree descending, index ascending) and excluded from later siblings.
/// Nodes are cut when a disjoint packing of unhit sets, or the top cover
/// counts, show the remaining budget cannot suffice.
template <std::size_t W>
class HittingSetSearch {
 public:
  HittingSetSearch(const Graph& g, const std::vector<VertexSet>& sets, const SolverConfig& cfg,
                   Clock::time_point deadline)
      : n_(g.size()), cfg_(cfg), deadline_(deadline) {
    for (const auto& s : sets) {
      Bits<W> b;
      for_each_vertex(s, [&](std::size_t v) { b.set(v); });
      sets_.push_back(b);
    }
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return g.degree(a) > g.degree(b); });
  }

  /// Lower bound on any hitting set from the root packing.
  int root_bound() const {
    std::vector<std::uint32_t> all(sets_.size());
    std::iota(all.begin(), all.end(), 0u);
    return packing_bound(all, Bits<W>{});
  }

  /// Greedy hitting set (most unhit sets first, ties by vertex order).
  Bits<W> greedy() const {
    Bits<W> chosen;
    std::vector<char> hit(sets_.size(), 0);
    std::size_t left = sets_.size();
    while (left) {
      std::vector<int> score(n_, 0);
      for (std::size_t i = 0; i < sets_.size(); ++i)
        if (!hit[i]) sets_[i].for_each([&](std::size_t v) { ++score[v]; });
      std::size_t best = order_[0];
      for (auto v : order_)
        if (score[v] > score[best]) best = v;
      chosen.set(best);
      for (std::size_t i = 0; i < sets_.size(); ++i)
        if (!hit[i] && sets_[i].test(best)) {
          hit[i] = 1;
          --left;
        }
    }
    return chosen;
  }

  Feasibility decide(int k, Bits<W>& out) {
    aborted_ = false;
    found_ = false;
    if (k < 0) return Feasibility::Infeasible;
    std::vector<std::uint32_t> all(sets_.size());
    std::iota(all.begin(), all.end(), 0u);
    if (!cfg_.parallel) {
      Bits<W> chosen, excluded;
      dfs(chosen, excluded, k, all, out);
    } else {
      decide_parallel(k, all, out);
    }
    if (found_) return Feasibility::Feasible;
    return aborted_ ? Feasibility::Unknown : Feasibility::Infeasible;
  }

  std::uint64_t nodes() const { return nodes_.load(std::memory_order_relaxed); }

 private:
  bool out_of_budget() {
    const auto count = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (cfg_.node_limit && count > cfg_.node_limit) return true;
    if (cfg_.time_limit > 0 && (count & 255) == 0 && Clock::now() > deadline_) return true;
    return false;
  }

  int packing_bound(const std::vector<std::uint32_t>& unhit, const Bits<W>& excluded) const {
    Bits<W> used;
    int packed = 0;
    for (auto i : unhit) {
      const Bits<W> avail = sets_[i].minus(excluded);
      if (!avail.intersects(used)) {
        used |= avail;
        ++packed;
      }
    }
    return packed;
  }

  /// Fewest vertices whose cover counts can add up to the number of unhit sets.
  int cover_bound(const std::vector<std::uint32_t>& unhit, const Bits<W>& excluded, int budget) const {
    std::vector<int> score(n_, 0);
    for (auto i : unhit) sets_[i].minus(excluded).for_each([&](std::size_t v) { ++score[v]; });
    const int take = std::min<int>(budget + 1, static_cast<int>(n_));
    std::partial_sort(score.begin(), score.begin() + take, score.end(), std::greater<>());
    long covered = 0;
    for (int t = 0; t < take; ++t) {
      covered += score[t];
      if (covered >= static_cast<long>(unhit.size())) return t + 1;
    }
    return take + 1;
  }

  // Returns the branching set index, or -1 if the node is infeasible.
  long select(const std::vector<std::uint32_t>& unhit, const Bits<W>& excluded) const {
    long best = -1;
    int best_count = 1 << 30;
    for (auto i : unhit) {
      const int c = sets_[i].minus(excluded).count();
      if (c == 0) return -1;
      if (c < best_count) {
        best_count = c;
        best = i;
      }
    }
    return best;
  }

  void dfs(Bits<W> chosen, Bits<W> excluded, int budget, const std::vector<std::uint32_t>& active, Bits<W>& out) {
    if (found_ || aborted_ || (shared_stop_ && shared_stop_->load(std::memory_order_relaxed))) return;
    if (out_of_budget()) {
      aborted_ = true;
      return;
    }
    std::vector<std::uint32_t> unhit;
    unhit.reserve(active.size());
    for (auto i : active)
      if (!sets_[i].intersects(chosen)) unhit.push_back(i);
    if (unhit.empty()) {
      found_ = true;
      out = chosen;
      return;
    }
    if (budget == 0) return;
    const long pick = select(unhit, excluded);
    if (pick < 0) return;
    if (packing_bound(unhit, excluded) > budget) return;
    if (cover_bound(unhit, excluded, budget) > budget) return;
    const Bits<W> avail = sets_[pick].minus(excluded);
    for (auto v : order_) {
      if (!avail.test(v)) continue;
      Bits<W> next = chosen;
      next.set(v);
      dfs(next, excluded, budget - 1, unhit, out);
      if (found_ || aborted_) return;
      excluded.set(v);
    }
  }

  void decide_parallel(int k, const std::vector<std::uint32_t>& all, Bits<W>& out) {
    Bits<W> none;
    if (all.empty()) {
      found_ = true;
      out = none;
      return;
    }
    if (k == 0) return;
    const long pick = select(all, none);
    if (pick < 0) return;
    std::vector<std::size_t> branch;
    for (auto v : order_)
      if (sets_[pick].test(v)) branch.push_back(v);

    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::optional<std::pair<std::size_t, Bits<W>>> best;
    std::atomic<bool> any_aborted{false};
    stop_ = false;
    auto worker = [&] {
      HittingSetSearch local = *this;
      local.shared_stop_ = &stop_;
      for (;;) {
        const std::size_t b = next.fetch_add(1);
        if (b >= branch.size() || stop_.load()) return;
        Bits<W> chosen, excluded, found;
        chosen.set(branch[b]);
        for (std::size_t j = 0; j < b; ++j) excluded.set(branch[j]);
        local.found_ = false;
        local.aborted_ = false;
        local.dfs(chosen, excluded, k - 1, all, found);
        nodes_.fetch_add(local.nodes_.exchange(0));
        if (local.aborted_) any_aborted = true;
        if (local.found_) {
          std::lock_guard lock(mu);
          if (!best || b < best->first) best = std::make_pair(b, found);
          stop_ = true;
        }
      }
    };
    unsigned t = cfg_.threads ? cfg_.threads : std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < t; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (best) {
      found_ = true;
      out = best->second;
    } else if (any_aborted) {
      aborted_ = true;
    }
  }

 public:
  HittingSetSearch(const HittingSetSearch& o)
      : n_(o.n_), cfg_(o.cfg_), deadline_(o.deadline_), sets_(o.sets_), order_(o.order_) {}

 private:
  std::size_t n_;
  SolverConfig cfg_;
  Clock::time_point deadline_;
  std::vector<Bits<W>> sets_;
  std::vector<std::size_t> order_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> stop_{false};
  std::atomic<bool>* shared_stop_ = nullptr;
  bool aborted_ = false;
  bool found_ = false;
};

template <std::size_t W>
Code to_code(const Graph& g, const Bits<W>& b) {
  VertexSet s(g.size());
  b.for_each([&](std::size_t v) { s.set(v); });
  return Code(g, std::move(s));
}

inline Clock::time_point deadline_for(const SolverConfig& cfg, Clock::time_point start) {
  if (cfg.time_limit <= 0) return Clock::time_point::max();
  return start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(cfg.time_limit));
}

inline double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

inline void check_witness(const Graph& g, const Code& c, CodeClass cls) {
  if (!verify(g, c, cls).ok) throw std::logic_error("solver produced a code that fails verification");
}

template <std::size_t W>
SolveResult solve_width(const Graph& g, CodeClass cls, const SolverConfig& cfg) {
  const auto start = Clock::now();
  const int n = static_cast<int>(g.size());
  SolveResult r;
  r.cls = cls;
  r.upper_bound = n + 1;
  auto finish = [&](SolveStatus s) {
    r.status = s;
    r.stats.ms = ms_since(start);
    return r;
  };

  const auto sets = hitting_constraints(g, cls);
  for (const auto& s : sets)
    if (s.none()) {
      r.message = "closed twins: no " + std::string(to_string(cls)) + " code exists";
      return finish(SolveStatus::Infeasible);
    }

  HittingSetSearch<W> search(g, sets, cfg, deadline_for(cfg, start));
  const int natural_lo = std::max(1, search.root_bound());
  {
    Code greedy = to_code(g, search.greedy());
    check_witness(g, greedy, cls);
    r.upper_bound = static_cast<int>(greedy.size());
    r.witness = std::move(greedy);
  }
  r.lower_bound = natural_lo;

  int k = natural_lo;
  if (cfg.lower_bound_hint && *cfg.lower_bound_hint > k) {
    const int hint = *cfg.lower_bound_hint;
    if (hint > r.upper_bound) {
      r.message = "lower bound hint " + std::to_string(hint) + " exceeds a known code of size " +
                  std::to_string(r.upper_bound);
      return finish(SolveStatus::InconsistentHint);
    }
    // the hint must be certified: size hint-1 has to be infeasible
    Bits<W> out;
    const auto below = search.decide(hint - 1, out);
    r.stats.nodes = search.nodes();
    if (below == Feasibility::Unknown) return finish(SolveStatus::Incomplete);
    if (below == Feasibility::Feasible) {
      r.witness = to_code(g, out);
      r.upper_bound = static_cast<int>(r.witness->size());
      r.message = "lower bound hint " + std::to_string(hint) + " is above the optimum";
      return finish(SolveStatus::InconsistentHint);
    }
    k = hint;
    r.lower_bound = hint;
  }
  const int k_max = cfg.upper_bound_hint ? std::min(*cfg.upper_bound_hint, n) : n;

  for (; k <= k_max; ++k) {
    if (k >= r.upper_bound) {
      // greedy code already has this size; it is optimal
      r.gamma = r.upper_bound;
      r.lower_bound = r.upper_bound;
      r.stats.nodes = search.nodes();
      return finish(SolveStatus::Optimal);
    }
    Bits<W> out;
    const auto f = search.decide(k, out);
    r.stats.nodes = search.nodes();
    if (f == Feasibility::Unknown) return finish(SolveStatus::Incomplete);
    if (f == Feasibility::Feasible) {
      Code c = to_code(g, out);
      check_witness(g, c, cls);
      r.gamma = static_cast<int>(c.size());
      r.lower_bound = r.gamma;
      r.upper_bound = r.gamma;
      r.witness = std::move(c);
      return finish(SolveStatus::Optimal);
    }
    r.lower_bound = k + 1;
  }
  r.message = "no code of size <= " + std::to_string(k_max) + " (upper bound hint too small)";
  return finish(SolveStatus::InconsistentHint);
}

template <std::size_t W>
DecisionResult decide_width(const Graph& g, CodeClass cls, int k, const SolverConfig& cfg) {
  const auto start = Clock::now();
  DecisionResult r;
  const auto sets = hitting_constraints(g, cls);
  for (const auto& s : sets)
    if (s.none()) {
      r.status = Feasibility::Infeasible;
      r.stats.ms = ms_since(start);
      return r;
    }
  HittingSetSearch<W> search(g, sets, cfg, deadline_for(cfg, start));
  Bits<W> out;
  r.status = search.decide(k, out);
  if (r.status == Feasibility::Feasible) {
    Code c = to_code(g, out);
    check_witness(g, c, cls);
    r.witness = std::move(c);
  }
  r.stats.nodes = search.nodes();
  r.stats.ms = ms_since(start);
  return r;
}

template <template <std::size_t> class Fn, typename... Args>
auto dispatch_width(std::size_t n, Args&&... args) {
  if (n <= 64) return Fn<1>::run(std::forward<Args>(args)...);
  if (n <= 128) return Fn<2>::run(std::forward<Args>(args)...);
  if (n <= 256) return Fn<4>::run(std::forward<Args>(args)...);
  if (n <= 1024) return Fn<16>::run(std::forward<Args>(args)...);
  return Fn<64>::run(std::forward<Args>(args)...);
}

template <std::size_t W>
struct SolveFn {
  static SolveResult run(const Graph& g, CodeClass cls, const SolverConfig& cfg) { return solve_width<W>(g, cls, cfg); }
};

template <std::size_t W>
struct DecideFn {
  static DecisionResult run(const Graph& g, CodeClass cls, int k, const SolverConfig& cfg) {
    return decide_width<W>(g, cls, k, cfg);
  }
};

}  // namespace detail

/// Exact γ^cls(G) with an optimal witness code.
inline SolveResult solve(const Graph& g, CodeClass cls, const SolverConfig& cfg = {}) {
  if (g.size() == 0) throw InvalidParameter("cannot solve on the empty graph");
  return detail::dispatch_width<detail::SolveFn>(g.size(), g, cls, cfg);
}

/// Is there a cls-code with at most k codewords?
inline DecisionResult solve_decision(const Graph& g, CodeClass cls, int k, const SolverConfig& cfg = {}) {
  if (k < 0 || static_cast<std::size_t>(k) > g.size())
    throw InvalidParameter("decision size k must lie in [0, n]");
  return detail::dispatch_width<detail::DecideFn>(g.size(), g, cls, k, cfg);
}

inline constexpr std::size_t kBruteForceCap = 20;

/// Enumerates vertex subsets by increasing size and returns the first one
/// verify() accepts. Independent of the hitting-set search.
inline SolveResult brute_force_oracle(const Graph& g, CodeClass cls, std::size_t cap = kBruteForceCap) {
  if (g.size() > cap)
    throw InvalidParameter("brute force refuses graphs above " + std::to_string(cap) + " vertices");
  const auto start = detail::Clock::now();
  const std::size_t n = g.size();
  SolveResult r;
  r.cls = cls;
  std::vector<std::size_t> pick;
  std::optional<Code> hit;
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t from, std::size_t left) -> bool {
    if (left == 0) {
      ++r.stats.nodes;
      Code c = Code::from_vertices(g, pick);
      if (verify(g, c, cls).ok) {
        hit = std::move(c);
        return true;
      }
      return false;
    }
    for (std::size_t v = from; v + left <= n; ++v) {
      pick.push_back(v);
      if (rec(v + 1, left - 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  for (std::size_t k = 1; k <= n; ++k) {
    if (rec(0, k)) {
      r.status = SolveStatus::Optimal;
      r.gamma = static_cast<int>(k);
      r.lower_bound = r.upper_bound = r.gamma;
      r.witness = std::move(hit);
      r.stats.ms = detail::ms_since(start);
      return r;
    }
  }
  r.status = SolveStatus::Infeasible;
  r.lower_bound = r.upper_bound = static_cast<int>(n) + 1;
  r.stats.ms = detail::ms_since(start);
  return r;
}

}  // namespace domcode
