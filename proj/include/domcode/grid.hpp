#pragma once

#include <array>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "domcode/code.hpp"
#include "domcode/error.hpp"
#include "domcode/graph.hpp"
#include "domcode/verify.hpp"

namespace domcode {

enum class Lattice { King, Triangular };

inline std::string_view to_string(Lattice l) { return l == Lattice::King ? "king" : "triangular"; }

struct Point {
  long x = 0;
  long y = 0;
  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
  Point operator+(Point o) const { return {x + o.x, y + o.y}; }
  Point operator-(Point o) const { return {x - o.x, y - o.y}; }
};

inline std::string point_string(Point p) { return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")"; }

/// Closed-neighbourhood offsets, (0,0) first.
inline std::span<const Point> closed_offsets(Lattice l) {
  static constexpr std::array<Point, 9> king = {
      Point{0, 0}, {1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
  static constexpr std::array<Point, 7> tri = {Point{0, 0}, {1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
  if (l == Lattice::King) return king;
  return tri;
}

inline bool lattice_adjacent_or_equal(Lattice l, Point a, Point b) {
  const Point d = a - b;
  for (auto o : closed_offsets(l))
    if (o == d) return true;
  return false;
}

/// Code on an infinite lattice, given as a pure membership predicate.
struct GridCode {
  Lattice lattice = Lattice::King;
  std::function<bool(long, long)> predicate;
  std::string name;

  bool contains(Point p) const { return predicate(p.x, p.y); }
};

inline long floor_mod(long a, long m) {
  const long r = a % m;
  return r < 0 ? r + m : r;
}

/// tri_sld: v(i,j) with i, j even. king_dld: |x|+|y| ≡ 0 (mod 3).
/// king_sld: x - y ≡ 0 (mod 3).
inline GridCode builtin_code(std::string_view name) {
  if (name == "tri_sld")
    return {Lattice::Triangular, [](long i, long j) { return floor_mod(i, 2) == 0 && floor_mod(j, 2) == 0; },
            "tri_sld"};
  if (name == "king_dld")
    return {Lattice::King, [](long x, long y) { return (std::labs(x) + std::labs(y)) % 3 == 0; }, "king_dld"};
  if (name == "king_sld") return {Lattice::King, [](long x, long y) { return floor_mod(x - y, 3) == 0; }, "king_sld"};
  throw InvalidParameter("unknown grid code '" + std::string(name) + "' (expected tri_sld, king_dld or king_sld)");
}

/// Points with max(|x|,|y|) <= n: the origin, then each ring r starting at
/// (r,0) and running counterclockwise.
inline std::vector<Point> spiral_window(long n) {
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>((2 * n + 1) * (2 * n + 1)));
  out.push_back({0, 0});
  for (long r = 1; r <= n; ++r) {
    for (long y = 0; y <= r; ++y) out.push_back({r, y});
    for (long x = r - 1; x >= -r; --x) out.push_back({x, r});
    for (long y = r - 1; y >= -r; --y) out.push_back({-r, y});
    for (long x = -r + 1; x <= r; ++x) out.push_back({x, -r});
    for (long y = -r + 1; y < 0; ++y) out.push_back({r, y});
  }
  return out;
}

enum class GridWitnessKind { EmptyIset, IntersectionTooBig, EmptyPattern };

inline std::string_view to_string(GridWitnessKind k) {
  switch (k) {
    case GridWitnessKind::EmptyIset: return "empty-iset";
    case GridWitnessKind::IntersectionTooBig: return "intersection-too-big";
    case GridWitnessKind::EmptyPattern: return "empty-pattern";
  }
  return "?";
}

struct GridVerdict {
  bool ok = true;
  std::optional<GridWitnessKind> kind;
  std::optional<Point> u;                 ///< offending vertex, or pattern origin
  std::optional<Point> v;                 ///< extra vertex in the intersection
  std::vector<Point> iset;                ///< I(u) for intersection failures
  std::vector<Point> intersection;        ///< ⋂ N[c] over I(u) (minus C for DLD)
  int rotation = 0;                       ///< quarter turns, pattern failures
  std::string detail;

  explicit operator bool() const { return ok; }
};

/// I(u) on the infinite lattice.
inline std::vector<Point> grid_iset(const GridCode& code, Point u) {
  std::vector<Point> out;
  for (auto o : closed_offsets(code.lattice))
    if (code.contains(u + o)) out.push_back(u + o);
  return out;
}

/// ⋂_{c ∈ I} N[c] on the infinite lattice; I must be nonempty.
inline std::vector<Point> grid_common_cover(Lattice l, const std::vector<Point>& iset) {
  std::vector<Point> out;
  for (auto o : closed_offsets(l)) {
    const Point w = iset.front() + o;
    bool all = true;
    for (const auto& c : iset) all = all && lattice_adjacent_or_equal(l, w, c);
    if (all) out.push_back(w);
  }
  return out;
}

/// Checks SLD or DLD at every non-codeword u with |x|,|y| <= n. Neighbourhoods
/// and membership come from the infinite lattice, so the verdict has no window
/// boundary effects.
///   SLD: I(u) ≠ ∅ and ⋂_{c∈I(u)} N[c] = {u}
///   DLD: I(u) ≠ ∅ and (⋂_{c∈I(u)} N[c]) \ C = {u}
inline GridVerdict verify_window(const GridCode& code, CodeClass cls, long n) {
  if (cls != CodeClass::SLD && cls != CodeClass::DLD)
    throw InvalidParameter("verify_window supports SLD and DLD only");
  if (n < 2) throw InvalidParameter("verify_window requires n >= 2");
  for (auto u : spiral_window(n)) {
    if (code.contains(u)) continue;
    auto is = grid_iset(code, u);
    if (is.empty()) {
      GridVerdict r;
      r.ok = false;
      r.kind = GridWitnessKind::EmptyIset;
      r.u = u;
      r.detail = "I" + point_string(u) + " is empty";
      return r;
    }
    auto common = grid_common_cover(code.lattice, is);
    std::vector<Point> relevant;
    for (auto w : common)
      if (cls == CodeClass::SLD || !code.contains(w)) relevant.push_back(w);
    for (auto w : relevant) {
      if (w == u) continue;
      GridVerdict r;
      r.ok = false;
      r.kind = GridWitnessKind::IntersectionTooBig;
      r.u = u;
      r.v = w;
      r.iset = is;
      r.intersection = relevant;
      r.detail = "intersection of N[c] over I" + point_string(u) + " also contains " + point_string(w);
      return r;
    }
  }
  return {};
}

/// Exact |C ∩ V_n| / |V_n| over the (2n+1)^2 index window.
struct DensityReport {
  long n = 0;
  long count = 0;
  long total = 0;
  long num = 0;  ///< count/total in lowest terms
  long den = 1;
};

inline DensityReport density(const GridCode& code, long n) {
  if (n < 0) throw InvalidParameter("density requires n >= 0");
  DensityReport r;
  r.n = n;
  r.total = (2 * n + 1) * (2 * n + 1);
  for (long x = -n; x <= n; ++x)
    for (long y = -n; y <= n; ++y)
      if (code.predicate(x, y)) ++r.count;
  const long g = std::gcd(r.count, r.total);
  r.num = r.count / g;
  r.den = r.total / g;
  return r;
}

/// T = {(0,0),(0,1),(0,2),(1,2),(-1,2)} rotated by `quarter_turns` * π/2.
inline std::array<Point, 5> t_pattern(int quarter_turns) {
  std::array<Point, 5> t = {Point{0, 0}, {0, 1}, {0, 2}, {1, 2}, {-1, 2}};
  for (int k = 0; k < ((quarter_turns % 4) + 4) % 4; ++k)
    for (auto& p : t) p = {-p.y, p.x};
  return t;
}

inline void require_king(const GridCode& code, std::string_view what) {
  if (code.lattice != Lattice::King) throw InvalidParameter(std::string(what) + " is defined for the king grid only");
}

/// Every placement of T and its rotations inside |x|,|y| <= n contains a
/// codeword. Placements are scanned by rotation, then origin in spiral order.
inline GridVerdict scan_T_pattern(const GridCode& code, long n) {
  require_king(code, "scan_T_pattern");
  if (n < 3) throw InvalidParameter("scan_T_pattern requires n >= 3");
  auto inside = [&](Point p) { return std::labs(p.x) <= n && std::labs(p.y) <= n; };
  const auto origins = spiral_window(n);
  for (int rot = 0; rot < 4; ++rot) {
    const auto t = t_pattern(rot);
    for (auto o : origins) {
      bool fits = true, hit = false;
      for (auto p : t) {
        fits = fits && inside(o + p);
        hit = hit || code.contains(o + p);
      }
      if (fits && !hit) {
        GridVerdict r;
        r.ok = false;
        r.kind = GridWitnessKind::EmptyPattern;
        r.u = o;
        r.rotation = rot;
        r.detail = "T pattern at " + point_string(o) + " rotated " + std::to_string(90 * rot) +
                   " degrees has no codeword";
        return r;
      }
    }
  }
  return {};
}

struct StripReport {
  long height = 0;
  long min_count = 0;
  Point corner;           ///< lower-left cell of a minimising strip
  bool vertical = true;   ///< 3 wide and `height` tall, else `height` wide and 3 tall
  long placements = 0;
};

/// Minimum number of codewords in an axis-aligned 3 x height strip (either
/// orientation) placed inside |x|,|y| <= 2*height.
inline StripReport strip_count(const GridCode& code, long height) {
  require_king(code, "strip_count");
  if (height < 4) throw InvalidParameter("strip_count requires n >= 4");
  const long r = 2 * height;
  StripReport best;
  best.height = height;
  best.min_count = -1;
  for (int vertical = 1; vertical >= 0; --vertical) {
    const long w = vertical ? 3 : height, h = vertical ? height : 3;
    for (long x0 = -r; x0 + w - 1 <= r; ++x0)
      for (long y0 = -r; y0 + h - 1 <= r; ++y0) {
        long count = 0;
        for (long dx = 0; dx < w; ++dx)
          for (long dy = 0; dy < h; ++dy) count += code.predicate(x0 + dx, y0 + dy) ? 1 : 0;
        ++best.placements;
        if (best.min_count < 0 || count < best.min_count) {
          best.min_count = count;
          best.corner = {x0, y0};
          best.vertical = vertical != 0;
        }
      }
  }
  return best;
}

/// Parses congruence predicates such as "x-y % 3 in {0}", "2*x+y % 5 in {1,4}"
/// or "|x|+|y| % 3 in {0}". Terms are an optional integer coefficient times
/// x, y, |x| or |y|, or a bare integer constant.
inline GridCode parse_congruence(std::string_view text, Lattice lattice = Lattice::King) {
  struct Term {
    long coef;
    int var;  // 0 const, 1 x, 2 y, 3 |x|, 4 |y|
  };
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  auto fail = [&](const std::string& why) -> GridCode {
    throw InvalidParameter("bad predicate '" + std::string(text) + "': " + why);
  };
  const auto pct = s.find('%');
  if (pct == std::string::npos) return fail("missing '%'");
  const auto in = s.find("in{", pct);
  if (in == std::string::npos || s.back() != '}') return fail("expected 'in {r1,...}'");

  std::size_t pos = 0;
  const std::string lhs = s.substr(0, pct);
  auto read_int = [&](const std::string& src, std::size_t& p) -> std::optional<long> {
    const std::size_t start = p;
    while (p < src.size() && std::isdigit(static_cast<unsigned char>(src[p]))) ++p;
    if (p == start) return std::nullopt;
    return std::stol(src.substr(start, p - start));
  };
  std::vector<Term> terms;
  while (pos < lhs.size()) {
    long sign = 1;
    if (lhs[pos] == '+' || lhs[pos] == '-') {
      for (; pos < lhs.size() && (lhs[pos] == '+' || lhs[pos] == '-'); ++pos)
        if (lhs[pos] == '-') sign = -sign;
    } else if (!terms.empty()) {
      return fail("expected '+' or '-'");
    }
    long coef = 1;
    bool has_coef = false;
    if (auto c = read_int(lhs, pos)) {
      coef = *c;
      has_coef = true;
      if (pos < lhs.size() && lhs[pos] == '*') {
        ++pos;
      } else {
        terms.push_back({sign * coef, 0});
        continue;
      }
    }
    int var = 0;
    if (lhs.compare(pos, 3, "|x|") == 0) {
      var = 3;
      pos += 3;
    } else if (lhs.compare(pos, 3, "|y|") == 0) {
      var = 4;
      pos += 3;
    } else if (pos < lhs.size() && (lhs[pos] == 'x' || lhs[pos] == 'y')) {
      var = lhs[pos] == 'x' ? 1 : 2;
      ++pos;
    } else {
      return fail(has_coef ? "expected variable after '*'" : "expected a term");
    }
    terms.push_back({sign * coef, var});
  }
  if (terms.empty()) return fail("empty expression");

  std::size_t mp = pct + 1;
  auto modulus = read_int(s, mp);
  if (!modulus || *modulus <= 0 || mp != in) return fail("modulus must be a positive integer");
  std::set<long> residues;
  std::size_t rp = in + 3;
  while (rp < s.size() - 1) {
    auto r = read_int(s, rp);
    if (!r) return fail("residue list must hold nonnegative integers");
    residues.insert(floor_mod(*r, *modulus));
    if (rp < s.size() - 1) {
      if (s[rp] != ',') return fail("residues must be comma separated");
      ++rp;
    }
  }
  if (residues.empty()) return fail("empty residue list");

  const long m = *modulus;
  auto pred = [terms, m, residues](long x, long y) {
    long value = 0;
    for (const auto& t : terms) {
      const long base = t.var == 0 ? 1 : t.var == 1 ? x : t.var == 2 ? y : t.var == 3 ? std::labs(x) : std::labs(y);
      value += t.coef * base;
    }
    return residues.count(floor_mod(value, m)) > 0;
  };
  return {lattice, pred, std::string(text)};
}

/// Restriction of a grid code to the finite window graph of the same radius.
inline Code window_code(const Graph& window, const GridCode& code) {
  VertexSet s(window.size());
  for (std::size_t v = 0; v < window.size(); ++v)
    if (code.predicate(window.label(v)[0], window.label(v)[1])) s.set(v);
  return Code(window, std::move(s));
}

}  // namespace domcode
