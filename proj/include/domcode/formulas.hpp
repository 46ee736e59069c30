#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>

#include "domcode/code.hpp"
#include "domcode/error.hpp"

namespace domcode {

/// Which optimal-cardinality family a closed-form query refers to.
enum class GammaFamily { CartLD, CartDLD, CartSLD, CartDomRook, DirectLD, DirectDLD, DirectSLD, CubeDLD };

inline constexpr std::array<GammaFamily, 8> kAllFamilies = {
    GammaFamily::CartLD,   GammaFamily::CartDLD,   GammaFamily::CartSLD,   GammaFamily::CartDomRook,
    GammaFamily::DirectLD, GammaFamily::DirectDLD, GammaFamily::DirectSLD, GammaFamily::CubeDLD};

inline std::string_view to_string(GammaFamily f) {
  switch (f) {
    case GammaFamily::CartLD: return "cart_ld";
    case GammaFamily::CartDLD: return "cart_dld";
    case GammaFamily::CartSLD: return "cart_sld";
    case GammaFamily::CartDomRook: return "cart_dom_rook";
    case GammaFamily::DirectLD: return "direct_ld";
    case GammaFamily::DirectDLD: return "direct_dld";
    case GammaFamily::DirectSLD: return "direct_sld";
    case GammaFamily::CubeDLD: return "cube_dld";
  }
  return "?";
}

inline GammaFamily parse_gamma_family(std::string_view s) {
  for (auto f : kAllFamilies)
    if (to_string(f) == s) return f;
  throw InvalidParameter("unknown family '" + std::string(s) + "'");
}

/// Code class measured by a family.
inline CodeClass family_class(GammaFamily f) {
  switch (f) {
    case GammaFamily::CartLD:
    case GammaFamily::DirectLD: return CodeClass::LD;
    case GammaFamily::CartDLD:
    case GammaFamily::DirectDLD:
    case GammaFamily::CubeDLD: return CodeClass::DLD;
    case GammaFamily::CartSLD:
    case GammaFamily::DirectSLD: return CodeClass::SLD;
    case GammaFamily::CartDomRook: return CodeClass::DOM;
  }
  return CodeClass::DOM;
}

inline bool is_direct(GammaFamily f) {
  return f == GammaFamily::DirectLD || f == GammaFamily::DirectDLD || f == GammaFamily::DirectSLD;
}

struct GammaQuery {
  GammaFamily family;
  int n = 0;
  int m = 0;
  int q = 0;  ///< cube_dld only
};

namespace detail {

inline int ceil_div(int a, int b) { return (a + b - 1) / b; }

inline void require_pair(int n, int m, std::string_view what) {
  if (n < 2) throw DomainError(std::string(what) + ": requires n >= 2, got n=" + std::to_string(n));
  if (m < n)
    throw DomainError(std::string(what) + ": requires n <= m, got n=" + std::to_string(n) +
                      ", m=" + std::to_string(m));
}

}  // namespace detail

/// γ^LD(K_n □ K_m), 2 <= n <= m.
inline int gamma_cart_ld(int n, int m) {
  detail::require_pair(n, m, "cart_ld");
  if (2 * n <= m) return m - 1;
  return detail::ceil_div(2 * n + 2 * m, 3) - 1;
}

/// γ^DLD(K_n □ K_m), 2 <= n <= m. The n = 2 row and the 2n <= m region share
/// the value m.
inline int gamma_cart_dld(int n, int m) {
  detail::require_pair(n, m, "cart_dld");
  if (n == 2 || 2 * n <= m) return m;
  if (m == n) return 2 * n - 1;
  return 2 * n;
}

/// γ^SLD(K_n □ K_m), 2 <= n <= m.
inline int gamma_cart_sld(int n, int m) {
  detail::require_pair(n, m, "cart_sld");
  if (n == 2 && m == 2) return 4;
  if (2 * n <= m) return m;
  if (m == n) return 2 * n - 1;
  return 2 * n;
}

/// γ(K_n □ K_m) = n for 2 <= n <= m (one codeword per column is necessary
/// and sufficient; n = m is the square rook's graph).
inline int gamma_cart_dom_rook(int n, int m) {
  detail::require_pair(n, m, "cart_dom_rook");
  return n;
}

/// γ^LD(K_n × K_m), 2 <= n <= m. Special cases are tested before the general
/// regions.
inline int gamma_direct_ld(int n, int m) {
  detail::require_pair(n, m, "direct_ld");
  if (n == 2 && m <= 4) return m;
  if (n == 4 && m == 4) return 5;
  if (2 * n <= m) return m - 1;
  return detail::ceil_div(2 * n + 2 * m - 1, 3) - 1;
}

/// γ^DLD(K_n × K_m) equals the Cartesian value.
inline int gamma_direct_dld(int n, int m) {
  detail::require_pair(n, m, "direct_dld");
  return gamma_cart_dld(n, m);
}

/// γ^SLD(K_n × K_m), 2 <= n <= m.
inline int gamma_direct_sld(int n, int m) {
  detail::require_pair(n, m, "direct_sld");
  if (n > 2) return m + n - 1;
  if (m > 2) return m;
  return 4;
}

/// γ^DLD(K_q^3) = q^2, q >= 2.
inline int gamma_cube_dld(int q) {
  if (q < 2) throw DomainError("cube_dld: requires q >= 2, got q=" + std::to_string(q));
  return q * q;
}

inline int gamma_closed_form(const GammaQuery& query) {
  switch (query.family) {
    case GammaFamily::CartLD: return gamma_cart_ld(query.n, query.m);
    case GammaFamily::CartDLD: return gamma_cart_dld(query.n, query.m);
    case GammaFamily::CartSLD: return gamma_cart_sld(query.n, query.m);
    case GammaFamily::CartDomRook: return gamma_cart_dom_rook(query.n, query.m);
    case GammaFamily::DirectLD: return gamma_direct_ld(query.n, query.m);
    case GammaFamily::DirectDLD: return gamma_direct_dld(query.n, query.m);
    case GammaFamily::DirectSLD: return gamma_direct_sld(query.n, query.m);
    case GammaFamily::CubeDLD: return gamma_cube_dld(query.q);
  }
  throw DomainError("unknown family");
}

/// γ^LD(K_n □ K_m) - 1 <= γ^LD(K_n × K_m) <= γ^LD(K_n □ K_m), for (n,m) != (2,4).
inline std::pair<int, int> gamma_bounds_ld_direct_vs_cartesian(int n, int m) {
  detail::require_pair(n, m, "ld bounds");
  if (n == 2 && m == 4) throw DomainError("ld bounds: (n,m) = (2,4) is excluded");
  const int c = gamma_cart_ld(n, m);
  return {c - 1, c};
}

}  // namespace domcode
