#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace domcode {

using VertexSet = boost::dynamic_bitset<std::uint64_t>;

template <typename F>
void for_each_vertex(const VertexSet& s, F&& f) {
  for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) f(v);
}

inline std::vector<std::size_t> to_vector(const VertexSet& s) {
  std::vector<std::size_t> out;
  out.reserve(s.count());
  for_each_vertex(s, [&](std::size_t v) { out.push_back(v); });
  return out;
}

inline VertexSet make_vertex_set(std::size_t n, const std::vector<std::size_t>& members) {
  VertexSet s(n);
  for (auto v : members) s.set(v);
  return s;
}

/// a \ b
inline VertexSet set_minus(const VertexSet& a, const VertexSet& b) { return a - b; }

}  // namespace domcode
