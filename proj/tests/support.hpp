#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "indom/graph.hpp"

namespace indom::testing {

// Closed-neighborhood masks for graphs with at most 32 vertices.
inline std::vector<std::uint32_t> closed_masks(const Graph& g) {
  std::vector<std::uint32_t> m(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) {
    m[static_cast<std::size_t>(v)] = 1U << v;
    for (Vertex u : g.neighbors(v)) m[static_cast<std::size_t>(v)] |= 1U << u;
  }
  return m;
}

// dom[D] = vertices dominated by D, for every D (n <= 20).
inline std::vector<std::uint32_t> domination_table(const Graph& g) {
  const auto closed = closed_masks(g);
  const std::uint32_t limit = 1U << g.order();
  std::vector<std::uint32_t> dom(limit, 0);
  for (std::uint32_t d = 1; d < limit; ++d) {
    const int low = std::countr_zero(d);
    dom[d] = dom[d & (d - 1)] | closed[static_cast<std::size_t>(low)];
  }
  return dom;
}

inline bool independent_mask(const Graph& g, std::uint32_t a) {
  for (std::uint32_t r = a; r != 0; r &= r - 1) {
    const int v = std::countr_zero(r);
    for (Vertex u : g.neighbors(v))
      if ((a >> u) & 1U) return false;
  }
  return true;
}

// gamma^i by scanning every independent set and every candidate dominating
// set; shares no code with the library solvers.
inline int brute_gamma_i(const Graph& g) {
  const auto dom = domination_table(g);
  const std::uint32_t limit = 1U << g.order();
  std::vector<int> best_for(limit, 64);
  int answer = 0;
  for (std::uint32_t a = 0; a < limit; ++a) {
    if (!independent_mask(g, a)) continue;
    int best = 64;
    for (std::uint32_t d = 0; d < limit; ++d)
      if ((a & ~dom[d]) == 0) best = std::min(best, std::popcount(d));
    answer = std::max(answer, best);
  }
  return answer;
}

inline int brute_gamma(const Graph& g) {
  const auto dom = domination_table(g);
  const std::uint32_t all = (1U << g.order()) - 1;
  int best = g.order();
  for (std::uint32_t d = 0; d <= all; ++d)
    if (dom[d] == all) best = std::min(best, std::popcount(d));
  return best;
}

inline VertexSet mask_to_set(const Graph& g, std::uint32_t m) {
  VertexSet s = g.empty_set();
  for (Vertex v = 0; v < g.order(); ++v)
    if ((m >> v) & 1U) s.insert(v);
  return s;
}

inline std::uint32_t set_to_mask(const VertexSet& s) {
  std::uint32_t m = 0;
  s.for_each([&](Vertex v) { m |= 1U << v; });
  return m;
}

}  // namespace indom::testing
