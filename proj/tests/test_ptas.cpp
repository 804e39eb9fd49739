#include <doctest.h>

#include "indom/error.hpp"
#include "indom/generators.hpp"
#include "indom/oracle.hpp"
#include "indom/ptas.hpp"

using namespace indom;

TEST_CASE("layering") {
  const Graph p5 = path_graph(5);
  const Layering lp = bfs_layering(p5, Bitset::of(5, {0}));
  CHECK(lp.level == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(lp.level_count == 5);
  const Graph grid = grid_graph(5, 5);
  const Layering lg = bfs_layering(grid, Bitset::of(25, {0}));
  CHECK(lg.level_count == 9);
  for (Vertex v = 0; v < 25; ++v) CHECK(lg.level[static_cast<std::size_t>(v)] == v / 5 + v % 5);
  CHECK(bfs_layering(star_graph(5), Bitset::of(6, {0})).level_count == 2);
  const std::vector<Edge> e{{0, 1}, {2, 3}};
  const Layering two = bfs_layering(Graph::from_edges(4, e), Bitset::of(4, {1}));
  CHECK(two.level == std::vector<int>{1, 0, 0, 1});
  CHECK_THROWS_AS(bfs_layering(p5, p5.empty_set()), InvalidInput);
  for (auto [u, v] : grid.edges()) CHECK(std::abs(lg.level[static_cast<std::size_t>(u)] - lg.level[static_cast<std::size_t>(v)]) <= 1);
}

TEST_CASE("shifted subgraphs") {
  const Graph p5 = path_graph(5);
  const Layering lp = bfs_layering(p5, Bitset::of(5, {0}));
  const InducedSubgraph s = shifted_subgraph(p5, lp, 2, 1);
  CHECK(s.to_parent == std::vector<Vertex>{1, 3});
  CHECK(s.graph.size() == 0);
  CHECK(shifted_subgraph(p5, lp, 6, 6).graph == p5);

  const Graph grid = grid_graph(5, 5);
  const Layering lg = bfs_layering(grid, Bitset::of(25, {0}));
  for (int shift = 1; shift <= 3; ++shift) {
    const InducedSubgraph piece = shifted_subgraph(grid, lg, 3, shift);
    for (const VertexSet& comp : connected_components(piece.graph)) {
      int lo = 100, hi = -1;
      comp.for_each([&](Vertex v) {
        const int l = lg.level[static_cast<std::size_t>(piece.to_parent[static_cast<std::size_t>(v)])];
        lo = std::min(lo, l);
        hi = std::max(hi, l);
      });
      CHECK(hi - lo + 1 <= 2);
    }
  }
  CHECK_THROWS_AS(shifted_subgraph(p5, lp, 2, 3), InvalidInput);
}

TEST_CASE("shift count from epsilon") {
  CHECK(shift_count(0.5) == 2);
  CHECK(shift_count(1.0 / 3.0) == 3);
  CHECK(shift_count(0.3) == 4);
  CHECK(shift_count(0.25) == 4);
  CHECK_THROWS_AS(shift_count(0.0), InvalidInput);
  CHECK_THROWS_AS(shift_count(1.0), InvalidInput);
}

TEST_CASE("scheme values") {
  const Graph grid = grid_graph(5, 5);
  const PtasResult r = ptas_gamma_i(grid, 3);
  CHECK(r.value >= 4);  // ceil(2/3 * 6)
  CHECK(r.value <= 6);
  CHECK(!replay_certificate(grid, r.certificate));
  CHECK(r.shifts.size() == 3);
  CHECK(ptas_gamma_i(grid, 9).value == 6);

  // Rooted at its center, a star loses the center for shift 1 and the pieces
  // alone claim every leaf; the whole-graph re-evaluation brings it back to 1.
  const Graph star = star_graph(3);
  const PtasResult s = ptas_gamma_i(star, 2);
  CHECK(s.shifts[0].piece_value == 3);
  CHECK(s.shifts[0].value == 1);
  CHECK(s.value == 1);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = random_outerplanar(12, seed);
    const int exact = gamma_i_oracle(g).value;
    for (int k = 2; k <= 4; ++k) {
      const PtasResult p = ptas_gamma_i(g, k);
      CHECK(p.value <= exact);
      CHECK(!replay_certificate(g, p.certificate));
      for (const ShiftOutcome& s : p.shifts) {
        CHECK(s.cut_value <= s.value);
        CHECK(s.value <= p.value);
      }
      if (k >= p.level_count) CHECK(p.value == exact);
    }
  }
}
