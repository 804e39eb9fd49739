#include <doctest.h>

#include "indom/generators.hpp"
#include "indom/oracle.hpp"
#include "indom/rng.hpp"
#include "support.hpp"

using namespace indom;
using namespace indom::testing;

TEST_CASE("domination numbers of small graphs") {
  CHECK(gamma(cycle_graph(6)).value == 2);
  CHECK(gamma(petersen_graph()).value == 3);
  CHECK(gamma(empty_graph(4)).value == 4);
  CHECK(gamma(Graph::from_edges(0, {})).value == 0);
  CHECK(gamma_i_oracle(path_graph(7)).value == 3);
  CHECK(gamma_i_oracle(path_graph(4)).value == 2);
  CHECK(gamma_i_oracle(cycle_graph(4)).value == 1);
  CHECK(gamma_i_oracle(cycle_graph(5)).value == 1);
  CHECK(gamma_i_oracle(star_graph(9)).value == 1);
  CHECK(gamma_i_oracle(empty_graph(5)).value == 5);
}

TEST_CASE("branch and bound agrees with subset scan") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = random_gnp(3 + static_cast<int>(seed % 9), 0.1 + 0.05 * static_cast<double>(seed % 10), seed);
    Rng rng(seed);
    VertexSet b = g.empty_set();
    for (Vertex v = 0; v < g.order(); ++v)
      if (rng.chance(0.5)) b.insert(v);
    const SetDomination fast = gamma_of_set(g, b);
    const SetDomination slow = gamma_of_set_exhaustive(g, b);
    CHECK(fast.value == slow.value);
    CHECK(dominates(g, fast.witness, b));
    CHECK(static_cast<int>(fast.witness.count()) == fast.value);
  }
}

TEST_CASE("maximal independent sets") {
  CHECK(maximal_independent_sets(grid_graph(5, 5)).size() == 358);
  CHECK(maximal_independent_sets(grid_graph(6, 6)).size() == 4468);
  CHECK(maximal_independent_sets(triangle_union(4)).size() == 81);
  CHECK(maximal_independent_sets(empty_graph(0)).size() == 1);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_gnp(10, 0.3, seed);
    // Count maximal independent masks directly.
    const auto closed = closed_masks(g);
    std::size_t expected = 0;
    for (std::uint32_t a = 0; a < (1U << 10); ++a) {
      if (!independent_mask(g, a)) continue;
      std::uint32_t covered = 0;
      for (Vertex v = 0; v < 10; ++v)
        if ((a >> v) & 1U) covered |= closed[static_cast<std::size_t>(v)];
      if (covered == (1U << 10) - 1) ++expected;
    }
    const auto sets = maximal_independent_sets(g);
    CHECK(sets.size() == expected);
    for (const auto& s : sets) CHECK(is_independent(g, s));
  }
}

TEST_CASE("oracle matches the brute force and certificates replay") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = random_gnp(9, 0.35, seed);
    const GammaIResult r = gamma_i_oracle(g);
    CHECK(r.value == brute_gamma_i(g));
    CHECK(!replay_certificate(g, r.certificate));
  }
  CHECK(gamma_i_oracle(grid_graph(5, 5)).value == 6);
}

TEST_CASE("certificate replay rejects broken witnesses") {
  const Graph g = path_graph(4);
  DominationCertificate c{Bitset::of(4, {0, 3}), Bitset::of(4, {1, 2}), 2};
  CHECK(!replay_certificate(g, c));
  c.value = 1;
  CHECK(replay_certificate(g, c));
  c = {Bitset::of(4, {0, 1}), Bitset::of(4, {1}), 1};
  CHECK(replay_certificate(g, c));
  c = {Bitset::of(4, {0, 3}), Bitset::of(4, {1}), 1};
  CHECK(replay_certificate(g, c));
}
