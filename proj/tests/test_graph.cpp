#include <doctest.h>

#include "indom/error.hpp"
#include "indom/generators.hpp"
#include "indom/graph.hpp"
#include "indom/graph_io.hpp"
#include "indom/oracle.hpp"
#include "indom/rng.hpp"
#include "support.hpp"

using namespace indom;

TEST_CASE("bitset basics") {
  Bitset b(130);
  CHECK(b.empty());
  b.insert(0);
  b.insert(64);
  b.insert(129);
  CHECK(b.count() == 3);
  CHECK(b.first() == 0);
  CHECK(b.next(0) == 64);
  CHECK(b.next(64) == 129);
  CHECK(b.next(129) == -1);
  const Bitset c = ~b;
  CHECK(c.count() == 127);
  CHECK(!c.intersects(b));
  CHECK((b | c) == Bitset::full(130));
  CHECK((b - Bitset::of(130, {64})).to_vector() == std::vector<Vertex>{0, 129});
  CHECK(lex_less(Bitset::of(5, {0, 3}), Bitset::of(5, {0, 4})));
  CHECK(!lex_less(Bitset::of(5, {1}), Bitset::of(5, {0, 4})));
}

TEST_CASE("graph construction rejects bad edges and merges duplicates") {
  const std::vector<Edge> dup{{0, 1}, {1, 0}, {1, 2}};
  const Graph g = Graph::from_edges(3, dup);
  CHECK(g.size() == 2);
  CHECK(g.adjacent(0, 1));
  CHECK(g.degree(1) == 2);
  const std::vector<Edge> loop{{1, 1}};
  CHECK_THROWS_AS(Graph::from_edges(3, loop), InvalidInput);
  const std::vector<Edge> far{{0, 3}};
  CHECK_THROWS_AS(Graph::from_edges(3, far), InvalidInput);
}

TEST_CASE("edge list and dimacs round trip") {
  const Graph g = random_gnp(12, 0.3, 7);
  for (GraphFormat f : {GraphFormat::EdgeList, GraphFormat::Dimacs}) {
    const std::string text = serialize_graph(g, f);
    CHECK(parse_graph(text, f) == g);
    CHECK(serialize_graph(parse_graph(text, f), f) == text);
  }
  const Graph h = parse_graph("# comment\n3 2\n0 1 # trailing\n\n1 2\n", GraphFormat::EdgeList);
  CHECK(h.size() == 2);
  const Graph d = parse_graph("c hello\np edge 3 1\ne 0 2\n", GraphFormat::Dimacs);
  CHECK(d.adjacent(0, 2));
}

TEST_CASE("parse errors carry line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      parse_graph(text, GraphFormat::EdgeList);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("3 2\n0 1\n1 7\n") == 3);
  CHECK(line_of("3 2\n0 1\n2 x\n") == 3);
  CHECK(line_of("3 1\n1 1\n") == 2);
  CHECK(line_of("3 2\n0 1\n") == 2);
  CHECK(line_of("") == 1);
}

TEST_CASE("components, complement and induced subgraphs") {
  const std::vector<Edge> e{{0, 1}, {3, 4}};
  const Graph g = Graph::from_edges(5, e);
  const auto comps = connected_components(g);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0].to_vector() == std::vector<Vertex>{0, 1});
  CHECK(comps[1].to_vector() == std::vector<Vertex>{2});
  CHECK(complement(g).size() == 10 - 2);
  const InducedSubgraph sub = induced_subgraph(g, Bitset::of(5, {1, 3, 4}));
  CHECK(sub.graph.order() == 3);
  CHECK(sub.graph.size() == 1);
  CHECK(sub.to_parent == std::vector<Vertex>{1, 3, 4});
  CHECK(sub.lift(Bitset::of(3, {0, 2}), 5).to_vector() == std::vector<Vertex>{1, 4});
}

TEST_CASE("products") {
  const Graph p2 = path_graph(2);
  const Graph p3 = path_graph(3);
  CHECK(cartesian_product(p2, p3).size() == 7);
  const Graph c4 = cycle_graph(4);
  const Graph box = cartesian_product(c4, c4);
  CHECK(box.order() == 16);
  CHECK(gamma(box).value == 4);

  const Graph strong = strong_product(c4, c4);
  CHECK(strong.size() == 16 * 8 / 2);
  // (0,0),(0,1),(1,2),(2,2),(3,3) is an induced five-cycle.
  const std::vector<Vertex> ring{0 * 4 + 0, 0 * 4 + 1, 1 * 4 + 2, 2 * 4 + 2, 3 * 4 + 3};
  for (std::size_t i = 0; i < ring.size(); ++i)
    for (std::size_t j = i + 1; j < ring.size(); ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == ring.size() - 1);
      CHECK(strong.adjacent(ring[i], ring[j]) == consecutive);
    }
  CHECK(product_coordinates(ring[2], 4) == std::pair<Vertex, Vertex>{1, 2});
}

TEST_CASE("edge-clique graph") {
  const Graph k222 = complete_multipartite({2, 2, 2});
  CHECK(k222.size() == 12);
  const EdgeCliqueGraph ke = edge_clique_graph(k222);
  CHECK(ke.graph.order() == 12);
  CHECK(gamma(ke.graph).value == 3);
  // Edges of a path are never in a common clique.
  CHECK(edge_clique_graph(path_graph(4)).graph.size() == 0);
  CHECK(edge_clique_graph(complete_graph(3)).graph.size() == 3);
}

namespace {

bool has_induced_p4(const Graph& g) {
  const int n = g.order();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b : g.neighbors(a))
      for (Vertex c : g.neighbors(b))
        for (Vertex d : g.neighbors(c))
          if (c != a && d != b && d != a && !g.adjacent(a, c) && !g.adjacent(b, d) && !g.adjacent(a, d)) return true;
  return false;
}

// Maximum cardinality search order; g is chordal iff its reverse is a
// perfect elimination ordering.
bool is_chordal(const Graph& g) {
  const int n = g.order();
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> order;
  for (int i = 0; i < n; ++i) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v)
      if (pos[static_cast<std::size_t>(v)] == -1 && (pick == -1 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(pick)])) pick = v;
    pos[static_cast<std::size_t>(pick)] = i;
    order.push_back(pick);
    for (Vertex u : g.neighbors(pick))
      if (pos[static_cast<std::size_t>(u)] == -1) ++weight[static_cast<std::size_t>(u)];
  }
  for (Vertex v : order) {
    std::vector<Vertex> earlier;
    for (Vertex u : g.neighbors(v))
      if (pos[static_cast<std::size_t>(u)] < pos[static_cast<std::size_t>(v)]) earlier.push_back(u);
    for (std::size_t i = 0; i < earlier.size(); ++i)
      for (std::size_t j = i + 1; j < earlier.size(); ++j)
        if (!g.adjacent(earlier[i], earlier[j])) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("generators") {
  CHECK(star_graph(9).order() == 10);
  CHECK(star_graph(9).degree(0) == 9);
  CHECK(grid_graph(3, 4).size() == 3 * 3 + 2 * 4);
  CHECK(petersen_graph().size() == 15);
  CHECK(triangle_union(4).size() == 12);
  CHECK(generate("multipartite:2,2,2", 1).graph.size() == 12);
  CHECK(!has_induced_p4(cycle_graph(4)));
  CHECK(has_induced_p4(path_graph(4)));
  CHECK(!is_chordal(cycle_graph(4)));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const GeneratedGraph cg = generate("cograph:10", seed);
    CHECK(!has_induced_p4(cg.graph));
    REQUIRE(cg.cotree);
    CHECK(is_chordal(random_chordal(12, seed)));
    CHECK(generate("gnp:15:0.3", seed).graph == generate("gnp:15:0.3", seed).graph);
    const GeneratedGraph pg = generate("permutation:9", seed);
    CHECK(diagram_to_graph(*pg.diagram) == pg.graph);
    const GeneratedGraph dg = generate("dh:9", seed);
    CHECK(replay_pruning_sequence(*dg.pruning) == dg.graph);
    const Graph op = random_outerplanar(12, seed);
    CHECK(op.size() <= 2 * 12 - 3);
  }
  CHECK_THROWS_AS(generate("gnp:5", 1), InvalidInput);
  CHECK_THROWS_AS(generate("wheel:5", 1), InvalidInput);
  CHECK_THROWS_AS(generate("path:x", 1), InvalidInput);
  CHECK_THROWS_AS(generate("path:3:4", 1), InvalidInput);
}

TEST_CASE("random stream is fixed") {
  Rng a(42);
  Rng b(42);
  for (int i = 0; i < 10; ++i) CHECK(a.below(1000) == b.below(1000));
  Rng c(5489);
  // First output of mt19937_64 with the standard default seed.
  CHECK(c.next() == 14514284786278117030ULL);
}
