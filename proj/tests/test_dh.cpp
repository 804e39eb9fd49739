#include <doctest.h>

#include <bit>

#include "indom/distance_hereditary.hpp"
#include "indom/error.hpp"
#include "indom/generators.hpp"
#include "indom/oracle.hpp"
#include "support.hpp"
#include "table_oracles.hpp"

using namespace indom;
using namespace indom::testing;

namespace {

PruningSequence recognize_or_fail(const Graph& g) {
  auto r = recognize_dh(g);
  REQUIRE(std::holds_alternative<PruningSequence>(r));
  return std::get<PruningSequence>(r);
}

}  // namespace

TEST_CASE("recognition on known graphs") {
  for (const Graph& g : {path_graph(4), cycle_graph(4), complete_graph(5), star_graph(6), empty_graph(3),
                         complete_multipartite({2, 3, 1})}) {
    const PruningSequence s = recognize_or_fail(g);
    validate_pruning_sequence(g, s);
    CHECK(replay_pruning_sequence(s) == g);
  }
  for (const Graph& g : {cycle_graph(5), cycle_graph(6), petersen_graph()}) {
    const auto r = recognize_dh(g);
    REQUIRE(std::holds_alternative<RecognitionFailure>(r));
    CHECK(std::get<RecognitionFailure>(r).remaining.count() >= 5);
  }
  // The house is one of the forbidden induced subgraphs.
  const std::vector<Edge> house{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 4}, {3, 4}};
  CHECK(std::holds_alternative<RecognitionFailure>(recognize_dh(Graph::from_edges(5, house))));
  CHECK_THROWS_AS(gamma_i_distance_hereditary(cycle_graph(5)), ClassMismatch);
}

TEST_CASE("pruning sequence validation names the step") {
  const Graph g = path_graph(3);
  PruningSequence s;
  s.start = 0;
  s.steps = {{PruneOp::Pendant, 1, 0}, {PruneOp::TrueTwin, 2, 1}};
  try {
    validate_pruning_sequence(g, s);
    FAIL("expected rejection");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find("step 1") != std::string::npos);
  }
  s.steps[1] = {PruneOp::Pendant, 2, 1};
  validate_pruning_sequence(g, s);
  const PruningSequence back = read_pruning_sequence(write_pruning_sequence(s));
  CHECK(back.start == 0);
  CHECK(replay_pruning_sequence(back) == g);
  CHECK_THROWS_AS(read_pruning_sequence("twin 1 0\n"), ParseError);
  CHECK_THROWS_AS(read_pruning_sequence("pendant 1 0\npendant 1 0\n"), InvalidInput);
}

TEST_CASE("decomposition structure") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = replay_pruning_sequence(random_dh_sequence(1 + static_cast<int>(seed % 14), seed));
    const DHDecomposition d = build_dh_decomposition(g, recognize_or_fail(g));
    CHECK(!check_dh_decomposition(g, d));
    CHECK(d.postorder.back() == d.root);
    CHECK(d.nodes.size() == 2 * static_cast<std::size_t>(g.order()) - 1);
  }
}

TEST_CASE("table entries match the brute-force tables") {
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    const Graph g = replay_pruning_sequence(random_dh_sequence(2 + static_cast<int>(seed % 9), seed));
    const DHDecomposition d = build_dh_decomposition(g, recognize_or_fail(g));
    const DHResult r = gamma_i_dh(g, d);
    for (std::size_t i = 0; i < d.nodes.size(); ++i) {
      const EdgeTable expected = brute_table(g, d.nodes[i]);
      const auto& got = r.tables[i].entries;
      REQUIRE(got.size() == expected.entries.size());
      for (std::size_t k = 0; k < got.size(); ++k) {
        CHECK(got[k].meets_twinset == expected.entries[k].meets_twinset);
        CHECK(got[k].cost == expected.entries[k].cost);
      }
    }
  }
}

TEST_CASE("values agree with the oracle") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = replay_pruning_sequence(random_dh_sequence(1 + static_cast<int>(seed % 13), seed));
    const DHResult r = gamma_i_distance_hereditary(g);
    CHECK(r.value == gamma_i_oracle(g).value);
    CHECK(r.certificate.value == r.value);
    CHECK(!replay_certificate(g, r.certificate));
  }
  CHECK(gamma_i_distance_hereditary(path_graph(7)).value == 3);
  CHECK(gamma_i_distance_hereditary(empty_graph(4)).value == 4);
}
