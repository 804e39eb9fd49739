// Acceptance run: one PASS/FAIL line per criterion. Thresholds are the
// constants below; nothing is tuned at run time.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "indom/cograph.hpp"
#include "indom/distance_hereditary.hpp"
#include "indom/error.hpp"
#include "indom/exact.hpp"
#include "indom/generators.hpp"
#include "indom/oracle.hpp"
#include "indom/permutation.hpp"
#include "indom/ptas.hpp"
#include "indom/rng.hpp"
#include "indom/treewidth.hpp"
#include "support.hpp"
#include "table_oracles.hpp"

using namespace indom;
using namespace indom::testing;

namespace {

constexpr double kOracleSelfCheckSeconds = 60.0;
constexpr double kCographScaleSeconds = 1.0;
constexpr int kCographScaleOrder = 100000;
constexpr double kDhExponentCeiling = 3.5;
constexpr int kDhLargestOrder = 2000;
constexpr int kExactLargeOrder = 30;
constexpr double kExactLargeSeconds = 600.0;
constexpr double kExpectedBeta = 0.6827;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
  int failures = 0;
  std::string listed;  // the first few failures

  void fail(const std::string& what) {
    pass = false;
    if (failures++ < 5) listed += (listed.empty() ? "" : "; ") + what;
  }
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

// 1. branch-and-bound vs subset scan
Outcome oracle_self_check() {
  Outcome o;
  const auto start = Clock::now();
  Rng rng(1);
  int checks = 0;
  for (int i = 0; i < 200; ++i) {
    const int n = rng.between(1, 10);
    const Graph g = random_gnp(n, 0.1 + 0.6 * rng.real(), 1000 + static_cast<std::uint64_t>(i));
    std::vector<VertexSet> targets{g.all()};
    for (int r = 0; r < 3; ++r) targets.push_back(mask_to_set(g, static_cast<std::uint32_t>(rng.below(1ULL << n))));
    for (const VertexSet& m : maximal_independent_sets(g)) targets.push_back(m);
    for (const VertexSet& b : targets) {
      ++checks;
      const SetDomination bb = gamma_of_set(g, b);
      const SetDomination ex = gamma_of_set_exhaustive(g, b);
      if (bb.value != ex.value || !dominates(g, bb.witness, b)) o.fail("graph " + std::to_string(i));
    }
  }
  const double t = seconds_since(start);
  if (t >= kOracleSelfCheckSeconds) o.fail("took " + fmt("%.1f s", t));
  o.detail = "200 graphs, " + std::to_string(checks) + " target sets, " + fmt("%.2f s", t);
  return o;
}

// 2. gamma = gamma^i on chordal graphs
Outcome chordal_identity() {
  Outcome o;
  Rng rng(2);
  for (int i = 0; i < 100; ++i) {
    const Graph g = random_chordal(rng.between(1, 14), 2000 + static_cast<std::uint64_t>(i));
    if (gamma(g).value != gamma_i_oracle(g).value) o.fail("chordal seed " + std::to_string(2000 + i));
  }
  o.detail = "100 chordal graphs";
  return o;
}

// 3. cotree formulas, then scale
Outcome cograph_theorems() {
  Outcome o;
  Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    const Cotree t = random_cotree(rng.between(1, 14), 3000 + static_cast<std::uint64_t>(i));
    const Graph g = cotree_to_graph(t);
    const int gi = gamma_i_oracle(g).value;
    const GammaIResult r = gamma_i_cograph(g);
    const int comps = static_cast<int>(connected_components(g).size());
    if (gamma_cograph(t) != gamma(g).value || r.value != gi || gamma_i_cotree(t) != gi || gi != comps ||
        replay_certificate(g, r.certificate))
      o.fail("cotree seed " + std::to_string(3000 + i));
  }
  const Cotree big = random_cotree(kCographScaleOrder, 31);
  const auto start = Clock::now();
  const int gb = gamma_cograph(big);
  const int gib = gamma_i_cotree(big);
  const double t = seconds_since(start);
  if (t >= kCographScaleSeconds) o.fail("n=1e5 took " + fmt("%.3f s", t));
  o.detail = "300 cotrees; n=" + std::to_string(kCographScaleOrder) + " solved in " + fmt("%.4f s", t) +
             " (gamma " + std::to_string(gb) + ", gamma^i " + std::to_string(gib) + ")";
  return o;
}

// 4. distance-hereditary DP
Outcome dh_dp() {
  Outcome o;
  Rng rng(4);
  for (int i = 0; i < 300; ++i) {
    const Graph g = replay_pruning_sequence(random_dh_sequence(rng.between(1, 14), 4000 + static_cast<std::uint64_t>(i)));
    const DHResult r = gamma_i_distance_hereditary(g);
    if (r.value != gamma_i_oracle(g).value || replay_certificate(g, r.certificate)) o.fail("dh seed " + std::to_string(4000 + i));
  }
  int entries = 0;
  for (int i = 0; i < 50; ++i) {
    const Graph g = replay_pruning_sequence(random_dh_sequence(rng.between(2, 10), 4500 + static_cast<std::uint64_t>(i)));
    const auto rec = recognize_dh(g);
    if (!std::holds_alternative<PruningSequence>(rec)) {
      o.fail("recognition failed, seed " + std::to_string(4500 + i));
      continue;
    }
    const DHDecomposition d = build_dh_decomposition(g, std::get<PruningSequence>(rec));
    const DHResult r = gamma_i_dh(g, d);
    for (std::size_t k = 0; k < d.nodes.size(); ++k) {
      const EdgeTable expected = brute_table(g, d.nodes[k]);
      const auto& got = r.tables[k].entries;
      bool same = got.size() == expected.entries.size();
      for (std::size_t e = 0; same && e < got.size(); ++e)
        same = got[e].meets_twinset == expected.entries[e].meets_twinset && got[e].cost == expected.entries[e].cost;
      entries += static_cast<int>(expected.entries.size());
      if (!same) o.fail("table mismatch, seed " + std::to_string(4500 + i) + " node " + std::to_string(k));
    }
  }
  // log-log least squares over the median of three runs per size
  std::vector<double> xs, ys;
  std::string timings;
  for (int n = kDhLargestOrder / 8; n <= kDhLargestOrder; n *= 2) {
    const Graph g = replay_pruning_sequence(random_dh_sequence(n, 77 + static_cast<std::uint64_t>(n)));
    std::vector<double> runs;
    for (int rep = 0; rep < 3; ++rep) {
      const auto start = Clock::now();
      const DHResult r = gamma_i_distance_hereditary(g);
      runs.push_back(seconds_since(start));
      if (r.value <= 0) o.fail("non-positive value at n=" + std::to_string(n));
    }
    std::sort(runs.begin(), runs.end());
    xs.push_back(std::log(static_cast<double>(n)));
    ys.push_back(std::log(std::max(runs[1], 1e-6)));
    timings += " " + std::to_string(n) + ":" + fmt("%.3fs", runs[1]);
  }
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(xs.size());
  my /= static_cast<double>(ys.size());
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  const double slope = sxy / sxx;
  if (slope > kDhExponentCeiling) o.fail("exponent " + fmt("%.2f", slope));
  o.detail = "300 graphs; 50 table checks (" + std::to_string(entries) + " entries); exponent " + fmt("%.2f", slope) + " from" + timings;
  return o;
}

// 5. permutation DP
Outcome permutation_dp() {
  Outcome o;
  Rng rng(5);
  for (int i = 0; i < 300; ++i) {
    const PermutationDiagram d = random_diagram(rng.between(1, 14), 5000 + static_cast<std::uint64_t>(i));
    const Graph g = diagram_to_graph(d);
    const PermutationResult r = gamma_i_permutation(d);
    if (r.value != gamma_i_oracle(g).value || replay_certificate(g, r.certificate)) o.fail("diagram seed " + std::to_string(5000 + i));
  }
  for (int i = 0; i < 50; ++i) {
    const PermutationDiagram d = random_diagram(rng.between(1, 12), 5500 + static_cast<std::uint64_t>(i));
    const Graph g = diagram_to_graph(d);
    if (claimed(gamma_i_permutation(d).sets) != realizable(d, g)) o.fail("value sets, seed " + std::to_string(5500 + i));
  }
  o.detail = "300 diagrams; 50 value-set replays";
  return o;
}

// 6. treewidth DP
Outcome treewidth_dp() {
  Outcome o;
  Rng rng(6);
  int widest = 0;
  for (int i = 0; i < 300; ++i) {
    const Graph g = random_gnp(rng.between(1, 14), 0.1 + 0.5 * rng.real(), 6000 + static_cast<std::uint64_t>(i));
    const TreeDecomposition td = heuristic_decomposition(g);
    widest = std::max(widest, td.width());
    const TreewidthResult r = gamma_i_treewidth(g, td, 13);
    if (r.value != gamma_i_oracle(g).value || replay_certificate(g, r.certificate)) o.fail("gnp seed " + std::to_string(6000 + i));
  }
  for (int i = 0; i < 50; ++i) {
    const Graph g = random_gnp(rng.between(1, 12), 0.15 + 0.35 * rng.real(), 6500 + static_cast<std::uint64_t>(i));
    const int a = gamma_i_treewidth(g, heuristic_decomposition(g), 13).value;
    const TreeDecomposition other = elimination_decomposition(g, rng.permutation(g.order()));
    const int b = gamma_i_treewidth(g, other, 13).value;
    const int c = gamma_i_treewidth_nice(g, make_nice(to_tree_decomposition(make_nice(other)))).value;
    if (a != b || a != c) o.fail("decomposition dependence, seed " + std::to_string(6500 + i));
  }
  o.detail = "300 graphs (widest heuristic width " + std::to_string(widest) + "); 50 independence checks";
  return o;
}

std::vector<Graph> exact_corpus() {
  std::vector<Graph> c;
  for (int n = 1; n <= 16; ++n) c.push_back(path_graph(n));
  for (int n = 3; n <= 16; ++n) c.push_back(cycle_graph(n));
  for (int t = 1; t <= 15; ++t) c.push_back(star_graph(t));
  for (int n = 1; n <= 10; ++n) c.push_back(complete_graph(n));
  for (int n = 1; n <= 8; ++n) c.push_back(empty_graph(n));
  for (int r = 2; r <= 4; ++r)
    for (int col = r; col <= 16 / r; ++col) c.push_back(grid_graph(r, col));
  c.push_back(petersen_graph());
  c.push_back(complete_multipartite({2, 2, 2}));
  c.push_back(complete_multipartite({1, 3, 5}));
  c.push_back(complete_multipartite({4, 4, 4, 4}));
  for (int t = 1; t <= 5; ++t) c.push_back(triangle_union(t));
  for (const char* family : {"cograph", "chordal", "dh", "permutation", "outerplanar"})
    for (int i = 0; i < 10; ++i)
      c.push_back(generate(std::string(family) + ":" + std::to_string(8 + i % 9), 7000 + static_cast<std::uint64_t>(i)).graph);
  Rng rng(7);
  for (int i = 0; i < 40; ++i) c.push_back(random_gnp(rng.between(6, 16), 0.1 + 0.5 * rng.real(), 7100 + static_cast<std::uint64_t>(i)));
  return c;
}

// 7. exact algorithm
Outcome exact_algorithm() {
  Outcome o;
  if (kDefaultBeta != kExpectedBeta) o.fail("default beta " + fmt("%.4f", kDefaultBeta));
  const auto corpus = exact_corpus();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const ExactResult r = gamma_i_exact(corpus[i]);
    if (r.value != gamma_i_oracle(corpus[i]).value || replay_certificate(corpus[i], r.certificate))
      o.fail("corpus graph " + std::to_string(i));
  }
  for (int t = 1; t <= 5; ++t) {
    const ExactResult r = gamma_i_exact(triangle_union(t));
    long long expected = 1;
    for (int i = 0; i < t; ++i) expected *= 3;
    if (r.value != t || r.maximal_sets != expected) o.fail("triangle union t=" + std::to_string(t));
  }
  const Graph big = random_gnp(kExactLargeOrder, 0.2, 7777);
  const auto start = Clock::now();
  const ExactResult r = gamma_i_exact(big);
  const double t = seconds_since(start);
  if (t >= kExactLargeSeconds || replay_certificate(big, r.certificate)) o.fail("n=30 " + fmt("%.1f s", t));
  o.detail = std::to_string(corpus.size()) + " corpus graphs; triangles t<=5; n=30 value " + std::to_string(r.value) + " in " +
             fmt("%.2f s", t) + " (" + std::to_string(r.maximal_sets) + " maximal sets, " + std::to_string(r.stats.nodes) +
             " branch nodes)";
  return o;
}

// 8. matching formula
Outcome matching_base_case() {
  Outcome o;
  Rng rng(8);
  for (int i = 0; i < 500; ++i) {
    const int n = rng.between(1, 16);
    const int msize = rng.between(1, n);
    std::vector<Vertex> perm = rng.permutation(n);
    std::vector<char> in_m(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < msize; ++k) in_m[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])] = 1;
    std::vector<Edge> edges;
    const double p = 0.1 + 0.5 * rng.real();
    for (Vertex u = 0; u < n; ++u) {
      if (in_m[static_cast<std::size_t>(u)]) continue;
      const int want = rng.between(0, std::min(2, msize));
      std::vector<Vertex> picks(perm.begin(), perm.begin() + msize);
      rng.shuffle(picks);
      for (int k = 0; k < want; ++k) edges.push_back({u, picks[static_cast<std::size_t>(k)]});
      for (Vertex v = u + 1; v < n; ++v)
        if (!in_m[static_cast<std::size_t>(v)] && rng.chance(p)) edges.push_back({u, v});
    }
    const Graph g = Graph::from_edges(n, edges);
    VertexSet m = g.empty_set();
    for (Vertex v = 0; v < n; ++v)
      if (in_m[static_cast<std::size_t>(v)]) m.insert(v);
    if (matching_formula_value(g, m) != gamma_of_set(g, m).value) o.fail("pair " + std::to_string(i));
  }
  for (int i = 0; i < 300; ++i) {
    const Graph h = random_gnp(rng.between(1, 12), 0.05 + 0.6 * rng.real(), 8500 + static_cast<std::uint64_t>(i));
    if (maximum_matching(h).size() != brute_force_matching_size(h)) o.fail("matching seed " + std::to_string(8500 + i));
  }
  o.detail = "500 (g, M) pairs; 300 blossom vs brute-force matchings";
  return o;
}

// 9. shifting scheme
Outcome ptas_guarantee() {
  Outcome o;
  std::vector<std::pair<std::string, Graph>> corpus;
  for (int n = 2; n <= 25; n += 3) corpus.emplace_back("path:" + std::to_string(n), path_graph(n));
  for (int n = 3; n <= 25; n += 3) corpus.emplace_back("cycle:" + std::to_string(n), cycle_graph(n));
  for (int r = 2; r <= 6; ++r)
    for (int c = r; c <= 6; ++c) corpus.emplace_back("grid:" + std::to_string(r) + "x" + std::to_string(c), grid_graph(r, c));
  for (int i = 0; i < 300; ++i) {
    const int n = 5 + i % 20;
    corpus.emplace_back("outerplanar:" + std::to_string(n), random_outerplanar(n, 9000 + static_cast<std::uint64_t>(i)));
  }
  int runs = 0, below = 0, piece_over = 0, piece_short = 0, exact_hits = 0, grid_width_over = 0;
  double worst = 1.0;
  for (const auto& [name, g] : corpus) {
    const int opt = gamma_i_oracle(g).value;
    for (int k = 2; k <= 4; ++k) {
      ++runs;
      const PtasResult r = ptas_gamma_i(g, k);
      if (static_cast<double>(r.value) < (1.0 - 1.0 / k) * opt - 1e-9)
        o.fail(name + " k=" + std::to_string(k) + " value " + std::to_string(r.value) + " optimum " + std::to_string(opt));
      if (r.value > opt) o.fail(name + " k=" + std::to_string(k) + " exceeds the optimum");
      if (r.value < opt) ++below;
      if (opt > 0) worst = std::min(worst, static_cast<double>(r.value) / opt);
      int best_piece = 0;
      for (const ShiftOutcome& s : r.shifts) {
        best_piece = std::max(best_piece, s.piece_value);
        if (s.piece_value > opt) ++piece_over;
        if (name.rfind("grid", 0) == 0 && s.max_width > 3 * k - 1) ++grid_width_over;
      }
      if (static_cast<double>(best_piece) < (1.0 - 1.0 / k) * opt - 1e-9) ++piece_short;
      if (k >= r.level_count) {
        ++exact_hits;
        if (r.value != opt) o.fail(name + " k>=levels but not exact");
      }
      if (replay_certificate(g, r.certificate)) o.fail(name + " certificate");
    }
  }
  o.detail = std::to_string(corpus.size()) + " graphs x k in {2,3,4}: " + std::to_string(runs) + " runs, worst ratio " +
             fmt("%.3f", worst) + ", below optimum " + std::to_string(below) + ", piece sums above optimum " +
             std::to_string(piece_over) + ", best piece sum short of the bound " + std::to_string(piece_short) + ", exact-regime runs " + std::to_string(exact_hits) +
             ", grid pieces wider than 3k-1: " + std::to_string(grid_width_over);
  return o;
}

// 10. edge-clique graph constant
Outcome edge_clique_constant() {
  Outcome o;
  const Graph k222 = complete_multipartite({2, 2, 2});
  const EdgeCliqueGraph ke = edge_clique_graph(k222);
  const int value = gamma(ke.graph).value;
  if (ke.graph.order() != 12 || value != 3) o.fail("gamma(K_e(K(2,2,2))) = " + std::to_string(value));
  // The edges between the two smallest classes: K(2,2), four of them.
  // They dominate K_e but are not a minimum dominating set.
  VertexSet between = ke.graph.empty_set();
  const auto cls = [](Vertex v) { return v / 2; };
  for (std::size_t i = 0; i < ke.edges.size(); ++i) {
    const auto [u, v] = ke.edges[i];
    if (std::min(cls(u), cls(v)) == 0 && std::max(cls(u), cls(v)) == 1) between.insert(static_cast<Vertex>(i));
  }
  const auto [sub_g, sub_map] = induced_subgraph(k222, Bitset::of(6, {0, 1, 2, 3}));
  if (sub_g.size() != 4 || sub_g != complete_multipartite({2, 2}) || between.count() != 4) o.fail("K(2,2) edge count");
  if (!dominates(ke.graph, between, ke.graph.all())) o.fail("K(2,2) edges do not dominate");
  o.detail = "gamma = " + std::to_string(value) + "; K(2,2) has " + std::to_string(sub_g.size()) +
             " edges and they dominate, so the bipartite witness is not minimum";
  return o;
}

// 11. product inequalities
Outcome product_inequalities() {
  Outcome o;
  const std::vector<std::pair<std::string, Graph>> corpus{
      {"K1", complete_graph(1)}, {"K2", complete_graph(2)}, {"P3", path_graph(3)}, {"K3", complete_graph(3)},
      {"P4", path_graph(4)},     {"C4", cycle_graph(4)},    {"K13", star_graph(3)}, {"C5", cycle_graph(5)},
      {"P5", path_graph(5)},     {"C6", cycle_graph(6)}};
  std::vector<int> gm, gi;
  for (const auto& [name, g] : corpus) {
    gm.push_back(gamma(g).value);
    gi.push_back(gamma_i_oracle(g).value);
  }
  int pairs = 0;
  for (std::size_t a = 0; a < corpus.size(); ++a)
    for (std::size_t b = 0; b < corpus.size(); ++b) {
      ++pairs;
      const Graph p = cartesian_product(corpus[a].second, corpus[b].second);
      const int gp = gamma(p).value;
      const int gip = gamma_i_oracle(p).value;
      const std::string tag = corpus[a].first + " x " + corpus[b].first;
      if (gp < gi[a] * gm[b]) o.fail(tag + ": gamma below gamma^i(G) gamma(H)");
      if (gip < gi[a] * gi[b]) o.fail(tag + ": gamma^i below gamma^i(G) gamma^i(H)");
      if (2 * gp < gm[a] * gm[b] + std::min(gm[a], gm[b])) o.fail(tag + ": Suen-Tarr bound");
    }
  o.detail = std::to_string(pairs) + " ordered pairs from " + std::to_string(corpus.size()) + " graphs";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"oracle self-check", oracle_self_check},
      {"chordal identity", chordal_identity},
      {"cograph formulas and scale", cograph_theorems},
      {"distance-hereditary DP", dh_dp},
      {"permutation DP", permutation_dp},
      {"treewidth DP", treewidth_dp},
      {"exact algorithm", exact_algorithm},
      {"matching base case", matching_base_case},
      {"shifting scheme guarantee", ptas_guarantee},
      {"edge-clique constant", edge_clique_constant},
      {"product inequalities", product_inequalities},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = Clock::now();
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double t = seconds_since(start);
    std::string line = std::string(o.pass ? "PASS" : "FAIL") + "  " + std::to_string(i + 1) + ". " + criteria[i].first + " [" +
                       fmt("%.1f s", t) + "] " + o.detail;
    if (!o.pass) line += " | " + std::to_string(o.failures) + " failure(s): " + o.listed + (o.failures > 5 ? "; ..." : "");
    std::puts(line.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
