#include "indom/ptas.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "indom/error.hpp"
#include "indom/exact.hpp"

namespace indom {

namespace {
std::size_t idx(int v) { return static_cast<std::size_t>(v); }
}  // namespace

Layering bfs_layering(const Graph& g, const VertexSet& roots) {
  const int n = g.order();
  Layering layering;
  layering.level.assign(idx(n), -1);
  if (n == 0) return layering;
  if (roots.empty()) throw InvalidInput("layering needs at least one root");
  std::vector<Vertex> queue;
  auto flood = [&](std::size_t head) {
    for (; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      for (Vertex u : g.neighbors(v))
        if (layering.level[idx(u)] == -1) {
          layering.level[idx(u)] = layering.level[idx(v)] + 1;
          queue.push_back(u);
        }
    }
  };
  roots.for_each([&](Vertex r) {
    layering.level[idx(r)] = 0;
    queue.push_back(r);
  });
  flood(0);
  for (Vertex v = 0; v < n; ++v) {
    if (layering.level[idx(v)] != -1) continue;
    layering.level[idx(v)] = 0;
    const std::size_t head = queue.size();
    queue.push_back(v);
    flood(head);
  }
  layering.level_count = 1 + *std::max_element(layering.level.begin(), layering.level.end());
  return layering;
}

InducedSubgraph shifted_subgraph(const Graph& g, const Layering& layering, int k, int shift) {
  if (k < 1 || shift < 1 || shift > k) throw InvalidInput("shift must lie in 1..k");
  VertexSet keep = g.empty_set();
  for (Vertex v = 0; v < g.order(); ++v)
    if (layering.level[idx(v)] % k != shift - 1) keep.insert(v);
  return induced_subgraph(g, keep);
}

int shift_count(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw InvalidInput("epsilon must lie in (0, 1)");
  // The slack keeps 1/(1/3) from rounding up to 4.
  return static_cast<int>(std::ceil(1.0 / epsilon - 1e-9));
}

PtasResult ptas_gamma_i(const Graph& g, int k, const PtasOptions& options) {
  if (k < 1) throw InvalidInput("k must be positive");
  const int n = g.order();
  PtasResult result;
  result.k = k;
  result.certificate.independent_set = g.empty_set();
  result.certificate.dominating_set = g.empty_set();
  if (n == 0) return result;

  VertexSet roots = g.empty_set();
  for (Vertex r : options.roots) {
    if (r < 0 || r >= n) throw InvalidInput("layering root " + std::to_string(r) + " out of range");
    roots.insert(r);
  }
  const Layering layering = bfs_layering(g, roots);
  result.level_count = layering.level_count;

  bool first = true;
  for (int shift = 1; shift <= k; ++shift) {
    const InducedSubgraph piece = shifted_subgraph(g, layering, k, shift);
    ShiftOutcome outcome;
    outcome.shift = shift;
    VertexSet plain = g.empty_set();
    auto solve = [&](const Graph& h, const VertexSet* candidates) {
      const TreeDecomposition td = heuristic_decomposition(h);
      const int width = td.width();
      outcome.max_width = std::max(outcome.max_width, width);
      if (width > options.width_ceiling)
        throw CapacityError("shift " + std::to_string(shift) + ": piece of " + std::to_string(h.order()) +
                            " vertices has decomposition width " + std::to_string(width) + " above ceiling " +
                            std::to_string(options.width_ceiling));
      return gamma_i_treewidth(h, td, options.width_ceiling, candidates);
    };
    for (const VertexSet& comp : connected_components(piece.graph)) {
      const InducedSubgraph part = induced_subgraph(g, piece.lift(comp, n));
      const TreewidthResult r = solve(part.graph, nullptr);
      outcome.piece_value += r.value;
      plain |= part.lift(r.certificate.independent_set, n);
    }

    // Second candidate: cut the edges between level j and j+1 instead of
    // deleting level j, and keep A off both. No cut edge touches A, so
    // gamma of A is the same in the cut graph, whose components span at most
    // k levels and add up exactly.
    VertexSet cut = g.empty_set();
    {
      auto lv = [&](Vertex v) { return layering.level[idx(v)]; };
      std::vector<Edge> kept;
      for (auto [u, v] : g.edges()) {
        const int lo = std::min(lv(u), lv(v));
        if (lv(u) != lv(v) && lo % k == shift - 1) continue;
        kept.push_back({u, v});
      }
      const Graph split = Graph::from_edges(n, kept);
      for (const VertexSet& comp : connected_components(split)) {
        const InducedSubgraph part = induced_subgraph(split, comp);
        VertexSet candidates = part.graph.empty_set();
        for (std::size_t i = 0; i < part.to_parent.size(); ++i) {
          const int l = lv(part.to_parent[i]) % k;
          if (l != shift - 1 && l != shift % k) candidates.insert(static_cast<Vertex>(i));
        }
        const TreewidthResult r = solve(part.graph, &candidates);
        outcome.cut_value += r.value;
        cut |= part.lift(r.certificate.independent_set, n);
      }
    }

    // Re-evaluate in the whole graph: deleted layers may hold cheaper dominators.
    IndependentSetDomination whole = gamma_of_independent_set_fast(g, plain);
    VertexSet a = plain;
    IndependentSetDomination other = gamma_of_independent_set_fast(g, cut);
    if (other.value != outcome.cut_value) throw std::logic_error("cut pieces do not add up in the whole graph");
    if (other.value > whole.value) {
      whole = std::move(other);
      a = cut;
    }
    outcome.value = whole.value;
    result.shifts.push_back(outcome);
    if (first || outcome.value > result.value) {
      first = false;
      result.value = outcome.value;
      result.piece_value = outcome.piece_value;
      result.best_shift = shift;
      result.certificate = {a, whole.witness, whole.value};
    }
  }

  // With at most k levels nothing needs deleting: solve the whole graph,
  // reported as shift 0.
  if (layering.level_count <= k) {
    ShiftOutcome outcome;
    const TreeDecomposition td = heuristic_decomposition(g);
    outcome.max_width = td.width();
    if (outcome.max_width > options.width_ceiling)
      throw CapacityError("graph with " + std::to_string(layering.level_count) + " levels has decomposition width " +
                          std::to_string(outcome.max_width) + " above ceiling " + std::to_string(options.width_ceiling));
    const TreewidthResult r = gamma_i_treewidth(g, td, options.width_ceiling);
    outcome.piece_value = outcome.cut_value = outcome.value = r.value;
    result.shifts.push_back(outcome);
    if (outcome.value > result.value) {
      result.value = outcome.value;
      result.piece_value = outcome.piece_value;
      result.best_shift = 0;
      result.certificate = r.certificate;
    }
  }
  return result;
}

PtasResult ptas_gamma_i(const Graph& g, double epsilon, const PtasOptions& options) {
  return ptas_gamma_i(g, shift_count(epsilon), options);
}

}  // namespace indom
