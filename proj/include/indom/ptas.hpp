#pragma once

#include <vector>

#include "indom/certificate.hpp"
#include "indom/graph.hpp"
#include "indom/treewidth.hpp"

namespace indom {

struct Layering {
  std::vector<int> level;
  int level_count = 0;
};

// BFS levels from `roots`. Components not reached from roots are layered from
// their smallest vertex, also starting at level 0. Throws InvalidInput for an
// empty root set on a non-empty graph.
Layering bfs_layering(const Graph& g, const VertexSet& roots);

// Deletes every level congruent to shift-1 modulo k (1 <= shift <= k).
InducedSubgraph shifted_subgraph(const Graph& g, const Layering& layering, int k, int shift);

struct ShiftOutcome {
  int shift = 0;  // 0: the whole graph, when it has at most k levels
  int piece_value = 0;  // sum of per-component values of the shifted graph
  int cut_value = 0;    // same for the cut graph; exact for its lifted set
  int value = 0;        // gamma of the better lifted witness set in the whole graph
  int max_width = -1;
};

struct PtasOptions {
  std::vector<Vertex> roots{0};
  int width_ceiling = kDefaultWidthCeiling;
};

struct PtasResult {
  int value = 0;
  int piece_value = 0;
  DominationCertificate certificate;
  int k = 0;
  int best_shift = 0;
  int level_count = 0;
  std::vector<ShiftOutcome> shifts;
};

// k = ceil(1/epsilon) for epsilon in (0, 1).
int shift_count(double epsilon);

PtasResult ptas_gamma_i(const Graph& g, int k, const PtasOptions& options = {});
PtasResult ptas_gamma_i(const Graph& g, double epsilon, const PtasOptions& options = {});

}  // namespace indom
