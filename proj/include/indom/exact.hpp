#pragma once

#include <cstdint>
#include <vector>

#include "indom/certificate.hpp"
#include "indom/graph.hpp"

namespace indom {

// mate[v] is v's partner or -1.
struct Matching {
  std::vector<Vertex> mate;
  std::vector<Edge> edges;  // u < v

  int size() const { return static_cast<int>(edges.size()); }
};

// Edmonds' blossom algorithm, O(V^3).
Matching maximum_matching(const Graph& h);
// Exhaustive search over edge subsets; n <= 12.
int brute_force_matching_size(const Graph& h);

struct BranchStats {
  long long nodes = 0;
  int max_depth = 0;
  long long matching_calls = 0;
  long long subset_calls = 0;

  BranchStats& operator+=(const BranchStats& o);
};

// Vertices are the given members of M (local ids follow increasing order);
// two are adjacent iff some vertex of `outside` is adjacent to both. via[i]
// names one such common neighbor (the smallest) for edge i of graph.edges().
struct AuxiliaryMatchingGraph {
  Graph graph;
  std::vector<Vertex> to_parent;
  std::vector<Vertex> via;
};
AuxiliaryMatchingGraph build_auxiliary_graph(const Graph& g, const VertexSet& m, const VertexSet& outside);

// nu(H) + |M \ W| with H built from every vertex outside m. Requires every
// such vertex to have at most two neighbors in m; throws InvalidInput otherwise.
int matching_formula_value(const Graph& g, const VertexSet& m);

struct IndependentSetDomination {
  int value = 0;
  VertexSet witness;
  BranchStats stats;
};

// gamma_G(m) for independent m: branch on outside vertices with at least three
// neighbors in m, finish with the matching formula. Throws InvalidInput when
// m is not independent.
IndependentSetDomination gamma_of_independent_set_fast(const Graph& g, const VertexSet& m);

inline constexpr double kDefaultBeta = 0.6827;
inline constexpr int kDefaultExactCeiling = 40;

struct ExactResult {
  int value = 0;
  DominationCertificate certificate;
  BranchStats stats;
  long long maximal_sets = 0;
};

// Per maximal independent set M: the branching routine when |M| <= beta*n,
// otherwise subsets of V \ M by increasing size. Throws CapacityError above
// `ceiling` vertices.
ExactResult gamma_i_exact(const Graph& g, double beta = kDefaultBeta, int ceiling = kDefaultExactCeiling);

}  // namespace indom
