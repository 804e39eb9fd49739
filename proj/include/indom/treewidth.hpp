#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "indom/certificate.hpp"
#include "indom/graph.hpp"

namespace indom {

inline constexpr int kDefaultWidthCeiling = 12;

struct TreeDecomposition {
  std::vector<std::vector<Vertex>> bags;  // each sorted
  std::vector<std::pair<int, int>> edges;  // tree edges between bag indices

  int width() const;  // max bag size - 1; -1 without bags
};

struct DecompositionViolation {
  enum class Kind { BadVertex, NotATree, VertexMissing, EdgeUncovered, Disconnected };
  Kind kind;
  Vertex vertex = -1;
  Edge edge{-1, -1};
  std::string message;
};

std::optional<DecompositionViolation> validate_decomposition(const Graph& g, const TreeDecomposition& td);

// Min-fill elimination, ties by degree then id. Components are chained into
// one tree.
TreeDecomposition heuristic_decomposition(const Graph& g);

enum class NiceKind { Leaf, Introduce, Forget, Join };

struct NiceNode {
  NiceKind kind = NiceKind::Leaf;
  std::vector<Vertex> bag;  // sorted
  Vertex vertex = -1;       // introduced or forgotten vertex
  std::array<int, 2> children{-1, -1};
};

// Children precede parents; the last node is the root. Leaves and the root
// have empty bags and join children carry the join's bag.
struct NiceDecomposition {
  std::vector<NiceNode> nodes;
  int root() const { return static_cast<int>(nodes.size()) - 1; }
};

// Requires a valid decomposition.
NiceDecomposition make_nice(const TreeDecomposition& td);
TreeDecomposition to_tree_decomposition(const NiceDecomposition& nice);

// PACE .td: "s td <bags> <max bag size> <n>", then "b <id> <vertices>" and
// tree edges "<i> <j>"; bag ids and vertices are 1-based, 'c' lines are comments.
std::string write_pace_td(const TreeDecomposition& td, int n);
TreeDecomposition read_pace_td(std::string_view text, int* vertex_count = nullptr);

// One cost table of the DP, for a fixed set alpha = A ∩ bag (bit i refers to
// bag position i). cost[delta << |alpha| | omega] is the least |D| over D in
// the processed part with D ∩ bag = delta that dominates the forgotten part of
// A and at least the members of alpha selected by omega (omega indexes
// alpha's members in increasing position order).
struct TwTable {
  std::uint32_t alpha = 0;
  std::vector<int> cost;

  // Back-pointers into child tables.
  int from = -1;
  int from2 = -1;
};

struct TwNodeTables {
  std::vector<TwTable> tables;  // Pareto-maximal per alpha, sorted by alpha
};

struct TreewidthResult {
  int value = 0;
  DominationCertificate certificate;
  int width = -1;
  std::vector<TwNodeTables> tables;  // per nice node, only when requested
};

// Throws InvalidInput for an invalid decomposition and CapacityError when the
// width exceeds width_ceiling. With a_candidates set, the maximum is taken
// over independent sets inside a_candidates only; every vertex may still
// dominate.
TreewidthResult gamma_i_treewidth(const Graph& g, const TreeDecomposition& td, int width_ceiling = kDefaultWidthCeiling,
                                  const VertexSet* a_candidates = nullptr);
TreewidthResult gamma_i_treewidth_nice(const Graph& g, const NiceDecomposition& nice, bool keep_tables = false,
                                       const VertexSet* a_candidates = nullptr);

// min |D| dominating `a`, by the same DP restricted to A = a. Returns the
// dominating set.
VertexSet dominate_with_decomposition(const Graph& g, const NiceDecomposition& nice, const VertexSet& a);

// Position-relative mask helpers, exposed for tests.
std::uint32_t compress_bits(std::uint32_t value, std::uint32_t mask);
std::uint32_t expand_bits(std::uint32_t value, std::uint32_t mask);

}  // namespace indom
