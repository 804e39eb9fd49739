#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "indom/certificate.hpp"
#include "indom/graph.hpp"

namespace indom {

enum class PruneOp { Pendant, TrueTwin, FalseTwin };

// One one-vertex extension: `vertex` is added as a pendant of, or a true or
// false twin of, `anchor`.
struct PruningStep {
  PruneOp op = PruneOp::Pendant;
  Vertex vertex = -1;
  Vertex anchor = -1;
};

// Construction order: start from {start} and apply the steps front to back.
struct PruningSequence {
  Vertex start = 0;
  std::vector<PruningStep> steps;

  int order() const { return static_cast<int>(steps.size()) + 1; }
};

struct RecognitionFailure {
  Vertex stuck_vertex = -1;  // smallest vertex of the irreducible remainder
  VertexSet remaining;
};

// Eliminates pendant vertices, then twins, until one vertex is left. Succeeds
// iff g is distance-hereditary.
std::variant<PruningSequence, RecognitionFailure> recognize_dh(const Graph& g);

Graph replay_pruning_sequence(const PruningSequence& s);

// Throws InvalidInput naming the first step that does not match g.
void validate_pruning_sequence(const Graph& g, const PruningSequence& s);

// One step per line: "pendant v u", "ttwin v u" or "ftwin v u". The start
// vertex is the one that never appears as v (vertex 0 for an empty file).
std::string write_pruning_sequence(const PruningSequence& s);
PruningSequence read_pruning_sequence(std::string_view text);

PruningSequence random_dh_sequence(int n, std::uint64_t seed);

enum class DHLabel { Leaf, Join, Union };
// Which child twinsets make up the twinset of the node's parent edge.
enum class TwinsetTag { Left, Right, Both, Empty };

struct DHNode {
  int parent = -1;
  std::array<int, 2> children{-1, -1};
  Vertex vertex = -1;  // leaves only
  DHLabel label = DHLabel::Leaf;
  TwinsetTag tag = TwinsetTag::Empty;
  VertexSet subtree;  // W_e for the edge to the parent
  VertexSet twinset;  // Q_e: members of W_e with a neighbor outside W_e
};

// Rooted binary rank-1 decomposition tree. `postorder` lists every node after
// its children and ends with the root.
struct DHDecomposition {
  std::vector<DHNode> nodes;
  int root = -1;
  std::vector<int> leaf_of;  // vertex -> leaf node
  std::vector<int> postorder;
};

// Throws InvalidInput naming the first bad step when s does not match g.
DHDecomposition build_dh_decomposition(const Graph& g, const PruningSequence& s);

// Re-derives every twinset from g and checks the join/union adjacency rule.
std::optional<std::string> check_dh_decomposition(const Graph& g, const DHDecomposition& d);

inline constexpr int kInfiniteCost = std::numeric_limits<int>::max() / 4;

// Index into DHSignature::cost: bit 1 requires a dominator inside the
// twinset, bit 0 allows independent twinset vertices to stay undominated
// (they are then covered by the twinset's common outside neighbors).
constexpr int cost_index(bool needs_twinset_dominator, bool allow_undominated) {
  return (needs_twinset_dominator ? 2 : 0) | (allow_undominated ? 1 : 0);
}

// Summary of one independent set A of G[W_e]: whether A meets Q_e, and for
// each of the four cost_index requirements the least |D| with D ⊆ W_e
// dominating A (subject to that requirement), or kInfiniteCost.
struct DHSignature {
  bool meets_twinset = false;
  std::array<int, 4> cost{};

  // Back-pointers for certificate reconstruction.
  int left = -1;
  int right = -1;
  std::array<std::uint8_t, 4> choice{};  // packed child requirements per cost index
  bool leaf_in_set = false;
};

// True when a is at least as good as b for the maximizing side: a meets the
// twinset no more than b does and costs at least as much everywhere.
bool signature_dominates(const DHSignature& a, const DHSignature& b);

// Pareto-maximal signatures for one tree edge, canonically sorted.
struct EdgeTable {
  std::vector<DHSignature> entries;
};

// Drops dominated and duplicate signatures and sorts the rest.
void reduce_table(EdgeTable& table);

struct DHResult {
  int value = 0;
  DominationCertificate certificate;
  std::vector<EdgeTable> tables;  // indexed by decomposition node
};

DHResult gamma_i_dh(const Graph& g, const DHDecomposition& d);

// Convenience: recognize, decompose, solve. Throws ClassMismatch on failure.
DHResult gamma_i_distance_hereditary(const Graph& g);

}  // namespace indom
