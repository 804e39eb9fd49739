#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "indom/certificate.hpp"
#include "indom/cograph.hpp"
#include "indom/graph.hpp"

namespace indom {

// Segment i joins top position top[i] to bottom position bottom[i]. Both
// arrays are permutations of 0..n-1.
struct PermutationDiagram {
  std::vector<int> top;
  std::vector<int> bottom;

  int order() const { return static_cast<int>(top.size()); }
};

// Throws InvalidInput unless both arrays are permutations of equal length.
void validate_diagram(const PermutationDiagram& d);
bool segments_cross(const PermutationDiagram& d, Vertex i, Vertex j);
Graph diagram_to_graph(const PermutationDiagram& d);

// Reverses both lines. Crossings, and so the graph, are unchanged.
PermutationDiagram mirror(const PermutationDiagram& d);

// Unions place child diagrams side by side; joins additionally reverse the
// child order on the bottom line so every cross pair intersects.
PermutationDiagram cotree_to_diagram(const Cotree& t);

PermutationDiagram random_diagram(int n, std::uint64_t seed);

// "n", then the n top positions, then the n bottom positions (vertex order).
std::string write_diagram(const PermutationDiagram& d);
PermutationDiagram read_diagram(std::string_view text);

// N[x] ordered rightmost first: larger max(top, bottom) endpoint first, ties
// by the larger top position.
std::vector<Vertex> rightmost_neighbor_order(const PermutationDiagram& d, const Graph& g, Vertex x);
// First of the above, optionally skipping neighbors of `avoid`. Returns -1
// when every candidate is skipped.
Vertex rightmost_neighbor(const PermutationDiagram& d, const Graph& g, Vertex x, std::optional<Vertex> avoid = std::nullopt);

// Corrected: the transfer rules that keep every claimed value realizable.
// Literal: the rules read literally (a candidate is rightmost when its top or
// its bottom endpoint is the rightmost one); over-counts on some inputs and
// is kept only for comparison.
enum class RuleSet { Corrected, Literal };

// gamma_x(z) for every x and z in N[x], as bit vectors over 0..n.
struct GammaSets {
  int n = 0;
  std::vector<std::vector<Vertex>> candidates;  // N[x], ascending
  std::vector<std::vector<Bitset>> values;      // parallel to candidates

  const Bitset* find(Vertex x, Vertex z) const;
};

struct PermutationResult {
  int value = 0;
  DominationCertificate certificate;
  GammaSets sets;
  // Pairwise far-apart segments, left to right; certificate.independent_set.
  std::vector<Vertex> chain;
};

// Processes segments by top position. Throws InvalidInput on a bad diagram.
PermutationResult gamma_i_permutation(const PermutationDiagram& d, RuleSet rules = RuleSet::Corrected);

}  // namespace indom
