#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "indom/cograph.hpp"
#include "indom/distance_hereditary.hpp"
#include "indom/graph.hpp"
#include "indom/permutation.hpp"

namespace indom {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);  // K_{1,leaves}, center 0
Graph grid_graph(int rows, int cols);  // vertex r*cols + c
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph complete_multipartite(const std::vector<int>& parts);
Graph triangle_union(int t);  // t disjoint triangles
Graph petersen_graph();

// Every pair independently with probability p.
Graph random_gnp(int n, double p, std::uint64_t seed);
// Each new vertex attaches to a random clique of the current graph, so the
// reverse insertion order is a perfect elimination ordering.
Graph random_chordal(int n, std::uint64_t seed);
// Random triangulated polygon with chords kept at probability 1/2.
Graph random_outerplanar(int n, std::uint64_t seed);

struct GeneratedGraph {
  std::string descriptor;
  Graph graph;
  std::optional<Cotree> cotree;
  std::optional<PruningSequence> pruning;
  std::optional<PermutationDiagram> diagram;
};

// Descriptors: gnp:N:P, path:N, cycle:N, star:T, grid:R:C, complete:N,
// empty:N, multipartite:A,B,..., triangles:T, petersen, cograph:N,
// chordal:N, dh:N, permutation:N, outerplanar:N. Throws InvalidInput.
GeneratedGraph generate(std::string_view descriptor, std::uint64_t seed);

}  // namespace indom
