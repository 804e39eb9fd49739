#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "indom/bitset.hpp"

namespace indom {

using Edge = std::pair<Vertex, Vertex>;

// Largest vertex count a Graph may have. Every graph stores n bit rows of n
// bits, so this bounds memory at n^2/8 bytes.
inline constexpr int kMaxVertices = 1 << 15;

// Simple undirected graph on vertices 0..n-1, kept both as sorted neighbor
// lists and as bit rows. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  // Rejects out-of-range endpoints and self-loops; duplicate edges collapse.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const { return static_cast<int>(adjacency_.size()); }
  std::size_t size() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  const VertexSet& row(Vertex v) const { return rows_[static_cast<std::size_t>(v)]; }
  VertexSet closed_neighborhood(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const { return rows_[static_cast<std::size_t>(u)].contains(v); }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }

  // Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  VertexSet empty_set() const { return VertexSet(adjacency_.size()); }
  VertexSet all() const { return VertexSet::full(adjacency_.size()); }

  bool operator==(const Graph& other) const { return adjacency_ == other.adjacency_; }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<VertexSet> rows_;
  std::size_t edge_count_ = 0;
};

inline Graph build_graph(int n, std::span<const Edge> edges) { return Graph::from_edges(n, edges); }

// True iff every vertex of b lies in N[x] for some x in d.
bool dominates(const Graph& g, const VertexSet& d, const VertexSet& b);
bool is_independent(const Graph& g, const VertexSet& s);
// Union of N[x] over x in s.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);

Graph complement(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;  // subgraph id -> parent id, increasing
  VertexSet lift(const VertexSet& local, int parent_order) const;
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// Components ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);
// Components of g[s], same ordering.
std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& s);

Graph disjoint_union(const Graph& g, const Graph& h);

// Product vertex (a, b) has index a * |V(h)| + b.
Graph cartesian_product(const Graph& g, const Graph& h);
Graph strong_product(const Graph& g, const Graph& h);
inline std::pair<Vertex, Vertex> product_coordinates(Vertex v, int h_order) {
  return {v / h_order, v % h_order};
}

struct EdgeCliqueGraph {
  Graph graph;
  std::vector<Edge> edges;  // vertex i of graph is edges[i] of the source
};
// Two distinct edges are adjacent iff their endpoints span a clique: they
// share an endpoint and the other two endpoints are adjacent.
EdgeCliqueGraph edge_clique_graph(const Graph& g);

}  // namespace indom
