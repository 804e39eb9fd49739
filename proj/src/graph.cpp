#include "indom/graph.hpp"

#include <algorithm>
#include <string>

#include "indom/error.hpp"

namespace indom {

namespace {

std::string pair_text(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

void check_order(long long n) {
  if (n < 0) throw InvalidInput("negative vertex count");
  if (n > kMaxVertices)
    throw CapacityError("vertex count " + std::to_string(n) + " exceeds limit " + std::to_string(kMaxVertices));
}

}  // namespace

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  check_order(n);
  Graph g;
  g.adjacency_.assign(static_cast<std::size_t>(n), {});
  g.rows_.assign(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(n)));
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw InvalidInput("edge " + pair_text(u, v) + " has an endpoint out of range");
    if (u == v) throw InvalidInput("edge " + pair_text(u, v) + " is a self-loop");
    g.rows_[static_cast<std::size_t>(u)].insert(v);
    g.rows_[static_cast<std::size_t>(v)].insert(u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& adj = g.adjacency_[static_cast<std::size_t>(v)];
    adj = g.rows_[static_cast<std::size_t>(v)].to_vector();
    g.edge_count_ += adj.size();
  }
  g.edge_count_ /= 2;
  return g;
}

VertexSet Graph::closed_neighborhood(Vertex v) const {
  VertexSet s = row(v);
  s.insert(v);
  return s;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet out = s;
  s.for_each([&](Vertex x) { out |= g.row(x); });
  return out;
}

bool dominates(const Graph& g, const VertexSet& d, const VertexSet& b) {
  return b.is_subset_of(closed_neighborhood(g, d));
}

bool is_independent(const Graph& g, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](Vertex x) { ok = ok && !g.row(x).intersects(s); });
  return ok;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

VertexSet InducedSubgraph::lift(const VertexSet& local, int parent_order) const {
  VertexSet out(static_cast<std::size_t>(parent_order));
  local.for_each([&](Vertex v) { out.insert(to_parent[static_cast<std::size_t>(v)]); });
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  InducedSubgraph result;
  result.to_parent = s.to_vector();
  std::vector<Vertex> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < result.to_parent.size(); ++i)
    local[static_cast<std::size_t>(result.to_parent[i])] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (Vertex u : result.to_parent)
    for (Vertex v : g.neighbors(u))
      if (u < v && s.contains(v)) edges.emplace_back(local[static_cast<std::size_t>(u)], local[static_cast<std::size_t>(v)]);
  result.graph = Graph::from_edges(static_cast<int>(result.to_parent.size()), edges);
  return result;
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& s) {
  std::vector<VertexSet> out;
  VertexSet unseen = s;
  std::vector<Vertex> stack;
  for (Vertex start = unseen.first(); start != -1; start = unseen.first()) {
    VertexSet comp = g.empty_set();
    stack.push_back(start);
    unseen.erase(start);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      comp.insert(x);
      for (Vertex y : g.neighbors(x)) {
        if (unseen.contains(y)) {
          unseen.erase(y);
          stack.push_back(y);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) { return connected_components(g, g.all()); }

Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<Edge> edges = g.edges();
  for (auto [u, v] : h.edges()) edges.emplace_back(u + g.order(), v + g.order());
  check_order(static_cast<long long>(g.order()) + h.order());
  return Graph::from_edges(g.order() + h.order(), edges);
}

namespace {

int product_order(const Graph& g, const Graph& h) {
  const long long n = static_cast<long long>(g.order()) * h.order();
  check_order(n);
  return static_cast<int>(n);
}

}  // namespace

Graph cartesian_product(const Graph& g, const Graph& h) {
  const int n = product_order(g, h);
  const int m = h.order();
  std::vector<Edge> edges;
  for (Vertex a = 0; a < g.order(); ++a) {
    for (auto [b1, b2] : h.edges()) edges.emplace_back(a * m + b1, a * m + b2);
  }
  for (auto [a1, a2] : g.edges()) {
    for (Vertex b = 0; b < m; ++b) edges.emplace_back(a1 * m + b, a2 * m + b);
  }
  return Graph::from_edges(n, edges);
}

Graph strong_product(const Graph& g, const Graph& h) {
  const int n = product_order(g, h);
  const int m = h.order();
  std::vector<Edge> edges;
  for (Vertex a1 = 0; a1 < g.order(); ++a1) {
    const VertexSet ga = g.closed_neighborhood(a1);
    for (Vertex b1 = 0; b1 < m; ++b1) {
      const VertexSet hb = h.closed_neighborhood(b1);
      ga.for_each([&](Vertex a2) {
        hb.for_each([&](Vertex b2) {
          const Vertex u = a1 * m + b1;
          const Vertex v = a2 * m + b2;
          if (u < v) edges.emplace_back(u, v);
        });
      });
    }
  }
  return Graph::from_edges(n, edges);
}

EdgeCliqueGraph edge_clique_graph(const Graph& g) {
  EdgeCliqueGraph result;
  result.edges = g.edges();
  const auto& es = result.edges;
  std::vector<Edge> adj;
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      const auto [a, b] = es[i];
      const auto [c, d] = es[j];
      Vertex x = -1;
      Vertex y = -1;
      if (a == c) { x = b; y = d; }
      else if (a == d) { x = b; y = c; }
      else if (b == c) { x = a; y = d; }
      else if (b == d) { x = a; y = c; }
      if (x != -1 && g.adjacent(x, y)) adj.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  if (es.size() > static_cast<std::size_t>(kMaxVertices)) throw CapacityError("edge-clique graph too large");
  result.graph = Graph::from_edges(static_cast<int>(es.size()), adj);
  return result;
}

}  // namespace indom
