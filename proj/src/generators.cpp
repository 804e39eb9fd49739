#include "indom/generators.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

#include "indom/error.hpp"
#include "indom/rng.hpp"

namespace indom {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

void check_size(long long n, const char* what) {
  if (n < 0 || n > kMaxVertices) throw InvalidInput(std::string(what) + ": vertex count out of range");
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[idx(u)], perm[idx(v)]);
  return Graph::from_edges(g.order(), edges);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t at = s.find(sep, start);
    out.push_back(s.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
    if (at == std::string_view::npos) return out;
    start = at + 1;
  }
}

long long to_int(std::string_view s, std::string_view descriptor) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw InvalidInput("bad integer '" + std::string(s) + "' in generator '" + std::string(descriptor) + "'");
  return v;
}

double to_real(std::string_view s, std::string_view descriptor) {
  try {
    std::size_t used = 0;
    const double v = std::stod(std::string(s), &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw InvalidInput("bad number '" + std::string(s) + "' in generator '" + std::string(descriptor) + "'");
}

}  // namespace

Graph path_graph(int n) {
  check_size(n, "path");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

Graph cycle_graph(int n) {
  check_size(n, "cycle");
  if (n < 3) throw InvalidInput("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e);
}

Graph star_graph(int leaves) {
  check_size(leaves + 1LL, "star");
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, e);
}

Graph grid_graph(int rows, int cols) {
  if (rows < 0 || cols < 0) throw InvalidInput("grid dimensions must be non-negative");
  check_size(static_cast<long long>(rows) * cols, "grid");
  std::vector<Edge> e;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) e.emplace_back(r * cols + c, r * cols + c + 1);
      if (r + 1 < rows) e.emplace_back(r * cols + c, (r + 1) * cols + c);
    }
  return Graph::from_edges(rows * cols, e);
}

Graph complete_graph(int n) {
  check_size(n, "complete");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

Graph empty_graph(int n) {
  check_size(n, "empty");
  return Graph::from_edges(n, {});
}

Graph complete_multipartite(const std::vector<int>& parts) {
  long long total = 0;
  for (int p : parts) {
    if (p < 0) throw InvalidInput("multipartite: negative part size");
    total += p;
  }
  check_size(total, "multipartite");
  std::vector<int> part_of;
  for (std::size_t i = 0; i < parts.size(); ++i) part_of.insert(part_of.end(), idx(parts[i]), static_cast<int>(i));
  std::vector<Edge> e;
  for (std::size_t i = 0; i < part_of.size(); ++i)
    for (std::size_t j = i + 1; j < part_of.size(); ++j)
      if (part_of[i] != part_of[j]) e.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return Graph::from_edges(static_cast<int>(total), e);
}

Graph triangle_union(int t) {
  check_size(3LL * t, "triangles");
  std::vector<Edge> e;
  for (int i = 0; i < t; ++i) {
    e.emplace_back(3 * i, 3 * i + 1);
    e.emplace_back(3 * i + 1, 3 * i + 2);
    e.emplace_back(3 * i, 3 * i + 2);
  }
  return Graph::from_edges(3 * t, e);
}

Graph petersen_graph() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::from_edges(10, e);
}

Graph random_gnp(int n, double p, std::uint64_t seed) {
  check_size(n, "gnp");
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("gnp: p must lie in [0, 1]");
  Rng rng(seed);
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.chance(p)) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

Graph random_chordal(int n, std::uint64_t seed) {
  check_size(n, "chordal");
  Rng rng(seed);
  std::vector<std::vector<Vertex>> adj(idx(n));
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) {
    if (rng.chance(0.1)) continue;  // start a new component
    const Vertex u = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(v)));
    std::vector<Vertex> clique{u};
    std::vector<Vertex> order = adj[idx(u)];
    rng.shuffle(order);
    for (Vertex w : order) {
      if (!rng.chance(0.5)) continue;
      bool all = true;
      for (Vertex c : clique) {
        const auto& nc = adj[idx(c)];
        if (c != w && std::find(nc.begin(), nc.end(), w) == nc.end()) all = false;
      }
      if (all) clique.push_back(w);
    }
    for (Vertex c : clique) {
      adj[idx(c)].push_back(v);
      adj[idx(v)].push_back(c);
      e.emplace_back(c, v);
    }
  }
  return relabel(Graph::from_edges(n, e), rng.permutation(n));
}

Graph random_outerplanar(int n, std::uint64_t seed) {
  check_size(n, "outerplanar");
  Rng rng(seed);
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  if (n >= 3) e.emplace_back(0, n - 1);
  // Triangulate polygon [lo..hi] with apex chosen at random, keep chords at 1/2.
  std::vector<std::pair<int, int>> stack;
  if (n >= 3) stack.emplace_back(0, n - 1);
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    if (hi - lo < 2) continue;
    const int apex = lo + 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(hi - lo - 1)));
    if (apex - lo >= 2 && rng.chance(0.5)) e.emplace_back(lo, apex);
    if (hi - apex >= 2 && rng.chance(0.5)) e.emplace_back(apex, hi);
    stack.emplace_back(lo, apex);
    stack.emplace_back(apex, hi);
  }
  return relabel(Graph::from_edges(n, e), rng.permutation(n));
}

GeneratedGraph generate(std::string_view descriptor, std::uint64_t seed) {
  const auto parts = split(descriptor, ':');
  const std::string_view kind = parts[0];
  auto arg = [&](std::size_t i) -> std::string_view {
    if (i >= parts.size()) throw InvalidInput("generator '" + std::string(descriptor) + "' is missing parameters");
    return parts[i];
  };
  auto int_arg = [&](std::size_t i) {
    const long long v = to_int(arg(i), descriptor);
    check_size(v, std::string(kind).c_str());
    return static_cast<int>(v);
  };
  std::size_t expected = 2;

  GeneratedGraph out;
  out.descriptor = std::string(descriptor);
  if (kind == "gnp") {
    out.graph = random_gnp(int_arg(1), to_real(arg(2), descriptor), seed);
    expected = 3;
  } else if (kind == "path") {
    out.graph = path_graph(int_arg(1));
  } else if (kind == "cycle") {
    out.graph = cycle_graph(int_arg(1));
  } else if (kind == "star") {
    out.graph = star_graph(int_arg(1));
  } else if (kind == "grid") {
    out.graph = grid_graph(int_arg(1), int_arg(2));
    expected = 3;
  } else if (kind == "complete") {
    out.graph = complete_graph(int_arg(1));
  } else if (kind == "empty") {
    out.graph = empty_graph(int_arg(1));
  } else if (kind == "multipartite") {
    std::vector<int> sizes;
    for (auto s : split(arg(1), ',')) sizes.push_back(static_cast<int>(to_int(s, descriptor)));
    out.graph = complete_multipartite(sizes);
  } else if (kind == "triangles") {
    out.graph = triangle_union(int_arg(1));
  } else if (kind == "petersen") {
    out.graph = petersen_graph();
    expected = 1;
  } else if (kind == "cograph") {
    Cotree t = random_cotree(int_arg(1), seed);
    out.graph = cotree_to_graph(t);
    out.cotree = std::move(t);
  } else if (kind == "chordal") {
    out.graph = random_chordal(int_arg(1), seed);
  } else if (kind == "dh") {
    PruningSequence s = random_dh_sequence(int_arg(1), seed);
    out.graph = replay_pruning_sequence(s);
    out.pruning = std::move(s);
  } else if (kind == "permutation") {
    PermutationDiagram d = random_diagram(int_arg(1), seed);
    out.graph = diagram_to_graph(d);
    out.diagram = std::move(d);
  } else if (kind == "outerplanar") {
    out.graph = random_outerplanar(int_arg(1), seed);
  } else {
    throw InvalidInput("unknown generator '" + std::string(kind) + "'");
  }
  if (parts.size() != expected) throw InvalidInput("generator '" + std::string(descriptor) + "' has the wrong number of parameters");
  return out;
}

}  // namespace indom
