#include "indom/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "indom/error.hpp"
#include "indom/graph_io.hpp"
#include "indom/rng.hpp"

namespace indom {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

void check_permutation(const std::vector<int>& p, const char* which) {
  std::vector<bool> seen(p.size(), false);
  for (int x : p) {
    if (x < 0 || idx(x) >= p.size() || seen[idx(x)])
      throw InvalidInput(std::string(which) + " line is not a permutation of 0..n-1");
    seen[idx(x)] = true;
  }
}

// Set k+1 for every k in src.
void or_shifted(Bitset& dst, const Bitset& src) {
  const auto limit = static_cast<Vertex>(dst.size());
  src.for_each([&](Vertex k) {
    if (k + 1 < limit) dst.insert(k + 1);
  });
}

int max_member(const Bitset& b) {
  int best = -1;
  b.for_each([&](Vertex k) { best = k; });
  return best;
}

}  // namespace

void validate_diagram(const PermutationDiagram& d) {
  if (d.top.size() != d.bottom.size()) throw InvalidInput("top and bottom lines differ in length");
  check_permutation(d.top, "top");
  check_permutation(d.bottom, "bottom");
}

bool segments_cross(const PermutationDiagram& d, Vertex i, Vertex j) {
  return (d.top[idx(i)] - d.top[idx(j)]) * (d.bottom[idx(i)] - d.bottom[idx(j)]) < 0;
}

Graph diagram_to_graph(const PermutationDiagram& d) {
  validate_diagram(d);
  const int n = d.order();
  // Sweep by top position; j crosses i (j after i on top) iff j is before i on the bottom.
  std::vector<Vertex> by_top(idx(n));
  for (Vertex v = 0; v < n; ++v) by_top[idx(d.top[idx(v)])] = v;
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a) {
    const Vertex i = by_top[idx(a)];
    for (int b = a + 1; b < n; ++b) {
      const Vertex j = by_top[idx(b)];
      if (d.bottom[idx(j)] < d.bottom[idx(i)]) edges.emplace_back(std::min(i, j), std::max(i, j));
    }
  }
  return Graph::from_edges(n, edges);
}

PermutationDiagram mirror(const PermutationDiagram& d) {
  PermutationDiagram m = d;
  const int n = d.order();
  for (auto& t : m.top) t = n - 1 - t;
  for (auto& b : m.bottom) b = n - 1 - b;
  return m;
}

PermutationDiagram cotree_to_diagram(const Cotree& t) {
  validate_cotree(t);
  const int n = t.vertex_count;
  std::vector<std::vector<Vertex>> top(t.nodes.size());
  std::vector<std::vector<Vertex>> bottom(t.nodes.size());
  // Preorder storage: children have larger indices than parents.
  for (std::size_t i = t.nodes.size(); i-- > 0;) {
    const CotreeNode& node = t.nodes[i];
    if (node.kind == CotreeKind::Leaf) {
      top[i] = {node.vertex};
      bottom[i] = {node.vertex};
      continue;
    }
    for (int c : node.children) {
      auto& ct = top[idx(c)];
      top[i].insert(top[i].end(), ct.begin(), ct.end());
      std::vector<Vertex>().swap(ct);
    }
    auto order = node.children;
    if (node.kind == CotreeKind::Join) std::reverse(order.begin(), order.end());
    for (int c : order) {
      auto& cb = bottom[idx(c)];
      bottom[i].insert(bottom[i].end(), cb.begin(), cb.end());
      std::vector<Vertex>().swap(cb);
    }
  }
  PermutationDiagram d;
  d.top.assign(idx(n), 0);
  d.bottom.assign(idx(n), 0);
  if (t.nodes.empty()) return d;
  for (std::size_t p = 0; p < top[0].size(); ++p) d.top[idx(top[0][p])] = static_cast<int>(p);
  for (std::size_t p = 0; p < bottom[0].size(); ++p) d.bottom[idx(bottom[0][p])] = static_cast<int>(p);
  return d;
}

PermutationDiagram random_diagram(int n, std::uint64_t seed) {
  if (n < 0) throw InvalidInput("diagram size must be non-negative");
  Rng rng(seed);
  PermutationDiagram d;
  d.top = rng.permutation(n);
  d.bottom = rng.permutation(n);
  return d;
}

std::string write_diagram(const PermutationDiagram& d) {
  std::ostringstream out;
  out << d.order() << '\n';
  for (const auto* line : {&d.top, &d.bottom}) {
    for (std::size_t i = 0; i < line->size(); ++i) out << (i ? " " : "") << (*line)[i];
    out << '\n';
  }
  return out.str();
}

PermutationDiagram read_diagram(std::string_view text) {
  const auto lines = tokenize_lines(text);
  if (lines.empty() || lines[0].tokens.size() != 1) throw ParseError(lines.empty() ? 1 : lines[0].number, "expected vertex count");
  const long long n = parse_integer(lines[0].tokens[0], lines[0].number);
  if (n < 0 || n > kMaxVertices) throw ParseError(lines[0].number, "vertex count out of range");
  PermutationDiagram d;
  if (n == 0) {
    if (lines.size() != 1) throw ParseError(lines[1].number, "unexpected data after empty diagram");
    return d;
  }
  if (lines.size() != 3) throw ParseError(lines.back().number, "expected a top line and a bottom line");
  for (int which = 0; which < 2; ++which) {
    const TokenLine& line = lines[idx(which + 1)];
    if (static_cast<long long>(line.tokens.size()) != n)
      throw ParseError(line.number, "expected " + std::to_string(n) + " positions");
    auto& dst = which == 0 ? d.top : d.bottom;
    for (const auto& tok : line.tokens) dst.push_back(static_cast<int>(parse_integer(tok, line.number)));
  }
  validate_diagram(d);
  return d;
}

std::vector<Vertex> rightmost_neighbor_order(const PermutationDiagram& d, const Graph& g, Vertex x) {
  std::vector<Vertex> c = g.closed_neighborhood(x).to_vector();
  std::sort(c.begin(), c.end(), [&](Vertex a, Vertex b) {
    const int ka = std::max(d.top[idx(a)], d.bottom[idx(a)]);
    const int kb = std::max(d.top[idx(b)], d.bottom[idx(b)]);
    if (ka != kb) return ka > kb;
    return d.top[idx(a)] > d.top[idx(b)];
  });
  return c;
}

Vertex rightmost_neighbor(const PermutationDiagram& d, const Graph& g, Vertex x, std::optional<Vertex> avoid) {
  for (Vertex z : rightmost_neighbor_order(d, g, x))
    if (!avoid || !g.adjacent(*avoid, z)) return z;
  return -1;
}

const Bitset* GammaSets::find(Vertex x, Vertex z) const {
  const auto& c = candidates[idx(x)];
  const auto it = std::lower_bound(c.begin(), c.end(), z);
  if (it == c.end() || *it != z) return nullptr;
  return &values[idx(x)][static_cast<std::size_t>(it - c.begin())];
}

namespace {

// Members of c whose top or whose bottom endpoint is rightmost within c.
std::vector<Vertex> either_rightmost(const PermutationDiagram& d, const std::vector<Vertex>& c) {
  if (c.empty()) return {};
  Vertex by_top = c[0];
  Vertex by_bottom = c[0];
  for (Vertex v : c) {
    if (d.top[idx(v)] > d.top[idx(by_top)]) by_top = v;
    if (d.bottom[idx(v)] > d.bottom[idx(by_bottom)]) by_bottom = v;
  }
  if (by_top == by_bottom) return {by_top};
  return {by_top, by_bottom};
}

std::size_t slot(const GammaSets& s, Vertex x, Vertex z) {
  const auto& c = s.candidates[idx(x)];
  return static_cast<std::size_t>(std::lower_bound(c.begin(), c.end(), z) - c.begin());
}

}  // namespace

PermutationResult gamma_i_permutation(const PermutationDiagram& d, RuleSet rules) {
  const Graph g = diagram_to_graph(d);
  const int n = d.order();
  PermutationResult result;
  GammaSets& s = result.sets;
  s.n = n;
  s.candidates.resize(idx(n));
  s.values.resize(idx(n));
  for (Vertex x = 0; x < n; ++x) {
    s.candidates[idx(x)] = g.closed_neighborhood(x).to_vector();
    s.values[idx(x)].assign(s.candidates[idx(x)].size(), Bitset(idx(n) + 1));
  }

  std::vector<Vertex> by_top(idx(n));
  for (Vertex v = 0; v < n; ++v) by_top[idx(d.top[idx(v)])] = v;

  std::vector<Bitset> all_values(idx(n), Bitset(idx(n) + 1));  // union over z of gamma_x(z)
  std::vector<int> lambda(idx(n), 0);
  std::vector<Vertex> pred(idx(n), -1);

  for (Vertex x : by_top) {
    auto& vx = s.values[idx(x)];
    const VertexSet nx = g.closed_neighborhood(x);
    Bitset far_values(idx(n) + 1);
    int best_far = 0;

    if (rules == RuleSet::Corrected) {
      for (auto& b : vx) b.insert(1);
    } else {
      for (Vertex z : either_rightmost(d, s.candidates[idx(x)])) vx[slot(s, x, z)].insert(1);
    }

    for (int pos = 0; pos < d.top[idx(x)]; ++pos) {
      const Vertex y = by_top[idx(pos)];
      if (d.bottom[idx(y)] > d.bottom[idx(x)]) continue;  // crosses x
      const VertexSet ny = g.closed_neighborhood(y);
      const bool apart = !nx.intersects(ny);
      if (apart && lambda[idx(y)] > best_far) {
        best_far = lambda[idx(y)];
        pred[idx(x)] = y;
      }

      if (rules == RuleSet::Corrected) {
        if (apart) {
          or_shifted(far_values, all_values[idx(y)]);
        } else {
          (g.row(y) & g.row(x)).for_each([&](Vertex z) { vx[slot(s, x, z)] |= *s.find(y, z); });
        }
        continue;
      }

      for (Vertex z : either_rightmost(d, s.candidates[idx(y)])) {
        if (z != y && g.adjacent(x, z)) vx[slot(s, x, z)] |= *s.find(y, z);
      }
      std::vector<Vertex> away;
      for (Vertex z : s.candidates[idx(x)])
        if (!g.adjacent(y, z)) away.push_back(z);
      for (Vertex z : either_rightmost(d, away)) {
        Bitset& target = vx[slot(s, x, z)];
        ny.for_each([&](Vertex zp) {
          if (!g.adjacent(x, zp)) or_shifted(target, *s.find(y, zp));
        });
      }
    }
    if (rules == RuleSet::Corrected)
      for (auto& b : vx) b |= far_values;
    for (const auto& b : vx) all_values[idx(x)] |= b;
    lambda[idx(x)] = 1 + best_far;
  }

  int value = 0;
  for (Vertex x = 0; x < n; ++x) value = std::max(value, max_member(all_values[idx(x)]));

  Vertex end = -1;
  for (Vertex x : by_top)
    if (end == -1 || lambda[idx(x)] > lambda[idx(end)]) end = x;
  for (Vertex v = end; v != -1; v = pred[idx(v)]) result.chain.push_back(v);
  std::reverse(result.chain.begin(), result.chain.end());

  if (rules == RuleSet::Corrected && n > 0 && value != lambda[idx(end)])
    throw std::logic_error("permutation value sets disagree with the chain length");

  result.value = value;
  result.certificate.independent_set = g.empty_set();
  for (Vertex v : result.chain) result.certificate.independent_set.insert(v);
  // Chain members have pairwise disjoint closed neighborhoods, so each needs its own dominator.
  result.certificate.dominating_set = result.certificate.independent_set;
  result.certificate.value = static_cast<int>(result.chain.size());
  return result;
}

}  // namespace indom
