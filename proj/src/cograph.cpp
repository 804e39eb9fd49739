#include "indom/cograph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "indom/error.hpp"
#include "indom/graph_io.hpp"
#include "indom/rng.hpp"

namespace indom {

namespace {

std::vector<VertexSet> co_components(const Graph& g, const VertexSet& s) {
  std::vector<VertexSet> out;
  VertexSet unseen = s;
  std::vector<Vertex> stack;
  for (Vertex start = unseen.first(); start != -1; start = unseen.first()) {
    VertexSet comp = g.empty_set();
    unseen.erase(start);
    stack.push_back(start);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      comp.insert(x);
      const VertexSet reach = unseen - g.row(x);
      reach.for_each([&](Vertex y) {
        unseen.erase(y);
        stack.push_back(y);
      });
    }
    out.push_back(std::move(comp));
  }
  return out;
}

// g[s] and its complement are both connected and |s| >= 2, so an induced P4
// exists; every P4 a-b-c-d has a middle edge b-c.
P4Witness find_p4(const Graph& g, const VertexSet& s) {
  for (Vertex b = s.first(); b != -1; b = s.next(b)) {
    for (Vertex c : g.neighbors(b)) {
      if (!s.contains(c)) continue;
      const VertexSet ends_b = (g.row(b) & s) - g.closed_neighborhood(c);
      const VertexSet ends_c = (g.row(c) & s) - g.closed_neighborhood(b);
      if (ends_c.empty()) continue;
      for (Vertex a = ends_b.first(); a != -1; a = ends_b.next(a)) {
        const VertexSet far = ends_c - g.row(a);
        if (far.any()) return {a, b, c, far.first()};
      }
    }
  }
  throw std::logic_error("no induced P4 in a prime subgraph");
}

const char* kind_name(CotreeKind k) {
  switch (k) {
    case CotreeKind::Leaf: return "LEAF";
    case CotreeKind::Union: return "UNION";
    case CotreeKind::Join: return "JOIN";
  }
  return "?";
}

}  // namespace

std::variant<Cotree, P4Witness> build_cotree(const Graph& g) {
  Cotree t;
  t.vertex_count = g.order();
  if (g.order() == 0) return t;

  struct Task {
    VertexSet set;
    int parent;
  };
  std::vector<Task> stack;
  stack.push_back({g.all(), -1});
  while (!stack.empty()) {
    Task task = std::move(stack.back());
    stack.pop_back();
    const int id = static_cast<int>(t.nodes.size());
    CotreeNode node;
    node.parent = task.parent;
    std::vector<VertexSet> parts;
    if (task.set.count() == 1) {
      node.kind = CotreeKind::Leaf;
      node.vertex = task.set.first();
    } else {
      parts = connected_components(g, task.set);
      node.kind = CotreeKind::Union;
      if (parts.size() == 1) {
        parts = co_components(g, task.set);
        node.kind = CotreeKind::Join;
        if (parts.size() == 1) return find_p4(g, task.set);
      }
    }
    t.nodes.push_back(std::move(node));
    if (task.parent >= 0) t.nodes[static_cast<std::size_t>(task.parent)].children.push_back(id);
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) stack.push_back({std::move(*it), id});
  }
  return t;
}

void validate_cotree(const Cotree& t) {
  const auto count = t.nodes.size();
  if (count == 0) {
    if (t.vertex_count != 0) throw InvalidInput("empty cotree with nonzero vertex count");
    return;
  }
  if (t.nodes[0].parent != -1) throw InvalidInput("cotree root has a parent");
  std::vector<int> seen(static_cast<std::size_t>(t.vertex_count), 0);
  int leaves = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const CotreeNode& node = t.nodes[i];
    if (i > 0 && (node.parent < 0 || static_cast<std::size_t>(node.parent) >= i))
      throw InvalidInput("cotree node " + std::to_string(i) + " does not follow its parent");
    for (int c : node.children) {
      if (c <= static_cast<int>(i) || static_cast<std::size_t>(c) >= count || t.nodes[static_cast<std::size_t>(c)].parent != static_cast<int>(i))
        throw InvalidInput("cotree node " + std::to_string(i) + " has an inconsistent child " + std::to_string(c));
    }
    if (node.kind == CotreeKind::Leaf) {
      if (!node.children.empty()) throw InvalidInput("cotree leaf with children");
      if (node.vertex < 0 || node.vertex >= t.vertex_count || seen[static_cast<std::size_t>(node.vertex)]++)
        throw InvalidInput("cotree leaves are not a bijection onto the vertices");
      ++leaves;
    } else if (node.children.size() < 2) {
      throw InvalidInput("cotree node " + std::to_string(i) + " has fewer than two children");
    }
  }
  std::size_t linked = 0;
  for (const auto& node : t.nodes) linked += node.children.size();
  if (linked + 1 != count) throw InvalidInput("cotree parent links do not form a tree");
  if (leaves != t.vertex_count) throw InvalidInput("cotree leaf count differs from vertex count");
}

bool is_canonical(const Cotree& t) {
  for (const auto& node : t.nodes) {
    if (node.kind == CotreeKind::Leaf || node.parent < 0) continue;
    if (t.nodes[static_cast<std::size_t>(node.parent)].kind == node.kind) return false;
  }
  return true;
}

Graph cotree_to_graph(const Cotree& t) {
  std::vector<std::vector<Vertex>> leaves(t.nodes.size());
  std::vector<Edge> edges;
  for (std::size_t i = t.nodes.size(); i-- > 0;) {
    const CotreeNode& node = t.nodes[i];
    if (node.kind == CotreeKind::Leaf) {
      leaves[i].push_back(node.vertex);
      continue;
    }
    if (node.kind == CotreeKind::Join) {
      for (std::size_t a = 0; a < node.children.size(); ++a)
        for (std::size_t b = a + 1; b < node.children.size(); ++b)
          for (Vertex u : leaves[static_cast<std::size_t>(node.children[a])])
            for (Vertex v : leaves[static_cast<std::size_t>(node.children[b])]) edges.emplace_back(u, v);
    }
    for (int c : node.children) {
      auto& sub = leaves[static_cast<std::size_t>(c)];
      leaves[i].insert(leaves[i].end(), sub.begin(), sub.end());
      sub.clear();
      sub.shrink_to_fit();
    }
  }
  return Graph::from_edges(t.vertex_count, edges);
}

int gamma_cograph(const Cotree& t) {
  if (t.nodes.empty()) return 0;
  std::vector<int> value(t.nodes.size(), 0);
  for (std::size_t i = t.nodes.size(); i-- > 0;) {
    const CotreeNode& node = t.nodes[i];
    switch (node.kind) {
      case CotreeKind::Leaf:
        value[i] = 1;
        break;
      case CotreeKind::Union:
        for (int c : node.children) value[i] += value[static_cast<std::size_t>(c)];
        break;
      case CotreeKind::Join:
        value[i] = 2;
        for (int c : node.children) value[i] = std::min(value[i], value[static_cast<std::size_t>(c)]);
        break;
    }
  }
  return value[0];
}

int gamma_i_cotree(const Cotree& t) {
  if (t.nodes.empty()) return 0;
  const CotreeNode& root = t.nodes[0];
  return root.kind == CotreeKind::Union ? static_cast<int>(root.children.size()) : 1;
}

GammaIResult gamma_i_cograph(const Graph& g) {
  auto built = build_cotree(g);
  if (auto* p4 = std::get_if<P4Witness>(&built)) {
    const P4Witness w = *p4;
    throw ClassMismatch("cograph", {w.begin(), w.end()},
                        "not a cograph: induced P4 " + std::to_string(w[0]) + "-" + std::to_string(w[1]) + "-" +
                            std::to_string(w[2]) + "-" + std::to_string(w[3]));
  }
  GammaIResult result;
  result.certificate.independent_set = g.empty_set();
  result.certificate.dominating_set = g.empty_set();
  for (const VertexSet& comp : connected_components(g)) {
    VertexSet mis = g.empty_set();
    comp.for_each([&](Vertex v) {
      if (!g.row(v).intersects(mis)) mis.insert(v);
    });
    Vertex dominator = -1;
    for (Vertex u = comp.first(); u != -1 && dominator == -1; u = comp.next(u))
      if (mis.is_subset_of(g.closed_neighborhood(u))) dominator = u;
    if (dominator == -1) throw std::logic_error("cograph component without a single dominator of its independent set");
    result.certificate.independent_set |= mis;
    result.certificate.dominating_set.insert(dominator);
    ++result.value;
  }
  result.certificate.value = result.value;
  return result;
}

Cotree random_cotree(int n, std::uint64_t seed) {
  if (n < 0) throw InvalidInput("negative cotree size");
  Cotree t;
  t.vertex_count = n;
  if (n == 0) return t;
  Rng rng(seed);
  struct Task {
    int size;
    int parent;
    CotreeKind kind;
  };
  std::vector<Task> stack;
  stack.push_back({n, -1, rng.chance(0.5) ? CotreeKind::Union : CotreeKind::Join});
  while (!stack.empty()) {
    const Task task = stack.back();
    stack.pop_back();
    const int id = static_cast<int>(t.nodes.size());
    CotreeNode node;
    node.parent = task.parent;
    node.kind = task.size == 1 ? CotreeKind::Leaf : task.kind;
    t.nodes.push_back(node);
    if (task.parent >= 0) t.nodes[static_cast<std::size_t>(task.parent)].children.push_back(id);
    if (task.size == 1) continue;

    const int parts = rng.between(2, std::min(task.size, 4));
    std::vector<int> cuts;
    while (static_cast<int>(cuts.size()) < parts - 1) {
      const int c = rng.between(1, task.size - 1);
      if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.insert(cuts.begin(), 0);
    cuts.push_back(task.size);
    const CotreeKind child_kind = task.kind == CotreeKind::Union ? CotreeKind::Join : CotreeKind::Union;
    for (std::size_t k = cuts.size() - 1; k-- > 0;) stack.push_back({cuts[k + 1] - cuts[k], id, child_kind});
  }
  std::vector<int> labels = rng.permutation(n);
  std::size_t next = 0;
  for (auto& node : t.nodes)
    if (node.kind == CotreeKind::Leaf) node.vertex = labels[next++];
  return t;
}

std::string write_cotree(const Cotree& t) {
  std::ostringstream out;
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const CotreeNode& node = t.nodes[i];
    out << "node " << i << ' ' << kind_name(node.kind);
    if (node.kind == CotreeKind::Leaf) out << ' ' << node.vertex;
    out << " parent " << node.parent << '\n';
  }
  return out.str();
}

Cotree read_cotree(std::string_view text) {
  Cotree t;
  int leaves = 0;
  for (const TokenLine& line : tokenize_lines(text)) {
    const auto& tok = line.tokens;
    if (tok.size() < 5 || tok[0] != "node") throw ParseError(line.number, "expected 'node <id> <kind> [vertex] parent <id>'");
    const long long id = parse_integer(tok[1], line.number);
    if (id != static_cast<long long>(t.nodes.size())) throw ParseError(line.number, "node ids must be consecutive in preorder");
    CotreeNode node;
    std::size_t next = 3;
    if (tok[2] == "LEAF") {
      node.kind = CotreeKind::Leaf;
      if (tok.size() != 6) throw ParseError(line.number, "leaf needs a vertex");
      node.vertex = static_cast<Vertex>(parse_integer(tok[3], line.number));
      next = 4;
      ++leaves;
    } else if (tok[2] == "UNION" || tok[2] == "JOIN") {
      node.kind = tok[2] == "UNION" ? CotreeKind::Union : CotreeKind::Join;
      if (tok.size() != 5) throw ParseError(line.number, "internal node takes no vertex");
    } else {
      throw ParseError(line.number, "unknown node kind '" + tok[2] + "'");
    }
    if (tok[next] != "parent") throw ParseError(line.number, "expected 'parent'");
    node.parent = static_cast<int>(parse_integer(tok[next + 1], line.number));
    if (node.parent >= static_cast<int>(id) || (id > 0 && node.parent < 0) || (id == 0 && node.parent != -1))
      throw ParseError(line.number, "parent must precede the node");
    if (node.parent >= 0) t.nodes[static_cast<std::size_t>(node.parent)].children.push_back(static_cast<int>(id));
    t.nodes.push_back(std::move(node));
  }
  t.vertex_count = leaves;
  validate_cotree(t);
  return t;
}

}  // namespace indom
