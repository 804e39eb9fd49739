#include "indom/treewidth.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "indom/error.hpp"
#include "indom/graph_io.hpp"

namespace indom {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

constexpr int kInf = std::numeric_limits<int>::max() / 4;
// Largest single table, in cells.
constexpr std::size_t kMaxTableCells = std::size_t{1} << 24;

int add(int a, int b) { return (a >= kInf || b >= kInf) ? kInf : a + b; }

std::uint32_t low_mask(int pos) { return (std::uint32_t{1} << pos) - 1; }

std::uint32_t insert_bit(std::uint32_t m, int pos) {
  const std::uint32_t low = low_mask(pos);
  return (m & low) | ((m & ~low) << 1);
}

std::uint32_t remove_bit(std::uint32_t m, int pos) {
  return (m & low_mask(pos)) | ((m >> (pos + 1)) << pos);
}

int position_in(const std::vector<Vertex>& bag, Vertex v) {
  return static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
}

}  // namespace

std::uint32_t compress_bits(std::uint32_t value, std::uint32_t mask) {
  std::uint32_t out = 0;
  int k = 0;
  for (std::uint32_t m = mask; m != 0; m &= m - 1, ++k)
    if (value & (m & (~m + 1))) out |= std::uint32_t{1} << k;
  return out;
}

std::uint32_t expand_bits(std::uint32_t value, std::uint32_t mask) {
  std::uint32_t out = 0;
  int k = 0;
  for (std::uint32_t m = mask; m != 0; m &= m - 1, ++k)
    if ((value >> k) & 1U) out |= m & (~m + 1);
  return out;
}

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

std::optional<DecompositionViolation> validate_decomposition(const Graph& g, const TreeDecomposition& td) {
  using Kind = DecompositionViolation::Kind;
  const int n = g.order();
  const int nb = static_cast<int>(td.bags.size());
  for (int b = 0; b < nb; ++b)
    for (Vertex v : td.bags[idx(b)])
      if (v < 0 || v >= n)
        return DecompositionViolation{Kind::BadVertex, v, {-1, -1}, "bag " + std::to_string(b) + " holds unknown vertex " + std::to_string(v)};

  if (nb > 0) {
    if (static_cast<int>(td.edges.size()) != nb - 1)
      return DecompositionViolation{Kind::NotATree, -1, {-1, -1}, "bag tree needs exactly bags-1 edges"};
    std::vector<int> parent(idx(nb));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[idx(x)] != x) x = parent[idx(x)] = parent[idx(parent[idx(x)])];
      return x;
    };
    for (auto [a, b] : td.edges) {
      if (a < 0 || b < 0 || a >= nb || b >= nb || find(a) == find(b))
        return DecompositionViolation{Kind::NotATree, -1, {-1, -1}, "bag edges do not form a tree"};
      parent[idx(find(a))] = find(b);
    }
  }

  std::vector<Bitset> occurs(idx(n), Bitset(idx(nb)));
  for (int b = 0; b < nb; ++b)
    for (Vertex v : td.bags[idx(b)]) occurs[idx(v)].insert(b);
  for (Vertex v = 0; v < n; ++v)
    if (occurs[idx(v)].empty())
      return DecompositionViolation{Kind::VertexMissing, v, {-1, -1}, "vertex " + std::to_string(v) + " is in no bag"};
  for (const Edge& e : g.edges())
    if (!occurs[idx(e.first)].intersects(occurs[idx(e.second)]))
      return DecompositionViolation{Kind::EdgeUncovered, -1, e,
                                    "edge (" + std::to_string(e.first) + "," + std::to_string(e.second) + ") is in no bag"};

  std::vector<std::vector<int>> tree(idx(nb));
  for (auto [a, b] : td.edges) {
    tree[idx(a)].push_back(b);
    tree[idx(b)].push_back(a);
  }
  for (Vertex v = 0; v < n; ++v) {
    const Bitset& occ = occurs[idx(v)];
    Bitset seen(idx(nb));
    std::vector<int> stack{occ.first()};
    seen.insert(stack.back());
    while (!stack.empty()) {
      const int b = stack.back();
      stack.pop_back();
      for (int c : tree[idx(b)])
        if (occ.contains(c) && !seen.contains(c)) {
          seen.insert(c);
          stack.push_back(c);
        }
    }
    if (seen != occ)
      return DecompositionViolation{Kind::Disconnected, v, {-1, -1},
                                    "bags holding vertex " + std::to_string(v) + " are not connected"};
  }
  return std::nullopt;
}

TreeDecomposition heuristic_decomposition(const Graph& g) {
  const int n = g.order();
  TreeDecomposition td;
  if (n == 0) return td;
  std::vector<VertexSet> adj(idx(n));
  for (Vertex v = 0; v < n; ++v) adj[idx(v)] = g.row(v);
  VertexSet alive = g.all();

  auto fill_of = [&](Vertex u) {
    long long missing = 0;
    adj[idx(u)].for_each([&](Vertex w) {
      VertexSet others = adj[idx(u)] - adj[idx(w)];
      others.erase(w);
      missing += static_cast<long long>(others.count());
    });
    return missing / 2;
  };
  std::vector<long long> fill(idx(n));
  for (Vertex v = 0; v < n; ++v) fill[idx(v)] = fill_of(v);

  std::vector<Vertex> order;
  std::vector<int> position(idx(n), -1);
  std::vector<VertexSet> higher(idx(n));
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    alive.for_each([&](Vertex v) {
      if (pick == -1) {
        pick = v;
        return;
      }
      const auto key = std::make_pair(fill[idx(v)], adj[idx(v)].count());
      const auto best = std::make_pair(fill[idx(pick)], adj[idx(pick)].count());
      if (key < best) pick = v;
    });
    const VertexSet nb = adj[idx(pick)];
    higher[idx(pick)] = nb;
    position[idx(pick)] = step;
    order.push_back(pick);
    alive.erase(pick);
    nb.for_each([&](Vertex u) {
      adj[idx(u)] |= nb;
      adj[idx(u)].erase(u);
      adj[idx(u)].erase(pick);
    });
    VertexSet dirty = nb;
    nb.for_each([&](Vertex u) { dirty |= adj[idx(u)]; });
    dirty.for_each([&](Vertex u) { fill[idx(u)] = fill_of(u); });
  }

  int previous_root = -1;
  for (int i = 0; i < n; ++i) {
    const Vertex v = order[idx(i)];
    std::vector<Vertex> bag = higher[idx(v)].to_vector();
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    td.bags.push_back(std::move(bag));
  }
  for (int i = 0; i < n; ++i) {
    const Vertex v = order[idx(i)];
    int next = -1;
    higher[idx(v)].for_each([&](Vertex u) {
      if (next == -1 || position[idx(u)] < next) next = position[idx(u)];
    });
    if (next != -1) {
      td.edges.emplace_back(i, next);
    } else {
      if (previous_root != -1) td.edges.emplace_back(previous_root, i);
      previous_root = i;
    }
  }
  return td;
}

NiceDecomposition make_nice(const TreeDecomposition& td) {
  NiceDecomposition nice;
  auto add_node = [&](NiceKind kind, std::vector<Vertex> bag, Vertex v, int c0, int c1) {
    NiceNode node;
    node.kind = kind;
    node.bag = std::move(bag);
    node.vertex = v;
    node.children = {c0, c1};
    nice.nodes.push_back(std::move(node));
    return static_cast<int>(nice.nodes.size()) - 1;
  };
  auto introduce = [&](int child, Vertex v) {
    std::vector<Vertex> bag = nice.nodes[idx(child)].bag;
    bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
    return add_node(NiceKind::Introduce, std::move(bag), v, child, -1);
  };
  auto forget = [&](int child, Vertex v) {
    std::vector<Vertex> bag = nice.nodes[idx(child)].bag;
    bag.erase(std::find(bag.begin(), bag.end(), v));
    return add_node(NiceKind::Forget, std::move(bag), v, child, -1);
  };
  auto morph = [&](int node, const std::vector<Vertex>& target) {
    const std::vector<Vertex> from = nice.nodes[idx(node)].bag;
    for (Vertex v : from)
      if (!std::binary_search(target.begin(), target.end(), v)) node = forget(node, v);
    for (Vertex v : target)
      if (!std::binary_search(from.begin(), from.end(), v)) node = introduce(node, v);
    return node;
  };

  const int nb = static_cast<int>(td.bags.size());
  if (nb == 0) {
    add_node(NiceKind::Leaf, {}, -1, -1, -1);
    return nice;
  }
  std::vector<std::vector<int>> tree(idx(nb));
  for (auto [a, b] : td.edges) {
    tree[idx(a)].push_back(b);
    tree[idx(b)].push_back(a);
  }
  std::vector<int> bfs{0};
  std::vector<int> parent(idx(nb), -2);
  parent[0] = -1;
  for (std::size_t i = 0; i < bfs.size(); ++i)
    for (int c : tree[idx(bfs[i])])
      if (parent[idx(c)] == -2) {
        parent[idx(c)] = bfs[i];
        bfs.push_back(c);
      }

  std::vector<std::vector<int>> ready(idx(nb));  // converted children per bag
  std::vector<int> top(idx(nb), -1);
  for (std::size_t i = bfs.size(); i-- > 0;) {
    const int t = bfs[i];
    std::vector<Vertex> bag = td.bags[idx(t)];
    std::sort(bag.begin(), bag.end());
    bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    int node = -1;
    for (int c : ready[idx(t)]) {
      const int converted = morph(c, bag);
      node = node == -1 ? converted : add_node(NiceKind::Join, bag, -1, node, converted);
    }
    if (node == -1) node = morph(add_node(NiceKind::Leaf, {}, -1, -1, -1), bag);
    top[idx(t)] = node;
    if (parent[idx(t)] >= 0) ready[idx(parent[idx(t)])].push_back(node);
  }
  morph(top[0], {});
  return nice;
}

TreeDecomposition to_tree_decomposition(const NiceDecomposition& nice) {
  TreeDecomposition td;
  for (std::size_t i = 0; i < nice.nodes.size(); ++i) {
    td.bags.push_back(nice.nodes[i].bag);
    for (int c : nice.nodes[i].children)
      if (c != -1) td.edges.emplace_back(c, static_cast<int>(i));
  }
  return td;
}

std::string write_pace_td(const TreeDecomposition& td, int n) {
  std::ostringstream out;
  std::size_t max_bag = 0;
  for (const auto& b : td.bags) max_bag = std::max(max_bag, b.size());
  out << "s td " << td.bags.size() << ' ' << max_bag << ' ' << n << '\n';
  for (std::size_t i = 0; i < td.bags.size(); ++i) {
    out << "b " << i + 1;
    for (Vertex v : td.bags[i]) out << ' ' << v + 1;
    out << '\n';
  }
  for (auto [a, b] : td.edges) out << a + 1 << ' ' << b + 1 << '\n';
  return out.str();
}

TreeDecomposition read_pace_td(std::string_view text, int* vertex_count) {
  TreeDecomposition td;
  bool header = false;
  long long bags = 0;
  long long n = 0;
  std::vector<bool> defined;
  for (const TokenLine& line : tokenize_lines(text)) {
    const auto& tok = line.tokens;
    if (tok[0] == "c") continue;
    if (tok[0] == "s") {
      if (header) throw ParseError(line.number, "second solution line");
      const std::size_t off = (tok.size() > 1 && tok[1] == "td") ? 2 : 1;
      if (tok.size() != off + 3) throw ParseError(line.number, "expected 's td <bags> <max bag> <n>'");
      bags = parse_integer(tok[off], line.number);
      n = parse_integer(tok[off + 2], line.number);
      if (bags < 0 || n < 0 || n > kMaxVertices) throw ParseError(line.number, "counts out of range");
      td.bags.resize(static_cast<std::size_t>(bags));
      defined.assign(static_cast<std::size_t>(bags), false);
      header = true;
      continue;
    }
    if (!header) throw ParseError(line.number, "missing 's td' line");
    if (tok[0] == "b") {
      if (tok.size() < 2) throw ParseError(line.number, "bag line needs an id");
      const long long id = parse_integer(tok[1], line.number);
      if (id < 1 || id > bags || defined[static_cast<std::size_t>(id - 1)])
        throw ParseError(line.number, "bad or repeated bag id");
      defined[static_cast<std::size_t>(id - 1)] = true;
      auto& bag = td.bags[static_cast<std::size_t>(id - 1)];
      for (std::size_t i = 2; i < tok.size(); ++i) {
        const long long v = parse_integer(tok[i], line.number);
        if (v < 1 || v > n) throw ParseError(line.number, "vertex out of range");
        bag.push_back(static_cast<Vertex>(v - 1));
      }
      std::sort(bag.begin(), bag.end());
      bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
      continue;
    }
    if (tok.size() != 2) throw ParseError(line.number, "expected a tree edge 'i j'");
    const long long a = parse_integer(tok[0], line.number);
    const long long b = parse_integer(tok[1], line.number);
    if (a < 1 || b < 1 || a > bags || b > bags) throw ParseError(line.number, "tree edge names an unknown bag");
    td.edges.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
  }
  if (!header) throw ParseError(1, "missing 's td' line");
  if (std::find(defined.begin(), defined.end(), false) != defined.end()) throw InvalidInput("some bag is never listed");
  if (vertex_count) *vertex_count = static_cast<int>(n);
  return td;
}

// ---------------------------------------------------------------------------
// Table dynamic programming

namespace {

class TwSolver {
 public:
  TwSolver(const Graph& g, const NiceDecomposition& nice, const VertexSet* fixed, const VertexSet* candidates = nullptr)
      : g_(g), nice_(nice), fixed_(fixed), candidates_(candidates), tables_(nice.nodes.size()) {}

  // Runs bottom-up. Cost vectors of a child are released once its parent is
  // done unless keep_costs is set.
  void run(bool keep_costs) {
    for (std::size_t i = 0; i < nice_.nodes.size(); ++i) {
      const NiceNode& node = nice_.nodes[i];
      switch (node.kind) {
        case NiceKind::Leaf: tables_[i].tables.push_back({0, {0}, -1, -1}); break;
        case NiceKind::Introduce: introduce(i); break;
        case NiceKind::Forget: forget(i); break;
        case NiceKind::Join: join(i); break;
      }
      reduce(tables_[i]);
      if (tables_[i].tables.empty()) throw std::logic_error("tree decomposition DP produced no state");
      if (!keep_costs)
        for (int c : node.children)
          if (c != -1)
            for (auto& t : tables_[idx(c)].tables) std::vector<int>().swap(t.cost);
    }
  }

  std::vector<TwNodeTables>& tables() { return tables_; }

  std::pair<int, std::size_t> best_root() const {
    const auto& root = tables_.back().tables;
    std::size_t best = 0;
    for (std::size_t i = 1; i < root.size(); ++i)
      if (root[i].cost[0] > root[best].cost[0]) best = i;
    return {root[best].cost[0], best};
  }

  VertexSet independent_set(std::size_t root_table) const {
    VertexSet a = g_.empty_set();
    std::vector<std::pair<int, int>> stack{{nice_.root(), static_cast<int>(root_table)}};
    while (!stack.empty()) {
      auto [id, t] = stack.back();
      stack.pop_back();
      const NiceNode& node = nice_.nodes[idx(id)];
      const TwTable& table = tables_[idx(id)].tables[idx(t)];
      if (node.kind == NiceKind::Introduce && ((table.alpha >> position_in(node.bag, node.vertex)) & 1U))
        a.insert(node.vertex);
      if (node.children[0] != -1) stack.push_back({node.children[0], table.from});
      if (node.children[1] != -1) stack.push_back({node.children[1], table.from2});
    }
    return a;
  }

  // Only for a fixed-A run with costs kept: one table per node.
  VertexSet dominating_set() const {
    VertexSet d = g_.empty_set();
    struct Target {
      int node;
      std::uint32_t delta;
      std::uint32_t omega;
    };
    std::vector<Target> stack{{nice_.root(), 0, 0}};
    while (!stack.empty()) {
      const Target t = stack.back();
      stack.pop_back();
      const NiceNode& node = nice_.nodes[idx(t.node)];
      const TwTable& table = tables_[idx(t.node)].tables[0];
      const int a = std::popcount(table.alpha);
      const int want = table.cost[idx(static_cast<int>((t.delta << a) | t.omega))];
      if (node.kind == NiceKind::Leaf) continue;
      const int c0 = node.children[0];
      const TwTable& child = tables_[idx(c0)].tables[0];
      const int ca = std::popcount(child.alpha);
      auto child_cost = [&](const TwTable& tb, int width, std::uint32_t delta, std::uint32_t omega) {
        return tb.cost[idx(static_cast<int>((delta << width) | omega))];
      };
      if (node.kind == NiceKind::Introduce) {
        const int pos = position_in(node.bag, node.vertex);
        const std::uint32_t delta = remove_bit(t.delta, pos);
        const bool in_d = (t.delta >> pos) & 1U;
        if (in_d) d.insert(node.vertex);
        std::uint32_t omega = t.omega;
        if ((table.alpha >> pos) & 1U) {
          omega = remove_bit(t.omega, std::popcount(table.alpha & low_mask(pos)));
        } else if (in_d) {
          const std::uint32_t full = expand_bits(t.omega, table.alpha);
          omega = compress_bits(full & ~neighbor_mask(node.bag, node.vertex), table.alpha);
        }
        stack.push_back({c0, delta, omega});
      } else if (node.kind == NiceKind::Forget) {
        const int pos = position_in(child_bag(node), node.vertex);
        std::uint32_t omega = t.omega;
        if ((child.alpha >> pos) & 1U) {
          const int r = std::popcount(child.alpha & low_mask(pos));
          omega = insert_bit(t.omega, r) | (std::uint32_t{1} << r);
        }
        const std::uint32_t with = insert_bit(t.delta, pos) | (std::uint32_t{1} << pos);
        const std::uint32_t without = insert_bit(t.delta, pos);
        stack.push_back({c0, child_cost(child, ca, with, omega) == want ? with : without, omega});
      } else {
        const int c1 = node.children[1];
        const TwTable& other = tables_[idx(c1)].tables[0];
        const int size = std::popcount(t.delta);
        for (std::uint32_t w1 = t.omega;; w1 = (w1 - 1) & t.omega) {
          const int c = add(child_cost(child, a, t.delta, w1), child_cost(other, a, t.delta, t.omega ^ w1)) - size;
          if (c == want) {
            stack.push_back({c0, t.delta, w1});
            stack.push_back({c1, t.delta, t.omega ^ w1});
            break;
          }
          if (w1 == 0) throw std::logic_error("join reconstruction failed");
        }
      }
    }
    return d;
  }

 private:
  std::uint32_t neighbor_mask(const std::vector<Vertex>& bag, Vertex v) const {
    std::uint32_t m = 0;
    for (std::size_t p = 0; p < bag.size(); ++p)
      if (g_.adjacent(v, bag[p])) m |= std::uint32_t{1} << p;
    return m;
  }

  const std::vector<Vertex>& child_bag(const NiceNode& node) const { return nice_.nodes[idx(node.children[0])].bag; }

  static std::vector<int> new_cost(int bag_size, int alpha_size) {
    const std::size_t cells = std::size_t{1} << (bag_size + alpha_size);
    if (cells > kMaxTableCells) throw CapacityError("tree decomposition DP table too large (bag " + std::to_string(bag_size) + ")");
    return std::vector<int>(cells, kInf);
  }

  bool allowed(Vertex v, bool in_a) const {
    if (fixed_) return fixed_->contains(v) == in_a;
    return !in_a || !candidates_ || candidates_->contains(v);
  }

  void introduce(std::size_t i) {
    const NiceNode& node = nice_.nodes[i];
    const int s = static_cast<int>(node.bag.size());
    const int pos = position_in(node.bag, node.vertex);
    const std::uint32_t nbr = neighbor_mask(node.bag, node.vertex);
    const auto& child = tables_[idx(node.children[0])].tables;
    auto& out = tables_[i].tables;
    for (std::size_t ti = 0; ti < child.size(); ++ti) {
      const TwTable& f = child[ti];
      const int a = std::popcount(f.alpha);
      const std::uint32_t alpha = insert_bit(f.alpha, pos);
      if (allowed(node.vertex, false)) {
        TwTable t{alpha, new_cost(s, a), static_cast<int>(ti), -1};
        for (std::uint32_t dp = 0; dp < (1U << s); ++dp) {
          const std::uint32_t delta = remove_bit(dp, pos);
          const bool in_d = (dp >> pos) & 1U;
          for (std::uint32_t w = 0; w < (1U << a); ++w) {
            std::uint32_t need = w;
            if (in_d) need = compress_bits(expand_bits(w, alpha) & ~nbr, alpha);
            const int c = f.cost[idx(static_cast<int>((delta << a) | need))];
            t.cost[idx(static_cast<int>((dp << a) | w))] = in_d ? add(1, c) : c;
          }
        }
        out.push_back(std::move(t));
      }
      if (allowed(node.vertex, true) && (alpha & nbr) == 0) {
        const std::uint32_t alpha2 = alpha | (std::uint32_t{1} << pos);
        const int rank = std::popcount(alpha2 & low_mask(pos));
        TwTable t{alpha2, new_cost(s, a + 1), static_cast<int>(ti), -1};
        for (std::uint32_t dp = 0; dp < (1U << s); ++dp) {
          const std::uint32_t delta = remove_bit(dp, pos);
          const bool in_d = (dp >> pos) & 1U;
          for (std::uint32_t w = 0; w < (1U << (a + 1)); ++w) {
            const std::uint32_t old = remove_bit(w, rank);
            const int c = f.cost[idx(static_cast<int>((delta << a) | old))];
            int value;
            if (in_d) value = add(1, c);
            else if (((w >> rank) & 1U) && (dp & nbr) == 0) value = kInf;
            else value = c;
            t.cost[idx(static_cast<int>((dp << (a + 1)) | w))] = value;
          }
        }
        out.push_back(std::move(t));
      }
    }
  }

  void forget(std::size_t i) {
    const NiceNode& node = nice_.nodes[i];
    const int s = static_cast<int>(node.bag.size());
    const int pos = position_in(child_bag(node), node.vertex);
    const auto& child = tables_[idx(node.children[0])].tables;
    auto& out = tables_[i].tables;
    for (std::size_t ti = 0; ti < child.size(); ++ti) {
      const TwTable& f = child[ti];
      const int a = std::popcount(f.alpha);
      const bool in_a = (f.alpha >> pos) & 1U;
      const int r = std::popcount(f.alpha & low_mask(pos));
      const int na = in_a ? a - 1 : a;
      TwTable t{remove_bit(f.alpha, pos), new_cost(s, na), static_cast<int>(ti), -1};
      for (std::uint32_t dp = 0; dp < (1U << s); ++dp) {
        const std::uint32_t with = insert_bit(dp, pos) | (std::uint32_t{1} << pos);
        const std::uint32_t without = insert_bit(dp, pos);
        for (std::uint32_t w = 0; w < (1U << na); ++w) {
          // A forgotten member of A must already be dominated.
          const std::uint32_t cw = in_a ? (insert_bit(w, r) | (std::uint32_t{1} << r)) : w;
          t.cost[idx(static_cast<int>((dp << na) | w))] =
              std::min(f.cost[idx(static_cast<int>((with << a) | cw))], f.cost[idx(static_cast<int>((without << a) | cw))]);
        }
      }
      out.push_back(std::move(t));
    }
  }

  void join(std::size_t i) {
    const NiceNode& node = nice_.nodes[i];
    const int s = static_cast<int>(node.bag.size());
    const auto& left = tables_[idx(node.children[0])].tables;
    const auto& right = tables_[idx(node.children[1])].tables;
    auto& out = tables_[i].tables;
    for (std::size_t x = 0; x < left.size(); ++x) {
      for (std::size_t y = 0; y < right.size(); ++y) {
        if (left[x].alpha != right[y].alpha) continue;
        const int a = std::popcount(left[x].alpha);
        TwTable t{left[x].alpha, new_cost(s, a), static_cast<int>(x), static_cast<int>(y)};
        for (std::uint32_t d = 0; d < (1U << s); ++d) {
          const int size = std::popcount(d);
          const std::size_t base = static_cast<std::size_t>(d) << a;
          for (std::uint32_t w = 0; w < (1U << a); ++w) {
            int best = kInf;
            for (std::uint32_t w1 = w;; w1 = (w1 - 1) & w) {
              const int c = add(left[x].cost[base | w1], right[y].cost[base | (w ^ w1)]);
              if (c < kInf) best = std::min(best, c - size);
              if (w1 == 0) break;
            }
            t.cost[base | w] = best;
          }
        }
        out.push_back(std::move(t));
      }
    }
  }

  static void reduce(TwNodeTables& node) {
    auto& t = node.tables;
    std::stable_sort(t.begin(), t.end(), [](const TwTable& a, const TwTable& b) {
      if (a.alpha != b.alpha) return a.alpha < b.alpha;
      return a.cost > b.cost;
    });
    std::vector<TwTable> kept;
    std::size_t group = 0;
    for (auto& cand : t) {
      if (!kept.empty() && kept.back().alpha != cand.alpha) group = kept.size();
      bool dominated = false;
      for (std::size_t k = group; k < kept.size() && !dominated; ++k) {
        dominated = true;
        for (std::size_t c = 0; c < cand.cost.size(); ++c)
          if (kept[k].cost[c] < cand.cost[c]) {
            dominated = false;
            break;
          }
      }
      // Lexicographically larger tables come first, so a kept table can never
      // be dominated by a later one unless they are equal.
      if (!dominated) kept.push_back(std::move(cand));
    }
    t = std::move(kept);
  }

  const Graph& g_;
  const NiceDecomposition& nice_;
  const VertexSet* fixed_;
  const VertexSet* candidates_;
  std::vector<TwNodeTables> tables_;
};

}  // namespace

VertexSet dominate_with_decomposition(const Graph& g, const NiceDecomposition& nice, const VertexSet& a) {
  TwSolver solver(g, nice, &a);
  solver.run(true);
  return solver.dominating_set();
}

TreewidthResult gamma_i_treewidth_nice(const Graph& g, const NiceDecomposition& nice, bool keep_tables,
                                       const VertexSet* a_candidates) {
  TwSolver solver(g, nice, nullptr, a_candidates);
  solver.run(keep_tables);
  TreewidthResult result;
  const auto [value, root_table] = solver.best_root();
  result.value = value;
  int width = -1;
  for (const auto& node : nice.nodes) width = std::max(width, static_cast<int>(node.bag.size()) - 1);
  result.width = width;
  DominationCertificate& cert = result.certificate;
  cert.independent_set = solver.independent_set(root_table);
  cert.dominating_set = dominate_with_decomposition(g, nice, cert.independent_set);
  cert.value = static_cast<int>(cert.dominating_set.count());
  if (cert.value != value) throw std::logic_error("tree decomposition certificate disagrees with the table value");
  if (keep_tables) result.tables = std::move(solver.tables());
  return result;
}

TreewidthResult gamma_i_treewidth(const Graph& g, const TreeDecomposition& td, int width_ceiling,
                                  const VertexSet* a_candidates) {
  if (auto bad = validate_decomposition(g, td)) throw InvalidInput("invalid tree decomposition: " + bad->message);
  const int width = td.width();
  if (width > width_ceiling || width > 30)
    throw CapacityError("decomposition width " + std::to_string(width) + " exceeds ceiling " + std::to_string(width_ceiling));
  return gamma_i_treewidth_nice(g, make_nice(td), false, a_candidates);
}

}  // namespace indom
