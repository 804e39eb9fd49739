#include "indom/distance_hereditary.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "indom/error.hpp"
#include "indom/graph_io.hpp"
#include "indom/rng.hpp"

namespace indom {

namespace {

const char* op_name(PruneOp op) {
  switch (op) {
    case PruneOp::Pendant: return "pendant";
    case PruneOp::TrueTwin: return "ttwin";
    case PruneOp::FalseTwin: return "ftwin";
  }
  return "?";
}

std::string step_text(std::size_t index, const PruningStep& s) {
  return "step " + std::to_string(index) + " (" + op_name(s.op) + " " + std::to_string(s.vertex) + " " +
         std::to_string(s.anchor) + ")";
}

}  // namespace

std::variant<PruningSequence, RecognitionFailure> recognize_dh(const Graph& g) {
  const int n = g.order();
  if (n == 0) throw InvalidInput("distance-hereditary recognition needs at least one vertex");

  Rng rng(0x9e3779b97f4a7c15ULL);
  std::vector<std::uint64_t> label(static_cast<std::size_t>(n));
  for (auto& l : label) l = rng.next();
  std::vector<std::uint64_t> hash(static_cast<std::size_t>(n), 0);
  std::vector<int> degree(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    degree[static_cast<std::size_t>(v)] = g.degree(v);
    for (Vertex u : g.neighbors(v)) hash[static_cast<std::size_t>(v)] ^= label[static_cast<std::size_t>(u)];
  }

  VertexSet alive = g.all();
  int alive_count = n;
  std::vector<PruningStep> eliminated;

  auto remove = [&](const PruningStep& step) {
    const Vertex v = step.vertex;
    alive.erase(v);
    --alive_count;
    (g.row(v) & alive).for_each([&](Vertex x) {
      --degree[static_cast<std::size_t>(x)];
      hash[static_cast<std::size_t>(x)] ^= label[static_cast<std::size_t>(v)];
    });
    eliminated.push_back(step);
  };

  std::unordered_map<std::uint64_t, std::vector<Vertex>> open_buckets;
  std::unordered_map<std::uint64_t, std::vector<Vertex>> closed_buckets;
  while (alive_count > 1) {
    Vertex pendant = -1;
    for (Vertex v = alive.first(); v != -1; v = alive.next(v)) {
      if (degree[static_cast<std::size_t>(v)] == 1) {
        pendant = v;
        break;
      }
    }
    if (pendant != -1) {
      remove({PruneOp::Pendant, pendant, (g.row(pendant) & alive).first()});
      continue;
    }

    open_buckets.clear();
    closed_buckets.clear();
    std::optional<PruningStep> twin;
    for (Vertex v = alive.first(); v != -1 && !twin; v = alive.next(v)) {
      const std::uint64_t h = hash[static_cast<std::size_t>(v)];
      const VertexSet nv = g.row(v) & alive;
      for (Vertex w : open_buckets[h]) {
        if (!g.adjacent(v, w) && (g.row(w) & alive) == nv) {
          twin = PruningStep{PruneOp::FalseTwin, v, w};
          break;
        }
      }
      const std::uint64_t hc = h ^ label[static_cast<std::size_t>(v)];
      for (Vertex w : closed_buckets[hc]) {
        if (twin) break;
        if (!g.adjacent(v, w)) continue;
        VertexSet cw = g.row(w) & alive;
        cw.insert(w);
        VertexSet cv = nv;
        cv.insert(v);
        if (cw == cv) twin = PruningStep{PruneOp::TrueTwin, v, w};
      }
      open_buckets[h].push_back(v);
      closed_buckets[hc].push_back(v);
    }
    if (!twin) return RecognitionFailure{alive.first(), alive};
    remove(*twin);
  }

  PruningSequence seq;
  seq.start = alive.first();
  seq.steps.assign(eliminated.rbegin(), eliminated.rend());
  return seq;
}

Graph replay_pruning_sequence(const PruningSequence& s) {
  const int n = s.order();
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  std::vector<bool> present(static_cast<std::size_t>(n), false);
  auto check = [&](Vertex v) {
    if (v < 0 || v >= n) throw InvalidInput("pruning sequence vertex " + std::to_string(v) + " out of range");
  };
  check(s.start);
  present[static_cast<std::size_t>(s.start)] = true;
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    const PruningStep& step = s.steps[i];
    check(step.vertex);
    check(step.anchor);
    if (present[static_cast<std::size_t>(step.vertex)] || !present[static_cast<std::size_t>(step.anchor)])
      throw InvalidInput(step_text(i, step) + " adds a present vertex or uses an absent anchor");
    auto& nv = adj[static_cast<std::size_t>(step.vertex)];
    const auto& nu = adj[static_cast<std::size_t>(step.anchor)];
    if (step.op == PruneOp::Pendant) {
      nv = {step.anchor};
    } else {
      nv = nu;
      if (step.op == PruneOp::TrueTwin) nv.push_back(step.anchor);
    }
    for (Vertex x : nv) adj[static_cast<std::size_t>(x)].push_back(step.vertex);
    present[static_cast<std::size_t>(step.vertex)] = true;
  }
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : adj[static_cast<std::size_t>(v)])
      if (v < u) edges.emplace_back(v, u);
  return Graph::from_edges(n, edges);
}

void validate_pruning_sequence(const Graph& g, const PruningSequence& s) {
  const int n = g.order();
  if (s.order() != n) throw InvalidInput("pruning sequence covers " + std::to_string(s.order()) + " vertices, graph has " + std::to_string(n));
  if (s.start < 0 || s.start >= n) throw InvalidInput("pruning sequence start vertex out of range");
  VertexSet present = g.empty_set();
  present.insert(s.start);
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    const PruningStep& step = s.steps[i];
    const Vertex v = step.vertex;
    const Vertex u = step.anchor;
    if (v < 0 || v >= n || u < 0 || u >= n || present.contains(v) || !present.contains(u))
      throw InvalidInput(step_text(i, step) + " adds a present vertex or uses an absent anchor");
    const VertexSet nv = g.row(v) & present;
    VertexSet expected = g.empty_set();
    switch (step.op) {
      case PruneOp::Pendant:
        expected.insert(u);
        break;
      case PruneOp::TrueTwin:
        expected = g.row(u) & present;
        expected.insert(u);
        break;
      case PruneOp::FalseTwin:
        expected = g.row(u) & present;
        break;
    }
    if (nv != expected) throw InvalidInput(step_text(i, step) + " does not match the graph");
    present.insert(v);
  }
}

std::string write_pruning_sequence(const PruningSequence& s) {
  std::ostringstream out;
  for (const auto& step : s.steps) out << op_name(step.op) << ' ' << step.vertex << ' ' << step.anchor << '\n';
  return out.str();
}

PruningSequence read_pruning_sequence(std::string_view text) {
  PruningSequence s;
  for (const TokenLine& line : tokenize_lines(text)) {
    const auto& tok = line.tokens;
    if (tok.size() != 3) throw ParseError(line.number, "expected '<op> v u'");
    PruningStep step;
    if (tok[0] == "pendant") step.op = PruneOp::Pendant;
    else if (tok[0] == "ttwin") step.op = PruneOp::TrueTwin;
    else if (tok[0] == "ftwin") step.op = PruneOp::FalseTwin;
    else throw ParseError(line.number, "unknown operation '" + tok[0] + "'");
    step.vertex = static_cast<Vertex>(parse_integer(tok[1], line.number));
    step.anchor = static_cast<Vertex>(parse_integer(tok[2], line.number));
    s.steps.push_back(step);
  }
  const int n = s.order();
  std::vector<bool> added(static_cast<std::size_t>(n), false);
  for (const auto& step : s.steps) {
    if (step.vertex < 0 || step.vertex >= n || added[static_cast<std::size_t>(step.vertex)])
      throw InvalidInput("pruning sequence adds vertex " + std::to_string(step.vertex) + " twice or out of range");
    added[static_cast<std::size_t>(step.vertex)] = true;
  }
  s.start = static_cast<Vertex>(std::find(added.begin(), added.end(), false) - added.begin());
  return s;
}

PruningSequence random_dh_sequence(int n, std::uint64_t seed) {
  if (n < 1) throw InvalidInput("distance-hereditary generator needs n >= 1");
  Rng rng(seed);
  const std::vector<int> labels = rng.permutation(n);
  PruningSequence s;
  s.start = labels[0];
  for (int i = 1; i < n; ++i) {
    PruningStep step;
    step.vertex = labels[static_cast<std::size_t>(i)];
    step.anchor = labels[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(i)))];
    step.op = static_cast<PruneOp>(rng.below(3));
    s.steps.push_back(step);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Decomposition tree

DHDecomposition build_dh_decomposition(const Graph& g, const PruningSequence& s) {
  validate_pruning_sequence(g, s);
  const int n = g.order();
  DHDecomposition d;
  d.leaf_of.assign(static_cast<std::size_t>(n), -1);

  auto new_leaf = [&](Vertex v, int parent) {
    DHNode node;
    node.vertex = v;
    node.parent = parent;
    d.nodes.push_back(std::move(node));
    d.leaf_of[static_cast<std::size_t>(v)] = static_cast<int>(d.nodes.size()) - 1;
    return static_cast<int>(d.nodes.size()) - 1;
  };
  d.root = new_leaf(s.start, -1);

  // Adding v next to u splits u's leaf into an internal node with leaves u, v.
  for (const PruningStep& step : s.steps) {
    const int leaf = d.leaf_of[static_cast<std::size_t>(step.anchor)];
    const int parent = d.nodes[static_cast<std::size_t>(leaf)].parent;
    const int inner = static_cast<int>(d.nodes.size());
    DHNode node;
    node.parent = parent;
    node.label = DHLabel::Union;
    d.nodes.push_back(std::move(node));
    if (parent == -1) {
      d.root = inner;
    } else {
      auto& siblings = d.nodes[static_cast<std::size_t>(parent)].children;
      (siblings[0] == leaf ? siblings[0] : siblings[1]) = inner;
    }
    d.nodes[static_cast<std::size_t>(leaf)].parent = inner;
    const int other = new_leaf(step.vertex, inner);
    d.nodes[static_cast<std::size_t>(inner)].children = {leaf, other};
  }

  std::vector<std::pair<int, bool>> stack{{d.root, false}};
  while (!stack.empty()) {
    auto [id, expanded] = stack.back();
    stack.pop_back();
    const DHNode& node = d.nodes[static_cast<std::size_t>(id)];
    if (expanded || node.vertex != -1) {
      d.postorder.push_back(id);
      continue;
    }
    stack.push_back({id, true});
    stack.push_back({node.children[1], false});
    stack.push_back({node.children[0], false});
  }

  for (int id : d.postorder) {
    DHNode& node = d.nodes[static_cast<std::size_t>(id)];
    if (node.vertex != -1) {
      node.subtree = g.empty_set();
      node.subtree.insert(node.vertex);
    } else {
      node.subtree = d.nodes[static_cast<std::size_t>(node.children[0])].subtree |
                     d.nodes[static_cast<std::size_t>(node.children[1])].subtree;
    }
    node.twinset = g.empty_set();
    node.subtree.for_each([&](Vertex v) {
      if (!g.row(v).is_subset_of(node.subtree)) node.twinset.insert(v);
    });
    if (node.vertex != -1) continue;

    const DHNode& c1 = d.nodes[static_cast<std::size_t>(node.children[0])];
    const DHNode& c2 = d.nodes[static_cast<std::size_t>(node.children[1])];
    const Vertex q1 = c1.twinset.first();
    node.label = (q1 != -1 && g.row(q1).intersects(c2.subtree)) ? DHLabel::Join : DHLabel::Union;
    if (node.twinset.empty()) node.tag = TwinsetTag::Empty;
    else if (node.twinset == c1.twinset) node.tag = TwinsetTag::Left;
    else if (node.twinset == c2.twinset) node.tag = TwinsetTag::Right;
    else if (node.twinset == (c1.twinset | c2.twinset)) node.tag = TwinsetTag::Both;
    else throw std::logic_error("twinset is not composed of child twinsets");
  }
  return d;
}

std::optional<std::string> check_dh_decomposition(const Graph& g, const DHDecomposition& d) {
  const int n = g.order();
  if (static_cast<int>(d.leaf_of.size()) != n) return "leaf map has the wrong size";
  std::vector<int> hits(static_cast<std::size_t>(n), 0);
  for (const DHNode& node : d.nodes)
    if (node.vertex != -1) ++hits[static_cast<std::size_t>(node.vertex)];
  for (Vertex v = 0; v < n; ++v)
    if (hits[static_cast<std::size_t>(v)] != 1) return "vertex " + std::to_string(v) + " is not on exactly one leaf";

  for (std::size_t id = 0; id < d.nodes.size(); ++id) {
    const DHNode& node = d.nodes[id];
    VertexSet q = g.empty_set();
    node.subtree.for_each([&](Vertex v) {
      if ((g.row(v) - node.subtree).any()) q.insert(v);
    });
    if (q != node.twinset) return "twinset mismatch at node " + std::to_string(id);
    if (node.vertex != -1) continue;

    const DHNode& c1 = d.nodes[static_cast<std::size_t>(node.children[0])];
    const DHNode& c2 = d.nodes[static_cast<std::size_t>(node.children[1])];
    if ((c1.subtree | c2.subtree) != node.subtree || c1.subtree.intersects(c2.subtree))
      return "children do not partition the subtree at node " + std::to_string(id);
    bool ok = true;
    c1.subtree.for_each([&](Vertex a) {
      const VertexSet across = g.row(a) & c2.subtree;
      const bool expect_all = node.label == DHLabel::Join && c1.twinset.contains(a);
      ok = ok && (expect_all ? across == c2.twinset : across.empty());
    });
    if (!ok) return "adjacency across node " + std::to_string(id) + " is not Q1 x Q2 / empty as labeled";
    VertexSet expect = g.empty_set();
    if (node.tag == TwinsetTag::Left || node.tag == TwinsetTag::Both) expect |= c1.twinset;
    if (node.tag == TwinsetTag::Right || node.tag == TwinsetTag::Both) expect |= c2.twinset;
    if (expect != node.twinset) return "twinset tag disagrees with twinsets at node " + std::to_string(id);
  }
  const DHNode& root = d.nodes[static_cast<std::size_t>(d.root)];
  if (root.subtree != g.all() || root.twinset.any()) return "root does not cover the whole graph";
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Table dynamic programming

namespace {

int add_costs(int a, int b) { return (a >= kInfiniteCost || b >= kInfiniteCost) ? kInfiniteCost : a + b; }

bool same_values(const DHSignature& a, const DHSignature& b) {
  return a.meets_twinset == b.meets_twinset && a.cost == b.cost;
}

bool canonical_less(const DHSignature& a, const DHSignature& b) {
  if (a.meets_twinset != b.meets_twinset) return !a.meets_twinset;
  return a.cost > b.cost;
}

EdgeTable leaf_table(const DHNode& node) {
  const bool open = node.twinset.any();
  const int needs = open ? 1 : kInfiniteCost;
  EdgeTable t;
  DHSignature none;
  none.cost = {0, 0, needs, needs};
  t.entries.push_back(none);
  DHSignature self;
  self.leaf_in_set = true;
  self.meets_twinset = open;
  self.cost = {1, open ? 0 : 1, needs, needs};
  t.entries.push_back(self);
  reduce_table(t);
  return t;
}

struct ChildPair {
  std::uint8_t left;
  std::uint8_t right;
};

}  // namespace

bool signature_dominates(const DHSignature& a, const DHSignature& b) {
  if (a.meets_twinset && !b.meets_twinset) return false;
  for (int i = 0; i < 4; ++i)
    if (a.cost[static_cast<std::size_t>(i)] < b.cost[static_cast<std::size_t>(i)]) return false;
  return true;
}

void reduce_table(EdgeTable& table) {
  auto& e = table.entries;
  std::stable_sort(e.begin(), e.end(), canonical_less);
  e.erase(std::unique(e.begin(), e.end(), same_values), e.end());
  std::vector<DHSignature> kept;
  for (const DHSignature& s : e) {
    bool dominated = false;
    for (const DHSignature& k : kept) {
      if (signature_dominates(k, s)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(s);
  }
  // Entries sorted earlier can only be dominated by entries sorted earlier,
  // except for the meets_twinset split; sweep once more for that case.
  std::vector<DHSignature> out;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < kept.size() && !dominated; ++j)
      dominated = j != i && signature_dominates(kept[j], kept[i]) && !same_values(kept[j], kept[i]);
    if (!dominated) out.push_back(kept[i]);
  }
  e = std::move(out);
}

DHResult gamma_i_dh(const Graph& g, const DHDecomposition& d) {
  DHResult result;
  result.tables.resize(d.nodes.size());

  for (int id : d.postorder) {
    const DHNode& node = d.nodes[static_cast<std::size_t>(id)];
    if (node.vertex != -1) {
      result.tables[static_cast<std::size_t>(id)] = leaf_table(node);
      continue;
    }
    const bool join = node.label == DHLabel::Join;
    const bool keep1 = node.tag == TwinsetTag::Left || node.tag == TwinsetTag::Both;
    const bool keep2 = node.tag == TwinsetTag::Right || node.tag == TwinsetTag::Both;

    // For each parent requirement, the child requirement pairs that meet it.
    std::array<std::vector<ChildPair>, 4> routes;
    for (int target = 0; target < 4; ++target) {
      const bool p = target & 2;
      const bool q = target & 1;
      for (int i1 = 0; i1 < 4; ++i1) {
        for (int i2 = 0; i2 < 4; ++i2) {
          const bool p1 = i1 & 2, q1 = i1 & 1, p2 = i2 & 2, q2 = i2 & 1;
          if (q1 && !((join && p2) || (keep1 && q))) continue;
          if (q2 && !((join && p1) || (keep2 && q))) continue;
          if (p && !((keep1 && p1) || (keep2 && p2))) continue;
          routes[static_cast<std::size_t>(target)].push_back({static_cast<std::uint8_t>(i1), static_cast<std::uint8_t>(i2)});
        }
      }
    }

    const auto& t1 = result.tables[static_cast<std::size_t>(node.children[0])].entries;
    const auto& t2 = result.tables[static_cast<std::size_t>(node.children[1])].entries;
    EdgeTable table;
    for (std::size_t a = 0; a < t1.size(); ++a) {
      const DHSignature& s1 = t1[a];
      for (std::size_t b = 0; b < t2.size(); ++b) {
        const DHSignature& s2 = t2[b];
        if (join && s1.meets_twinset && s2.meets_twinset) continue;  // A would not be independent
        DHSignature s;
        s.meets_twinset = (keep1 && s1.meets_twinset) || (keep2 && s2.meets_twinset);
        s.left = static_cast<int>(a);
        s.right = static_cast<int>(b);
        for (std::size_t target = 0; target < 4; ++target) {
          int best = kInfiniteCost;
          std::uint8_t arg = 0xFF;
          for (const ChildPair& r : routes[target]) {
            const int c = add_costs(s1.cost[r.left], s2.cost[r.right]);
            if (c < best) {
              best = c;
              arg = static_cast<std::uint8_t>((r.left << 2) | r.right);
            }
          }
          s.cost[target] = best;
          s.choice[target] = arg;
        }
        table.entries.push_back(s);
      }
    }
    reduce_table(table);
    result.tables[static_cast<std::size_t>(id)] = std::move(table);
  }

  const auto& root_entries = result.tables[static_cast<std::size_t>(d.root)].entries;
  std::size_t best = 0;
  for (std::size_t i = 1; i < root_entries.size(); ++i)
    if (root_entries[i].cost[0] > root_entries[best].cost[0]) best = i;
  result.value = root_entries[best].cost[0];

  DominationCertificate& cert = result.certificate;
  cert.independent_set = g.empty_set();
  cert.dominating_set = g.empty_set();
  struct Frame {
    int node;
    std::size_t entry;
    int target;
  };
  std::vector<Frame> stack{{d.root, best, 0}};
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    const DHNode& node = d.nodes[static_cast<std::size_t>(f.node)];
    const DHSignature& s = result.tables[static_cast<std::size_t>(f.node)].entries[f.entry];
    const bool p = f.target & 2;
    const bool q = f.target & 1;
    if (node.vertex != -1) {
      const bool in_q = node.twinset.contains(node.vertex);
      if (s.leaf_in_set) cert.independent_set.insert(node.vertex);
      const bool in_d = s.leaf_in_set ? (p || !(q && in_q)) : p;
      if (in_d) cert.dominating_set.insert(node.vertex);
      continue;
    }
    const std::uint8_t c = s.choice[static_cast<std::size_t>(f.target)];
    stack.push_back({node.children[0], static_cast<std::size_t>(s.left), c >> 2});
    stack.push_back({node.children[1], static_cast<std::size_t>(s.right), c & 3});
  }
  cert.value = static_cast<int>(cert.dominating_set.count());
  return result;
}

DHResult gamma_i_distance_hereditary(const Graph& g) {
  auto recognized = recognize_dh(g);
  if (auto* fail = std::get_if<RecognitionFailure>(&recognized)) {
    throw ClassMismatch("distance-hereditary", {fail->stuck_vertex},
                        "not distance-hereditary: no pendant or twin among the remaining vertices (stuck at " +
                            std::to_string(fail->stuck_vertex) + ")");
  }
  const auto& seq = std::get<PruningSequence>(recognized);
  return gamma_i_dh(g, build_dh_decomposition(g, seq));
}

}  // namespace indom
