#include "indom/exact.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "indom/error.hpp"
#include "indom/oracle.hpp"

namespace indom {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

class Blossom {
 public:
  explicit Blossom(const Graph& h)
      : h_(h), n_(h.order()), mate_(idx(n_), -1), parent_(idx(n_)), base_(idx(n_)), used_(idx(n_)), in_blossom_(idx(n_)) {}

  std::vector<Vertex> run() {
    // Greedy start, then one augmenting search per exposed vertex.
    for (Vertex v = 0; v < n_; ++v) {
      if (mate_[idx(v)] != -1) continue;
      for (Vertex u : h_.neighbors(v))
        if (mate_[idx(u)] == -1) {
          mate_[idx(u)] = v;
          mate_[idx(v)] = u;
          break;
        }
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (mate_[idx(v)] != -1) continue;
      Vertex end = find_path(v);
      while (end != -1) {
        const Vertex pv = parent_[idx(end)];
        const Vertex ppv = mate_[idx(pv)];
        mate_[idx(end)] = pv;
        mate_[idx(pv)] = end;
        end = ppv;
      }
    }
    return mate_;
  }

 private:
  Vertex lca(Vertex a, Vertex b) {
    std::vector<bool> seen(idx(n_), false);
    for (;;) {
      a = base_[idx(a)];
      seen[idx(a)] = true;
      if (mate_[idx(a)] == -1) break;
      a = parent_[idx(mate_[idx(a)])];
    }
    for (;;) {
      b = base_[idx(b)];
      if (seen[idx(b)]) return b;
      b = parent_[idx(mate_[idx(b)])];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[idx(v)] != b) {
      in_blossom_[idx(base_[idx(v)])] = true;
      in_blossom_[idx(base_[idx(mate_[idx(v)])])] = true;
      parent_[idx(v)] = child;
      child = mate_[idx(v)];
      v = parent_[idx(mate_[idx(v)])];
    }
  }

  Vertex find_path(Vertex root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (Vertex i = 0; i < n_; ++i) base_[idx(i)] = i;
    used_[idx(root)] = true;
    std::vector<Vertex> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      for (Vertex to : h_.neighbors(v)) {
        if (base_[idx(v)] == base_[idx(to)] || mate_[idx(v)] == to) continue;
        if (to == root || (mate_[idx(to)] != -1 && parent_[idx(mate_[idx(to)])] != -1)) {
          const Vertex cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (!in_blossom_[idx(base_[idx(i)])]) continue;
            base_[idx(i)] = cur;
            if (!used_[idx(i)]) {
              used_[idx(i)] = true;
              queue.push_back(i);
            }
          }
        } else if (parent_[idx(to)] == -1) {
          parent_[idx(to)] = v;
          if (mate_[idx(to)] == -1) return to;
          used_[idx(mate_[idx(to)])] = true;
          queue.push_back(mate_[idx(to)]);
        }
      }
    }
    return -1;
  }

  const Graph& h_;
  int n_;
  std::vector<Vertex> mate_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<bool> used_;
  std::vector<bool> in_blossom_;
};

}  // namespace

Matching maximum_matching(const Graph& h) {
  Matching m;
  m.mate = Blossom(h).run();
  for (Vertex v = 0; v < h.order(); ++v)
    if (m.mate[idx(v)] > v) m.edges.emplace_back(v, m.mate[idx(v)]);
  return m;
}

int brute_force_matching_size(const Graph& h) {
  if (h.order() > 12) throw CapacityError("brute-force matching is limited to 12 vertices");
  const std::vector<Edge> edges = h.edges();
  int best = 0;
  // Recursive pick/skip over edges with a used-vertex mask.
  auto go = [&](auto&& self, std::size_t i, std::uint32_t used, int size) -> void {
    best = std::max(best, size);
    if (i == edges.size() || size + (h.order() - std::popcount(used)) / 2 <= best) return;
    const auto [u, v] = edges[i];
    if (!((used >> u) & 1U) && !((used >> v) & 1U)) self(self, i + 1, used | (1U << u) | (1U << v), size + 1);
    self(self, i + 1, used, size);
  };
  go(go, 0, 0, 0);
  return best;
}

BranchStats& BranchStats::operator+=(const BranchStats& o) {
  nodes += o.nodes;
  max_depth = std::max(max_depth, o.max_depth);
  matching_calls += o.matching_calls;
  subset_calls += o.subset_calls;
  return *this;
}

AuxiliaryMatchingGraph build_auxiliary_graph(const Graph& g, const VertexSet& m, const VertexSet& outside) {
  AuxiliaryMatchingGraph aux;
  aux.to_parent = m.to_vector();
  std::vector<int> local(idx(g.order()), -1);
  for (std::size_t i = 0; i < aux.to_parent.size(); ++i) local[idx(aux.to_parent[i])] = static_cast<int>(i);
  std::vector<Edge> edges;
  std::vector<std::pair<Edge, Vertex>> tagged;
  outside.for_each([&](Vertex x) {
    const std::vector<Vertex> hits = (g.row(x) & m).to_vector();
    for (std::size_t i = 0; i < hits.size(); ++i)
      for (std::size_t j = i + 1; j < hits.size(); ++j)
        tagged.push_back({{local[idx(hits[i])], local[idx(hits[j])]}, x});
  });
  std::sort(tagged.begin(), tagged.end());
  for (const auto& [e, x] : tagged) edges.push_back(e);
  aux.graph = Graph::from_edges(static_cast<int>(aux.to_parent.size()), edges);
  for (const Edge& e : aux.graph.edges())
    aux.via.push_back(std::lower_bound(tagged.begin(), tagged.end(), std::make_pair(e, Vertex{-1}))->second);
  return aux;
}

int matching_formula_value(const Graph& g, const VertexSet& m) {
  const VertexSet outside = g.all() - m;
  outside.for_each([&](Vertex x) {
    if (g.row(x).intersection_count(m) > 2) throw InvalidInput("an outside vertex has more than two neighbors in M");
  });
  const AuxiliaryMatchingGraph aux = build_auxiliary_graph(g, m, outside);
  const int nu = maximum_matching(aux.graph).size();
  const int unmatched = static_cast<int>(m.count()) - 2 * nu;
  return nu + unmatched;
}

namespace {

class IndependentSetSearch {
 public:
  IndependentSetSearch(const Graph& g, const VertexSet& m) : g_(g), best_(g.empty_set()) {
    committed_ = g.empty_set();
    VertexSet rem = m;
    m.for_each([&](Vertex v) {
      if (g.degree(v) == 0) {
        committed_.insert(v);
        rem.erase(v);
      }
    });
    outside_ = g.all() - m;
    rem_ = rem;
    best_value_ = static_cast<int>(m.count()) + 1;
  }

  IndependentSetDomination run() {
    VertexSet outside = outside_;
    VertexSet chosen = committed_;
    search(rem_, outside, chosen, 0);
    return {best_value_, best_, stats_};
  }

 private:
  void search(const VertexSet& rem, VertexSet outside, VertexSet& chosen, int depth) {
    ++stats_.nodes;
    stats_.max_depth = std::max(stats_.max_depth, depth);
    const int committed = static_cast<int>(chosen.count());

    Vertex pick = -1;
    std::size_t top = 0;
    VertexSet useless = g_.empty_set();
    outside.for_each([&](Vertex x) {
      const std::size_t d = g_.row(x).intersection_count(rem);
      if (d == 0) useless.insert(x);
      if (d > top) {
        top = d;
        pick = x;
      }
    });
    outside -= useless;
    const std::size_t left = rem.count();
    if (left == 0) {
      record(committed, chosen);
      return;
    }
    const int bound = committed + static_cast<int>((left + std::max<std::size_t>(top, 1) - 1) / std::max<std::size_t>(top, 1));
    if (bound >= best_value_) return;

    if (top >= 3) {
      outside.erase(pick);
      chosen.insert(pick);
      search(rem - g_.row(pick), outside, chosen, depth + 1);
      chosen.erase(pick);
      search(rem, outside, chosen, depth + 1);
      return;
    }
    leaf(rem, outside, chosen);
  }

  void leaf(const VertexSet& rem, const VertexSet& outside, const VertexSet& chosen) {
    ++stats_.matching_calls;
    const AuxiliaryMatchingGraph aux = build_auxiliary_graph(g_, rem, outside);
    const Matching mm = maximum_matching(aux.graph);
    const int nu = mm.size();
    const int size = static_cast<int>(rem.count());
    const int unmatched = size - 2 * nu;
    const int value = static_cast<int>(chosen.count()) + size - nu;
    if (value != static_cast<int>(chosen.count()) + nu + unmatched) throw std::logic_error("matching formula mismatch");
    if (value >= best_value_) return;

    VertexSet d = chosen;
    VertexSet covered = g_.empty_set();
    const std::vector<Edge> edges = aux.graph.edges();
    for (const Edge& e : mm.edges) {
      const auto it = std::lower_bound(edges.begin(), edges.end(), e);
      const Vertex x = aux.via[static_cast<std::size_t>(it - edges.begin())];
      d.insert(x);
      covered.insert(aux.to_parent[idx(e.first)]);
      covered.insert(aux.to_parent[idx(e.second)]);
    }
    (rem - covered).for_each([&](Vertex v) {
      const VertexSet options = g_.row(v) & outside;
      d.insert(options.any() ? options.first() : v);
    });
    record(static_cast<int>(d.count()), d);
  }

  void record(int value, const VertexSet& d) {
    if (value < best_value_) {
      best_value_ = value;
      best_ = d;
    }
  }

  const Graph& g_;
  VertexSet committed_;
  VertexSet outside_;
  VertexSet rem_;
  VertexSet best_;
  int best_value_ = 0;
  BranchStats stats_;
};

// Smallest subset S of `pool` with S ∪ fixed dominating `target`.
VertexSet smallest_dominating_subset(const Graph& g, const std::vector<Vertex>& pool, const VertexSet& fixed,
                                     const VertexSet& target) {
  const VertexSet need = target - closed_neighborhood(g, fixed);
  if (need.empty()) return fixed;
  const int p = static_cast<int>(pool.size());
  for (int s = 1; s <= p; ++s) {
    std::vector<int> pick(idx(s));
    for (int i = 0; i < s; ++i) pick[idx(i)] = i;
    for (;;) {
      VertexSet covered = g.empty_set();
      for (int i : pick) covered |= g.closed_neighborhood(pool[idx(i)]);
      if (need.is_subset_of(covered)) {
        VertexSet d = fixed;
        for (int i : pick) d.insert(pool[idx(i)]);
        return d;
      }
      int i = s - 1;
      while (i >= 0 && pick[idx(i)] == p - s + i) --i;
      if (i < 0) break;
      ++pick[idx(i)];
      for (int j = i + 1; j < s; ++j) pick[idx(j)] = pick[idx(j - 1)] + 1;
    }
  }
  throw std::logic_error("no dominating subset found");
}

}  // namespace

IndependentSetDomination gamma_of_independent_set_fast(const Graph& g, const VertexSet& m) {
  if (!is_independent(g, m)) throw InvalidInput("M is not independent");
  return IndependentSetSearch(g, m).run();
}

ExactResult gamma_i_exact(const Graph& g, double beta, int ceiling) {
  const int n = g.order();
  if (n > ceiling) throw CapacityError("exact algorithm limited to " + std::to_string(ceiling) + " vertices");
  ExactResult result;
  result.certificate.independent_set = g.empty_set();
  result.certificate.dominating_set = g.empty_set();
  const double limit = beta * n;
  enumerate_maximal_independent_sets(g, [&](const VertexSet& m) {
    ++result.maximal_sets;
    VertexSet d;
    int value;
    if (static_cast<double>(m.count()) <= limit) {
      IndependentSetDomination r = gamma_of_independent_set_fast(g, m);
      result.stats += r.stats;
      value = r.value;
      d = std::move(r.witness);
    } else {
      ++result.stats.subset_calls;
      VertexSet mandatory = g.empty_set();
      m.for_each([&](Vertex v) {
        if (g.degree(v) == 0) mandatory.insert(v);
      });
      d = smallest_dominating_subset(g, (g.all() - m).to_vector(), mandatory, m);
      value = static_cast<int>(d.count());
    }
    if (value > result.value || result.maximal_sets == 1) {
      result.value = value;
      result.certificate = {m, d, value};
    }
    return true;
  });
  return result;
}

}  // namespace indom
