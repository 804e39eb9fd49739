#include "indom/oracle.hpp"

#include <algorithm>
#include <cstdint>

#include "indom/error.hpp"

namespace indom {

std::optional<std::string> replay_certificate(const Graph& g, const DominationCertificate& cert) {
  const auto n = static_cast<std::size_t>(g.order());
  if (cert.independent_set.size() != n || cert.dominating_set.size() != n) return "certificate sets are not sized for the graph";
  if (!is_independent(g, cert.independent_set)) return "independent_set is not independent";
  if (!dominates(g, cert.dominating_set, cert.independent_set)) return "dominating_set does not dominate independent_set";
  if (static_cast<int>(cert.dominating_set.count()) != cert.value) return "value differs from |dominating_set|";
  return std::nullopt;
}

namespace {

class DominationSearch {
 public:
  DominationSearch(const Graph& g, const VertexSet& target) : g_(g), closed_(static_cast<std::size_t>(g.order())) {
    for (Vertex v = 0; v < g.order(); ++v) closed_[static_cast<std::size_t>(v)] = g.closed_neighborhood(v);
    best_ = greedy(target);
    best_size_ = static_cast<int>(best_.count());
  }

  SetDomination run(const VertexSet& target) {
    VertexSet chosen = g_.empty_set();
    search(target, chosen, 0);
    return {best_size_, best_};
  }

 private:
  VertexSet greedy(VertexSet undominated) const {
    VertexSet chosen = g_.empty_set();
    while (undominated.any()) {
      Vertex pick = -1;
      std::size_t cover = 0;
      for (Vertex u = 0; u < g_.order(); ++u) {
        const std::size_t c = closed_[static_cast<std::size_t>(u)].intersection_count(undominated);
        if (c > cover) {
          cover = c;
          pick = u;
        }
      }
      chosen.insert(pick);
      undominated -= closed_[static_cast<std::size_t>(pick)];
    }
    return chosen;
  }

  void search(const VertexSet& undominated, VertexSet& chosen, int depth) {
    if (undominated.empty()) {
      if (depth < best_size_) {
        best_size_ = depth;
        best_ = chosen;
      }
      return;
    }
    if (depth + 1 >= best_size_) return;

    // Lower bound: no vertex covers more than max_cover undominated vertices.
    std::size_t max_cover = 0;
    for (Vertex u = 0; u < g_.order(); ++u)
      max_cover = std::max(max_cover, closed_[static_cast<std::size_t>(u)].intersection_count(undominated));
    const std::size_t remaining = undominated.count();
    const int bound = static_cast<int>((remaining + max_cover - 1) / max_cover);
    if (depth + bound >= best_size_) return;

    // Branch on the undominated vertex with the fewest possible dominators.
    Vertex target = -1;
    int fewest = g_.order() + 1;
    undominated.for_each([&](Vertex v) {
      const int c = g_.degree(v) + 1;
      if (c < fewest) {
        fewest = c;
        target = v;
      }
    });

    std::vector<std::pair<std::size_t, Vertex>> options;
    closed_[static_cast<std::size_t>(target)].for_each([&](Vertex u) {
      options.emplace_back(closed_[static_cast<std::size_t>(u)].intersection_count(undominated), u);
    });
    std::sort(options.begin(), options.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    for (const auto& [cover, u] : options) {
      chosen.insert(u);
      search(undominated - closed_[static_cast<std::size_t>(u)], chosen, depth + 1);
      chosen.erase(u);
      if (depth + 1 >= best_size_) return;
    }
  }

  const Graph& g_;
  std::vector<VertexSet> closed_;
  VertexSet best_;
  int best_size_ = 0;
};

}  // namespace

SetDomination gamma_of_set(const Graph& g, const VertexSet& b) {
  if (b.empty()) return {0, g.empty_set()};
  DominationSearch search(g, b);
  return search.run(b);
}

SetDomination gamma_of_set_exhaustive(const Graph& g, const VertexSet& b) {
  const int n = g.order();
  if (n > 24) throw CapacityError("exhaustive domination is limited to 24 vertices");
  std::vector<std::uint32_t> closed(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    std::uint32_t m = 1U << v;
    for (Vertex u : g.neighbors(v)) m |= 1U << u;
    closed[static_cast<std::size_t>(v)] = m;
  }
  std::uint32_t target = 0;
  b.for_each([&](Vertex v) { target |= 1U << v; });

  std::uint32_t best = (n == 32) ? ~0U : ((1U << n) - 1);
  int best_size = n + 1;
  const std::uint32_t limit = 1U << n;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    const int size = std::popcount(mask);
    if (size >= best_size) continue;
    std::uint32_t covered = 0;
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) covered |= closed[static_cast<std::size_t>(std::countr_zero(rest))];
    if ((target & ~covered) == 0) {
      best = mask;
      best_size = size;
    }
  }
  VertexSet witness = g.empty_set();
  for (Vertex v = 0; v < n; ++v)
    if ((best >> v) & 1U) witness.insert(v);
  return {best_size, witness};
}

SetDomination gamma(const Graph& g) { return gamma_of_set(g, g.all()); }

namespace {

// Bron-Kerbosch with Tomita pivoting over the complement graph: the
// complement neighborhood of v is V \ N[v].
class MisEnumerator {
 public:
  MisEnumerator(const Graph& g, const std::function<bool(const VertexSet&)>& visit) : g_(g), visit_(visit) {
    for (Vertex v = 0; v < g.order(); ++v) closed_.push_back(g.closed_neighborhood(v));
  }

  void run() {
    VertexSet r = g_.empty_set();
    expand(r, g_.all(), g_.empty_set());
  }

 private:
  bool expand(VertexSet& r, VertexSet p, VertexSet x) {
    if (p.empty()) {
      if (x.empty()) return visit_(r);
      return true;
    }
    // Pivot maximizing |P ∩ co-N(u)| = |P \ N[u]|.
    Vertex pivot = -1;
    std::size_t best = 0;
    bool first = true;
    auto consider = [&](Vertex u) {
      const std::size_t c = p.count() - p.intersection_count(closed_[static_cast<std::size_t>(u)]);
      if (first || c > best) {
        best = c;
        pivot = u;
        first = false;
      }
    };
    p.for_each(consider);
    x.for_each(consider);

    const VertexSet candidates = p & closed_[static_cast<std::size_t>(pivot)];
    for (Vertex v = candidates.first(); v != -1; v = candidates.next(v)) {
      const VertexSet& nv = closed_[static_cast<std::size_t>(v)];
      r.insert(v);
      const bool go_on = expand(r, p - nv, x - nv);
      r.erase(v);
      if (!go_on) return false;
      p.erase(v);
      x.insert(v);
    }
    return true;
  }

  const Graph& g_;
  const std::function<bool(const VertexSet&)>& visit_;
  std::vector<VertexSet> closed_;
};

}  // namespace

void enumerate_maximal_independent_sets(const Graph& g, const std::function<bool(const VertexSet&)>& visit) {
  if (g.order() == 0) {
    visit(g.empty_set());
    return;
  }
  MisEnumerator(g, visit).run();
}

std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
  std::vector<VertexSet> out;
  enumerate_maximal_independent_sets(g, [&](const VertexSet& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

GammaIResult gamma_i_oracle(const Graph& g) {
  GammaIResult result;
  result.certificate.independent_set = g.empty_set();
  result.certificate.dominating_set = g.empty_set();
  enumerate_maximal_independent_sets(g, [&](const VertexSet& m) {
    SetDomination d = gamma_of_set(g, m);
    if (d.value > result.value) {
      result.value = d.value;
      result.certificate = {m, d.witness, d.value};
    }
    return true;
  });
  return result;
}

}  // namespace indom
