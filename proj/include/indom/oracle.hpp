#pragma once

#include <functional>
#include <vector>

#include "indom/certificate.hpp"
#include "indom/graph.hpp"

namespace indom {

struct SetDomination {
  int value = 0;
  VertexSet witness;
};

// gamma_G(B): minimum number of vertices dominating b. Branch-and-bound on the
// undominated vertex with the fewest candidate dominators.
SetDomination gamma_of_set(const Graph& g, const VertexSet& b);

// Same quantity by scanning all subsets in order of size. Independent of the
// branch-and-bound path; limited to n <= 24.
SetDomination gamma_of_set_exhaustive(const Graph& g, const VertexSet& b);

SetDomination gamma(const Graph& g);

// Streams every maximal independent set exactly once (pivoting clique search
// on the complement). The visitor returns false to stop early. Order is
// deterministic but otherwise unspecified.
void enumerate_maximal_independent_sets(const Graph& g, const std::function<bool(const VertexSet&)>& visit);
std::vector<VertexSet> maximal_independent_sets(const Graph& g);

// Maximum over maximal independent sets M of gamma_of_set(g, M). Restricting to
// maximal sets is sound because gamma_of_set is monotone under inclusion.
GammaIResult gamma_i_oracle(const Graph& g);

}  // namespace indom
