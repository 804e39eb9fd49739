#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "indom/certificate.hpp"
#include "indom/graph.hpp"

namespace indom {

enum class CotreeKind { Leaf, Union, Join };

struct CotreeNode {
  CotreeKind kind = CotreeKind::Leaf;
  Vertex vertex = -1;  // leaves only
  int parent = -1;
  std::vector<int> children;
};

// Rooted union/join decomposition of a cograph. Nodes are stored in preorder,
// so the root is node 0 and every parent precedes its children.
struct Cotree {
  std::vector<CotreeNode> nodes;
  int vertex_count = 0;

  int root() const { return nodes.empty() ? -1 : 0; }
};

using P4Witness = std::array<Vertex, 4>;  // path order a-b-c-d

// Splits by components of G, else of the complement, else reports an induced
// P4. The returned cotree is canonical (labels alternate along every path).
std::variant<Cotree, P4Witness> build_cotree(const Graph& g);

// Throws InvalidInput when leaves are not a bijection onto 0..n-1, an internal
// node has fewer than two children, or parent links disagree.
void validate_cotree(const Cotree& t);
bool is_canonical(const Cotree& t);
Graph cotree_to_graph(const Cotree& t);

// Domination number from the cotree: sum at unions, min{children..., 2} at joins.
int gamma_cograph(const Cotree& t);
// Number of components, read off the root.
int gamma_i_cotree(const Cotree& t);
// Checks the class, then returns the component count with a certificate built
// from the lexicographically least maximal independent set of each component.
// Throws ClassMismatch carrying the P4 for non-cographs.
GammaIResult gamma_i_cograph(const Graph& g);

// Random canonical cotree on n leaves; vertex labels are a random permutation.
Cotree random_cotree(int n, std::uint64_t seed);

// Text format, one node per line in preorder:
//   node <id> <UNION|JOIN|LEAF> [vertex] parent <parent-id|-1>
std::string write_cotree(const Cotree& t);
Cotree read_cotree(std::string_view text);

}  // namespace indom
