#pragma once

#include <optional>
#include <string>

#include "indom/graph.hpp"

namespace indom {

// Witness for a reported independence-domination value: an independent set
// and a set of `value` vertices dominating it.
struct DominationCertificate {
  VertexSet independent_set;
  VertexSet dominating_set;
  int value = 0;
};

// Checks independence, domination and value == |dominating_set| using only
// graph-core primitives. Returns a description of the first failure.
std::optional<std::string> replay_certificate(const Graph& g, const DominationCertificate& cert);

struct GammaIResult {
  int value = 0;
  DominationCertificate certificate;
};

}  // namespace indom
