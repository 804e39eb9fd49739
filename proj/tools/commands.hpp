#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "indom/graph.hpp"

namespace indom::cli {

using Json = nlohmann::ordered_json;

// Ceilings, overridable by INDOM_WIDTH_CEILING, INDOM_AUTO_WIDTH and
// INDOM_EXACT_CEILING; explicit flags win over the environment.
struct Limits {
  int width_ceiling = 12;  // hard limit for the tree decomposition DP
  int auto_width = 6;      // auto dispatch takes the DP only up to this width
  int exact_ceiling = 40;

  static Limits from_environment();
};

struct GammaOptions {
  std::string algo = "auto";  // auto cograph dh permutation treewidth exact oracle
  bool certify = false;
  std::optional<std::string> cotree_text;
  std::optional<std::string> diagram_text;
  std::optional<std::string> td_text;
  Limits limits;
};

// One report per instance. `failed` is set when a requested verification did
// not replay.
struct Report {
  Json json;
  bool failed = false;
};

Json certificate_json(const VertexSet& independent, const VertexSet& dominating);

// Which solver auto dispatch picks; never runs it.
std::string choose_algorithm(const Graph& g, const GammaOptions& options);

Report cmd_gamma_i(const Graph& g, const std::string& input, const GammaOptions& options);
Report cmd_oracle(const Graph& g, const std::string& input, bool certify);
Report cmd_exact(const Graph& g, const std::string& input, double beta, const Limits& limits, bool certify);

struct PtasCliOptions {
  std::optional<double> epsilon;
  std::optional<int> k;
  std::vector<Vertex> roots{0};
  bool certify = false;
  Limits limits;
};
Report cmd_ptas(const Graph& g, const std::string& input, const PtasCliOptions& options);

// Suites: cograph dh permutation treewidth exact chordal. One line per
// instance, then a summary line; failed when any instance disagrees.
std::vector<Report> cmd_verify(const std::string& suite, std::uint64_t seed, int count, int max_n);

// Every ordered pair of the given graphs (or a built-in corpus when empty).
std::vector<Report> cmd_product_check(const std::vector<std::pair<std::string, Graph>>& graphs);
std::vector<std::pair<std::string, Graph>> default_product_corpus();

// Suites: cograph dh exact. Median wall time per size; the dh summary line
// carries the log-log slope.
std::vector<Report> cmd_bench(const std::string& suite, const std::vector<int>& sizes, int repetitions, std::uint64_t seed);

}  // namespace indom::cli
