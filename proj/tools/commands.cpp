#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <variant>

#include "indom/cograph.hpp"
#include "indom/distance_hereditary.hpp"
#include "indom/error.hpp"
#include "indom/exact.hpp"
#include "indom/generators.hpp"
#include "indom/graph_io.hpp"
#include "indom/oracle.hpp"
#include "indom/permutation.hpp"
#include "indom/ptas.hpp"
#include "indom/rng.hpp"
#include "indom/treewidth.hpp"

namespace indom::cli {

namespace {

using Clock = std::chrono::steady_clock;

volatile int bench_sink = 0;  // keeps a timed result alive

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::optional<int> env_int(const char* name) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return std::nullopt;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v < 0 || v > 1000000) throw InvalidInput(std::string("bad value for ") + name + ": '" + raw + "'");
  return static_cast<int>(v);
}

Json vertices(const VertexSet& s) {
  Json a = Json::array();
  s.for_each([&](Vertex v) { a.push_back(v); });
  return a;
}

struct Solved {
  int value = 0;
  DominationCertificate certificate;
  Json stats = Json::object();
};

Json branch_stats(const BranchStats& s) {
  return Json{{"nodes", s.nodes}, {"max_depth", s.max_depth}, {"matching_calls", s.matching_calls}, {"subset_calls", s.subset_calls}};
}

Solved solve_with(const std::string& algo, const Graph& g, const GammaOptions& o) {
  Solved out;
  if (algo == "cograph") {
    if (o.cotree_text) {
      const Cotree t = read_cotree(*o.cotree_text);
      if (!(cotree_to_graph(t) == g)) throw InvalidInput("cotree does not describe the input graph");
      out.stats["from_cotree"] = true;
    }
    const GammaIResult r = gamma_i_cograph(g);
    out.value = r.value;
    out.certificate = r.certificate;
  } else if (algo == "dh") {
    const DHResult r = gamma_i_distance_hereditary(g);
    out.value = r.value;
    out.certificate = r.certificate;
  } else if (algo == "permutation") {
    if (!o.diagram_text) throw InvalidInput("permutation needs --diagram");
    const PermutationDiagram d = read_diagram(*o.diagram_text);
    if (!(diagram_to_graph(d) == g)) throw InvalidInput("diagram does not describe the input graph");
    const PermutationResult r = gamma_i_permutation(d);
    out.value = r.value;
    out.certificate = r.certificate;
    out.stats["chain"] = r.chain;
  } else if (algo == "treewidth") {
    TreeDecomposition td;
    if (o.td_text) {
      int n = -1;
      td = read_pace_td(*o.td_text, &n);
      if (n != g.order()) throw InvalidInput("decomposition is for " + std::to_string(n) + " vertices");
      out.stats["decomposition"] = "file";
    } else {
      td = heuristic_decomposition(g);
      out.stats["decomposition"] = "min-fill";
    }
    const TreewidthResult r = gamma_i_treewidth(g, td, o.limits.width_ceiling);
    out.value = r.value;
    out.certificate = r.certificate;
    out.stats["width"] = r.width;
  } else if (algo == "exact") {
    const ExactResult r = gamma_i_exact(g, kDefaultBeta, o.limits.exact_ceiling);
    out.value = r.value;
    out.certificate = r.certificate;
    out.stats = branch_stats(r.stats);
    out.stats["maximal_sets"] = r.maximal_sets;
  } else if (algo == "oracle") {
    const GammaIResult r = gamma_i_oracle(g);
    out.value = r.value;
    out.certificate = r.certificate;
  } else {
    throw InvalidInput("unknown algorithm '" + algo + "'");
  }
  return out;
}

void attach_certificate(Report& report, const Graph& g, const DominationCertificate& cert, bool certify) {
  report.json["certificate"] = certificate_json(cert.independent_set, cert.dominating_set);
  if (!certify) {
    report.json["verified"] = nullptr;
    return;
  }
  const auto problem = replay_certificate(g, cert);
  report.json["verified"] = !problem;
  if (problem) {
    report.json["verify_error"] = *problem;
    report.failed = true;
  }
}

Json header(const std::string& input, const Graph& g) { return Json{{"input", input}, {"n", g.order()}, {"m", g.size()}}; }

double log_log_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += std::log(xs[i]);
    my += std::log(ys[i]);
  }
  mx /= static_cast<double>(xs.size());
  my /= static_cast<double>(xs.size());
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (std::log(xs[i]) - mx) * (std::log(ys[i]) - my);
    sxx += (std::log(xs[i]) - mx) * (std::log(xs[i]) - mx);
  }
  return sxx > 0 ? sxy / sxx : 0.0;
}

}  // namespace

Limits Limits::from_environment() {
  Limits l;
  if (auto v = env_int("INDOM_WIDTH_CEILING")) l.width_ceiling = *v;
  if (auto v = env_int("INDOM_AUTO_WIDTH")) l.auto_width = *v;
  if (auto v = env_int("INDOM_EXACT_CEILING")) l.exact_ceiling = *v;
  return l;
}

Json certificate_json(const VertexSet& independent, const VertexSet& dominating) {
  return Json{{"independent_set", vertices(independent)}, {"dominating_set", vertices(dominating)}};
}

std::string choose_algorithm(const Graph& g, const GammaOptions& o) {
  if (o.algo != "auto") return o.algo;
  if (std::holds_alternative<Cotree>(build_cotree(g))) return "cograph";
  if (std::holds_alternative<PruningSequence>(recognize_dh(g))) return "dh";
  if (o.diagram_text) return "permutation";
  if (o.td_text) return "treewidth";
  const int width = heuristic_decomposition(g).width();
  if (width <= o.limits.auto_width && width <= o.limits.width_ceiling) return "treewidth";
  return "exact";
}

Report cmd_gamma_i(const Graph& g, const std::string& input, const GammaOptions& options) {
  Report report;
  report.json = header(input, g);
  const auto start = Clock::now();
  const std::string algo = choose_algorithm(g, options);
  const Solved s = solve_with(algo, g, options);
  report.json["algo"] = algo;
  report.json["value"] = s.value;
  report.json["timings"] = Json{{"seconds", seconds_since(start)}};
  report.json["stats"] = s.stats;
  attach_certificate(report, g, s.certificate, options.certify);
  return report;
}

Report cmd_oracle(const Graph& g, const std::string& input, bool certify) {
  Report report;
  report.json = header(input, g);
  const auto start = Clock::now();
  const SetDomination dom = gamma(g);
  const GammaIResult gi = gamma_i_oracle(g);
  long long sets = 0;
  enumerate_maximal_independent_sets(g, [&](const VertexSet&) {
    ++sets;
    return true;
  });
  report.json["algo"] = "oracle";
  report.json["value"] = gi.value;
  report.json["gamma"] = dom.value;
  report.json["gamma_witness"] = vertices(dom.witness);
  report.json["timings"] = Json{{"seconds", seconds_since(start)}};
  report.json["stats"] = Json{{"maximal_sets", sets}};
  attach_certificate(report, g, gi.certificate, certify);
  if (certify && !dominates(g, dom.witness, g.all())) {
    report.json["verified"] = false;
    report.json["verify_error"] = "gamma witness does not dominate the graph";
    report.failed = true;
  }
  return report;
}

Report cmd_exact(const Graph& g, const std::string& input, double beta, const Limits& limits, bool certify) {
  Report report;
  report.json = header(input, g);
  const auto start = Clock::now();
  const ExactResult r = gamma_i_exact(g, beta, limits.exact_ceiling);
  report.json["algo"] = "exact";
  report.json["value"] = r.value;
  report.json["timings"] = Json{{"seconds", seconds_since(start)}};
  report.json["stats"] = branch_stats(r.stats);
  report.json["stats"]["maximal_sets"] = r.maximal_sets;
  report.json["stats"]["beta"] = beta;
  attach_certificate(report, g, r.certificate, certify);
  return report;
}

Report cmd_ptas(const Graph& g, const std::string& input, const PtasCliOptions& options) {
  Report report;
  report.json = header(input, g);
  PtasOptions po;
  po.roots = options.roots;
  po.width_ceiling = options.limits.width_ceiling;
  const auto start = Clock::now();
  const PtasResult r = options.k ? ptas_gamma_i(g, *options.k, po) : ptas_gamma_i(g, options.epsilon.value_or(0.5), po);
  report.json["algo"] = "ptas";
  report.json["value"] = r.value;
  report.json["timings"] = Json{{"seconds", seconds_since(start)}};
  Json shifts = Json::array();
  for (const ShiftOutcome& s : r.shifts)
    shifts.push_back(Json{{"shift", s.shift}, {"piece_value", s.piece_value}, {"cut_value", s.cut_value}, {"value", s.value},
                          {"max_width", s.max_width}});
  report.json["stats"] = Json{{"k", r.k}, {"best_shift", r.best_shift}, {"level_count", r.level_count},
                              {"piece_value", r.piece_value}, {"shifts", shifts}};
  attach_certificate(report, g, r.certificate, options.certify);
  return report;
}

std::vector<Report> cmd_verify(const std::string& suite, std::uint64_t seed, int count, int max_n) {
  if (max_n < 1 || max_n > 20) throw InvalidInput("verify needs 1 <= max-n <= 20");
  if (count < 0) throw InvalidInput("count must be non-negative");
  struct Case {
    Graph g;
    int expected = 0;
    int got = 0;
    std::optional<std::string> problem;
  };
  std::function<Case(int, std::uint64_t)> make;
  auto by_solver = [](Graph g, const std::function<GammaIResult(const Graph&)>& solve) {
    Case c;
    c.g = std::move(g);
    c.expected = gamma_i_oracle(c.g).value;
    const GammaIResult r = solve(c.g);
    c.got = r.value;
    c.problem = replay_certificate(c.g, r.certificate);
    return c;
  };
  if (suite == "cograph") {
    make = [&](int n, std::uint64_t s) {
      const Cotree t = random_cotree(n, s);
      Case c = by_solver(cotree_to_graph(t), gamma_i_cograph);
      if (!c.problem && gamma_cograph(t) != gamma(c.g).value) c.problem = "cotree domination number disagrees";
      return c;
    };
  } else if (suite == "dh") {
    make = [&](int n, std::uint64_t s) {
      return by_solver(replay_pruning_sequence(random_dh_sequence(n, s)), [](const Graph& g) {
        const DHResult r = gamma_i_distance_hereditary(g);
        return GammaIResult{r.value, r.certificate};
      });
    };
  } else if (suite == "permutation") {
    make = [&](int n, std::uint64_t s) {
      const PermutationDiagram d = random_diagram(n, s);
      return by_solver(diagram_to_graph(d), [&](const Graph&) {
        const PermutationResult r = gamma_i_permutation(d);
        return GammaIResult{r.value, r.certificate};
      });
    };
  } else if (suite == "treewidth") {
    make = [&](int n, std::uint64_t s) {
      Rng rng(s);
      return by_solver(random_gnp(n, 0.1 + 0.5 * rng.real(), s), [](const Graph& g) {
        const TreewidthResult r = gamma_i_treewidth(g, heuristic_decomposition(g), 30);
        return GammaIResult{r.value, r.certificate};
      });
    };
  } else if (suite == "exact") {
    make = [&](int n, std::uint64_t s) {
      Rng rng(s);
      return by_solver(random_gnp(n, 0.1 + 0.5 * rng.real(), s), [](const Graph& g) {
        const ExactResult r = gamma_i_exact(g);
        return GammaIResult{r.value, r.certificate};
      });
    };
  } else if (suite == "chordal") {
    make = [&](int n, std::uint64_t s) {
      Case c;
      c.g = random_chordal(n, s);
      c.expected = gamma_i_oracle(c.g).value;
      c.got = gamma(c.g).value;
      return c;
    };
  } else {
    throw InvalidInput("unknown verify suite '" + suite + "'");
  }

  std::vector<Report> out;
  Rng sizes(seed);
  int mismatches = 0;
  for (int i = 0; i < count; ++i) {
    const int n = sizes.between(1, max_n);
    const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
    const Case c = make(n, s);
    Report r;
    r.json = Json{{"suite", suite}, {"index", i}, {"seed", s}, {"n", c.g.order()}, {"m", c.g.size()},
                  {"expected", c.expected}, {"got", c.got}};
    const bool agree = c.expected == c.got && !c.problem;
    r.json["agree"] = agree;
    if (!agree) {
      ++mismatches;
      r.failed = true;
      if (c.problem) r.json["problem"] = *c.problem;
      r.json["instance"] = serialize_graph(c.g, GraphFormat::EdgeList);
    }
    out.push_back(std::move(r));
  }
  Report summary;
  summary.json = Json{{"suite", suite}, {"summary", true}, {"count", count}, {"mismatches", mismatches}};
  summary.failed = mismatches > 0;
  out.push_back(std::move(summary));
  return out;
}

std::vector<std::pair<std::string, Graph>> default_product_corpus() {
  return {{"K1", complete_graph(1)}, {"K2", complete_graph(2)}, {"P3", path_graph(3)}, {"K3", complete_graph(3)},
          {"P4", path_graph(4)},     {"C4", cycle_graph(4)},    {"K13", star_graph(3)}, {"C5", cycle_graph(5)},
          {"P5", path_graph(5)},     {"C6", cycle_graph(6)}};
}

std::vector<Report> cmd_product_check(const std::vector<std::pair<std::string, Graph>>& given) {
  const auto graphs = given.empty() ? default_product_corpus() : given;
  for (const auto& [name, g] : graphs)
    if (g.order() > 8) throw InvalidInput("product factor " + name + " has more than 8 vertices");
  std::vector<int> gm, gi;
  for (const auto& [name, g] : graphs) {
    gm.push_back(gamma(g).value);
    gi.push_back(gamma_i_oracle(g).value);
  }
  std::vector<Report> out;
  int violations = 0;
  for (std::size_t a = 0; a < graphs.size(); ++a)
    for (std::size_t b = 0; b < graphs.size(); ++b) {
      const Graph p = cartesian_product(graphs[a].second, graphs[b].second);
      const int gp = gamma(p).value;
      const int gip = gamma_i_oracle(p).value;
      const bool first = gp >= gi[a] * gm[b];
      const bool second = gip >= gi[a] * gi[b];
      const bool suen_tarr = 2 * gp >= gm[a] * gm[b] + std::min(gm[a], gm[b]);
      Report r;
      r.json = Json{{"g", graphs[a].first},
                    {"h", graphs[b].first},
                    {"gamma_g", gm[a]},
                    {"gamma_i_g", gi[a]},
                    {"gamma_h", gm[b]},
                    {"gamma_i_h", gi[b]},
                    {"gamma_product", gp},
                    {"gamma_i_product", gip},
                    {"gamma_ge_gamma_i_times_gamma", first},
                    {"gamma_i_ge_product", second},
                    {"suen_tarr", suen_tarr}};
      r.failed = !(first && second && suen_tarr);
      if (r.failed) ++violations;
      out.push_back(std::move(r));
    }
  Report summary;
  summary.json = Json{{"summary", true}, {"pairs", graphs.size() * graphs.size()}, {"violations", violations}};
  summary.failed = violations > 0;
  out.push_back(std::move(summary));
  return out;
}

std::vector<Report> cmd_bench(const std::string& suite, const std::vector<int>& sizes, int repetitions, std::uint64_t seed) {
  if (repetitions < 1) throw InvalidInput("repetitions must be positive");
  std::function<int(int)> run_once;  // returns the value, timed by the caller
  std::function<void(int)> prepare;
  Cotree tree;
  Graph g;
  if (suite == "cograph") {
    prepare = [&](int n) { tree = random_cotree(n, seed); };
    run_once = [&](int) {
      bench_sink = gamma_cograph(tree);
      return gamma_i_cotree(tree);
    };
  } else if (suite == "dh") {
    prepare = [&](int n) { g = replay_pruning_sequence(random_dh_sequence(n, seed)); };
    run_once = [&](int) { return gamma_i_distance_hereditary(g).value; };
  } else if (suite == "exact") {
    prepare = [&](int n) { g = random_gnp(n, 0.2, seed); };
    run_once = [&](int) { return gamma_i_exact(g).value; };
  } else {
    throw InvalidInput("unknown bench suite '" + suite + "'");
  }
  std::vector<Report> out;
  std::vector<double> xs, ys;
  for (int n : sizes) {
    prepare(n);
    std::vector<double> times;
    int value = 0;
    for (int rep = 0; rep < repetitions; ++rep) {
      const auto start = Clock::now();
      value = run_once(n);
      times.push_back(seconds_since(start));
    }
    std::sort(times.begin(), times.end());
    const double median = times[times.size() / 2];
    xs.push_back(n);
    ys.push_back(std::max(median, 1e-9));
    Report r;
    r.json = Json{{"suite", suite}, {"n", n}, {"repetitions", repetitions}, {"median_seconds", median}, {"value", value}};
    out.push_back(std::move(r));
  }
  Report summary;
  summary.json = Json{{"suite", suite}, {"summary", true}};
  if (xs.size() >= 2) summary.json["log_log_slope"] = log_log_slope(xs, ys);
  out.push_back(std::move(summary));
  return out;
}

}  // namespace indom::cli
