#include <cstdio>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "indom/cograph.hpp"
#include "indom/distance_hereditary.hpp"
#include "indom/error.hpp"
#include "indom/generators.hpp"
#include "indom/graph_io.hpp"
#include "indom/permutation.hpp"
#include "indom/treewidth.hpp"

using namespace indom;
using namespace indom::cli;

namespace {

struct InputArgs {
  std::string path;
  std::string gen;
  std::uint64_t seed = 1;
  std::string format = "edge-list";

  void attach(CLI::App* cmd) {
    cmd->add_option("input", path, "graph file, - for stdin");
    cmd->add_option("--gen", gen, "generate the input from a descriptor instead");
    cmd->add_option("--seed", seed, "seed for --gen");
    cmd->add_option("--format", format, "edge-list or dimacs");
  }

  std::pair<Graph, std::string> load() const {
    if (!gen.empty()) {
      if (!path.empty()) throw InvalidInput("give either an input file or --gen, not both");
      return {generate(gen, seed).graph, gen + "@" + std::to_string(seed)};
    }
    if (path.empty()) throw InvalidInput("no input graph");
    std::string text;
    if (path == "-")
      text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    else
      text = read_text_file(path);
    return {parse_graph(text, parse_format_name(format)), path};
  }
};

void emit(const Json& j) {
  std::cout << j.dump() << '\n';
}

int emit_all(const std::vector<Report>& reports) {
  bool failed = false;
  for (const Report& r : reports) {
    emit(r.json);
    failed = failed || r.failed;
  }
  return failed ? 1 : 0;
}

std::optional<std::string> slurp(const std::string& path) {
  if (path.empty()) return std::nullopt;
  return read_text_file(path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"independence domination number solvers"};
  app.require_subcommand(1);

  Limits limits;
  std::optional<int> width_ceiling, auto_width, exact_ceiling;
  auto add_limits = [&](CLI::App* cmd) {
    cmd->add_option("--width-ceiling", width_ceiling, "largest decomposition width the DP accepts");
    cmd->add_option("--auto-width", auto_width, "auto dispatch uses the DP up to this heuristic width");
    cmd->add_option("--exact-ceiling", exact_ceiling, "largest n for the exponential algorithm");
  };

  InputArgs gi_in;
  GammaOptions gi_opt;
  std::string cotree_path, diagram_path, td_path;
  CLI::App* gi = app.add_subcommand("gamma-i", "independence domination number with class-aware dispatch");
  gi_in.attach(gi);
  gi->add_option("--algo", gi_opt.algo, "auto, cograph, dh, permutation, treewidth, exact or oracle")
      ->check(CLI::IsMember({"auto", "cograph", "dh", "permutation", "treewidth", "exact", "oracle"}));
  gi->add_flag("--certify", gi_opt.certify, "replay the certificate");
  gi->add_option("--cotree", cotree_path, "cotree file");
  gi->add_option("--diagram", diagram_path, "permutation diagram file");
  gi->add_option("--td", td_path, "tree decomposition file (PACE format, 1-based)");
  add_limits(gi);

  InputArgs or_in;
  bool or_certify = false;
  CLI::App* orc = app.add_subcommand("oracle", "brute-force gamma and gamma^i");
  or_in.attach(orc);
  orc->add_flag("--certify", or_certify);

  InputArgs ex_in;
  bool ex_certify = false;
  double beta = 0.6827;
  CLI::App* ex = app.add_subcommand("exact", "exponential algorithm over maximal independent sets");
  ex_in.attach(ex);
  ex->add_flag("--certify", ex_certify);
  ex->add_option("--beta", beta, "size threshold between branching and subset search")->check(CLI::Range(0.0, 1.0));
  add_limits(ex);

  InputArgs pt_in;
  PtasCliOptions pt_opt;
  double epsilon = 0;
  int k = 0;
  CLI::App* pt = app.add_subcommand("ptas", "shifting scheme for planar inputs (planarity is not checked)");
  pt_in.attach(pt);
  pt->add_option("--epsilon", epsilon, "accuracy, k = ceil(1/epsilon)");
  pt->add_option("--k", k, "number of shifts, instead of --epsilon");
  pt->add_option("--root", pt_opt.roots, "layering roots");
  pt->add_flag("--certify", pt_opt.certify);
  add_limits(pt);

  std::string gen_desc, gen_out, gen_format = "edge-list", cotree_out, diagram_out, pruning_out, td_out;
  std::uint64_t gen_seed = 1;
  CLI::App* gen = app.add_subcommand("gen", "generate a graph and its side artifacts");
  gen->add_option("descriptor", gen_desc, "e.g. gnp:20:0.3, grid:4:5, cograph:30")->required();
  gen->add_option("--seed", gen_seed);
  gen->add_option("--format", gen_format);
  gen->add_option("-o,--out", gen_out, "graph file; stdout when absent");
  gen->add_option("--cotree-out", cotree_out);
  gen->add_option("--diagram-out", diagram_out);
  gen->add_option("--pruning-out", pruning_out);
  gen->add_option("--td-out", td_out, "min-fill decomposition in PACE format");

  std::string suite = "cograph";
  int count = 100, max_n = 12;
  std::uint64_t verify_seed = 1;
  CLI::App* ver = app.add_subcommand("verify", "class solver against the oracle on random instances");
  ver->add_option("--suite", suite)->check(CLI::IsMember({"cograph", "dh", "permutation", "treewidth", "exact", "chordal"}));
  ver->add_option("--count", count);
  ver->add_option("--seed", verify_seed);
  ver->add_option("--max-n", max_n);

  std::vector<std::string> product_files;
  std::string product_format = "edge-list";
  CLI::App* prod = app.add_subcommand("product-check", "product inequalities over all ordered pairs");
  prod->add_option("graphs", product_files, "factor graphs (n <= 8); a built-in corpus when absent");
  prod->add_option("--format", product_format);

  std::string bench_suite = "cograph";
  std::vector<int> sizes;
  int reps = 3;
  std::uint64_t bench_seed = 1;
  CLI::App* bench = app.add_subcommand("bench", "median wall time per size");
  bench->add_option("--suite", bench_suite)->check(CLI::IsMember({"cograph", "dh", "exact"}));
  bench->add_option("--sizes", sizes);
  bench->add_option("--reps", reps);
  bench->add_option("--seed", bench_seed);

  CLI11_PARSE(app, argc, argv);

  try {
    limits = Limits::from_environment();
    if (width_ceiling) limits.width_ceiling = *width_ceiling;
    if (auto_width) limits.auto_width = *auto_width;
    if (exact_ceiling) limits.exact_ceiling = *exact_ceiling;

    if (gi->parsed()) {
      const auto [g, name] = gi_in.load();
      gi_opt.limits = limits;
      gi_opt.cotree_text = slurp(cotree_path);
      gi_opt.diagram_text = slurp(diagram_path);
      gi_opt.td_text = slurp(td_path);
      return emit_all({cmd_gamma_i(g, name, gi_opt)});
    }
    if (orc->parsed()) {
      const auto [g, name] = or_in.load();
      return emit_all({cmd_oracle(g, name, or_certify)});
    }
    if (ex->parsed()) {
      const auto [g, name] = ex_in.load();
      return emit_all({cmd_exact(g, name, beta, limits, ex_certify)});
    }
    if (pt->parsed()) {
      const auto [g, name] = pt_in.load();
      pt_opt.limits = limits;
      if (k > 0) pt_opt.k = k;
      if (epsilon > 0) pt_opt.epsilon = epsilon;
      if (pt_opt.k && pt_opt.epsilon) throw InvalidInput("give --k or --epsilon, not both");
      return emit_all({cmd_ptas(g, name, pt_opt)});
    }
    if (gen->parsed()) {
      const GeneratedGraph made = generate(gen_desc, gen_seed);
      const std::string text = serialize_graph(made.graph, parse_format_name(gen_format));
      auto side = [](const std::string& path, bool present, const std::string& what, auto&& write) {
        if (path.empty()) return;
        if (!present) throw InvalidInput("descriptor has no " + what);
        write_text_file(path, write());
      };
      side(cotree_out, made.cotree.has_value(), "cotree", [&] { return write_cotree(*made.cotree); });
      side(diagram_out, made.diagram.has_value(), "diagram", [&] { return write_diagram(*made.diagram); });
      side(pruning_out, made.pruning.has_value(), "pruning sequence", [&] { return write_pruning_sequence(*made.pruning); });
      side(td_out, true, "", [&] { return write_pace_td(heuristic_decomposition(made.graph), made.graph.order()); });
      if (gen_out.empty()) {
        std::cout << text;
      } else {
        write_text_file(gen_out, text);
        emit(Json{{"descriptor", gen_desc}, {"seed", gen_seed}, {"n", made.graph.order()}, {"m", made.graph.size()}, {"out", gen_out}});
      }
      return 0;
    }
    if (ver->parsed()) return emit_all(cmd_verify(suite, verify_seed, count, max_n));
    if (prod->parsed()) {
      std::vector<std::pair<std::string, Graph>> graphs;
      for (const std::string& f : product_files) graphs.emplace_back(f, parse_graph(read_text_file(f), parse_format_name(product_format)));
      return emit_all(cmd_product_check(graphs));
    }
    if (bench->parsed()) {
      if (sizes.empty()) {
        if (bench_suite == "cograph") sizes = {1000, 10000, 100000};
        else if (bench_suite == "dh") sizes = {250, 500, 1000, 2000};
        else sizes = {20, 25, 30};
      }
      return emit_all(cmd_bench(bench_suite, sizes, reps, bench_seed));
    }
  } catch (const ClassMismatch& e) {
    emit(Json{{"error", "class-mismatch"}, {"class", e.graph_class()}, {"witness", e.witness()}, {"message", e.what()}});
    return 2;
  } catch (const ParseError& e) {
    emit(Json{{"error", "parse"}, {"line", e.line()}, {"message", e.what()}});
    return 2;
  } catch (const CapacityError& e) {
    emit(Json{{"error", "capacity"}, {"message", e.what()}});
    return 2;
  } catch (const Error& e) {
    emit(Json{{"error", "invalid-input"}, {"message", e.what()}});
    return 2;
  }
  return 0;
}
