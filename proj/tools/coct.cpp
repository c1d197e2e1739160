#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <omp.h>

#include "CLI11.hpp"
#include "coct/clique_expr.hpp"
#include "coct/dp.hpp"
#include "coct/error.hpp"
#include "coct/graph.hpp"
#include "coct/oracle.hpp"
#include "coct/reduction.hpp"
#include "coct/sat.hpp"
#include "coct/selfcheck.hpp"

namespace {

using namespace coct;

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  return out;
}

CliqueExpression load_expression(const std::string& path) {
  auto in = open_input(path);
  return read_expression(in);
}

LabeledGraph load_graph(const std::string& path) {
  auto in = open_input(path);
  return read_graph(in);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int cmd_solve(const std::string& expr_path, int budget, int trials, std::uint64_t seed, int threads) {
  auto e = load_expression(expr_path);
  if (budget < 0) throw InputError("budget must be non-negative");
  if (trials < 1) throw InputError("trials must be at least 1");
  if (threads < 1) throw InputError("threads must be at least 1");
  omp_set_num_threads(threads);

  SolveOptions options;
  options.trials = trials;
  options.seed = seed;
  options.exec = threads > 1 ? Exec::parallel : Exec::serial;

  auto start = std::chrono::steady_clock::now();
  auto result = solve(e, budget, options);
  double elapsed = seconds_since(start);

  auto sets = node_sets(e);
  int W = 8 * static_cast<int>(sets.wnodes.size());
  std::cout << (result.yes ? "YES" : "NO") << "\n";
  std::cerr << "k=" << e.width() << "\n"
            << "n=" << e.num_vertices() << "\n"
            << "nodes=" << e.size() << "\n"
            << "wnodes=" << sets.wnodes.size() << "\n"
            << "W=" << W << "\n"
            << "wmax_bound=" << W * static_cast<long long>(sets.wnodes.size()) << "\n"
            << "bipartite=" << result.bipartite << "\n"
            << "trials_run=" << result.trials_run << "\n"
            << "runs=" << result.runs << "\n";
  if (result.witnessed) std::cerr << "witnessed=" << *result.witnessed << "\n";
  std::cerr << "seconds=" << elapsed << "\n";
  return 0;
}

int cmd_oracle(const std::string& expr_path, const std::string& graph_path, int budget) {
  if (budget < 0) throw InputError("budget must be non-negative");
  LabeledGraph g = !expr_path.empty() ? evaluate(load_expression(expr_path)) : load_graph(graph_path);
  auto found = brute_force_solve(g, budget);
  std::cout << (found ? "YES" : "NO") << "\n";
  std::cerr << "n=" << g.num_vertices() << "\n" << "m=" << g.num_edges() << "\n";
  if (found) {
    std::cerr << "size=" << found->size() << "\nset=";
    const char* sep = "";
    for (Vertex v : found->members()) {
      std::cerr << sep << v;
      sep = ",";
    }
    std::cerr << "\n";
  }
  return 0;
}

int cmd_reduce(const std::string& cnf_path, int t0, const std::string& prefix) {
  auto in = open_input(cnf_path);
  auto sat = read_dimacs(in);
  for (const auto& w : sat.warnings) std::cerr << "warning: " << w << "\n";
  auto inst = build_instance(sat, t0);

  {
    auto out = open_output(prefix + ".graph");
    write_graph(out, inst.graph);
  }
  {
    auto out = open_output(prefix + ".expr");
    write_expression(out, inst.expr);
  }
  {
    auto out = open_output(prefix + ".budget");
    out << inst.budget << "\n";
  }
  {
    auto out = open_output(prefix + ".meta");
    out << "n=" << sat.num_vars << "\n"
        << "m=" << sat.clauses.size() << "\n"
        << "d=" << inst.d << "\n"
        << "t0=" << inst.t0 << "\n"
        << "t=" << inst.t << "\n"
        << "s=" << inst.s << "\n"
        << "nprime=" << inst.nprime << "\n"
        << "c=" << inst.c << "\n"
        << "k=" << inst.expr.width() << "\n"
        << "budget=" << inst.budget << "\n";
  }
  std::cerr << "vertices=" << inst.graph.num_vertices() << "\n"
            << "edges=" << inst.graph.num_edges() << "\n"
            << "k=" << inst.expr.width() << "\n"
            << "budget=" << inst.budget << "\n";
  return 0;
}

int cmd_check_expr(const std::string& expr_path, const std::string& graph_path) {
  auto g = evaluate(load_expression(expr_path));
  auto h = load_graph(graph_path);
  bool same = g.num_vertices() == h.num_vertices() && g.edges() == h.edges();
  std::cout << (same ? "OK" : "MISMATCH") << "\n";
  if (!same) {
    std::cerr << "expr_vertices=" << g.num_vertices() << " graph_vertices=" << h.num_vertices() << "\n"
              << "expr_edges=" << g.num_edges() << " graph_edges=" << h.num_edges() << "\n";
    return 1;
  }
  return 0;
}

int cmd_selftest(int max_k) {
  if (max_k < 1 || max_k > 3) throw InputError("--max-k must be in 1..3");
  bool all = true;
  for (const auto& r : run_selfcheck(max_k)) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.detail.empty()) std::cout << "  " << r.detail;
    std::cout << "\n";
    all = all && r.passed;
  }
  return all ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Connected odd cycle transversal toolkit"};
  app.require_subcommand(1);

  std::string expr_path, graph_path, cnf_path, prefix;
  int budget = 0, trials = 1, threads = 1, t0 = 1, max_k = 2;
  std::uint64_t seed = 0;

  auto* solve_cmd = app.add_subcommand("solve", "Monte-Carlo decision on a k-expression");
  solve_cmd->add_option("--expr", expr_path, "expression file")->required()->check(CLI::ExistingFile);
  solve_cmd->add_option("--budget", budget, "solution size bound")->required();
  solve_cmd->add_option("--trials", trials, "independent trials")->capture_default_str();
  solve_cmd->add_option("--seed", seed, "weight seed")->capture_default_str();
  solve_cmd->add_option("--threads", threads, "worker threads")->capture_default_str();

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force decision");
  auto* oe = oracle_cmd->add_option("--expr", expr_path, "expression file")->check(CLI::ExistingFile);
  auto* og = oracle_cmd->add_option("--graph", graph_path, "graph file")->check(CLI::ExistingFile);
  oe->excludes(og);
  oracle_cmd->add_option("--budget", budget, "solution size bound")->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "Build the gadget instance of a CNF formula");
  reduce_cmd->add_option("--cnf", cnf_path, "DIMACS file")->required()->check(CLI::ExistingFile);
  reduce_cmd->add_option("--t0", t0, "variables per group")->required();
  reduce_cmd->add_option("--out", prefix, "output prefix")->required();

  auto* check_cmd = app.add_subcommand("check-expr", "Compare an expression with a graph");
  check_cmd->add_option("--expr", expr_path, "expression file")->required()->check(CLI::ExistingFile);
  check_cmd->add_option("--graph", graph_path, "graph file")->required()->check(CLI::ExistingFile);

  auto* selftest_cmd = app.add_subcommand("selftest", "Exhaustive invariant checks");
  selftest_cmd->add_option("--max-k", max_k, "largest width checked")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*solve_cmd) return cmd_solve(expr_path, budget, trials, seed, threads);
    if (*oracle_cmd) {
      if (expr_path.empty() && graph_path.empty()) throw InputError("oracle needs --expr or --graph");
      return cmd_oracle(expr_path, graph_path, budget);
    }
    if (*reduce_cmd) return cmd_reduce(cnf_path, t0, prefix);
    if (*check_cmd) return cmd_check_expr(expr_path, graph_path);
    if (*selftest_cmd) return cmd_selftest(max_k);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
