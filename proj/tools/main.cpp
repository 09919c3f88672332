#include <CLI11.hpp>
#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace tedhard::cli;
  CLI::App app{"Tree edit distance solvers and hardness reductions"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Solve an instance file");
  s->add_option("instance", solve.instance, "Instance file")->required();
  s->add_option("--alg", solve.alg, "brute, dp or caterpillar")
      ->check(CLI::IsMember({"brute", "dp", "caterpillar"}));

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Build a hard instance from a graph file");
  g->add_option("family", gen.family, "apsp or clique")
      ->required()
      ->check(CLI::IsMember({"apsp", "clique"}));
  g->add_option("graph", gen.graph, "Graph file")->required();
  g->add_option("--M", gen.m, "auto, empirical, family or an integer");
  g->add_option("--k", gen.k, "Clique size, divisible by 3");
  g->add_flag("--published-layout", gen.published_layout, "Use the published clique layout");
  g->add_option("-o,--output", gen.output, "Output file (default stdout)");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Reduce, solve, extract and compare with brute force");
  v->add_option("family", verify.family, "apsp or clique")
      ->required()
      ->check(CLI::IsMember({"apsp", "clique"}));
  v->add_option("graph", verify.graph, "Graph file")->required();
  v->add_option("--M", verify.m, "auto, empirical, family or an integer");
  v->add_option("--k", verify.k, "Clique size, divisible by 3");
  v->add_flag("--slow", verify.slow, "Lift the size guards");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Time solvers and print CSV");
  b->add_option("family", bench.family, "caterpillar, random or apsp")
      ->required()
      ->check(CLI::IsMember({"caterpillar", "random", "apsp"}));
  b->add_option("--sizes", bench.sizes, "lo..hi (doubling) or a comma list");
  b->add_option("--alg,--algs", bench.algs, "Comma list of brute, dp, caterpillar");
  b->add_option("--seed", bench.seed, "Instance seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*s) return cmd_solve(solve, std::cout, std::cerr);
  if (*g) return cmd_gen(gen, std::cout, std::cerr);
  if (*v) return cmd_verify(verify, std::cout, std::cerr);
  return cmd_bench(bench, std::cout, std::cerr);
}
