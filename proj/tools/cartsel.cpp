#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cli/commands.hpp"

int main(int argc, char **argv) {
  using namespace cartsel::cli;

  CLI::App app{"k smallest sums of X1 + ... + Xm via a Cartesian product tree"};
  app.require_subcommand(1);

  GenOptions gen;
  auto *gen_cmd = app.add_subcommand("gen", "write a seeded random instance");
  gen_cmd->add_option("--n", gen.n, "values per array")->required();
  gen_cmd->add_option("--m", gen.m, "number of arrays")->required();
  gen_cmd->add_option("--seed", gen.seed, "generator seed");
  gen_cmd->add_option("--dist", gen.dist, "int: [0, 2^30) integers, real: [0, 1)");
  gen_cmd->add_option("-o,--output", gen.out, "output path (default stdout)");

  SelectOptions select;
  auto *select_cmd = app.add_subcommand("select", "k smallest sums of an instance file");
  select_cmd->add_option("--input", select.input, "instance file")->required();
  select_cmd->add_option("--k", select.k, "number of values")->required();
  select_cmd->add_option("--alpha", select.alpha, "LOH rank, > 1");
  select_cmd->add_option("--mode", select.mode, "standard or wobbly");
  select_cmd->add_flag("--sorted", select.sorted, "sort the output");
  select_cmd->add_option("-o,--output", select.output, "output path (default stdout)");

  VerifyOptions verify;
  auto *verify_cmd = app.add_subcommand("verify", "compare against brute force on small instances");
  verify_cmd->add_option("--n-max", verify.n_max);
  verify_cmd->add_option("--m-max", verify.m_max);
  verify_cmd->add_option("--trials", verify.trials, "instances per (n, m)");
  verify_cmd->add_option("--seed", verify.seed);
  verify_cmd->add_option("--alpha", verify.alpha);

  BenchOptions bench;
  std::string k_list, k_range, modes = "standard,wobbly";
  auto *bench_cmd = app.add_subcommand("bench", "time selections and write CSV");
  bench_cmd->add_option("--n", bench.n);
  bench_cmd->add_option("--m", bench.m);
  bench_cmd->add_option("--alpha", bench.alpha);
  auto *k_opt = bench_cmd->add_option("--k", k_list, "comma-separated k values");
  bench_cmd->add_option("--k-range", k_range, "powers of two LO:HI, e.g. 2:20")
      ->excludes(k_opt);
  bench_cmd->add_option("--mode,--modes", modes, "comma-separated: standard, wobbly, naive");
  bench_cmd->add_option("--trials", bench.trials);
  bench_cmd->add_option("--seed", bench.seed);
  bench_cmd->add_option("--dist", bench.dist);
  bench_cmd->add_option("--csv", bench.csv, "CSV path (default stdout)");
  bench_cmd->add_option("--cap", bench.cap, "largest product size for naive mode");

  CLI11_PARSE(app, argc, argv);

  if (*gen_cmd)
    return cmd_gen(gen, std::cout, std::cerr);
  if (*select_cmd)
    return cmd_select(select, std::cout, std::cerr);
  if (*verify_cmd)
    return cmd_verify(verify, std::cout, std::cerr);

  try {
    bench.ks = k_range.empty() ? parse_k_list(k_list) : parse_k_range(k_range);
    bench.modes = split_list(modes);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code::failure;
  }
  return cmd_bench(bench, std::cout, std::cerr);
}
