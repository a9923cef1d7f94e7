#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pipeline.hpp"

using domfix::cli::Format;
using domfix::cli::RunConfig;

int main(int argc, char** argv) {
  CLI::App app{"graph domination and prism fixer toolkit"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "json";
  std::string cycles;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", cfg.input, "graph6 input file, - for stdin");
    sub->add_option("--budget", cfg.budget, "random fallback search attempts")
        ->check(CLI::PositiveNumber);
    sub->add_option("--cap", cfg.cap, "max order for brute-force cross-checks")
        ->check(CLI::PositiveNumber);
    sub->add_option("--limit", cfg.limit, "gamma-set enumeration limit")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "random seed")->envname("DOMFIX_SEED");
    sub->add_option("--format", format, "output format: json, csv, or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--jobs", cfg.jobs, "worker threads")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* cmd_gamma =
      app.add_subcommand("gamma", "domination number per graph");
  CLI::App* cmd_analyze =
      app.add_subcommand("analyze", "symmetric gamma-set analysis per graph");
  CLI::App* cmd_verify =
      app.add_subcommand("verify", "witness permutation search per graph");
  CLI::App* cmd_prism =
      app.add_subcommand("prism", "emit graph6 of the prism under a permutation");
  for (CLI::App* sub : {cmd_gamma, cmd_analyze, cmd_verify, cmd_prism})
    add_common(sub);
  cmd_prism
      ->add_option("cycles", cycles,
                   "permutation in cycle notation, e.g. \"(0 2 1)(3)\"")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  cfg.format = format == "csv"    ? Format::CSV
               : format == "text" ? Format::TEXT
                                  : Format::JSON;

  std::ifstream file;
  std::istream* in = &std::cin;
  if (cfg.input != "-") {
    file.open(cfg.input);
    if (!file) {
      std::cerr << "cannot open input: " << cfg.input << "\n";
      return 2;
    }
    in = &file;
  }

  if (cmd_gamma->parsed())
    return domfix::cli::run_gamma(cfg, *in, std::cout, std::cerr);
  if (cmd_analyze->parsed())
    return domfix::cli::run_analyze(cfg, *in, std::cout, std::cerr);
  if (cmd_verify->parsed())
    return domfix::cli::run_verify(cfg, *in, std::cout, std::cerr);
  return domfix::cli::run_prism(cfg, cycles, *in, std::cout, std::cerr);
}
