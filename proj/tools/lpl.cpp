#include <CLI11.hpp>
#include <iostream>

#include "lpl/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Pre-Poisson and cosymplectic analysis of affine subspaces of Lie-Poisson duals"};
  lpl::CliOptions opt;
  app.add_option("command", opt.command, "validate | classify | extend | pair | algebroid | bracket | casimir")
      ->required()
      ->check(CLI::IsMember(lpl::cli_commands()));
  app.add_option("--problem", opt.problem, "problem file (JSON)");
  app.add_option("--model", opt.model, "model file (JSON); overrides the problem's model");
  app.add_option("--samples", opt.samples, "number of sample points");
  app.add_option("--seed", opt.seed, "sampling seed");
  app.add_option("--poly", opt.polynomials, "polynomial argument, e.g. 'nu1^2 + nu2^2 - nu3^2'");
  app.add_flag("--json", opt.json, "machine-readable output");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : lpl::kExitInputError;
  }
  const lpl::CliResult r = lpl::run(opt);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
