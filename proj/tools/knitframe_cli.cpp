#include <iostream>

#include <CLI11.hpp>

#include "knitframe/experiment.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Sampling on finite knit-product groups"};
  app.require_subcommand(1);

  std::string config, out;
  knitframe::Overrides overrides;
  auto add_common = [&](CLI::App* cmd, const char* out_help) {
    cmd->add_option("--config", config, "experiment config (JSON)")->required();
    cmd->add_option("--out", out, out_help)->required();
    cmd->add_option("--seed", overrides.seed, "override the config seed");
    cmd->add_option("--tol-rank", overrides.tol_rank, "rank tolerance for R")->check(CLI::PositiveNumber);
    cmd->add_option("--tol-recon", overrides.tol_recon, "relative reconstruction tolerance")
        ->check(CLI::PositiveNumber);
  };
  CLI::App* run = app.add_subcommand("run", "build the scheme, run trials, write a JSON report");
  add_common(run, "report path");
  CLI::App* dump = app.add_subcommand("dump", "write the Gram, cross-covariance, R+ and M_S matrices");
  add_common(dump, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "ConfigParse: arguments: " << e.what() << '\n';
    return 1;
  }

  if (run->parsed()) return knitframe::run_command(config, out, overrides, std::cerr);
  return knitframe::dump_command(config, out, overrides, std::cerr);
}
