#include <CLI11.hpp>
#include <exception>
#include <iostream>

#include "envelopes/cli.hpp"
#include "envelopes/numerics.hpp"

namespace cli = envelopes::cli;

// Exit codes: 0 success, 2 usage/config error, 3 numerical non-convergence.

int main(int argc, char** argv) {
  CLI::App app{
      "Two-envelopes game: threshold-strategy analysis and Monte Carlo "
      "experiments"};
  app.require_subcommand(1);

  double analyze_p = 0.0;
  auto* analyze = app.add_subcommand(
      "analyze", "Print the closed-form expectation ladder");
  analyze
      ->add_option("--p", analyze_p,
                   "Probability that the other player requests the exchange")
      ->required();

  app.add_subcommand("table1",
                     "Print the both-IAS outcome matrix (table + CSV)");

  app.add_subcommand("cv",
                     "Print the equal-density coefficient of variation");

  double density_x_hat = 0.0;
  double density_a = 0.0;
  int density_grid = 200;
  std::string density_out;
  auto* density = app.add_subcommand(
      "density", "Export the two hypothesis densities as CSV");
  density->add_option("--x-hat", density_x_hat, "Most likely smaller amount")
      ->required();
  density->add_option("--a", density_a, "Revealed amount for the summary line")
      ->required();
  density->add_option("--grid", density_grid, "Number of grid rows");
  density->add_option("--out", density_out, "Output CSV path")->required();

  std::string simulate_config;
  std::string simulate_out;
  auto* simulate =
      app.add_subcommand("simulate", "Run a configured Monte Carlo experiment");
  simulate->add_option("--config", simulate_config, "Experiment config file")
      ->required();
  simulate->add_option("--out", simulate_out,
                       "Per-round CSV path (overrides output_path)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze) {
      cli::cmd_analyze(analyze_p, std::cout);
    } else if (app.got_subcommand("table1")) {
      cli::cmd_table1(std::cout);
    } else if (app.got_subcommand("cv")) {
      cli::cmd_cv(std::cout);
    } else if (*density) {
      cli::cmd_density(density_x_hat, density_a, density_grid, density_out,
                       std::cout);
    } else if (*simulate) {
      cli::ExperimentConfig config =
          cli::load_experiment_config(simulate_config);
      if (!simulate_out.empty()) {
        config.output_path = simulate_out;
      }
      cli::cmd_simulate(config, std::cout);
    }
  } catch (const envelopes::NonConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
