#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "envelopes/simulation.hpp"

namespace envelopes::cli {

/// A fully validated experiment: parsing rejects the whole file on any
/// unknown key, duplicate key, missing required key or malformed value, so
/// no partially-configured run can start.
struct ExperimentConfig {
  OrganizerModel organizer;
  Strategy opener_strategy;
  Strategy observer_strategy;
  std::uint64_t rounds = 0;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::optional<std::filesystem::path> output_path;
};

/// Parses the line-based `key = value` format (UTF-8, '#' comments).
/// Required keys: organizer, opener_strategy, observer_strategy, rounds.
/// Optional: seed (default 0), workers (default 1), output_path.
/// Errors carry the line number and key of the offending entry.
ExperimentConfig parse_experiment_config(std::istream& in);

ExperimentConfig load_experiment_config(const std::filesystem::path& path);

/// Deterministic, byte-stable rendering of a report (12 significant digits).
/// Appends the analytic correct-classification probability for each side
/// playing a threshold strategy.
std::string format_report(const SimulationReport& report,
                          const ExperimentConfig& config);

// Subcommand bodies. Errors are reported by exception: std::invalid_argument
// for usage/config problems (exit 2 in the binary), NonConvergenceError for
// numerical failures (exit 3).

/// Prints the closed-form expectation ladder as coefficients of X.
void cmd_analyze(double p, std::ostream& out);

/// Prints the both-IAS outcome matrix, human table first, then CSV.
void cmd_table1(std::ostream& out);

/// Prints the numeric and closed-form equal-density coefficients and their
/// difference.
void cmd_cv(std::ostream& out);

/// Writes a CSV of the two hypothesis densities on a grid over
/// (0, 2*x_hat + 12*sigma(2*x_hat)], then a '#' summary line with the
/// threshold M and the posterior at the revealed amount a.
void cmd_density(double x_hat, double a, int grid,
                 const std::filesystem::path& out_path, std::ostream& status);

/// Runs the configured experiment, prints the report, and optionally dumps
/// one CSV row per round to config.output_path.
void cmd_simulate(const ExperimentConfig& config, std::ostream& out);

}  // namespace envelopes::cli
