#include "envelopes/cli.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "envelopes/analytics.hpp"
#include "envelopes/beliefs.hpp"

namespace envelopes::cli {

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string trim(const std::string& s) {
  auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::uint64_t parse_count(const std::string& key, const std::string& value,
                          int line) {
  std::uint64_t parsed = 0;
  std::size_t used = 0;
  try {
    parsed = std::stoull(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != value.size() || value.empty() || value[0] == '-') {
    throw std::invalid_argument("config line " + std::to_string(line) +
                                ": key '" + key +
                                "' needs a non-negative integer, got '" +
                                value + "'");
  }
  return parsed;
}

const char* action_name(Action a) {
  return a == Action::RequestExchange ? "request" : "keep";
}

}  // namespace

ExperimentConfig parse_experiment_config(std::istream& in) {
  std::map<std::string, std::pair<std::string, int>> entries;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": expected 'key = value', got '" +
                                  stripped + "'");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": empty key or value");
    }
    if (entries.count(key)) {
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": duplicate key '" + key + "'");
    }
    entries.emplace(key, std::make_pair(value, line_no));
  }

  static const char* known[] = {"organizer", "opener_strategy",
                                "observer_strategy", "rounds",
                                "seed",      "workers",
                                "output_path"};
  for (const auto& [key, value_line] : entries) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) {
      throw std::invalid_argument(
          "config line " + std::to_string(value_line.second) +
          ": unknown key '" + key + "'");
    }
  }

  auto required = [&entries](const char* key)
      -> const std::pair<std::string, int>& {
    auto it = entries.find(key);
    if (it == entries.end()) {
      throw std::invalid_argument(
          std::string("config: missing required key '") + key + "'");
    }
    return it->second;
  };
  auto parse_spec = [&required](const char* key, auto&& fn) {
    // Re-raise spec parse errors with the config line attached.
    const auto& [value, line] = required(key);
    try {
      return fn(value);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("config line " + std::to_string(line) +
                                  ": key '" + key + "': " + e.what());
    }
  };

  const auto& [rounds_value, rounds_line] = required("rounds");
  ExperimentConfig config{
      parse_spec("organizer",
                 [](const std::string& v) { return parse_organizer(v); }),
      parse_spec("opener_strategy",
                 [](const std::string& v) { return parse_strategy(v); }),
      parse_spec("observer_strategy",
                 [](const std::string& v) { return parse_strategy(v); }),
      parse_count("rounds", rounds_value, rounds_line),
      /*seed=*/0, /*workers=*/1, /*output_path=*/std::nullopt};
  if (config.rounds < 1) {
    throw std::invalid_argument("config: 'rounds' must be >= 1");
  }
  if (auto it = entries.find("seed"); it != entries.end()) {
    config.seed = parse_count("seed", it->second.first, it->second.second);
  }
  if (auto it = entries.find("workers"); it != entries.end()) {
    const std::uint64_t w =
        parse_count("workers", it->second.first, it->second.second);
    if (w < 1 || w > 4096) {
      throw std::invalid_argument("config: 'workers' must be in [1, 4096]");
    }
    config.workers = static_cast<unsigned>(w);
  }
  if (auto it = entries.find("output_path"); it != entries.end()) {
    config.output_path = std::filesystem::path(it->second.first);
  }
  return config;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("config: cannot open '" + path.string() + "'");
  }
  return parse_experiment_config(in);
}

std::string format_report(const SimulationReport& report,
                          const ExperimentConfig& config) {
  std::ostringstream out;
  out << "rounds                    = " << report.rounds << "\n"
      << "seed                      = " << report.seed << "\n"
      << "workers                   = " << report.workers << "\n"
      << "organizer                 = " << describe_organizer(config.organizer)
      << "\n"
      << "opener_strategy           = "
      << describe_strategy(config.opener_strategy) << "\n"
      << "observer_strategy         = "
      << describe_strategy(config.observer_strategy) << "\n"
      << "mean_ratio_opener         = " << num(report.mean_ratio_opener)
      << "  (ci95 +/- " << num(report.ci95_half_width_ratio_opener) << ")\n"
      << "mean_ratio_observer       = " << num(report.mean_ratio_observer)
      << "  (ci95 +/- " << num(report.ci95_half_width_ratio_observer) << ")\n"
      << "freq_correct_opener       = " << num(report.freq_correct_opener)
      << "  (ci95 +/- " << num(report.ci95_half_width_freq_opener) << ")\n"
      << "freq_correct_observer     = " << num(report.freq_correct_observer)
      << "  (ci95 +/- " << num(report.ci95_half_width_freq_observer) << ")\n"
      << "exchange_rate             = " << num(report.exchange_rate) << "\n"
      << "belief_violation_count    = " << report.belief_violation_count
      << "\n";
  // Analytic classification probabilities for threshold players, for direct
  // comparison with the empirical frequencies above.
  if (const auto* ias = std::get_if<IasStrategy>(&config.opener_strategy)) {
    out << "analytic_correct_opener   = "
        << num(correct_probability_analytic(
               config.organizer, intermediate_amount(ias->belief)))
        << "\n";
  }
  if (const auto* ias = std::get_if<IasStrategy>(&config.observer_strategy)) {
    out << "analytic_correct_observer = "
        << num(correct_probability_analytic(
               config.organizer, intermediate_amount(ias->belief)))
        << "\n";
  }
  return out.str();
}

void cmd_analyze(double p, std::ostream& out) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("analyze: --p must be in [0, 1]");
  }
  const auto both = e_both_ias();
  const ExpectationReport ladder = expectation_report(p);
  out << "expectation ladder (coefficients of the true smaller amount X), "
         "p = "
      << num(p) << "\n"
      << "e_initial          = " << num(ladder.e_init) << "\n"
      << "e_accepted         = " << num(ladder.e_accepted) << "\n"
      << "e_denied           = " << num(ladder.e_denied) << "\n"
      << "e_keep             = " << num(ladder.e_keep) << "\n"
      << "pregame_opener     = " << num(ladder.e_pregame) << "\n"
      << "pregame_observer   = " << num(e_pregame_observer(p)) << "\n"
      << "via_straddle       = " << num(e_via_straddle()) << "\n"
      << "both_ias_opener    = " << num(both.first) << "\n"
      << "both_ias_observer  = " << num(both.second) << "\n";
}

void cmd_table1(std::ostream& out) {
  const auto rows = outcome_matrix();
  out << "Expected amounts when both players play the threshold strategy\n";
  out << "case  ordering                    opener   observer  exchanged  "
         "e_opener        e_observer      total\n";
  for (const auto& row : rows) {
    char line[160];
    std::snprintf(line, sizeof(line),
                  "%-4s  %-26s  %-7s  %-8s  %-9s  %-14s  %-14s  %s\n",
                  outcome_case_label(row.ordering),
                  outcome_case_ordering(row.ordering),
                  action_name(row.decision_opener),
                  action_name(row.decision_observer),
                  row.exchanged ? "yes" : "no", num(row.e_opener).c_str(),
                  num(row.e_observer).c_str(),
                  num(row.e_opener + row.e_observer).c_str());
    out << line;
  }
  out << "\n";
  out << "case,ordering,decision_opener,decision_observer,exchanged,e_opener,"
         "e_observer\n";
  for (const auto& row : rows) {
    out << outcome_case_label(row.ordering) << ','
        << outcome_case_ordering(row.ordering) << ','
        << action_name(row.decision_opener) << ','
        << action_name(row.decision_observer) << ','
        << (row.exchanged ? 1 : 0) << ',' << num(row.e_opener) << ','
        << num(row.e_observer) << "\n";
  }
}

void cmd_cv(std::ostream& out) {
  const double numeric = solve_cv();
  const double closed = cv_closed_form();
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "cv_numeric_root = %.17g\ncv_closed_form  = %.17g\n"
                "difference      = %.3g\n",
                numeric, closed, numeric - closed);
  out << buf;
}

void cmd_density(double x_hat, double a, int grid,
                 const std::filesystem::path& out_path, std::ostream& status) {
  if (!(x_hat > 0.0)) {
    throw std::invalid_argument("density: --x-hat must be positive");
  }
  if (!(a > 0.0)) {
    throw std::invalid_argument("density: --a must be positive");
  }
  if (grid < 2) {
    throw std::invalid_argument("density: --grid must be at least 2");
  }
  std::ofstream file(out_path);
  if (!file) {
    throw std::invalid_argument("density: cannot write '" + out_path.string() +
                                "'");
  }
  const NormalBelief belief(x_hat);
  const double upper = 2.0 * x_hat * (1.0 + 12.0 * belief.cv);
  file << "x,f_smaller_hypothesis,f_larger_hypothesis\n";
  for (int i = 1; i <= grid; ++i) {
    const double x = upper * static_cast<double>(i) / grid;
    file << num(x) << ',' << num(density(belief, x, x_hat)) << ','
         << num(density(belief, x, 2.0 * x_hat)) << "\n";
  }
  const Posterior post = posterior(belief, a);
  file << "# M=" << num(intermediate_amount(belief)) << ", a=" << num(a)
       << ", p_smaller=" << num(post.p_smaller)
       << ", p_larger=" << num(post.p_larger) << "\n";
  status << "wrote " << grid << " grid rows to " << out_path.string() << "\n";
}

void cmd_simulate(const ExperimentConfig& config, std::ostream& out) {
  // Fail on an unwritable dump path before burning any compute.
  std::ofstream file;
  if (config.output_path) {
    file.open(*config.output_path);
    if (!file) {
      throw std::invalid_argument("simulate: cannot write '" +
                                  config.output_path->string() + "'");
    }
  }
  std::vector<RecordedRound> recorded;
  std::vector<RecordedRound>* sink =
      config.output_path ? &recorded : nullptr;
  const SimulationReport report = run_experiment(
      config.organizer, config.opener_strategy, config.observer_strategy,
      config.rounds, config.seed, config.workers, sink);
  out << format_report(report, config);
  if (config.output_path) {
    file << "round,x,opener_has_larger,exchanged,payoff_opener,"
            "payoff_observer,opener_correct,observer_correct,belief_violated\n";
    for (std::size_t i = 0; i < recorded.size(); ++i) {
      const auto& r = recorded[i];
      file << i << ',' << num(r.x) << ',' << (r.opener_has_larger ? 1 : 0)
           << ',' << (r.result.exchanged ? 1 : 0) << ','
           << num(r.result.payoff_opener) << ','
           << num(r.result.payoff_observer) << ','
           << (r.result.opener_correct ? 1 : 0) << ','
           << (r.result.observer_correct ? 1 : 0) << ','
           << (r.result.belief_violated ? 1 : 0) << "\n";
    }
    out << "wrote " << recorded.size() << " rounds to "
        << config.output_path->string() << "\n";
  }
}

}  // namespace envelopes::cli
