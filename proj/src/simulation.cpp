#include "envelopes/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <stdexcept>

#include "envelopes/beliefs.hpp"
#include "spec_grammar.hpp"

namespace envelopes {

namespace {

constexpr double kZ95 = 1.959963984540054;  // 97.5% standard normal quantile

double guard_positive(const char* what, double v) {
  if (!(v > 0.0)) {
    throw std::invalid_argument(std::string(what) + " must be positive");
  }
  return v;
}

bool strategy_violated(const Strategy& strategy, double revealed) {
  if (const auto* ias = std::get_if<IasStrategy>(&strategy)) {
    return violates_belief(ias->belief, revealed);
  }
  return false;
}

// Per-block tallies. Ratios are exactly 1.0 or 2.0 each round, so the sums
// below are exact integers and block merging is exact.
struct Accumulator {
  double sum_ratio_opener = 0.0;
  double sumsq_ratio_opener = 0.0;
  std::uint64_t n_correct_opener = 0;
  std::uint64_t n_correct_observer = 0;
  std::uint64_t n_exchanged = 0;
  std::uint64_t n_violations = 0;

  void add(const GameRound& round, const RoundResult& result) {
    const double ratio = result.payoff_opener / round.x;
    sum_ratio_opener += ratio;
    sumsq_ratio_opener += ratio * ratio;
    n_correct_opener += result.opener_correct ? 1 : 0;
    n_correct_observer += result.observer_correct ? 1 : 0;
    n_exchanged += result.exchanged ? 1 : 0;
    n_violations += result.belief_violated ? 1 : 0;
  }

  void merge(const Accumulator& other) {
    sum_ratio_opener += other.sum_ratio_opener;
    sumsq_ratio_opener += other.sumsq_ratio_opener;
    n_correct_opener += other.n_correct_opener;
    n_correct_observer += other.n_correct_observer;
    n_exchanged += other.n_exchanged;
    n_violations += other.n_violations;
  }
};

struct BlockOutput {
  Accumulator acc;
  std::vector<RecordedRound> recorded;
};

BlockOutput run_block(const OrganizerModel& model, const Strategy& opener,
                      const Strategy& observer, std::uint64_t n,
                      std::uint64_t seed, std::uint64_t stream_index,
                      bool record) {
  BlockOutput out;
  RandomStream rs(seed, stream_index);
  if (record) out.recorded.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    const GameRound round = draw_round(model, rs);
    const RoundResult result = play_round(round, opener, observer, rs);
    out.acc.add(round, result);
    if (record) {
      out.recorded.push_back({round.x, round.opener_has_larger, result});
    }
  }
  return out;
}

double freq_ci_half_width(double p, std::uint64_t n) {
  return kZ95 * std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

}  // namespace

FixedAmount::FixedAmount(double x_) : x(guard_positive("fixed x", x_)) {}

UniformAmount::UniformAmount(double n_true_)
    : n_true(guard_positive("uniform N", n_true_)) {}

LogUniformAmount::LogUniformAmount(double lo_, double hi_) : lo(lo_), hi(hi_) {
  guard_positive("loguniform lo", lo_);
  if (!(lo < hi)) {
    throw std::invalid_argument("loguniform: requires lo < hi");
  }
}

TruncNormalAmount::TruncNormalAmount(double mu_, double sigma_)
    : mu(guard_positive("truncnormal mu", mu_)),
      sigma(guard_positive("truncnormal sigma", sigma_)) {}

GameRound draw_round(const OrganizerModel& model, RandomStream& rs) {
  GameRound round;
  round.x = std::visit(
      [&rs](const auto& m) -> double {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, FixedAmount>) {
          return m.x;
        } else if constexpr (std::is_same_v<T, UniformAmount>) {
          return rs.uniform(0.0, 0.5 * m.n_true);
        } else if constexpr (std::is_same_v<T, LogUniformAmount>) {
          return std::exp(rs.uniform(std::log(m.lo), std::log(m.hi)));
        } else {
          return rs.truncated_normal(m.mu, m.sigma);
        }
      },
      model);
  round.opener_has_larger = rs.coin();
  return round;
}

RoundResult play_round(const GameRound& round, const Strategy& opener,
                       const Strategy& observer, RandomStream& rs) {
  if (!(round.x > 0.0)) {
    throw std::invalid_argument("play_round: round.x must be positive");
  }
  const double larger = 2.0 * round.x;
  const double revealed = round.opener_has_larger ? larger : round.x;
  const double hidden = round.opener_has_larger ? round.x : larger;

  const Action opener_action =
      decide(opener, revealed, Perspective::Opener, rs);
  const Action observer_action =
      decide(observer, revealed, Perspective::Observer, rs);

  RoundResult result;
  result.exchanged = resolve_exchange(opener_action, observer_action);
  result.payoff_opener = result.exchanged ? hidden : revealed;
  result.payoff_observer = result.exchanged ? revealed : hidden;

  // Requesting implies "revealed is the smaller" for the opener and
  // "revealed is the larger" for the observer.
  const bool revealed_is_smaller = !round.opener_has_larger;
  result.opener_correct = revealed_is_smaller
                              ? opener_action == Action::RequestExchange
                              : opener_action == Action::Keep;
  result.observer_correct = revealed_is_smaller
                                ? observer_action == Action::Keep
                                : observer_action == Action::RequestExchange;
  result.belief_violated = strategy_violated(opener, revealed) ||
                           strategy_violated(observer, revealed);
  return result;
}

SimulationReport run_experiment(const OrganizerModel& model,
                                const Strategy& opener,
                                const Strategy& observer, std::uint64_t rounds,
                                std::uint64_t seed, unsigned workers,
                                std::vector<RecordedRound>* recorded) {
  if (rounds < 1) {
    throw std::invalid_argument("run_experiment: rounds must be >= 1");
  }
  if (workers < 1) {
    throw std::invalid_argument("run_experiment: workers must be >= 1");
  }

  // Contiguous blocks, the first rounds % workers blocks one round longer.
  const std::uint64_t base = rounds / workers;
  const std::uint64_t extra = rounds % workers;
  const bool record = recorded != nullptr;

  std::vector<BlockOutput> outputs(workers);
  if (workers == 1) {
    outputs[0] = run_block(model, opener, observer, rounds, seed, 0, record);
  } else {
    std::vector<std::future<BlockOutput>> futures;
    futures.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) {
      const std::uint64_t n = base + (i < extra ? 1 : 0);
      futures.push_back(std::async(std::launch::async, run_block,
                                   std::cref(model), std::cref(opener),
                                   std::cref(observer), n, seed,
                                   static_cast<std::uint64_t>(i), record));
    }
    for (unsigned i = 0; i < workers; ++i) {
      outputs[i] = futures[i].get();
    }
  }

  Accumulator total;
  for (const auto& out : outputs) {
    total.merge(out.acc);
  }
  if (record) {
    recorded->clear();
    recorded->reserve(rounds);
    for (auto& out : outputs) {
      recorded->insert(recorded->end(), out.recorded.begin(),
                       out.recorded.end());
    }
  }

  const double n = static_cast<double>(rounds);
  SimulationReport report;
  report.rounds = rounds;
  report.seed = seed;
  report.workers = workers;
  report.mean_ratio_opener = total.sum_ratio_opener / n;
  // The payoffs in a round are always x and 2x, so the two ratios are exact
  // complements summing to 3.
  report.mean_ratio_observer = 3.0 - report.mean_ratio_opener;
  double ratio_var = 0.0;
  if (rounds > 1) {
    ratio_var = (total.sumsq_ratio_opener -
                 total.sum_ratio_opener * report.mean_ratio_opener) /
                (n - 1.0);
    ratio_var = std::max(ratio_var, 0.0);
  }
  const double ratio_ci = kZ95 * std::sqrt(ratio_var / n);
  report.ci95_half_width_ratio_opener = ratio_ci;
  report.ci95_half_width_ratio_observer = ratio_ci;  // var(3 - r) == var(r)
  report.freq_correct_opener = static_cast<double>(total.n_correct_opener) / n;
  report.freq_correct_observer =
      static_cast<double>(total.n_correct_observer) / n;
  report.ci95_half_width_freq_opener =
      freq_ci_half_width(report.freq_correct_opener, rounds);
  report.ci95_half_width_freq_observer =
      freq_ci_half_width(report.freq_correct_observer, rounds);
  report.exchange_rate = static_cast<double>(total.n_exchanged) / n;
  report.belief_violation_count = total.n_violations;
  return report;
}

double cdf_smaller_amount(const OrganizerModel& model, double t) {
  return std::visit(
      [t](const auto& m) -> double {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, FixedAmount>) {
          return t >= m.x ? 1.0 : 0.0;
        } else if constexpr (std::is_same_v<T, UniformAmount>) {
          return std::clamp(t / (0.5 * m.n_true), 0.0, 1.0);
        } else if constexpr (std::is_same_v<T, LogUniformAmount>) {
          if (t <= m.lo) return 0.0;
          if (t >= m.hi) return 1.0;
          return (std::log(t) - std::log(m.lo)) /
                 (std::log(m.hi) - std::log(m.lo));
        } else {
          if (t <= 0.0) return 0.0;
          const double below_zero = std_normal_cdf(-m.mu / m.sigma);
          const double mass = std_normal_cdf((t - m.mu) / m.sigma) - below_zero;
          return std::clamp(mass / (1.0 - below_zero), 0.0, 1.0);
        }
      },
      model);
}

double correct_probability_analytic(const OrganizerModel& model, double m) {
  if (!(m >= 0.0)) {
    throw std::invalid_argument(
        "correct_probability_analytic: m must be >= 0");
  }
  const double straddle =
      cdf_smaller_amount(model, m) - cdf_smaller_amount(model, 0.5 * m);
  return 0.5 + 0.5 * straddle;
}

OrganizerModel parse_organizer(std::string_view text) {
  const auto args = detail::SpecArgs::parse(text);
  if (args.name == "fixed") {
    args.allow_only({"x"});
    return FixedAmount(args.number("x"));
  }
  if (args.name == "uniform") {
    args.allow_only({"N"});
    return UniformAmount(args.number("N"));
  }
  if (args.name == "loguniform") {
    args.allow_only({"lo", "hi"});
    return LogUniformAmount(args.number("lo"), args.number("hi"));
  }
  if (args.name == "truncnormal") {
    args.allow_only({"mu", "sigma"});
    return TruncNormalAmount(args.number("mu"), args.number("sigma"));
  }
  throw std::invalid_argument("unknown organizer model '" + args.name + "'");
}

std::string describe_organizer(const OrganizerModel& model) {
  char buf[96];
  std::visit(
      [&buf](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, FixedAmount>) {
          std::snprintf(buf, sizeof(buf), "fixed:x=%.12g", m.x);
        } else if constexpr (std::is_same_v<T, UniformAmount>) {
          std::snprintf(buf, sizeof(buf), "uniform:N=%.12g", m.n_true);
        } else if constexpr (std::is_same_v<T, LogUniformAmount>) {
          std::snprintf(buf, sizeof(buf), "loguniform:lo=%.12g,hi=%.12g", m.lo,
                        m.hi);
        } else {
          std::snprintf(buf, sizeof(buf), "truncnormal:mu=%.12g,sigma=%.12g",
                        m.mu, m.sigma);
        }
      },
      model);
  return buf;
}

}  // namespace envelopes
