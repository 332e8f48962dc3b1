#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "envelopes/analytics.hpp"
#include "envelopes/beliefs.hpp"
#include "envelopes/numerics.hpp"
#include "envelopes/simulation.hpp"
#include "envelopes/strategy.hpp"

namespace py = pybind11;
using namespace envelopes;

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Two-envelopes game: belief models, threshold-strategy analytics and a "
      "seedable Monte Carlo engine";

  py::register_exception<NonConvergenceError>(m, "NonConvergenceError",
                                              PyExc_ArithmeticError);

  // numerics
  m.def("std_normal_pdf", &std_normal_pdf, py::arg("t"));
  m.def("std_normal_cdf", &std_normal_cdf, py::arg("x"));
  m.def(
      "integrate",
      [](const std::function<double(double)>& f, double a, double b,
         double abs_tolerance, int max_depth) {
        return integrate(f, a, b, Quadrature{abs_tolerance, max_depth});
      },
      py::arg("f"), py::arg("a"), py::arg("b"),
      py::arg("abs_tolerance") = 1e-9, py::arg("max_depth") = 60);
  m.def("find_root", &find_root, py::arg("g"), py::arg("lo"), py::arg("hi"),
        py::arg("tol") = 1e-12);

  py::class_<RandomStream>(m, "RandomStream")
      .def(py::init<std::uint64_t, std::uint64_t>(), py::arg("seed"),
           py::arg("stream_index") = 0)
      .def("next_unit", &RandomStream::next_unit)
      .def("uniform", &RandomStream::uniform, py::arg("lo"), py::arg("hi"))
      .def("normal", &RandomStream::normal, py::arg("mu"), py::arg("sigma"))
      .def("truncated_normal", &RandomStream::truncated_normal, py::arg("mu"),
           py::arg("sigma"))
      .def("coin", &RandomStream::coin)
      .def_property_readonly("seed", &RandomStream::seed)
      .def_property_readonly("stream_index", &RandomStream::stream_index);

  // beliefs
  py::class_<UniformBelief>(m, "UniformBelief")
      .def(py::init<double>(), py::arg("n_max"))
      .def_readonly("n_max", &UniformBelief::n_max)
      .def("__repr__", [](const UniformBelief& b) {
        return "UniformBelief(n_max=" + std::to_string(b.n_max) + ")";
      });
  py::class_<NormalBelief>(m, "NormalBelief")
      .def(py::init<double>(), py::arg("x_hat"))
      .def(py::init<double, double>(), py::arg("x_hat"), py::arg("cv"))
      .def_readonly("x_hat", &NormalBelief::x_hat)
      .def_readonly("cv", &NormalBelief::cv);
  py::class_<Posterior>(m, "Posterior")
      .def_readonly("p_smaller", &Posterior::p_smaller)
      .def_readonly("p_larger", &Posterior::p_larger)
      .def("__repr__", [](const Posterior& p) {
        return "Posterior(p_smaller=" + std::to_string(p.p_smaller) +
               ", p_larger=" + std::to_string(p.p_larger) + ")";
      });

  m.def("cv_closed_form", &cv_closed_form);
  m.def("solve_cv", &solve_cv);
  m.def("intermediate_amount",
        py::overload_cast<const Belief&>(&intermediate_amount),
        py::arg("belief"));
  m.def("straddle_probability", &straddle_probability, py::arg("belief"),
        py::arg("m"));
  m.def("density", &density, py::arg("belief"), py::arg("x"), py::arg("mu"));
  m.def("log_density", &log_density, py::arg("belief"), py::arg("x"),
        py::arg("mu"));
  m.def("posterior", py::overload_cast<const Belief&, double>(&posterior),
        py::arg("belief"), py::arg("a"));
  m.def("violates_belief",
        py::overload_cast<const Belief&, double>(&violates_belief),
        py::arg("belief"), py::arg("a"));

  // strategy
  py::enum_<Perspective>(m, "Perspective")
      .value("Opener", Perspective::Opener)
      .value("Observer", Perspective::Observer);
  py::enum_<Action>(m, "Action")
      .value("RequestExchange", Action::RequestExchange)
      .value("Keep", Action::Keep);
  py::class_<IasStrategy>(m, "IasStrategy")
      .def(py::init<Belief>(), py::arg("belief"))
      .def_readonly("belief", &IasStrategy::belief);
  py::class_<AlwaysExchange>(m, "AlwaysExchange").def(py::init<>());
  py::class_<NeverExchange>(m, "NeverExchange").def(py::init<>());
  py::class_<RandomExchange>(m, "RandomExchange")
      .def(py::init<double>(), py::arg("p"))
      .def_readonly("p", &RandomExchange::p);

  m.def("decide", &decide, py::arg("strategy"), py::arg("revealed"),
        py::arg("perspective"), py::arg("rs"));
  m.def("resolve_exchange", &resolve_exchange, py::arg("opener_action"),
        py::arg("observer_action"));
  m.def("parse_strategy", &parse_strategy, py::arg("text"));
  m.def("describe_strategy", &describe_strategy, py::arg("strategy"));

  // analytics
  m.def("e_initial", &e_initial);
  m.def("e_uniform_case1", &e_uniform_case1, py::arg("accepted"));
  m.def("e_uniform_keep", &e_uniform_keep);
  m.def("e_pregame_opener", &e_pregame_opener, py::arg("p_b"));
  m.def("e_pregame_observer", &e_pregame_observer, py::arg("p_a"));
  m.def("e_via_straddle", &e_via_straddle);
  m.def("e_both_ias", &e_both_ias);
  py::class_<ExpectationReport>(m, "ExpectationReport")
      .def_readonly("e_init", &ExpectationReport::e_init)
      .def_readonly("e_accepted", &ExpectationReport::e_accepted)
      .def_readonly("e_denied", &ExpectationReport::e_denied)
      .def_readonly("e_keep", &ExpectationReport::e_keep)
      .def_readonly("e_pregame", &ExpectationReport::e_pregame);
  m.def("expectation_report", &expectation_report,
        py::arg("p_other_requests"));
  py::enum_<ExchangeBranch>(m, "ExchangeBranch")
      .value("Accepted", ExchangeBranch::Accepted)
      .value("Denied", ExchangeBranch::Denied)
      .value("Keep", ExchangeBranch::Keep);
  m.def("e_normal", &e_normal, py::arg("posterior"), py::arg("branch"));

  py::enum_<OutcomeCase>(m, "OutcomeCase")
      .value("A", OutcomeCase::A)
      .value("B", OutcomeCase::B)
      .value("C", OutcomeCase::C)
      .value("D", OutcomeCase::D)
      .value("E", OutcomeCase::E)
      .value("F", OutcomeCase::F);
  py::class_<OutcomeRow>(m, "OutcomeRow")
      .def_readonly("ordering", &OutcomeRow::ordering)
      .def_readonly("decision_opener", &OutcomeRow::decision_opener)
      .def_readonly("decision_observer", &OutcomeRow::decision_observer)
      .def_readonly("exchanged", &OutcomeRow::exchanged)
      .def_readonly("e_opener", &OutcomeRow::e_opener)
      .def_readonly("e_observer", &OutcomeRow::e_observer);
  m.def("outcome_row", &outcome_row, py::arg("ordering"));
  m.def("outcome_matrix", &outcome_matrix);
  m.def("classify_ordering", &classify_ordering, py::arg("a"),
        py::arg("m_opener"), py::arg("m_observer"));
  m.def("outcome_case_label", &outcome_case_label, py::arg("ordering"));

  // simulation
  py::class_<FixedAmount>(m, "FixedAmount")
      .def(py::init<double>(), py::arg("x"))
      .def_readonly("x", &FixedAmount::x);
  py::class_<UniformAmount>(m, "UniformAmount")
      .def(py::init<double>(), py::arg("n_true"))
      .def_readonly("n_true", &UniformAmount::n_true);
  py::class_<LogUniformAmount>(m, "LogUniformAmount")
      .def(py::init<double, double>(), py::arg("lo"), py::arg("hi"))
      .def_readonly("lo", &LogUniformAmount::lo)
      .def_readonly("hi", &LogUniformAmount::hi);
  py::class_<TruncNormalAmount>(m, "TruncNormalAmount")
      .def(py::init<double, double>(), py::arg("mu"), py::arg("sigma"))
      .def_readonly("mu", &TruncNormalAmount::mu)
      .def_readonly("sigma", &TruncNormalAmount::sigma);

  py::class_<GameRound>(m, "GameRound")
      .def(py::init([](double x, bool opener_has_larger) {
             return GameRound{x, opener_has_larger};
           }),
           py::arg("x"), py::arg("opener_has_larger"))
      .def_readonly("x", &GameRound::x)
      .def_readonly("opener_has_larger", &GameRound::opener_has_larger);
  py::class_<RoundResult>(m, "RoundResult")
      .def_readonly("payoff_opener", &RoundResult::payoff_opener)
      .def_readonly("payoff_observer", &RoundResult::payoff_observer)
      .def_readonly("exchanged", &RoundResult::exchanged)
      .def_readonly("opener_correct", &RoundResult::opener_correct)
      .def_readonly("observer_correct", &RoundResult::observer_correct)
      .def_readonly("belief_violated", &RoundResult::belief_violated);
  py::class_<SimulationReport>(m, "SimulationReport")
      .def_readonly("rounds", &SimulationReport::rounds)
      .def_readonly("seed", &SimulationReport::seed)
      .def_readonly("workers", &SimulationReport::workers)
      .def_readonly("mean_ratio_opener", &SimulationReport::mean_ratio_opener)
      .def_readonly("mean_ratio_observer",
                    &SimulationReport::mean_ratio_observer)
      .def_readonly("ci95_half_width_ratio_opener",
                    &SimulationReport::ci95_half_width_ratio_opener)
      .def_readonly("ci95_half_width_ratio_observer",
                    &SimulationReport::ci95_half_width_ratio_observer)
      .def_readonly("freq_correct_opener",
                    &SimulationReport::freq_correct_opener)
      .def_readonly("freq_correct_observer",
                    &SimulationReport::freq_correct_observer)
      .def_readonly("ci95_half_width_freq_opener",
                    &SimulationReport::ci95_half_width_freq_opener)
      .def_readonly("ci95_half_width_freq_observer",
                    &SimulationReport::ci95_half_width_freq_observer)
      .def_readonly("exchange_rate", &SimulationReport::exchange_rate)
      .def_readonly("belief_violation_count",
                    &SimulationReport::belief_violation_count);

  m.def("draw_round", &draw_round, py::arg("model"), py::arg("rs"));
  m.def("play_round", &play_round, py::arg("round"), py::arg("opener"),
        py::arg("observer"), py::arg("rs"));
  m.def(
      "run_experiment",
      [](const OrganizerModel& model, const Strategy& opener,
         const Strategy& observer, std::uint64_t rounds, std::uint64_t seed,
         unsigned workers) {
        py::gil_scoped_release release;
        return run_experiment(model, opener, observer, rounds, seed, workers);
      },
      py::arg("model"), py::arg("opener"), py::arg("observer"),
      py::arg("rounds"), py::arg("seed"), py::arg("workers") = 1);
  m.def("cdf_smaller_amount", &cdf_smaller_amount, py::arg("model"),
        py::arg("t"));
  m.def("correct_probability_analytic", &correct_probability_analytic,
        py::arg("model"), py::arg("m"));
  m.def("parse_organizer", &parse_organizer, py::arg("text"));
  m.def("describe_organizer", &describe_organizer, py::arg("model"));
}
