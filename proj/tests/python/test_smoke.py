"""Smoke tests for the python bindings: the main operations round-trip and a
small Monte Carlo run reproduces the closed-form values."""

import math

import pytest

import envelopes as e


def test_closed_form_ladder():
    assert e.e_initial() == 1.5
    assert e.e_uniform_case1(True) == pytest.approx(5 / 3, abs=1e-12)
    assert e.e_uniform_case1(False) == pytest.approx(4 / 3, abs=1e-12)
    assert e.e_uniform_keep() == 2.0
    assert e.e_pregame_opener(1.0) == 1.75
    assert e.e_pregame_opener(0.0) == 1.5
    assert e.e_via_straddle() == 1.75
    assert e.e_both_ias() == (1.5, 1.5)
    with pytest.raises(ValueError):
        e.e_pregame_opener(1.5)


def test_cv_and_posteriors():
    assert e.solve_cv() == pytest.approx(0.3678, abs=1e-4)
    assert e.solve_cv() == pytest.approx(e.cv_closed_form(), abs=1e-10)
    belief = e.NormalBelief(300.0)
    assert e.intermediate_amount(belief) == 450.0
    at_m = e.posterior(belief, 450.0)
    assert at_m.p_smaller == pytest.approx(0.5, abs=1e-9)
    above = e.posterior(belief, 550.0)
    assert above.p_larger > 0.5
    assert above.p_smaller + above.p_larger == 1.0

    uniform = e.UniformBelief(1000.0)
    assert e.intermediate_amount(uniform) == 500.0
    assert e.posterior(uniform, 200.0).p_smaller == pytest.approx(2 / 3)
    assert e.posterior(uniform, 700.0).p_larger == 1.0
    assert e.straddle_probability(uniform, 500.0) == 0.5


def test_density_normalizes():
    belief = e.NormalBelief(300.0)
    mass = e.integrate(lambda x: e.density(belief, x, 300.0), 0.0,
                       300.0 * (1.0 + 12.0 * belief.cv))
    assert mass == pytest.approx(1.0, abs=1e-6)


def test_outcome_matrix():
    rows = e.outcome_matrix()
    assert len(rows) == 6
    by_label = {e.outcome_case_label(r.ordering): r for r in rows}
    assert by_label["a"].e_opener == 2.0
    assert by_label["a"].e_observer == 1.0
    assert by_label["f"].exchanged
    for label in "abcd":
        assert by_label[label].e_opener + by_label[label].e_observer == 3.0


def test_strategies_and_streams():
    rs = e.RandomStream(7, 0)
    ias = e.parse_strategy("ias-uniform:N=1000")
    assert e.decide(ias, 400.0, e.Perspective.Opener, rs) == \
        e.Action.RequestExchange
    assert e.decide(ias, 700.0, e.Perspective.Opener, rs) == e.Action.Keep
    assert e.resolve_exchange(e.Action.RequestExchange,
                              e.Action.RequestExchange)
    assert not e.resolve_exchange(e.Action.RequestExchange, e.Action.Keep)
    with pytest.raises(ValueError):
        e.parse_strategy("random:p=2")

    a = e.RandomStream(42, 1)
    b = e.RandomStream(42, 1)
    assert [a.next_unit() for _ in range(64)] == \
        [b.next_unit() for _ in range(64)]


def test_run_experiment_matches_analytics():
    model = e.parse_organizer("uniform:N=1000")
    report = e.run_experiment(model, e.parse_strategy("ias-uniform:N=1000"),
                              e.parse_strategy("always"), 200_000, 2024, 2)
    assert report.freq_correct_opener == pytest.approx(0.75, abs=0.01)
    assert report.mean_ratio_opener == pytest.approx(1.75, abs=0.02)
    assert report.mean_ratio_opener + report.mean_ratio_observer == 3.0
    assert e.correct_probability_analytic(model, 500.0) == 0.75

    again = e.run_experiment(model, e.parse_strategy("ias-uniform:N=1000"),
                             e.parse_strategy("always"), 200_000, 2024, 2)
    assert again.mean_ratio_opener == report.mean_ratio_opener
    assert again.freq_correct_opener == report.freq_correct_opener


def test_play_round_conserves_the_pot():
    rs = e.RandomStream(5, 0)
    model = e.LogUniformAmount(1.0, 1000.0)
    never = e.NeverExchange()
    for _ in range(200):
        round_ = e.draw_round(model, rs)
        result = e.play_round(round_, never, never, rs)
        assert result.payoff_opener + result.payoff_observer == \
            pytest.approx(3.0 * round_.x, rel=1e-15)
        assert not result.exchanged


def test_quadrature_and_roots():
    assert e.integrate(lambda x: x, 0.0, 2.0) == pytest.approx(2.0, abs=1e-9)
    assert e.find_root(lambda x: x * x - 2.0, 1.0, 2.0) == \
        pytest.approx(math.sqrt(2.0), abs=1e-10)
    assert e.std_normal_cdf(0.0) == 0.5
