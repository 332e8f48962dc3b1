"""Two-envelopes game: belief models, threshold-strategy analytics and a
seedable Monte Carlo engine (thin wrapper over the C++ core)."""

from ._core import (
    Action,
    AlwaysExchange,
    ExchangeBranch,
    ExpectationReport,
    FixedAmount,
    GameRound,
    IasStrategy,
    LogUniformAmount,
    NeverExchange,
    NonConvergenceError,
    NormalBelief,
    OutcomeCase,
    OutcomeRow,
    Perspective,
    Posterior,
    RandomExchange,
    RandomStream,
    RoundResult,
    SimulationReport,
    TruncNormalAmount,
    UniformAmount,
    UniformBelief,
    cdf_smaller_amount,
    classify_ordering,
    correct_probability_analytic,
    cv_closed_form,
    decide,
    density,
    describe_organizer,
    describe_strategy,
    draw_round,
    e_both_ias,
    e_initial,
    e_normal,
    e_pregame_observer,
    e_pregame_opener,
    e_uniform_case1,
    e_uniform_keep,
    e_via_straddle,
    expectation_report,
    find_root,
    integrate,
    intermediate_amount,
    log_density,
    outcome_case_label,
    outcome_matrix,
    outcome_row,
    parse_organizer,
    parse_strategy,
    play_round,
    posterior,
    resolve_exchange,
    run_experiment,
    solve_cv,
    std_normal_cdf,
    std_normal_pdf,
    straddle_probability,
    violates_belief,
)

__version__ = "0.1.0"
