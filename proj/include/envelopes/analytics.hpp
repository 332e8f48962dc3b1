#pragma once

#include <array>
#include <utility>

#include "envelopes/beliefs.hpp"
#include "envelopes/strategy.hpp"

namespace envelopes {

// Prior split between the two reveal cases under the uniform belief with
// M = n_max/2: the revealed amount falls at or below M with probability 3/4
// (request side) and above M with probability 1/4 (keep side). Single source
// for every pregame expectation.
inline constexpr double kProbRequestCase = 0.75;
inline constexpr double kProbKeepCase = 0.25;

// All expectations below are coefficients of the true smaller amount X.

/// Expected holding before anything is revealed: (1/2)*X + (1/2)*2X = 3/2.
double e_initial();

/// Opener who requested (revealed <= M, posterior 2/3 smaller): 5/3 if the
/// exchange is granted, 4/3 if denied.
double e_uniform_case1(bool accepted);

/// Opener who keeps (revealed > M): certain he holds the larger amount, 2.
double e_uniform_keep();

/// Opener's pregame expectation given probability p_b that the other player
/// will request: 3/2 + p_b/4.
double e_pregame_opener(double p_b);

/// Observer's pregame expectation given probability p_a that the opener will
/// request: 3/2 + p_a/4. Symmetric to the opener's formula.
double e_pregame_observer(double p_a);

/// Pregame expectation via the straddle split: (1/2)*(3/2) + (1/2)*2 = 7/4,
/// the maximum attainable when requests are always granted.
double e_via_straddle();

/// Expected coefficients (opener, observer) when both play the threshold
/// strategy and know it: (3/2, 3/2) -- the edge cancels.
std::pair<double, double> e_both_ias();

/// The whole opener-side ladder for one assumed request probability of the
/// other player. Every coefficient lies in [1, 2]; accepted and denied are
/// complements over the 3X pot.
struct ExpectationReport {
  double e_init;
  double e_accepted;
  double e_denied;
  double e_keep;
  double e_pregame;
};

ExpectationReport expectation_report(double p_other_requests);

enum class ExchangeBranch { Accepted, Denied, Keep };

/// Expectation of the opener's final holding from an arbitrary posterior on
/// the revealed amount. Accepted swaps the holdings; Denied and Keep do not.
double e_normal(const Posterior& posterior, ExchangeBranch branch);

/// The six strict orderings of the revealed amount A against the two
/// thresholds. Row labels follow the outcome matrix printed by the CLI.
enum class OutcomeCase {
  A,  // M_opener < M_observer < A
  B,  // M_observer < M_opener < A
  C,  // A < M_opener < M_observer
  D,  // A < M_observer < M_opener
  E,  // M_opener < A < M_observer
  F,  // M_observer < A < M_opener
};

struct OutcomeRow {
  OutcomeCase ordering;
  Action decision_opener;
  Action decision_observer;
  bool exchanged;
  double e_opener;   // coefficient of X
  double e_observer;  // coefficient of X
};

/// One row of the both-IAS outcome matrix, decisions and expectations derived
/// from the ordering. Rows where the thresholds agree (a-d) total exactly 3;
/// rows E and F total more because one player is guaranteed wrong.
OutcomeRow outcome_row(OutcomeCase ordering);

std::array<OutcomeRow, 6> outcome_matrix();

/// Maps concrete values onto their ordering; ties are rejected (ties belong
/// to the decision layer, not the matrix).
OutcomeCase classify_ordering(double a, double m_opener, double m_observer);

const char* outcome_case_label(OutcomeCase ordering);     // "a".."f"
const char* outcome_case_ordering(OutcomeCase ordering);  // e.g. "M_opener < M_observer < A"

}  // namespace envelopes
