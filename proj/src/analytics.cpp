#include "envelopes/analytics.hpp"

#include <stdexcept>

namespace envelopes {

namespace {

// Per-branch coefficients evaluated over the common denominator 3, so the
// complementary pairs (5/3, 4/3) and (5/3, 1 keep-side) sum to exactly 3
// resp. stay exact in floating point.
constexpr double kAcceptedCoeff = (2.0 * 2.0 + 1.0 * 1.0) / 3.0;  // 5/3
constexpr double kDeniedCoeff = (2.0 * 1.0 + 1.0 * 2.0) / 3.0;    // 4/3

// Observer-side branch values. When the observer keeps (revealed <= his M)
// his own envelope is the complement of a 2/3-smaller revealed amount:
// (2/3)*2X + (1/3)*X = 5X/3. When he requests (revealed > his M) he is
// certain his own envelope holds X: granted -> 2X, denied -> X.
constexpr double kObserverKeepCoeff = kAcceptedCoeff;
constexpr double kObserverGrantedCoeff = 2.0;
constexpr double kObserverDeniedCoeff = 1.0;

void check_probability(const char* what, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(what) + " must be in [0, 1]");
  }
}

}  // namespace

double e_initial() { return 0.5 * 1.0 + 0.5 * 2.0; }

double e_uniform_case1(bool accepted) {
  return accepted ? kAcceptedCoeff : kDeniedCoeff;
}

double e_uniform_keep() { return 2.0; }

double e_pregame_opener(double p_b) {
  check_probability("p_b", p_b);
  return kProbRequestCase *
             (p_b * e_uniform_case1(true) + (1.0 - p_b) * e_uniform_case1(false)) +
         kProbKeepCase * e_uniform_keep();
}

double e_pregame_observer(double p_a) {
  check_probability("p_a", p_a);
  return kProbRequestCase * kObserverKeepCoeff +
         kProbKeepCase * (p_a * kObserverGrantedCoeff +
                          (1.0 - p_a) * kObserverDeniedCoeff);
}

double e_via_straddle() {
  // Straddle with probability 1/2 guarantees ending up with 2X; otherwise
  // the strategy is worthless and the expectation falls back to 3/2.
  return 0.5 * e_initial() + 0.5 * 2.0;
}

std::pair<double, double> e_both_ias() {
  // Identical-threshold play never exchanges in the agreeing cases: the
  // opener is denied in the request case and keeps otherwise.
  const double opener =
      kProbKeepCase * e_uniform_keep() + kProbRequestCase * e_uniform_case1(false);
  const double observer =
      kProbKeepCase * kObserverDeniedCoeff + kProbRequestCase * kObserverKeepCoeff;
  return {opener, observer};
}

ExpectationReport expectation_report(double p_other_requests) {
  return {e_initial(), e_uniform_case1(true), e_uniform_case1(false),
          e_uniform_keep(), e_pregame_opener(p_other_requests)};
}

double e_normal(const Posterior& posterior, ExchangeBranch branch) {
  if (!(posterior.p_smaller >= 0.0 && posterior.p_smaller <= 1.0 &&
        posterior.p_larger >= 0.0 && posterior.p_larger <= 1.0)) {
    throw std::invalid_argument("e_normal: posterior entries must be in [0, 1]");
  }
  if (branch == ExchangeBranch::Accepted) {
    return posterior.p_smaller * 2.0 + posterior.p_larger * 1.0;
  }
  return posterior.p_smaller * 1.0 + posterior.p_larger * 2.0;
}

OutcomeRow outcome_row(OutcomeCase ordering) {
  bool revealed_above_m_opener = false;
  bool revealed_above_m_observer = false;
  switch (ordering) {
    case OutcomeCase::A:
    case OutcomeCase::B:
      revealed_above_m_opener = true;
      revealed_above_m_observer = true;
      break;
    case OutcomeCase::C:
    case OutcomeCase::D:
      break;
    case OutcomeCase::E:
      revealed_above_m_opener = true;
      break;
    case OutcomeCase::F:
      revealed_above_m_observer = true;
      break;
  }

  OutcomeRow row;
  row.ordering = ordering;
  row.decision_opener =
      revealed_above_m_opener ? Action::Keep : Action::RequestExchange;
  row.decision_observer =
      revealed_above_m_observer ? Action::RequestExchange : Action::Keep;
  row.exchanged = resolve_exchange(row.decision_opener, row.decision_observer);
  row.e_opener = (row.decision_opener == Action::Keep)
                     ? e_uniform_keep()
                     : e_uniform_case1(row.exchanged);
  row.e_observer = (row.decision_observer == Action::Keep)
                       ? kObserverKeepCoeff
                       : (row.exchanged ? kObserverGrantedCoeff
                                        : kObserverDeniedCoeff);
  return row;
}

std::array<OutcomeRow, 6> outcome_matrix() {
  return {outcome_row(OutcomeCase::A), outcome_row(OutcomeCase::B),
          outcome_row(OutcomeCase::C), outcome_row(OutcomeCase::D),
          outcome_row(OutcomeCase::E), outcome_row(OutcomeCase::F)};
}

OutcomeCase classify_ordering(double a, double m_opener, double m_observer) {
  if (a == m_opener || a == m_observer || m_opener == m_observer) {
    throw std::invalid_argument(
        "classify_ordering: values must be strictly ordered");
  }
  if (a > m_opener && a > m_observer) {
    return m_opener < m_observer ? OutcomeCase::A : OutcomeCase::B;
  }
  if (a < m_opener && a < m_observer) {
    return m_opener < m_observer ? OutcomeCase::C : OutcomeCase::D;
  }
  return a < m_observer ? OutcomeCase::E : OutcomeCase::F;
}

const char* outcome_case_label(OutcomeCase ordering) {
  switch (ordering) {
    case OutcomeCase::A: return "a";
    case OutcomeCase::B: return "b";
    case OutcomeCase::C: return "c";
    case OutcomeCase::D: return "d";
    case OutcomeCase::E: return "e";
    case OutcomeCase::F: return "f";
  }
  return "?";
}

const char* outcome_case_ordering(OutcomeCase ordering) {
  switch (ordering) {
    case OutcomeCase::A: return "M_opener < M_observer < A";
    case OutcomeCase::B: return "M_observer < M_opener < A";
    case OutcomeCase::C: return "A < M_opener < M_observer";
    case OutcomeCase::D: return "A < M_observer < M_opener";
    case OutcomeCase::E: return "M_opener < A < M_observer";
    case OutcomeCase::F: return "M_observer < A < M_opener";
  }
  return "?";
}

}  // namespace envelopes
