#pragma once

#include <variant>

namespace envelopes {

/// Prior of a player who only bounds the organizer's budget: the amounts are
/// uniform, the smaller one on (0, n_max/2] and the larger one on (0, n_max].
struct UniformBelief {
  UniformBelief() = default;
  explicit UniformBelief(double n_max);
  double n_max = 1.0;
};

/// Prior of a player who instead pins a most-likely smaller amount x_hat.
/// Both hypothetical amounts follow a zero-truncated normal whose standard
/// deviation scales with the peak: sigma(mu) = mu * cv. The default cv is the
/// unique value that makes the two hypothesis densities cross exactly at the
/// midpoint threshold 3*x_hat/2.
struct NormalBelief {
  NormalBelief();
  explicit NormalBelief(double x_hat);
  NormalBelief(double x_hat, double cv);
  double x_hat;
  double cv;
};

using Belief = std::variant<UniformBelief, NormalBelief>;

/// Probabilities that a revealed amount is the smaller / the larger of the
/// pair. Always sums to one exactly: the second entry is computed as the
/// complement of the first.
struct Posterior {
  double p_smaller = 0.0;
  double p_larger = 0.0;
};

/// Closed form of the equal-density coefficient of variation:
/// 3 / (4*sqrt(6*ln 2)) == sqrt(3 / (32*ln 2)) ~= 0.3678.
double cv_closed_form();

/// The same coefficient found numerically: bisection on the residual
/// f(M, x_hat) - f(M, 2*x_hat) in cv. Cross-checks the closed form.
double solve_cv();

/// The decision threshold M implied by a belief: n_max/2 for the uniform
/// prior, 3*x_hat/2 for the normal prior.
double intermediate_amount(const UniformBelief& belief);
double intermediate_amount(const NormalBelief& belief);
double intermediate_amount(const Belief& belief);

/// Probability under the uniform prior that a threshold m straddles the two
/// amounts, i.e. that the smaller amount lands in (m/2, m]. In [0, 1/2],
/// maximized at m = n_max/2.
double straddle_probability(const UniformBelief& belief, double m);

/// Zero-truncated normal density with peak mu and sigma = mu * belief.cv.
/// Zero for x <= 0 (truncation); mu must be positive.
double density(const NormalBelief& belief, double x, double mu);

/// log of density(); -inf for x <= 0. Used wherever the raw density can
/// underflow, e.g. posterior odds far from both peaks.
double log_density(const NormalBelief& belief, double x, double mu);

/// Posterior classification of a revealed amount a > 0.
/// Uniform: (2/3, 1/3) when a <= n_max/2, else (0, 1) -- amounts above
/// n_max/2 cannot be the smaller one under this prior.
/// Normal: densities of the two hypotheses at a, normalized by their sum.
Posterior posterior(const UniformBelief& belief, double a);
Posterior posterior(const NormalBelief& belief, double a);
Posterior posterior(const Belief& belief, double a);

/// True when a revealed amount is impossible under the belief (uniform prior
/// with a > n_max). The belief itself is never mutated; simulation reports
/// count these rounds as a diagnostic.
bool violates_belief(const UniformBelief& belief, double a);
bool violates_belief(const Belief& belief, double a);

}  // namespace envelopes
