#include "envelopes/beliefs.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "envelopes/numerics.hpp"

namespace envelopes {

namespace {

constexpr double kLogSqrt2Pi =
    0.9189385332046727;  // log(sqrt(2*pi)), closing term of the log density

}  // namespace

UniformBelief::UniformBelief(double n_max_) : n_max(n_max_) {
  if (!(n_max > 0.0)) {
    throw std::invalid_argument("UniformBelief: n_max must be positive");
  }
}

NormalBelief::NormalBelief() : NormalBelief(1.0) {}

NormalBelief::NormalBelief(double x_hat_) : NormalBelief(x_hat_, cv_closed_form()) {}

NormalBelief::NormalBelief(double x_hat_, double cv_) : x_hat(x_hat_), cv(cv_) {
  if (!(x_hat > 0.0)) {
    throw std::invalid_argument("NormalBelief: x_hat must be positive");
  }
  if (!(cv > 0.0)) {
    throw std::invalid_argument("NormalBelief: cv must be positive");
  }
}

double cv_closed_form() { return 3.0 / (4.0 * std::sqrt(6.0 * std::numbers::ln2)); }

double solve_cv() {
  // The residual is scale free: sigma/mu is constant, so the normalizers of
  // the two hypotheses cancel and any x_hat gives the same root.
  const double x_hat = 1.0;
  const double m = 1.5 * x_hat;
  auto residual = [x_hat, m](double cv) {
    const NormalBelief belief(x_hat, cv);
    return density(belief, m, x_hat) - density(belief, m, 2.0 * x_hat);
  };
  return find_root(residual, 0.05, 2.0, 1e-12);
}

double intermediate_amount(const UniformBelief& belief) {
  return 0.5 * belief.n_max;
}

double intermediate_amount(const NormalBelief& belief) {
  return 1.5 * belief.x_hat;
}

double intermediate_amount(const Belief& belief) {
  return std::visit([](const auto& b) { return intermediate_amount(b); },
                    belief);
}

double straddle_probability(const UniformBelief& belief, double m) {
  if (!(m >= 0.0)) {
    throw std::invalid_argument("straddle_probability: m must be >= 0");
  }
  const double x_max = 0.5 * belief.n_max;
  const double overlap = std::min(m, x_max) - 0.5 * m;
  return std::max(overlap, 0.0) / x_max;
}

double density(const NormalBelief& belief, double x, double mu) {
  if (!(mu > 0.0)) {
    throw std::domain_error("density: peak mu must be positive");
  }
  if (x <= 0.0) return 0.0;
  const double sigma = mu * belief.cv;
  const double z = (x - mu) / sigma;
  // Normalizer 1 - Phi(-mu/sigma) == Phi(1/cv): the mass the untruncated
  // normal keeps above zero. Identical for both hypotheses since sigma
  // scales with mu.
  return std_normal_pdf(z) / (sigma * std_normal_cdf(1.0 / belief.cv));
}

double log_density(const NormalBelief& belief, double x, double mu) {
  if (!(mu > 0.0)) {
    throw std::domain_error("log_density: peak mu must be positive");
  }
  if (x <= 0.0) return -std::numeric_limits<double>::infinity();
  const double sigma = mu * belief.cv;
  const double z = (x - mu) / sigma;
  return -0.5 * z * z - std::log(sigma) - kLogSqrt2Pi -
         std::log(std_normal_cdf(1.0 / belief.cv));
}

Posterior posterior(const UniformBelief& belief, double a) {
  if (!(a > 0.0)) {
    throw std::invalid_argument("posterior: revealed amount must be positive");
  }
  Posterior p;
  if (a <= 0.5 * belief.n_max) {
    // Twice as much room for the pair (a, 2a) as for (a/2, a) under the
    // uniform prior, hence odds 2:1 that a is the smaller amount.
    p.p_smaller = 2.0 / 3.0;
  } else {
    // a cannot be the smaller amount: 2a would exceed n_max.
    p.p_smaller = 0.0;
  }
  p.p_larger = 1.0 - p.p_smaller;
  return p;
}

Posterior posterior(const NormalBelief& belief, double a) {
  if (!(a > 0.0)) {
    throw std::invalid_argument("posterior: revealed amount must be positive");
  }
  // Work in log space: far from both peaks the raw densities underflow while
  // their ratio is still perfectly well defined.
  const double log_smaller = log_density(belief, a, belief.x_hat);
  const double log_larger = log_density(belief, a, 2.0 * belief.x_hat);
  Posterior p;
  p.p_smaller = 1.0 / (1.0 + std::exp(log_larger - log_smaller));
  p.p_larger = 1.0 - p.p_smaller;
  return p;
}

Posterior posterior(const Belief& belief, double a) {
  return std::visit([a](const auto& b) { return posterior(b, a); }, belief);
}

bool violates_belief(const UniformBelief& belief, double a) {
  return a > belief.n_max;
}

bool violates_belief(const Belief& belief, double a) {
  if (const auto* uniform = std::get_if<UniformBelief>(&belief)) {
    return violates_belief(*uniform, a);
  }
  return false;
}

}  // namespace envelopes
