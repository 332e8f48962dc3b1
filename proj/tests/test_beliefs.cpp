#include "envelopes/beliefs.hpp"

#include <doctest.h>

#include "testing_util.hpp"

#include <cmath>

#include "envelopes/numerics.hpp"

using namespace envelopes;

namespace {

// Density-ratio posterior at x_hat = 300, a = 550 with the default cv,
// evaluated independently at 30-digit precision.
constexpr double kPosteriorLarger550 = 0.86393825140559088;

double normalization_integral(const NormalBelief& belief, double mu) {
  const double upper = mu * (1.0 + 12.0 * belief.cv);
  return integrate([&belief, mu](double x) { return density(belief, x, mu); },
                   0.0, upper);
}

}  // namespace

TEST_CASE("belief construction validates its parameters") {
  CHECK_THROWS_AS(UniformBelief(0.0), std::invalid_argument);
  CHECK_THROWS_AS(UniformBelief(-5.0), std::invalid_argument);
  CHECK_THROWS_AS(NormalBelief(0.0), std::invalid_argument);
  CHECK_THROWS_AS(NormalBelief(10.0, -0.1), std::invalid_argument);
}

TEST_CASE("intermediate amount per belief") {
  CHECK(intermediate_amount(UniformBelief(1000.0)) == 500.0);
  CHECK(intermediate_amount(NormalBelief(300.0)) == 450.0);
  CHECK(intermediate_amount(NormalBelief(2.0)) == 3.0);
  CHECK(intermediate_amount(Belief(UniformBelief(200.0))) == 100.0);
}

TEST_CASE("straddle probability for the uniform belief") {
  const UniformBelief belief(1000.0);
  CHECK(straddle_probability(belief, 500.0) == 0.5);
  CHECK(straddle_probability(belief, 0.0) == 0.0);
  // (1000, 2000] misses the support (0, 500] entirely
  CHECK(straddle_probability(belief, 2000.0) == 0.0);
  CHECK_THROWS_AS(straddle_probability(belief, -1.0), std::invalid_argument);
  RandomStream rs(8, 0);
  for (int i = 0; i < 200; ++i) {
    const double p = straddle_probability(belief, rs.uniform(0.0, 3000.0));
    CHECK(p >= 0.0);
    CHECK(p <= 0.5);
  }
  // the chosen threshold n_max/2 is the maximizer
  for (double m : {100.0, 300.0, 499.0, 501.0, 700.0, 999.0}) {
    CHECK(straddle_probability(belief, m) <=
          straddle_probability(belief, 500.0));
  }
}

TEST_CASE("density peak halves when the peak location doubles") {
  for (double x_hat : {1.0, 17.0, 300.0, 12345.0}) {
    const NormalBelief belief(x_hat);
    CHECK(density(belief, 2.0 * x_hat, 2.0 * x_hat) ==
          doctest::Approx(0.5 * density(belief, x_hat, x_hat)).epsilon(1e-12));
  }
}

TEST_CASE("density normalizes to one over its domain") {
  for (double mu : {1.0, 300.0, 1e4}) {
    const NormalBelief belief(mu);
    CHECK(normalization_integral(belief, mu) ==
          near(1.0, 1e-6));
  }
}

TEST_CASE("density domain handling") {
  const NormalBelief belief(300.0);
  CHECK(density(belief, 0.0, 300.0) == 0.0);
  CHECK(density(belief, -5.0, 300.0) == 0.0);
  CHECK_THROWS_AS(density(belief, 100.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(density(belief, 100.0, -1.0), std::domain_error);
  CHECK(density(belief, 123.0, 300.0) > 0.0);
}

TEST_CASE("density peaks at mu") {
  const NormalBelief belief(300.0);
  for (double mu : {300.0, 600.0}) {
    double best_x = 0.0;
    double best = -1.0;
    const double upper = mu * (1.0 + 12.0 * belief.cv);
    const int grid = 4000;
    for (int i = 1; i <= grid; ++i) {
      const double x = upper * static_cast<double>(i) / grid;
      const double f = density(belief, x, mu);
      if (f > best) {
        best = f;
        best_x = x;
      }
    }
    CHECK(best_x == near(mu, upper / grid + 1e-12));
  }
}

TEST_CASE("interval probabilities are scale invariant") {
  const Quadrature q;
  for (double x_hat : {1.0, 300.0}) {
    const NormalBelief belief(x_hat);
    for (double k : {0.1, 0.5, 0.9}) {
      const double small_interval = integrate(
          [&](double x) { return density(belief, x, x_hat); },
          x_hat - k * x_hat, x_hat + k * x_hat, q);
      const double large_interval = integrate(
          [&](double x) { return density(belief, x, 2.0 * x_hat); },
          2.0 * x_hat - k * 2.0 * x_hat, 2.0 * x_hat + k * 2.0 * x_hat, q);
      CHECK(small_interval ==
            near(large_interval, 1e-8));
    }
  }
}

TEST_CASE("cv solves the equal-density condition at the threshold") {
  const double numeric = solve_cv();
  const double closed = cv_closed_form();
  CHECK(numeric == near(0.3678, 1e-4));
  CHECK(numeric == near(closed, 1e-10));
  // the condition itself holds at the root
  const NormalBelief belief(300.0, numeric);
  CHECK(density(belief, 450.0, 300.0) ==
        doctest::Approx(density(belief, 450.0, 600.0)).epsilon(1e-9));
  // scale does not move the root: re-derive it at a very different x_hat
  auto residual_at = [](double x_hat) {
    return find_root(
        [x_hat](double cv) {
          const NormalBelief b(x_hat, cv);
          const double m = 1.5 * x_hat;
          return density(b, m, x_hat) - density(b, m, 2.0 * x_hat);
        },
        0.05, 2.0, 1e-12);
  };
  CHECK(residual_at(1.0) == near(residual_at(1e4), 1e-10));
}

TEST_CASE("uniform posterior is a 2/3-1/3 split below the threshold") {
  const UniformBelief belief(1000.0);
  const Posterior below = posterior(belief, 200.0);
  CHECK(below.p_smaller == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(below.p_larger == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  const Posterior above = posterior(belief, 700.0);
  CHECK(above.p_smaller == 0.0);
  CHECK(above.p_larger == 1.0);
  // the boundary belongs to the smaller-assumption branch
  const Posterior boundary = posterior(belief, 500.0);
  CHECK(boundary.p_smaller == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  // piecewise constant with the breakpoint exactly at n_max/2
  CHECK(posterior(belief, std::nextafter(500.0, 600.0)).p_smaller == 0.0);
  CHECK_THROWS_AS(posterior(belief, 0.0), std::invalid_argument);
}

TEST_CASE("amounts above n_max violate the uniform belief but still classify") {
  const UniformBelief belief(1000.0);
  CHECK(violates_belief(belief, 1500.0));
  CHECK_FALSE(violates_belief(belief, 900.0));
  const Posterior p = posterior(belief, 1500.0);
  CHECK(p.p_smaller == 0.0);
  CHECK(p.p_larger == 1.0);
  CHECK_FALSE(violates_belief(Belief(NormalBelief(300.0)), 1e9));
}

TEST_CASE("normal posterior at the threshold is an even split") {
  const NormalBelief belief(300.0);
  const Posterior p = posterior(belief, 450.0);
  CHECK(p.p_smaller == near(0.5, 1e-9));
  CHECK(p.p_larger == near(0.5, 1e-9));
}

TEST_CASE("normal posterior at the revealed amount 550") {
  // Independent route: direct density-ratio arithmetic, no library calls.
  const double cv = 0.36776712751867907;
  auto raw_density = [cv](double x, double mu) {
    const double sigma = mu * cv;
    const double z = (x - mu) / sigma;
    const double norm = 0.5 * std::erfc(-(mu / sigma) / std::sqrt(2.0));
    return std::exp(-0.5 * z * z) / (std::sqrt(2.0 * 3.14159265358979323846) *
                                     sigma * norm);
  };
  const double fa = raw_density(550.0, 300.0);
  const double fb = raw_density(550.0, 600.0);
  const double expected_larger = fb / (fa + fb);
  CHECK(expected_larger ==
        doctest::Approx(kPosteriorLarger550).epsilon(1e-12));

  const Posterior p = posterior(NormalBelief(300.0), 550.0);
  CHECK(p.p_larger == doctest::Approx(kPosteriorLarger550).epsilon(1e-12));
  CHECK(p.p_larger > 0.5);
}

TEST_CASE("posterior always sums to one exactly") {
  const UniformBelief uniform(1000.0);
  const NormalBelief normal(300.0);
  RandomStream rs(99, 0);
  for (int i = 0; i < 500; ++i) {
    const double a = std::exp(rs.uniform(std::log(1e-2), std::log(1e5)));
    const Posterior pu = posterior(uniform, a);
    const Posterior pn = posterior(normal, a);
    CHECK(pu.p_smaller + pu.p_larger == 1.0);
    CHECK(pn.p_smaller + pn.p_larger == 1.0);
    CHECK(pn.p_smaller >= 0.0);
    CHECK(pn.p_larger >= 0.0);
  }
}

TEST_CASE("posterior comparison flips exactly at the threshold") {
  const double x_hat = 300.0;
  const NormalBelief belief(x_hat, solve_cv());
  const double m = intermediate_amount(belief);
  const double lo = std::log(x_hat / 100.0);
  const double hi = std::log(100.0 * x_hat);
  const int grid = 1000;
  for (int i = 0; i <= grid; ++i) {
    const double a = std::exp(lo + (hi - lo) * i / grid);
    const Posterior p = posterior(belief, a);
    if (a < m) {
      CHECK(p.p_smaller > p.p_larger);
    } else if (a > m) {
      CHECK(p.p_larger > p.p_smaller);
    }
  }
}

TEST_CASE("log_density matches density where the density is representable") {
  const NormalBelief belief(300.0);
  for (double x : {10.0, 150.0, 300.0, 450.0, 600.0, 1200.0}) {
    for (double mu : {300.0, 600.0}) {
      CHECK(std::exp(log_density(belief, x, mu)) ==
            doctest::Approx(density(belief, x, mu)).epsilon(1e-12));
    }
  }
  CHECK(std::isinf(log_density(belief, -1.0, 300.0)));
  CHECK(log_density(belief, -1.0, 300.0) < 0.0);
}
