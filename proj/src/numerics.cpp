#include "envelopes/numerics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace envelopes {

namespace {

constexpr double kInvSqrt2Pi =
    std::numbers::inv_sqrtpi / std::numbers::sqrt2;  // 1/sqrt(2*pi)
constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double simpson(double fa, double fm, double fb, double width) {
  return width / 6.0 * (fa + 4.0 * fm + fb);
}

// Classic adaptive Simpson: compare the whole-interval estimate against the
// two half-interval estimates; the difference over 15 bounds the error of
// the refined value. `noise` is the floating-point floor below which the
// difference carries no information (it also resolves removable endpoint
// discontinuities, e.g. a truncated density evaluated at its boundary,
// whose local error shrinks with the interval but never meets a
// width-proportional budget).
double integrate_rec(const std::function<double(double)>& f, double a,
                     double b, double fa, double fm, double fb, double whole,
                     double tol, double noise, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(fa, flm, fm, m - a);
  const double right = simpson(fm, frm, fb, b - m);
  const double delta = left + right - whole;
  // Conservative acceptance: |delta|/15 estimates the refined error, but the
  // estimate is optimistic in far tails, so require |delta| <= tol outright.
  if (std::abs(delta) <= tol || std::abs(delta) <= noise) {
    return left + right + delta / 15.0;
  }
  if (depth <= 0) {
    std::ostringstream msg;
    msg << "integrate: no convergence on [" << a << ", " << b
        << "] at the configured max depth";
    throw NonConvergenceError(msg.str());
  }
  return integrate_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, noise,
                       depth - 1) +
         integrate_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, noise,
                       depth - 1);
}

}  // namespace

double std_normal_pdf(double t) { return kInvSqrt2Pi * std::exp(-0.5 * t * t); }

double std_normal_cdf(double x) { return 0.5 * std::erfc(-x * kInvSqrt2); }

double integrate(const std::function<double(double)>& f, double a, double b,
                 const Quadrature& q) {
  if (!(q.abs_tolerance > 0.0)) {
    throw std::invalid_argument("integrate: abs_tolerance must be positive");
  }
  if (q.max_depth < 10) {
    throw std::invalid_argument("integrate: max_depth must be at least 10");
  }
  if (!(a <= b)) {
    throw std::invalid_argument("integrate: requires a <= b");
  }
  if (a == b) {
    return 0.0;
  }
  const double fa = f(a);
  const double m = 0.5 * (a + b);
  const double fm = f(m);
  const double fb = f(b);
  const double whole = simpson(fa, fm, fb, b - a);
  const double scale =
      std::max({std::abs(whole),
                (b - a) * std::max({std::abs(fa), std::abs(fm), std::abs(fb)}),
                q.abs_tolerance});
  const double noise = std::numeric_limits<double>::epsilon() * scale;
  return integrate_rec(f, a, b, fa, fm, fb, whole, q.abs_tolerance, noise,
                       q.max_depth);
}

double find_root(const std::function<double(double)>& g, double lo, double hi,
                 double tol) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("find_root: tol must be positive");
  }
  if (!(lo < hi)) {
    throw std::invalid_argument("find_root: requires lo < hi");
  }
  double glo = g(lo);
  double ghi = g(hi);
  if (glo == 0.0) return lo;
  if (ghi == 0.0) return hi;
  if (std::isnan(glo) || std::isnan(ghi) || glo * ghi > 0.0) {
    throw std::invalid_argument(
        "find_root: g(lo) and g(hi) must bracket a sign change");
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket at floating-point resolution
    const double gm = g(mid);
    if (gm == 0.0) return mid;
    if ((gm > 0.0) == (glo > 0.0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream_index)
    : seed_(seed), stream_index_(stream_index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream_index),
                    static_cast<std::uint32_t>(stream_index >> 32)};
  engine_.seed(seq);
}

double RandomStream::next_unit() {
  // Top 53 bits -> [0, 1), flipped to (0, 1].
  return 1.0 - static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RandomStream::uniform(double lo, double hi) {
  if (!(lo < hi)) {
    throw std::invalid_argument("uniform: requires lo < hi");
  }
  return lo + (hi - lo) * next_unit();
}

double RandomStream::normal(double mu, double sigma) {
  const double u1 = next_unit();
  const double u2 = next_unit();
  return mu + sigma * std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

double RandomStream::truncated_normal(double mu, double sigma) {
  if (!(mu > 0.0) || !(sigma > 0.0)) {
    throw std::invalid_argument(
        "truncated_normal: requires mu > 0 and sigma > 0");
  }
  // Rejection from the untruncated normal; acceptance probability is
  // Phi(mu/sigma), so redraws only get common when sigma outgrows mu.
  for (;;) {
    const double x = normal(mu, sigma);
    if (x > 0.0) return x;
  }
}

bool RandomStream::coin() { return (engine_() >> 63) != 0; }

}  // namespace envelopes
