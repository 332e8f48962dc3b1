#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>

namespace envelopes {

/// Thrown when an iterative numerical routine runs out of budget before
/// reaching its tolerance. Never swallowed: callers either handle it or let
/// it surface as a hard failure.
class NonConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Settings for adaptive quadrature.
struct Quadrature {
  double abs_tolerance = 1e-9;
  int max_depth = 60;  // interval halvings; must be >= 10
};

double std_normal_pdf(double t);

/// Standard normal CDF, evaluated through erfc (accurate to ~1e-16).
/// The quadrature route is kept as a cross-check in the tests only;
/// this is the fast path used inside simulation loops.
double std_normal_cdf(double x);

/// Adaptive Simpson integration of f over [a, b] with per-interval error
/// estimates and interval halving. Throws NonConvergenceError when an
/// interval still fails its local tolerance at max_depth.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const Quadrature& q = {});

/// Bisection on [lo, hi]; requires a sign change (endpoint zeros are
/// accepted as roots). Returns the bracket midpoint once its width is <= tol.
double find_root(const std::function<double(double)>& g, double lo, double hi,
                 double tol = 1e-12);

/// Deterministic, seedable random stream. Equal (seed, stream_index) pairs
/// reproduce bit-identical draw sequences; distinct stream indices give
/// independent streams for concurrent workers. All floating-point draws are
/// derived from raw 64-bit engine output, so sequences do not depend on the
/// standard library's distribution implementations.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t stream_index = 0);

  /// Uniform draw in (0, 1]; never returns zero, so log() is always safe.
  double next_unit();

  /// Uniform draw in (lo, hi].
  double uniform(double lo, double hi);

  /// Normal draw via Box-Muller (two unit draws per call, cosine branch).
  double normal(double mu, double sigma);

  /// Normal draw truncated below at zero: redraws until positive.
  /// Requires mu > 0 and sigma > 0.
  double truncated_normal(double mu, double sigma);

  /// Fair coin (one engine draw).
  bool coin();

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_index() const { return stream_index_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_index_;
  std::mt19937_64 engine_;
};

}  // namespace envelopes
