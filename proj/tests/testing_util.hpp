#pragma once

// Absolute-tolerance comparator for doctest assertions (doctest's Approx is
// relative-only). Usage: CHECK(value == near(target, tol)).

#include <cmath>
#include <ostream>

namespace testutil {

struct Near {
  double target;
  double tol;

  friend bool operator==(double lhs, const Near& n) {
    return std::fabs(lhs - n.target) <= n.tol;
  }
  friend bool operator==(const Near& n, double rhs) { return rhs == n; }
  friend std::ostream& operator<<(std::ostream& os, const Near& n) {
    return os << n.target << " +/- " << n.tol;
  }
};

inline Near near(double target, double tol) { return Near{target, tol}; }

}  // namespace testutil

using testutil::near;
