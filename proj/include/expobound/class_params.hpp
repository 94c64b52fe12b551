#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace expobound {

/// Index (a, alpha) of an exponential class: sequences with |x_n| = O(exp(-a n^alpha)).
struct ClassParams {
  double a = 1.0;
  double alpha = 1.0;

  ClassParams() = default;
  ClassParams(double rate, double exponent) : a(rate), alpha(exponent) {
    if (!(std::isfinite(rate) && rate > 0.0)) {
      throw std::invalid_argument("ClassParams: rate a must be positive and finite");
    }
    if (!(std::isfinite(exponent) && exponent > 0.0)) {
      throw std::invalid_argument("ClassParams: exponent alpha must be positive and finite");
    }
  }

  /// a * n^alpha, the log-weight applied to the n-th term (n is 1-based).
  [[nodiscard]] double log_weight(double n) const { return a * std::pow(n, alpha); }

  friend bool operator==(const ClassParams&, const ClassParams&) = default;
};

}  // namespace expobound
