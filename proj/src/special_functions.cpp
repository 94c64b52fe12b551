#include "expobound/special_functions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace expobound {

namespace {

constexpr int kMaxIterations = 10000;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Regularized lower P(beta, s) by its power series.
double lower_regularized_series(double beta, double s) {
  double term = 1.0 / beta;
  double sum = term;
  for (int n = 1; n < kMaxIterations; ++n) {
    term *= s / (beta + n);
    sum += term;
    if (std::abs(term) < std::abs(sum) * kEps) break;
  }
  return sum * std::exp(-s + beta * std::log(s) - std::lgamma(beta));
}

// log Gamma(beta, s) by the modified Lentz continued fraction.
double log_upper_continued_fraction(double beta, double s) {
  const double tiny = std::numeric_limits<double>::min() / kEps;
  double b = s + 1.0 - beta;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxIterations; ++i) {
    const double an = -i * (i - beta);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEps) break;
  }
  return -s + beta * std::log(s) + std::log(h);
}

}  // namespace

double incomplete_gamma(double beta, double s) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw std::invalid_argument("incomplete_gamma: beta must be positive");
  }
  if (!(s >= 0.0) || std::isnan(s)) throw std::invalid_argument("incomplete_gamma: s must be >= 0");
  if (s == 0.0) return std::tgamma(beta);
  if (std::isinf(s)) return 0.0;
  if (s < beta + 1.0) return std::tgamma(beta) * (1.0 - lower_regularized_series(beta, s));
  return std::exp(log_upper_continued_fraction(beta, s));
}

double log_incomplete_gamma(double beta, double s) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw std::invalid_argument("incomplete_gamma: beta must be positive");
  }
  if (!(s >= 0.0) || std::isnan(s)) throw std::invalid_argument("incomplete_gamma: s must be >= 0");
  if (std::isinf(s)) return -std::numeric_limits<double>::infinity();
  if (s < beta + 1.0) return std::log(incomplete_gamma(beta, s));
  return log_upper_continued_fraction(beta, s);
}

}  // namespace expobound
