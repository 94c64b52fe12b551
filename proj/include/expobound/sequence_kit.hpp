#pragma once

// Finite decaying sequences, their (a, alpha)-gauges, monotone arrangements of
// several sequences, counting functions, and the arrangement growth bounds.
//
// All sequences are finite prefixes of infinite ones. Indices in the public API
// are 0-based; the growth formulas use the 1-based position n = index + 1.

#include <cstddef>
#include <span>
#include <vector>

#include "expobound/class_params.hpp"

namespace expobound {

class DecaySequence {
 public:
  DecaySequence() = default;
  /// Throws std::invalid_argument if any value is not finite.
  explicit DecaySequence(std::vector<double> values);

  [[nodiscard]] std::span<const double> values() const { return values_; }
  [[nodiscard]] std::size_t size() const { return values_.size(); }
  [[nodiscard]] bool empty() const { return values_.empty(); }
  [[nodiscard]] double operator[](std::size_t i) const { return values_[i]; }

 private:
  std::vector<double> values_;
};

enum class Direction { increasing, decreasing };

/// Merged monotone order of K sequences. Entry i came from
/// sequence source_sequence[i] at position source_position[i].
struct ArrangementResult {
  std::vector<double> values;
  std::vector<std::size_t> source_sequence;
  std::vector<std::size_t> source_position;
};

struct ClassFit {
  ClassParams params;
  double gauge = 0.0;
  double residual = 0.0;  // sum of squared log-residuals at the optimum
};

/// One (a_k, A_k) or (a_k, B_k) pair of an arrangement bound.
struct RateOffset {
  double rate = 1.0;
  double offset = 0.0;
};

enum class BoundSide { lower, upper };

/// c * (n + offset_shift)^alpha + additive_constant, with
/// c = (sum_k a_k^{-1/alpha})^{-alpha}.
struct ArrangementBound {
  double c = 0.0;
  std::size_t offset_shift = 0;
  double additive_constant = 0.0;
  double alpha = 1.0;

  /// Bound at the 1-based position n.
  [[nodiscard]] double at(std::size_t n) const;
};

/// max_n |x_n| exp(a n^alpha) over the available prefix. This is a lower bound
/// for the gauge of the underlying infinite sequence. Zero entries contribute 0.
/// Throws std::invalid_argument("empty input") on an empty sequence.
double gauge_of_sequence(const DecaySequence& x, ClassParams p);

/// Same as gauge_of_sequence but without the emptiness check (empty -> 0).
double gauge_of_values(std::span<const double> x, ClassParams p);

/// Least-squares fit of log x_n = log C - a n^alpha over the grid
/// alpha in {0.1, ..., 3.0} followed by golden-section refinement.
ClassFit fit_class_params(const DecaySequence& x);

/// Stable K-way merge; ties broken by (sequence index, position) ascending.
ArrangementResult monotone_arrangement(std::span<const DecaySequence> seqs, Direction direction);

/// card{ n : x_n <= r } over the prefix.
std::size_t counting_function(std::span<const double> x, double r);

/// (sum_k rate_k^{-1/alpha})^{-alpha}. Exact for K = 1.
double combined_exponent(std::span<const double> rates, double alpha);

/// Bounds for the increasing arrangement of sequences with
/// a^{(k)}_n >= a_k n^alpha + A_k (lower) or <= (upper).
ArrangementBound make_arrangement_bound(std::span<const RateOffset> params, double alpha,
                                        BoundSide side);
double arrangement_bound(std::span<const RateOffset> params, double alpha, std::size_t n,
                         BoundSide side);

/// Bounds for the decreasing arrangement of sequences with
/// b^{(k)}_n <= B_k exp(-a_k n^alpha) (upper) or >= (lower).
double decay_arrangement_bound(std::span<const RateOffset> params, double alpha, std::size_t n,
                               BoundSide side);

}  // namespace expobound
