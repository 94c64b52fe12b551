#pragma once

// Deterministic random instances. Distributions are computed here from raw
// mt19937_64 output so that streams agree across standard libraries.

#include <cstdint>
#include <random>
#include <vector>

#include "expobound/matrix_core.hpp"

namespace expobound {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  double uniform();                    // [0, 1)
  double uniform(double lo, double hi);
  std::size_t uniform_index(std::size_t lo, std::size_t hi);  // inclusive
  double normal();
  Complex complex_normal();

  /// Stream for sub-task i, a function of the construction seed and i only.
  [[nodiscard]] Rng fork(std::uint64_t i) const;

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

ComplexMatrix random_gaussian(Rng& rng, Eigen::Index rows, Eigen::Index cols);

/// Haar-distributed unitary (QR of a Gaussian matrix with phase correction).
ComplexMatrix random_unitary(Rng& rng, Eigen::Index n);

/// U diag(s) V^* with random unitaries U, V.
ComplexMatrix random_with_singular_values(Rng& rng, const std::vector<double>& s);

/// Upper-triangular R with the prescribed singular values: the R factor of
/// U diag(s) V^*.
ComplexMatrix random_upper_triangular(Rng& rng, const std::vector<double>& s);

/// Q diag(values) Q^* for a random unitary Q.
ComplexMatrix random_normal(Rng& rng, const std::vector<Complex>& values);

/// C exp(-a n^alpha), n = 1..dim.
std::vector<double> exponential_decay(double scale, double a, double alpha, std::size_t dim);

}  // namespace expobound
