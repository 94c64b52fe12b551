#pragma once

// Finite truncations of the extremal and example operators, each returned with
// its singular values and eigenvalue moduli known in closed form.

#include <string>
#include <vector>

#include "expobound/class_params.hpp"
#include "expobound/matrix_core.hpp"

namespace expobound {

struct GalleryMatrix {
  ComplexMatrix matrix;
  std::vector<double> singular_values;    // advertised, nonincreasing
  std::vector<double> eigenvalue_moduli;  // advertised, nonincreasing
  std::string kind;
  bool normal = false;
};

/// Block ends N_1 < N_2 < ... (N_0 = 0 implicit).
class BlockSchedule {
 public:
  explicit BlockSchedule(std::vector<std::size_t> block_ends);

  /// N_n = round(exp(n^2)) while below dim, closed off with dim itself.
  static BlockSchedule super_exponential(std::size_t dim);

  [[nodiscard]] const std::vector<std::size_t>& block_ends() const { return ends_; }
  [[nodiscard]] std::size_t blocks() const { return ends_.size(); }
  [[nodiscard]] std::size_t total() const { return ends_.back(); }
  [[nodiscard]] std::size_t block_start(std::size_t n) const { return n == 0 ? 0 : ends_[n - 1]; }
  [[nodiscard]] std::size_t block_size(std::size_t n) const { return ends_[n] - block_start(n); }

  /// (1/d_n) sum_{l in block n} l^alpha, blocks counted from 0.
  [[nodiscard]] double mean_power(std::size_t n, double alpha) const;

 private:
  std::vector<std::size_t> ends_;
};

inline constexpr std::size_t kMaxWeylDim = 500;

/// Weighted shift B e_n = exp(-a n^alpha) e_{n+1}, truncated to dim x dim
/// (weights on the subdiagonal). Throws for dim < 2.
GalleryMatrix make_shift(ClassParams p, std::size_t dim);

/// C(tau_1, ..., tau_N): tau_1..tau_{N-1} on the superdiagonal, tau_N in the
/// bottom-left corner. s_n = tau_n, |lambda| = (tau_1 ... tau_N)^{1/N}.
GalleryMatrix make_cyclic(const std::vector<double>& taus);

/// Block diagonal with blocks C(exp(-a l^alpha) : l in block n). Then
/// s_k = exp(-a k^alpha) and block n has eigenvalue moduli exp(-a p_n).
GalleryMatrix make_weyl_sharpness(ClassParams p, const BlockSchedule& schedule);

struct InterleavedSum {
  std::vector<GalleryMatrix> summands;
  GalleryMatrix sum;
};

/// K diagonal summands; A_k carries exp(-a_k m^alpha) at the 1-based position
/// K m - (k - 1). dim must be a multiple of K.
InterleavedSum make_interleaved_sum(const std::vector<double>& rates, double alpha, std::size_t dim);

/// diag(exp(-a |m|)) for m = 0, -1, 1, -2, 2, ...
GalleryMatrix make_convolution_diagonal(double a, std::size_t dim);

}  // namespace expobound
