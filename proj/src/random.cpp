#include "expobound/random.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace expobound {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

std::size_t Rng::uniform_index(std::size_t lo, std::size_t hi) {
  if (hi < lo) throw std::invalid_argument("uniform_index: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return lo + static_cast<std::size_t>(engine_());
  // Rejection keeps the distribution exactly uniform.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return lo + static_cast<std::size_t>(x % span);
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 == 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(t);
  has_spare_ = true;
  return r * std::cos(t);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return Complex(re, im) * std::numbers::sqrt2 * 0.5;
}

Rng Rng::fork(std::uint64_t i) const { return Rng(splitmix64(seed_ ^ splitmix64(i + 1))); }

ComplexMatrix random_gaussian(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
  ComplexMatrix G(rows, cols);
  // Fill column by column in a fixed order.
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) G(i, j) = rng.complex_normal();
  }
  return G;
}

ComplexMatrix random_unitary(Rng& rng, Eigen::Index n) {
  const ComplexMatrix G = random_gaussian(rng, n, n);
  Eigen::HouseholderQR<ComplexMatrix> qr(G);
  ComplexMatrix Q = qr.householderQ();
  const ComplexMatrix R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < n; ++j) {
    const double m = std::abs(R(j, j));
    if (m > 0.0) Q.col(j) *= R(j, j) / m;
  }
  return Q;
}

ComplexMatrix random_with_singular_values(Rng& rng, const std::vector<double>& s) {
  const auto n = static_cast<Eigen::Index>(s.size());
  const ComplexMatrix U = random_unitary(rng, n);
  const ComplexMatrix V = random_unitary(rng, n);
  Eigen::VectorXcd d(n);
  for (Eigen::Index i = 0; i < n; ++i) d(i) = s[static_cast<std::size_t>(i)];
  return U * d.asDiagonal() * V.adjoint();
}

ComplexMatrix random_upper_triangular(Rng& rng, const std::vector<double>& s) {
  const ComplexMatrix M = random_with_singular_values(rng, s);
  Eigen::HouseholderQR<ComplexMatrix> qr(M);
  return qr.matrixQR().triangularView<Eigen::Upper>();
}

ComplexMatrix random_normal(Rng& rng, const std::vector<Complex>& values) {
  const auto n = static_cast<Eigen::Index>(values.size());
  const ComplexMatrix Q = random_unitary(rng, n);
  Eigen::VectorXcd d(n);
  for (Eigen::Index i = 0; i < n; ++i) d(i) = values[static_cast<std::size_t>(i)];
  return Q * d.asDiagonal() * Q.adjoint();
}

std::vector<double> exponential_decay(double scale, double a, double alpha, std::size_t dim) {
  std::vector<double> s(dim);
  for (std::size_t n = 1; n <= dim; ++n) s[n - 1] = scale * std::exp(-a * std::pow(static_cast<double>(n), alpha));
  return s;
}

}  // namespace expobound
