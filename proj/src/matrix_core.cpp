#include "expobound/matrix_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace expobound {

namespace {

void require_nonempty(const ComplexMatrix& A, const char* who) {
  if (A.size() == 0) throw std::invalid_argument(std::string(who) + ": empty matrix");
}

void require_finite(const ComplexMatrix& A, const char* who) {
  if (!A.allFinite()) throw std::invalid_argument(std::string(who) + ": non-finite entries");
}

void require_square(const ComplexMatrix& A, const char* who) {
  if (A.rows() != A.cols()) throw std::invalid_argument(std::string(who) + ": matrix is not square");
}

std::vector<Complex> sorted_diagonal(const ComplexMatrix& T) {
  std::vector<Complex> d(static_cast<std::size_t>(T.rows()));
  for (Eigen::Index i = 0; i < T.rows(); ++i) d[static_cast<std::size_t>(i)] = T(i, i);
  std::sort(d.begin(), d.end(), eigenvalue_order);
  return d;
}

// Swap the adjacent diagonal entries k, k+1 of the upper-triangular T by a
// unitary rotation, accumulating it into Q.
void swap_adjacent(ComplexMatrix& T, ComplexMatrix& Q, Eigen::Index k) {
  const Complex t11 = T(k, k);
  const Complex t22 = T(k + 1, k + 1);
  const Complex t12 = T(k, k + 1);
  if (t11 == t22) return;
  // (t12, t22 - t11) spans the eigenvector of t22.
  Complex v1 = t12;
  Complex v2 = t22 - t11;
  const double len = std::hypot(std::abs(v1), std::abs(v2));
  v1 /= len;
  v2 /= len;
  // G = [[v1, -conj(v2)], [v2, conj(v1)]] is unitary with first column (v1, v2).
  const Complex g11 = v1;
  const Complex g12 = -std::conj(v2);
  const Complex g21 = v2;
  const Complex g22 = std::conj(v1);
  const Eigen::Index n = T.rows();
  // T <- G^* T on rows k, k+1.
  for (Eigen::Index j = k; j < n; ++j) {
    const Complex a = T(k, j);
    const Complex b = T(k + 1, j);
    T(k, j) = std::conj(g11) * a + std::conj(g21) * b;
    T(k + 1, j) = std::conj(g12) * a + std::conj(g22) * b;
  }
  // T <- T G on columns k, k+1.
  for (Eigen::Index i = 0; i <= k + 1; ++i) {
    const Complex a = T(i, k);
    const Complex b = T(i, k + 1);
    T(i, k) = a * g11 + b * g21;
    T(i, k + 1) = a * g12 + b * g22;
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    const Complex a = Q(i, k);
    const Complex b = Q(i, k + 1);
    Q(i, k) = a * g11 + b * g21;
    Q(i, k + 1) = a * g12 + b * g22;
  }
  T(k + 1, k) = Complex(0.0, 0.0);
  T(k, k) = t22;
  T(k + 1, k + 1) = t11;
}

void order_by_modulus(ComplexMatrix& T, ComplexMatrix& Q) {
  const Eigen::Index n = T.rows();
  // Bubble sort through adjacent swaps keeps every step unitary.
  for (Eigen::Index pass = 0; pass < n; ++pass) {
    bool swapped = false;
    for (Eigen::Index k = 0; k + 1 < n - pass; ++k) {
      if (eigenvalue_order(T(k + 1, k + 1), T(k, k))) {
        swap_adjacent(T, Q, k);
        swapped = true;
      }
    }
    if (!swapped) break;
  }
}

}  // namespace

std::vector<double> Spectrum::moduli() const {
  std::vector<double> m;
  m.reserve(eigenvalues.size());
  for (const auto& z : eigenvalues) m.push_back(std::abs(z));
  return m;
}

bool eigenvalue_order(const Complex& x, const Complex& y) {
  const double mx = std::abs(x);
  const double my = std::abs(y);
  if (mx != my) return mx > my;
  return std::arg(x) < std::arg(y);
}

double linear_tolerance(Eigen::Index dim, double norm) {
  return kLinearToleranceFactor * static_cast<double>(dim) * norm;
}

double linear_tolerance(const ComplexMatrix& A) {
  return linear_tolerance(std::max(A.rows(), A.cols()), operator_norm(A));
}

SvdResult svd(const ComplexMatrix& A) {
  require_nonempty(A, "svd");
  require_finite(A, "svd");
  Eigen::BDCSVD<ComplexMatrix> solver(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return SvdResult{solver.matrixU(), solver.matrixV(), solver.singularValues()};
}

RealVector singular_values(const ComplexMatrix& A) {
  require_nonempty(A, "singular_values");
  require_finite(A, "singular_values");
  Eigen::BDCSVD<ComplexMatrix> solver(A);
  return solver.singularValues();
}

double operator_norm(const ComplexMatrix& A) { return singular_values(A)(0); }

SchurSplit complex_schur(const ComplexMatrix& A, SchurOrdering ordering) {
  require_nonempty(A, "complex_schur");
  require_square(A, "complex_schur");
  require_finite(A, "complex_schur");
  const Eigen::Index n = A.rows();
  SchurSplit split;
  if (is_upper_triangular(A)) {
    split.Q = ComplexMatrix::Identity(n, n);
    split.T = A;
  } else {
    Eigen::ComplexSchur<ComplexMatrix> schur(n);
    schur.setMaxIterations(static_cast<Eigen::Index>(60) * n);
    schur.compute(A, true);
    if (schur.info() != Eigen::Success) throw std::runtime_error("schur failed");
    split.Q = schur.matrixU();
    split.T = schur.matrixT().triangularView<Eigen::Upper>();
  }
  if (ordering == SchurOrdering::by_modulus_desc) order_by_modulus(split.T, split.Q);
  split.D = split.T.diagonal().asDiagonal();
  split.N = split.T;
  split.N.diagonal().setZero();
  return split;
}

Spectrum eigenvalues(const ComplexMatrix& A) {
  require_nonempty(A, "eigenvalues");
  require_square(A, "eigenvalues");
  require_finite(A, "eigenvalues");
  if (is_upper_triangular(A) || is_lower_triangular(A)) return Spectrum{sorted_diagonal(A)};
  Eigen::ComplexSchur<ComplexMatrix> schur(A.rows());
  schur.setMaxIterations(static_cast<Eigen::Index>(60) * A.rows());
  schur.compute(A, false);
  if (schur.info() != Eigen::Success) throw std::runtime_error("schur failed");
  return Spectrum{sorted_diagonal(schur.matrixT())};
}

double resolvent_norm(const ComplexMatrix& A, Complex z, std::optional<double> norm_a) {
  require_nonempty(A, "resolvent_norm");
  require_square(A, "resolvent_norm");
  const double na = norm_a ? *norm_a : operator_norm(A);
  ComplexMatrix shifted = -A;
  shifted.diagonal().array() += z;
  const RealVector s = singular_values(shifted);
  const double s_min = s(s.size() - 1);
  if (s_min <= linear_tolerance(A.rows(), std::abs(z) + na)) {
    throw ResolventBlowUp("resolvent blow-up");
  }
  return 1.0 / s_min;
}

double triangular_inverse_norm(const ComplexMatrix& T) {
  require_nonempty(T, "triangular_inverse_norm");
  require_square(T, "triangular_inverse_norm");
  const Eigen::Index n = T.rows();
  const ComplexMatrix identity = ComplexMatrix::Identity(n, n);
  ComplexMatrix inverse;
  if (is_lower_triangular(T)) {
    inverse = T.triangularView<Eigen::Lower>().solve(identity);
  } else if (is_upper_triangular(T)) {
    inverse = T.triangularView<Eigen::Upper>().solve(identity);
  } else {
    throw std::invalid_argument("triangular_inverse_norm: matrix is not triangular");
  }
  if (!inverse.allFinite()) throw ResolventBlowUp("resolvent blow-up");
  return operator_norm(inverse);
}

double distance_to_spectrum(Complex z, const Spectrum& s) {
  if (s.empty()) throw std::invalid_argument("distance_to_spectrum: empty spectrum");
  double d = std::numeric_limits<double>::infinity();
  for (const auto& lambda : s.eigenvalues) d = std::min(d, std::abs(z - lambda));
  return d;
}

double commutator_norm(const ComplexMatrix& A) {
  require_square(A, "commutator_norm");
  return (A * A.adjoint() - A.adjoint() * A).norm();
}

bool is_upper_triangular(const ComplexMatrix& A) {
  for (Eigen::Index j = 0; j < A.cols(); ++j) {
    for (Eigen::Index i = j + 1; i < A.rows(); ++i) {
      if (A(i, j) != Complex(0.0, 0.0)) return false;
    }
  }
  return true;
}

bool is_lower_triangular(const ComplexMatrix& A) {
  for (Eigen::Index j = 1; j < A.cols(); ++j) {
    for (Eigen::Index i = 0; i < std::min(j, A.rows()); ++i) {
      if (A(i, j) != Complex(0.0, 0.0)) return false;
    }
  }
  return true;
}

}  // namespace expobound
