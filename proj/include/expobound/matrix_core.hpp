#pragma once

// Dense complex linear algebra at desk scale: SVD, eigenvalues, ordered complex
// Schur form, operator and resolvent norms.
//
// Tolerances follow one convention: eps_lin(A) = 1e-10 * max(rows, cols) * ||A||.

#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace expobound {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kLinearToleranceFactor = 1e-10;

/// Thrown by resolvent_norm when z is numerically inside the spectrum.
class ResolventBlowUp : public std::runtime_error {
 public:
  explicit ResolventBlowUp(const std::string& what) : std::runtime_error(what) {}
};

struct SvdResult {
  ComplexMatrix U;
  ComplexMatrix V;
  RealVector singular_values;  // nonincreasing
};

/// Eigenvalues sorted by (-modulus, argument), repeated by algebraic multiplicity.
struct Spectrum {
  std::vector<Complex> eigenvalues;

  [[nodiscard]] std::size_t size() const { return eigenvalues.size(); }
  [[nodiscard]] bool empty() const { return eigenvalues.empty(); }
  [[nodiscard]] std::vector<double> moduli() const;
};

enum class SchurOrdering { by_modulus_desc, none };

/// A = Q T Q^*, T = D + N with D = diag(T) and N strictly upper triangular.
struct SchurSplit {
  ComplexMatrix Q;
  ComplexMatrix T;
  ComplexMatrix D;
  ComplexMatrix N;
};

/// Strict weak order used for every eigenvalue listing: larger modulus first,
/// then smaller argument.
bool eigenvalue_order(const Complex& x, const Complex& y);

/// 1e-10 * dim * norm.
double linear_tolerance(Eigen::Index dim, double norm);
double linear_tolerance(const ComplexMatrix& A);

SvdResult svd(const ComplexMatrix& A);
RealVector singular_values(const ComplexMatrix& A);
double operator_norm(const ComplexMatrix& A);

Spectrum eigenvalues(const ComplexMatrix& A);
SchurSplit complex_schur(const ComplexMatrix& A,
                         SchurOrdering ordering = SchurOrdering::by_modulus_desc);

/// 1 / sigma_min(zI - A). Throws ResolventBlowUp when
/// sigma_min <= eps_factor * (|z| + ||A||), eps_factor = 1e-10 * dim.
/// Pass norm_a to avoid recomputing ||A|| inside grid loops.
double resolvent_norm(const ComplexMatrix& A, Complex z, std::optional<double> norm_a = {});

/// ||T^{-1}|| for a triangular T by substitution. Accurate even when T is
/// badly conditioned, provided the substitution has no cancellation.
double triangular_inverse_norm(const ComplexMatrix& T);

/// min over the spectrum of |z - lambda|.
double distance_to_spectrum(Complex z, const Spectrum& s);

/// ||A A^* - A^* A||_F.
double commutator_norm(const ComplexMatrix& A);

bool is_upper_triangular(const ComplexMatrix& A);
bool is_lower_triangular(const ComplexMatrix& A);

}  // namespace expobound
