#pragma once

// Exponential-class gauges of matrices and the bound propagation rules:
// inclusion order, product closure, sums, and eigenvalue decay.

#include <span>
#include <vector>

#include "expobound/class_params.hpp"
#include "expobound/matrix_core.hpp"

namespace expobound {

/// |A|_{a,alpha} = sup_n s_n(A) exp(a n^alpha), taken over a finite truncation.
struct OperatorGauge {
  ClassParams params;
  double gauge = 0.0;
};

/// Gauge over the computed singular values. Singular values at or below
/// eps_lin(A) are treated as exact zeros and contribute nothing.
OperatorGauge operator_gauge(const ComplexMatrix& A, ClassParams p);

/// Gauge of a known singular-value sequence (nonincreasing, 0-based storage).
/// Values <= zero_threshold contribute nothing.
OperatorGauge gauge_from_singular_values(std::span<const double> s, ClassParams p,
                                         double zero_threshold = 0.0);

/// (a, alpha) precedes (a', alpha') iff alpha < alpha', or alpha == alpha' and a < a'.
/// True means E(a', alpha') is strictly contained in E(a, alpha).
bool class_precedes(ClassParams p, ClassParams q);

/// ||A|| |B|_{a,alpha} ||C||, an upper bound for |ABC|_{a,alpha}.
double product_gauge_bound(double norm_a, const OperatorGauge& gauge_b, double norm_c);

/// a' = (sum_k a_k^{-1/alpha})^{-alpha}: the class of a sum of K operators.
double sum_class(std::span<const double> rates, double alpha);

/// Gauge bound for a sum of operators: params (a', alpha), gauge K * max_k gauge_k.
OperatorGauge sum_gauge_bound(std::span<const OperatorGauge> gauges);

/// |lambda_k| <= |A|_{a,alpha} exp(-a k^alpha / (1 + alpha)), k >= 1.
double weyl_bound(const OperatorGauge& g, std::size_t k);

}  // namespace expobound
