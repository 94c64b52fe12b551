#pragma once

// The bound functions
//   f_{a,alpha}(r) = prod_{n>=1} (1 + r exp(-a n^alpha)),
//   g(r) = r f(r),   h(r) = 1 / g^{-1}(1 / r),
// evaluated with certified enclosures, together with the resolvent estimate
// built on a normal-plus-nilpotent (Schur) split and the spectral variation
// and spectral distance bounds that follow from it.

#include <optional>

#include "expobound/class_params.hpp"
#include "expobound/expo_class.hpp"
#include "expobound/matrix_core.hpp"

namespace expobound {

inline constexpr double kDefaultRelTol = 1e-12;

/// A value together with a radius r such that the true quantity lies in
/// [value - r, value + r].
struct CertifiedValue {
  double value = 0.0;
  double error_radius = 0.0;

  [[nodiscard]] double lower() const { return value - error_radius; }
  [[nodiscard]] double upper() const { return value + error_radius; }
  [[nodiscard]] bool contains(double x) const { return lower() <= x && x <= upper(); }
};

/// Upper estimate of the departure from normality nu_{b,alpha}(A).
struct DepartureEstimate {
  ClassParams params;                 // (b, alpha)
  double upper = 0.0;                 // min(gauge_bound, schur_value)
  double gauge_bound = 0.0;           // 2 |A|_{a,alpha}
  std::optional<double> schur_value;  // |N|_{b,alpha} for one computed Schur split
};

/// b = a (1 + (1 + alpha)^{1/alpha})^{-alpha}, the largest rate at which the
/// nilpotent part of any Schur split is controlled by 2 |A|_{a,alpha}.
double departure_rate(ClassParams p);

/// Enclosure of log f_{a,alpha}(r). The product is truncated after N factors,
/// N doubling until the tail bound r * int_N^inf exp(-a x^alpha) dx falls
/// below rel_tol / 4; the radius also covers floating-point rounding.
CertifiedValue log_f_eval(ClassParams p, double r, double rel_tol = kDefaultRelTol);

/// Enclosure of f_{a,alpha}(r) with error_radius <= rel_tol * value.
/// Throws std::overflow_error when f exceeds the double range.
CertifiedValue f_eval(ClassParams p, double r, double rel_tol = kDefaultRelTol);

/// a^{-1/alpha} ( alpha/(1+alpha) (log+ r)^{1+1/alpha} + r Gamma(1+1/alpha, log+ r) ),
/// an upper bound for log f_{a,alpha}(r).
double log_f_upper_closed_form(ClassParams p, double r);
double f_upper_closed_form(ClassParams p, double r);

CertifiedValue g_eval(ClassParams p, double r, double rel_tol = kDefaultRelTol);

/// x >= 0 with g(x) = y up to relative error rel_tol, by bisection on log x.
double g_invert(ClassParams p, double y, double rel_tol = kDefaultRelTol);

/// log of g^{-1}(exp(log_y)); works for arguments far outside the double range.
double log_g_invert(ClassParams p, double log_y, double rel_tol = kDefaultRelTol);

/// h(r) = 1 / g^{-1}(1 / r), with h(0) = 0.
double h_eval(ClassParams p, double r);
double log_h_eval(ClassParams p, double log_r);

/// Departure estimate at (b, alpha), b = departure_rate(p). The gauge of A is
/// taken from its computed singular values.
DepartureEstimate departure_upper(const ComplexMatrix& A, ClassParams p,
                                  SchurOrdering ordering = SchurOrdering::by_modulus_desc);

/// As above, with a known gauge of A (for operators whose singular values are
/// known analytically).
DepartureEstimate departure_upper(const ComplexMatrix& A, const OperatorGauge& gauge_a,
                                  SchurOrdering ordering = SchurOrdering::by_modulus_desc);

/// (1/d) f_{b,alpha}(nu/d) with nu = dep.upper; exactly 1/d when nu = 0.
/// Returns +inf when the value exceeds the double range.
double resolvent_bound(double d, const DepartureEstimate& dep);

/// nu h(||E|| / nu); equals ||E|| when nu = 0.
double spectral_variation_bound(double norm_e, const DepartureEstimate& dep);

/// m h(||E|| / m) with m = max of the two departure estimates.
double spectral_distance_bound(double norm_e, const DepartureEstimate& dep_a,
                               const DepartureEstimate& dep_b);

/// sup_{x in from} d(x, to).
double directed_distance(const Spectrum& from, const Spectrum& to);
double hausdorff_distance(const Spectrum& s1, const Spectrum& s2);

/// |z|^{-1} f_{a,alpha}(|z|^{-1} |A|_{a,alpha}) for a quasi-nilpotent A.
double quasinilpotent_resolvent_bound(const OperatorGauge& g, Complex z);

}  // namespace expobound
