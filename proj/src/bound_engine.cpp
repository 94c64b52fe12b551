#include "expobound/bound_engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "expobound/special_functions.hpp"

namespace expobound {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kMaxLog = 709.0;  // exp(kMaxLog) is finite
constexpr std::size_t kMaxTerms = std::size_t{1} << 24;

// log(1 + exp(v)) without overflow.
double log1p_exp(double v) { return v > 35.0 ? v + std::log1p(std::exp(-v)) : std::log1p(std::exp(v)); }

// exp(v) / (1 + exp(v)).
double logistic(double v) { return v >= 0.0 ? 1.0 / (1.0 + std::exp(-v)) : std::exp(v) / (1.0 + std::exp(v)); }

struct ProductSum {
  double sum = 0.0;       // sum_{n <= terms} log(1 + r exp(-a n^alpha))
  double rounding = 0.0;  // bound on the floating-point error in sum
  double tail = 0.0;      // bound on the omitted sum_{n > terms}
  std::size_t terms = 0;
};

// log f_{a,alpha}(exp(log_r)) split into a computed partial sum and bounds on
// its rounding and truncation errors.
ProductSum sum_log_product(ClassParams p, double log_r, double tail_tol) {
  const double beta = 1.0 / p.alpha;
  const double log_tail_scale = -std::log(p.alpha) - std::log(p.a) / p.alpha;
  double sum = 0.0;
  double comp = 0.0;  // Neumaier compensation
  double rounding = 0.0;
  std::size_t done = 0;
  std::size_t target = 16;
  double tail = kInf;
  for (;;) {
    for (std::size_t n = done + 1; n <= target; ++n) {
      const double e = p.log_weight(static_cast<double>(n));
      const double v = log_r - e;
      const double t = log1p_exp(v);
      const double next = sum + t;
      comp += std::abs(sum) >= std::abs(t) ? (sum - next) + t : (t - next) + sum;
      sum = next;
      // Relative errors in e and log r move v; log1p_exp has slope logistic(v).
      rounding += kEps * ((std::abs(log_r) + 2.0 * e + 3.0) * logistic(v) + t);
    }
    done = target;
    const double log_gamma = log_incomplete_gamma(beta, p.log_weight(static_cast<double>(done)));
    tail = std::exp(log_r + log_tail_scale + log_gamma);
    if (tail <= tail_tol) break;
    if (target >= kMaxTerms) {
      throw std::runtime_error("f_eval: product converges too slowly for the term budget");
    }
    target *= 2;
  }
  const double total = sum + comp;
  return ProductSum{total, 2.0 * (rounding + 4.0 * kEps * std::abs(total)), tail * (1.0 + 1e-6), done};
}

void require_rel_tol(double rel_tol) {
  if (!(rel_tol > 0.0) || !std::isfinite(rel_tol)) {
    throw std::invalid_argument("f_eval: rel_tol must be positive");
  }
}

void require_argument(double r, const char* who) {
  if (!(r >= 0.0) || !std::isfinite(r)) {
    throw std::invalid_argument(std::string(who) + ": argument must be finite and >= 0");
  }
}

// Certified upper end of log f at r = exp(log_r).
double log_f_upper(ClassParams p, double log_r) {
  const ProductSum ps = sum_log_product(p, log_r, kDefaultRelTol);
  return ps.sum + ps.tail + ps.rounding;
}

double exp_or_inf(double log_value) { return log_value > kMaxLog ? kInf : std::exp(log_value); }

}  // namespace

double departure_rate(ClassParams p) {
  return p.a * std::pow(1.0 + std::pow(1.0 + p.alpha, 1.0 / p.alpha), -p.alpha);
}

CertifiedValue log_f_eval(ClassParams p, double r, double rel_tol) {
  require_argument(r, "f_eval");
  require_rel_tol(rel_tol);
  if (r == 0.0) return CertifiedValue{0.0, 0.0};
  const ProductSum ps = sum_log_product(p, std::log(r), rel_tol / 4.0);
  const double lo = ps.sum - ps.rounding;
  const double hi = ps.sum + ps.tail + ps.rounding;
  return CertifiedValue{0.5 * (lo + hi), 0.5 * (hi - lo)};
}

CertifiedValue f_eval(ClassParams p, double r, double rel_tol) {
  const CertifiedValue log_f = log_f_eval(p, r, rel_tol);
  if (r == 0.0) return CertifiedValue{1.0, 0.0};
  if (log_f.upper() > kMaxLog) throw std::overflow_error("f_eval: value exceeds double range");
  const double lo = std::exp(log_f.lower()) * (1.0 - 4.0 * kEps);
  const double hi = std::exp(log_f.upper()) * (1.0 + 4.0 * kEps);
  const CertifiedValue out{0.5 * (lo + hi), 0.5 * (hi - lo)};
  if (out.error_radius > rel_tol * out.value) {
    throw std::runtime_error("f_eval: requested tolerance is below the rounding floor");
  }
  return out;
}

double log_f_upper_closed_form(ClassParams p, double r) {
  require_argument(r, "f_upper_closed_form");
  if (r == 0.0) return 0.0;
  const double beta = 1.0 + 1.0 / p.alpha;
  const double log_plus = std::max(0.0, std::log(r));
  const double counting_part = p.alpha / (1.0 + p.alpha) * std::pow(log_plus, beta);
  const double tail_part = std::exp(std::log(r) + log_incomplete_gamma(beta, log_plus));
  return std::pow(p.a, -1.0 / p.alpha) * (counting_part + tail_part);
}

double f_upper_closed_form(ClassParams p, double r) { return exp_or_inf(log_f_upper_closed_form(p, r)); }

CertifiedValue g_eval(ClassParams p, double r, double rel_tol) {
  const CertifiedValue f = f_eval(p, r, rel_tol);
  const double value = r * f.value;
  return CertifiedValue{value, r * f.error_radius * (1.0 + 2.0 * kEps) + 2.0 * kEps * value};
}

double log_g_invert(ClassParams p, double log_y, double rel_tol) {
  require_rel_tol(rel_tol);
  if (std::isnan(log_y)) throw std::invalid_argument("g_invert: argument is NaN");
  if (log_y == -kInf) return -kInf;
  if (log_y == kInf) throw std::runtime_error("inversion out of range");
  try {
    const double inner_tol = std::max(rel_tol / 8.0, 1e-14);
    auto residual = [&](double u) {
      const ProductSum ps = sum_log_product(p, u, inner_tol);
      return u + ps.sum + 0.5 * ps.tail - log_y;
    };
    // g(x) >= x puts the root below y; g(y / f(y)) <= y puts it above y / f(y).
    double hi = log_y;
    const ProductSum at_hi = sum_log_product(p, hi, inner_tol);
    double lo = log_y - (at_hi.sum + at_hi.tail);
    for (int iter = 0; iter < 200 && hi - lo > rel_tol / 4.0; ++iter) {
      const double mid = 0.5 * (lo + hi);
      const double res = residual(mid);
      if (std::abs(res) <= rel_tol / 4.0) return mid;
      (res < 0.0 ? lo : hi) = mid;
    }
    if (hi - lo > rel_tol) throw std::runtime_error("inversion out of range");
    return 0.5 * (lo + hi);
  } catch (const std::runtime_error&) {
    throw std::runtime_error("inversion out of range");
  }
}

double g_invert(ClassParams p, double y, double rel_tol) {
  if (!(y >= 0.0)) throw std::invalid_argument("g_invert: argument must be >= 0");
  if (y == 0.0) return 0.0;
  if (!std::isfinite(y)) throw std::runtime_error("inversion out of range");
  return std::exp(log_g_invert(p, std::log(y), rel_tol));
}

double log_h_eval(ClassParams p, double log_r) { return -log_g_invert(p, -log_r); }

double h_eval(ClassParams p, double r) {
  if (!(r >= 0.0)) throw std::invalid_argument("h_eval: argument must be >= 0");
  if (r == 0.0) return 0.0;
  if (std::isinf(r)) return kInf;
  return exp_or_inf(log_h_eval(p, std::log(r)));
}

DepartureEstimate departure_upper(const ComplexMatrix& A, const OperatorGauge& gauge_a,
                                  SchurOrdering ordering) {
  const ClassParams b_params(departure_rate(gauge_a.params), gauge_a.params.alpha);
  const SchurSplit split = complex_schur(A, ordering);
  const double threshold = linear_tolerance(A);
  const RealVector s_n = singular_values(split.N);
  const double schur_value =
      gauge_from_singular_values(std::span<const double>(s_n.data(), static_cast<std::size_t>(s_n.size())),
                                 b_params, threshold)
          .gauge;
  DepartureEstimate dep;
  dep.params = b_params;
  dep.gauge_bound = 2.0 * gauge_a.gauge;
  dep.schur_value = schur_value;
  dep.upper = std::min(dep.gauge_bound, schur_value);
  return dep;
}

DepartureEstimate departure_upper(const ComplexMatrix& A, ClassParams p, SchurOrdering ordering) {
  return departure_upper(A, operator_gauge(A, p), ordering);
}

double resolvent_bound(double d, const DepartureEstimate& dep) {
  if (!(d > 0.0)) throw std::invalid_argument("resolvent_bound: distance must be positive");
  const double nu = dep.upper;
  if (nu == 0.0) return 1.0 / d;
  if (std::isinf(nu)) return kInf;
  return exp_or_inf(-std::log(d) + log_f_upper(dep.params, std::log(nu) - std::log(d)));
}

double spectral_variation_bound(double norm_e, const DepartureEstimate& dep) {
  if (!(norm_e >= 0.0)) throw std::invalid_argument("spectral_variation_bound: norm must be >= 0");
  const double nu = dep.upper;
  if (norm_e == 0.0) return 0.0;
  if (nu == 0.0) return norm_e;
  if (std::isinf(nu) || std::isinf(norm_e)) return kInf;
  const double bound = exp_or_inf(std::log(nu) + log_h_eval(dep.params, std::log(norm_e) - std::log(nu)));
  // h(r) >= r holds exactly; keep it through rounding.
  return std::max(bound, norm_e);
}

double spectral_distance_bound(double norm_e, const DepartureEstimate& dep_a,
                               const DepartureEstimate& dep_b) {
  if (!(dep_a.params == dep_b.params)) {
    throw std::invalid_argument("spectral_distance_bound: departure parameters differ");
  }
  DepartureEstimate m = dep_a.upper >= dep_b.upper ? dep_a : dep_b;
  return spectral_variation_bound(norm_e, m);
}

double directed_distance(const Spectrum& from, const Spectrum& to) {
  if (from.empty() || to.empty()) throw std::invalid_argument("hausdorff_distance: empty spectrum");
  double worst = 0.0;
  for (const auto& x : from.eigenvalues) worst = std::max(worst, distance_to_spectrum(x, to));
  return worst;
}

double hausdorff_distance(const Spectrum& s1, const Spectrum& s2) {
  return std::max(directed_distance(s1, s2), directed_distance(s2, s1));
}

double quasinilpotent_resolvent_bound(const OperatorGauge& g, Complex z) {
  const double mod = std::abs(z);
  if (mod == 0.0) throw std::invalid_argument("quasinilpotent_resolvent_bound: z must be nonzero");
  if (g.gauge == 0.0) return 1.0 / mod;
  return exp_or_inf(-std::log(mod) + log_f_upper(g.params, std::log(g.gauge) - std::log(mod)));
}

}  // namespace expobound
