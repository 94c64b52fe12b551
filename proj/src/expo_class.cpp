#include "expobound/expo_class.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "expobound/sequence_kit.hpp"

namespace expobound {

OperatorGauge gauge_from_singular_values(std::span<const double> s, ClassParams p,
                                         double zero_threshold) {
  std::vector<double> kept(s.begin(), s.end());
  for (double& v : kept) {
    if (v <= zero_threshold) v = 0.0;
  }
  return OperatorGauge{p, gauge_of_values(kept, p)};
}

OperatorGauge operator_gauge(const ComplexMatrix& A, ClassParams p) {
  const RealVector s = singular_values(A);
  const double threshold = linear_tolerance(std::max(A.rows(), A.cols()), s(0));
  return gauge_from_singular_values(std::span<const double>(s.data(), static_cast<std::size_t>(s.size())),
                                    p, threshold);
}

bool class_precedes(ClassParams p, ClassParams q) {
  return p.alpha < q.alpha || (p.alpha == q.alpha && p.a < q.a);
}

double product_gauge_bound(double norm_a, const OperatorGauge& gauge_b, double norm_c) {
  if (norm_a < 0.0 || norm_c < 0.0) throw std::invalid_argument("product_gauge_bound: negative norm");
  return norm_a * gauge_b.gauge * norm_c;
}

double sum_class(std::span<const double> rates, double alpha) { return combined_exponent(rates, alpha); }

OperatorGauge sum_gauge_bound(std::span<const OperatorGauge> gauges) {
  if (gauges.empty()) throw std::invalid_argument("sum_gauge_bound: no gauges given");
  const double alpha = gauges.front().params.alpha;
  std::vector<double> rates;
  double largest = 0.0;
  for (const auto& g : gauges) {
    if (g.params.alpha != alpha) throw std::invalid_argument("sum_gauge_bound: mixed alphas");
    rates.push_back(g.params.a);
    largest = std::max(largest, g.gauge);
  }
  return OperatorGauge{ClassParams(sum_class(rates, alpha), alpha),
                       static_cast<double>(gauges.size()) * largest};
}

double weyl_bound(const OperatorGauge& g, std::size_t k) {
  if (k < 1) throw std::invalid_argument("weyl_bound: k must be >= 1");
  const auto& p = g.params;
  return g.gauge * std::exp(-p.log_weight(static_cast<double>(k)) / (1.0 + p.alpha));
}

}  // namespace expobound
