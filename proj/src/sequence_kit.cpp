#include "expobound/sequence_kit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace expobound {

DecaySequence::DecaySequence(std::vector<double> values) : values_(std::move(values)) {
  for (double v : values_) {
    if (!std::isfinite(v)) throw std::invalid_argument("DecaySequence: non-finite value");
  }
}

double ArrangementBound::at(std::size_t n) const {
  return c * std::pow(static_cast<double>(n + offset_shift), alpha) + additive_constant;
}

double gauge_of_values(std::span<const double> x, ClassParams p) {
  double best = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double m = std::abs(x[i]);
    if (m == 0.0) continue;
    // log domain: |x_n| exp(a n^alpha) overflows long before the product does.
    best = std::max(best, std::exp(std::log(m) + p.log_weight(static_cast<double>(i + 1))));
  }
  return best;
}

double gauge_of_sequence(const DecaySequence& x, ClassParams p) {
  if (x.empty()) throw std::invalid_argument("empty input");
  return gauge_of_values(x.values(), p);
}

namespace {

struct LineFit {
  double rate = 0.0;
  double log_scale = 0.0;
  double ssr = std::numeric_limits<double>::infinity();
};

LineFit fit_line(std::span<const double> logs, double alpha) {
  const std::size_t n = logs.size();
  std::vector<double> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = std::pow(static_cast<double>(i + 1), alpha);
  const double t_mean = std::accumulate(t.begin(), t.end(), 0.0) / static_cast<double>(n);
  const double y_mean = std::accumulate(logs.begin(), logs.end(), 0.0) / static_cast<double>(n);
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (t[i] - t_mean) * (logs[i] - y_mean);
    sxx += (t[i] - t_mean) * (t[i] - t_mean);
  }
  LineFit fit;
  if (sxx <= 0.0) return fit;
  fit.rate = -sxy / sxx;
  fit.log_scale = y_mean + fit.rate * t_mean;
  if (!(fit.rate > 0.0)) return fit;  // not a decaying fit
  double ssr = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = logs[i] - (fit.log_scale - fit.rate * t[i]);
    ssr += r * r;
  }
  fit.ssr = ssr;
  return fit;
}

}  // namespace

ClassFit fit_class_params(const DecaySequence& x) {
  if (x.size() < 4) throw std::invalid_argument("fit_class_params: needs at least 4 points");
  std::vector<double> logs(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0)) throw std::invalid_argument("requires positive decay data");
    logs[i] = std::log(x[i]);
  }

  double best_alpha = 0.0;
  LineFit best;
  for (int i = 1; i <= 30; ++i) {
    const double alpha = i / 10.0;
    const LineFit fit = fit_line(logs, alpha);
    if (fit.ssr < best.ssr) {
      best = fit;
      best_alpha = alpha;
    }
  }
  if (!std::isfinite(best.ssr)) throw std::invalid_argument("fit_class_params: data does not decay");

  // Golden-section refinement around the best grid point.
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = std::max(best_alpha - 0.1, 0.01);
  double hi = best_alpha + 0.1;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = fit_line(logs, x1).ssr;
  double f2 = fit_line(logs, x2).ssr;
  for (int iter = 0; iter < 200 && hi - lo > 1e-13; ++iter) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = fit_line(logs, x1).ssr;
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = fit_line(logs, x2).ssr;
    }
  }
  const double refined_alpha = 0.5 * (lo + hi);
  const LineFit refined = fit_line(logs, refined_alpha);
  if (refined.ssr < best.ssr) {
    best = refined;
    best_alpha = refined_alpha;
  }

  ClassFit out;
  out.params = ClassParams(best.rate, best_alpha);
  out.gauge = gauge_of_sequence(x, out.params);
  out.residual = best.ssr;
  return out;
}

ArrangementResult monotone_arrangement(std::span<const DecaySequence> seqs, Direction direction) {
  if (seqs.empty()) throw std::invalid_argument("monotone_arrangement: empty input list");
  const bool increasing = direction == Direction::increasing;
  auto before = [increasing](double u, double v) { return increasing ? u < v : u > v; };

  // Per-sequence stable orderings of positions.
  std::vector<std::vector<std::size_t>> order(seqs.size());
  std::size_t total = 0;
  for (std::size_t k = 0; k < seqs.size(); ++k) {
    if (seqs[k].empty()) throw std::invalid_argument("monotone_arrangement: empty sequence");
    auto& ord = order[k];
    ord.resize(seqs[k].size());
    std::iota(ord.begin(), ord.end(), std::size_t{0});
    const auto vals = seqs[k].values();
    std::stable_sort(ord.begin(), ord.end(),
                     [&](std::size_t i, std::size_t j) { return before(vals[i], vals[j]); });
    total += ord.size();
  }

  // Heap entries: (sequence, cursor into order[sequence]).
  using Entry = std::pair<std::size_t, std::size_t>;
  auto value_of = [&](const Entry& e) { return seqs[e.first][order[e.first][e.second]]; };
  auto after = [&](const Entry& x, const Entry& y) {
    const double vx = value_of(x);
    const double vy = value_of(y);
    if (vx != vy) return before(vy, vx);
    return std::tie(x.first, order[x.first][x.second]) > std::tie(y.first, order[y.first][y.second]);
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(after)> heap(after);
  for (std::size_t k = 0; k < seqs.size(); ++k) heap.emplace(k, 0);

  ArrangementResult out;
  out.values.reserve(total);
  out.source_sequence.reserve(total);
  out.source_position.reserve(total);
  while (!heap.empty()) {
    const Entry top = heap.top();
    heap.pop();
    const std::size_t pos = order[top.first][top.second];
    out.values.push_back(seqs[top.first][pos]);
    out.source_sequence.push_back(top.first);
    out.source_position.push_back(pos);
    if (top.second + 1 < order[top.first].size()) heap.emplace(top.first, top.second + 1);
  }
  return out;
}

std::size_t counting_function(std::span<const double> x, double r) {
  return static_cast<std::size_t>(std::count_if(x.begin(), x.end(), [r](double v) { return v <= r; }));
}

double combined_exponent(std::span<const double> rates, double alpha) {
  if (rates.empty()) throw std::invalid_argument("combined_exponent: no rates given");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("combined_exponent: alpha must be positive");
  }
  for (double r : rates) {
    if (!(r > 0.0) || !std::isfinite(r)) {
      throw std::invalid_argument("combined_exponent: rates must be positive");
    }
  }
  if (rates.size() == 1) return rates[0];
  double sum = 0.0;
  for (double r : rates) sum += std::pow(r, -1.0 / alpha);
  return std::pow(sum, -alpha);
}

namespace {

std::vector<double> rates_of(std::span<const RateOffset> params) {
  std::vector<double> rates;
  rates.reserve(params.size());
  for (const auto& p : params) rates.push_back(p.rate);
  return rates;
}

void require_position(std::size_t n) {
  if (n < 1) throw std::invalid_argument("arrangement bound: position n must be >= 1");
}

}  // namespace

ArrangementBound make_arrangement_bound(std::span<const RateOffset> params, double alpha,
                                        BoundSide side) {
  const auto rates = rates_of(params);
  ArrangementBound b;
  b.c = combined_exponent(rates, alpha);
  b.alpha = alpha;
  auto by_offset = [](const RateOffset& x, const RateOffset& y) { return x.offset < y.offset; };
  if (side == BoundSide::lower) {
    b.offset_shift = 0;
    b.additive_constant = std::min_element(params.begin(), params.end(), by_offset)->offset;
  } else {
    b.offset_shift = params.size();
    b.additive_constant = std::max_element(params.begin(), params.end(), by_offset)->offset;
  }
  return b;
}

double arrangement_bound(std::span<const RateOffset> params, double alpha, std::size_t n,
                         BoundSide side) {
  require_position(n);
  return make_arrangement_bound(params, alpha, side).at(n);
}

double decay_arrangement_bound(std::span<const RateOffset> params, double alpha, std::size_t n,
                               BoundSide side) {
  require_position(n);
  for (const auto& p : params) {
    if (!(p.offset > 0.0)) throw std::invalid_argument("decay_arrangement_bound: B_k must be positive");
  }
  const double c = combined_exponent(rates_of(params), alpha);
  auto by_offset = [](const RateOffset& x, const RateOffset& y) { return x.offset < y.offset; };
  if (side == BoundSide::upper) {
    const double scale = std::max_element(params.begin(), params.end(), by_offset)->offset;
    return scale * std::exp(-c * std::pow(static_cast<double>(n), alpha));
  }
  const double scale = std::min_element(params.begin(), params.end(), by_offset)->offset;
  return scale * std::exp(-c * std::pow(static_cast<double>(n + params.size()), alpha));
}

}  // namespace expobound
