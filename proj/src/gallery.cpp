#include "expobound/gallery.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace expobound {

namespace {

void sort_desc(std::vector<double>& v) { std::sort(v.begin(), v.end(), std::greater<>()); }

// Moduli of the cyclic block C(taus), from the geometric mean in the log domain.
double cyclic_modulus(const std::vector<double>& taus) {
  double log_sum = 0.0;
  for (double t : taus) {
    if (t == 0.0) return 0.0;
    log_sum += std::log(t);
  }
  return std::exp(log_sum / static_cast<double>(taus.size()));
}

}  // namespace

BlockSchedule::BlockSchedule(std::vector<std::size_t> block_ends) : ends_(std::move(block_ends)) {
  if (ends_.empty()) throw std::invalid_argument("BlockSchedule: no blocks");
  std::size_t prev = 0;
  for (std::size_t e : ends_) {
    if (e <= prev) throw std::invalid_argument("BlockSchedule: block ends must increase strictly");
    prev = e;
  }
}

BlockSchedule BlockSchedule::super_exponential(std::size_t dim) {
  if (dim < 1) throw std::invalid_argument("BlockSchedule: dim must be >= 1");
  std::vector<std::size_t> ends;
  for (int n = 1;; ++n) {
    const double e = std::round(std::exp(static_cast<double>(n) * n));
    if (e >= static_cast<double>(dim)) break;
    ends.push_back(static_cast<std::size_t>(e));
  }
  ends.push_back(dim);
  return BlockSchedule(std::move(ends));
}

double BlockSchedule::mean_power(std::size_t n, double alpha) const {
  double sum = 0.0;
  for (std::size_t l = block_start(n) + 1; l <= ends_[n]; ++l) sum += std::pow(static_cast<double>(l), alpha);
  return sum / static_cast<double>(block_size(n));
}

GalleryMatrix make_shift(ClassParams p, std::size_t dim) {
  if (dim < 2) throw std::invalid_argument("make_shift: dim must be >= 2");
  const auto n = static_cast<Eigen::Index>(dim);
  GalleryMatrix g;
  g.kind = "shift";
  g.matrix = ComplexMatrix::Zero(n, n);
  for (std::size_t j = 1; j < dim; ++j) {
    const double w = std::exp(-p.log_weight(static_cast<double>(j)));
    g.matrix(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j - 1)) = w;
    g.singular_values.push_back(w);
  }
  g.singular_values.push_back(0.0);
  g.eigenvalue_moduli.assign(dim, 0.0);
  return g;
}

GalleryMatrix make_cyclic(const std::vector<double>& taus) {
  if (taus.size() < 2) throw std::invalid_argument("make_cyclic: needs at least 2 weights");
  for (std::size_t i = 0; i < taus.size(); ++i) {
    if (!(taus[i] >= 0.0) || !std::isfinite(taus[i])) {
      throw std::invalid_argument("make_cyclic: weights must be finite and >= 0");
    }
    if (i > 0 && taus[i] > taus[i - 1]) throw std::invalid_argument("make_cyclic: weights must be nonincreasing");
  }
  const auto n = static_cast<Eigen::Index>(taus.size());
  GalleryMatrix g;
  g.kind = "cyclic";
  g.matrix = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i + 1 < n; ++i) g.matrix(i, i + 1) = taus[static_cast<std::size_t>(i)];
  g.matrix(n - 1, 0) = taus.back();
  g.singular_values = taus;
  g.eigenvalue_moduli.assign(taus.size(), cyclic_modulus(taus));
  g.normal = std::all_of(taus.begin(), taus.end(), [&](double t) { return t == taus.front(); });
  return g;
}

GalleryMatrix make_weyl_sharpness(ClassParams p, const BlockSchedule& schedule) {
  const std::size_t dim = schedule.total();
  if (dim > kMaxWeylDim) throw std::invalid_argument("make_weyl_sharpness: dimension exceeds 500");
  const auto n = static_cast<Eigen::Index>(dim);
  GalleryMatrix g;
  g.kind = "weyl";
  g.matrix = ComplexMatrix::Zero(n, n);
  for (std::size_t b = 0; b < schedule.blocks(); ++b) {
    const std::size_t start = schedule.block_start(b);
    const std::size_t size = schedule.block_size(b);
    std::vector<double> taus;
    for (std::size_t l = start + 1; l <= start + size; ++l) {
      taus.push_back(std::exp(-p.log_weight(static_cast<double>(l))));
    }
    const auto s0 = static_cast<Eigen::Index>(start);
    if (size == 1) {
      g.matrix(s0, s0) = taus[0];
    } else {
      g.matrix.block(s0, s0, static_cast<Eigen::Index>(size), static_cast<Eigen::Index>(size)) =
          make_cyclic(taus).matrix;
    }
    g.singular_values.insert(g.singular_values.end(), taus.begin(), taus.end());
    // exp(-a p_n), with the mean of l^alpha over the block.
    const double modulus = std::exp(-p.a * schedule.mean_power(b, p.alpha));
    g.eigenvalue_moduli.insert(g.eigenvalue_moduli.end(), size, modulus);
  }
  sort_desc(g.eigenvalue_moduli);
  return g;
}

InterleavedSum make_interleaved_sum(const std::vector<double>& rates, double alpha, std::size_t dim) {
  const std::size_t K = rates.size();
  if (K == 0) throw std::invalid_argument("make_interleaved_sum: no rates");
  if (dim == 0 || dim % K != 0) throw std::invalid_argument("make_interleaved_sum: dim must be a multiple of K");
  const auto n = static_cast<Eigen::Index>(dim);
  InterleavedSum out;
  out.sum.kind = "interleave";
  out.sum.normal = true;
  out.sum.matrix = ComplexMatrix::Zero(n, n);
  for (std::size_t k = 0; k < K; ++k) {
    const ClassParams p(rates[k], alpha);
    GalleryMatrix g;
    g.kind = "interleave-summand";
    g.normal = true;
    g.matrix = ComplexMatrix::Zero(n, n);
    for (std::size_t m = 1; m <= dim / K; ++m) {
      const double v = std::exp(-p.log_weight(static_cast<double>(m)));
      const auto pos = static_cast<Eigen::Index>(K * m - k - 1);  // 1-based position K m - k, k counted from 0
      g.matrix(pos, pos) = v;
      g.singular_values.push_back(v);
    }
    g.singular_values.resize(dim, 0.0);
    g.eigenvalue_moduli = g.singular_values;
    out.sum.matrix += g.matrix;
    out.sum.singular_values.insert(out.sum.singular_values.end(), g.singular_values.begin(),
                                   g.singular_values.begin() + static_cast<std::ptrdiff_t>(dim / K));
    out.summands.push_back(std::move(g));
  }
  sort_desc(out.sum.singular_values);
  out.sum.eigenvalue_moduli = out.sum.singular_values;
  return out;
}

GalleryMatrix make_convolution_diagonal(double a, std::size_t dim) {
  if (!(a > 0.0) || !std::isfinite(a)) throw std::invalid_argument("make_convolution_diagonal: a must be positive");
  if (dim < 1) throw std::invalid_argument("make_convolution_diagonal: dim must be >= 1");
  const auto n = static_cast<Eigen::Index>(dim);
  GalleryMatrix g;
  g.kind = "convolution";
  g.normal = true;
  g.matrix = ComplexMatrix::Zero(n, n);
  for (std::size_t i = 0; i < dim; ++i) {
    const double m = static_cast<double>((i + 1) / 2);  // |m| for m = 0, -1, 1, -2, 2, ...
    const double v = std::exp(-a * m);
    g.matrix(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = v;
    g.singular_values.push_back(v);
  }
  g.eigenvalue_moduli = g.singular_values;
  return g;
}

}  // namespace expobound
