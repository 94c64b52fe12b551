#include "expobound/resolvent_grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace expobound {

unsigned resolve_thread_count(unsigned requested, std::size_t work_items) {
  unsigned n = requested != 0 ? requested : std::max(1U, std::thread::hardware_concurrency());
  if (work_items < n) n = static_cast<unsigned>(std::max<std::size_t>(work_items, 1));
  return n;
}

GridBox default_grid_box(const Spectrum& spectrum, double norm_a) {
  if (spectrum.empty()) throw std::invalid_argument("default_grid_box: empty spectrum");
  double re_lo = spectrum.eigenvalues.front().real();
  double re_hi = re_lo;
  double im_lo = spectrum.eigenvalues.front().imag();
  double im_hi = im_lo;
  for (const auto& z : spectrum.eigenvalues) {
    re_lo = std::min(re_lo, z.real());
    re_hi = std::max(re_hi, z.real());
    im_lo = std::min(im_lo, z.imag());
    im_hi = std::max(im_hi, z.imag());
  }
  const double ex = re_hi - re_lo;
  const double ey = im_hi - im_lo;
  double scale = std::max({ex, ey, norm_a});
  if (!(scale > 0.0)) scale = 1.0;
  auto half = [&](double extent) { return extent >= 0.1 * scale ? 0.75 * extent : 0.5 * scale; };
  const double cx = 0.5 * (re_lo + re_hi);
  const double cy = 0.5 * (im_lo + im_hi);
  return GridBox{cx - half(ex), cx + half(ex), cy - half(ey), cy + half(ey)};
}

GridEvaluation evaluate_resolvent_grid(const ComplexMatrix& A, const Spectrum& spectrum,
                                       const DepartureEstimate& dep, const GridSpec& spec,
                                       unsigned threads) {
  if (spec.nx < 1 || spec.ny < 1) throw std::invalid_argument("resolvent grid: nx and ny must be >= 1");
  const double norm_a = operator_norm(A);
  GridEvaluation out;
  out.box = spec.box ? *spec.box : default_grid_box(spectrum, norm_a);
  if (!(out.box.re_min <= out.box.re_max && out.box.im_min <= out.box.im_max)) {
    throw std::invalid_argument("resolvent grid: empty box");
  }
  out.nx = spec.nx;
  out.ny = spec.ny;
  out.exclusion_radius = 10.0 * linear_tolerance(A.rows(), norm_a);
  out.points.resize(spec.nx * spec.ny);
  auto coord = [](double lo, double hi, std::size_t i, std::size_t n) {
    return n == 1 ? 0.5 * (lo + hi) : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  };
  parallel_for(out.points.size(), threads, [&](std::size_t k) {
    GridPoint& pt = out.points[k];
    pt.index = k;
    pt.z = Complex(coord(out.box.re_min, out.box.re_max, k % spec.nx, spec.nx),
                   coord(out.box.im_min, out.box.im_max, k / spec.nx, spec.ny));
    pt.distance = distance_to_spectrum(pt.z, spectrum);
    if (!(pt.distance > out.exclusion_radius)) {
      pt.status = PointStatus::excluded;
      return;
    }
    try {
      pt.true_norm = resolvent_norm(A, pt.z, norm_a);
    } catch (const ResolventBlowUp&) {
      pt.status = PointStatus::blow_up;
      return;
    }
    pt.bound = resolvent_bound(pt.distance, dep);
    pt.status = PointStatus::ok;
  });
  return out;
}

}  // namespace expobound
