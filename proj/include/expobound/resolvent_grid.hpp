#pragma once

// Resolvent norm against the certified bound on a rectangular grid of z.

#include <cstddef>
#include <optional>
#include <vector>

#include "expobound/bound_engine.hpp"

namespace expobound {

struct GridBox {
  double re_min = -1.0;
  double re_max = 1.0;
  double im_min = -1.0;
  double im_max = 1.0;
};

struct GridSpec {
  std::size_t nx = 40;
  std::size_t ny = 40;
  std::optional<GridBox> box;  // default: spectrum bounding box inflated by 50%
};

/// Bounding box of the spectrum inflated by 50% (half-width 0.75 * extent per
/// axis). An axis whose extent is below 10% of s = max(extents, ||A||) gets
/// half-width s / 2 instead, so point spectra such as {0} still get a usable box.
GridBox default_grid_box(const Spectrum& spectrum, double norm_a);

enum class PointStatus { ok, excluded, blow_up };

struct GridPoint {
  std::size_t index = 0;  // row-major: index = iy * nx + ix
  Complex z;
  double distance = 0.0;   // d(z, sigma(A))
  double true_norm = 0.0;  // ||(zI - A)^{-1}||, when status == ok
  double bound = 0.0;      // (1/d) f_{b,alpha}(nu/d), when status == ok
  PointStatus status = PointStatus::excluded;

  [[nodiscard]] double ratio() const { return true_norm / bound; }
};

struct GridEvaluation {
  GridBox box;
  std::size_t nx = 0;
  std::size_t ny = 0;
  double exclusion_radius = 0.0;  // 10 eps_lin(A)
  std::vector<GridPoint> points;
};

/// Evaluates every grid point; points within the exclusion radius of the
/// spectrum or where zI - A is numerically singular are marked and skipped.
/// Runs on up to `threads` worker threads (0: hardware concurrency); the result
/// does not depend on the thread count.
GridEvaluation evaluate_resolvent_grid(const ComplexMatrix& A, const Spectrum& spectrum,
                                       const DepartureEstimate& dep, const GridSpec& spec,
                                       unsigned threads = 0);

/// Runs fn(i) for i in [0, n) across worker threads. fn must only write to
/// slots owned by its own index.
template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn);

unsigned resolve_thread_count(unsigned requested, std::size_t work_items);

}  // namespace expobound

#include <exception>
#include <thread>

namespace expobound {

template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
  const unsigned workers = resolve_thread_count(threads, n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  // The lowest failing index wins, so the propagated error is schedule independent.
  std::vector<std::exception_ptr> errors(n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) {
        try {
          fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace expobound
