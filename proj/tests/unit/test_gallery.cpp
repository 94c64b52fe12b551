#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "expobound/bound_engine.hpp"
#include "expobound/expo_class.hpp"
#include "expobound/gallery.hpp"
#include "expobound/sequence_kit.hpp"

using namespace expobound;

namespace {

void check_advertised(const GalleryMatrix& g) {
  const double eps = std::max(1e-12, linear_tolerance(g.matrix));
  const RealVector sv = singular_values(g.matrix);
  REQUIRE(static_cast<std::size_t>(sv.size()) == g.singular_values.size());
  for (std::size_t i = 0; i < g.singular_values.size(); ++i) CHECK(std::abs(sv(i) - g.singular_values[i]) <= eps);
  const auto moduli = eigenvalues(g.matrix).moduli();
  REQUIRE(moduli.size() == g.eigenvalue_moduli.size());
  for (std::size_t i = 0; i < moduli.size(); ++i) CHECK(std::abs(moduli[i] - g.eigenvalue_moduli[i]) <= eps);
}

}  // namespace

TEST_CASE("weighted shift") {
  const GalleryMatrix b = make_shift(ClassParams(1, 1), 3);
  CHECK(b.matrix(1, 0) == Complex(std::exp(-1.0), 0.0));
  CHECK(b.matrix(2, 1) == Complex(std::exp(-2.0), 0.0));
  CHECK(b.singular_values == std::vector<double>{std::exp(-1.0), std::exp(-2.0), 0.0});
  CHECK_FALSE(b.normal);
  check_advertised(b);
  check_advertised(make_shift(ClassParams(2, 0.5), 50));
  CHECK_THROWS_AS(make_shift(ClassParams(1, 1), 1), std::invalid_argument);
}

TEST_CASE("cyclic matrices") {
  const GalleryMatrix c = make_cyclic({1.0, 0.25});
  CHECK(c.singular_values == std::vector<double>{1.0, 0.25});
  CHECK(c.eigenvalue_moduli[0] == doctest::Approx(0.5));
  check_advertised(c);

  const GalleryMatrix u = make_cyclic(std::vector<double>(6, 1.0));
  CHECK(u.normal);
  for (const Complex& z : eigenvalues(u.matrix).eigenvalues) {
    CHECK(std::abs(std::pow(z, 6) - Complex(1, 0)) < 1e-12);
  }

  for (double m : eigenvalues(make_cyclic({1.0, 0.5, 0.25, 0.0}).matrix).moduli()) CHECK(m < 1e-12);

  std::vector<double> graded;
  for (int n = 1; n <= 12; ++n) graded.push_back(std::exp(-0.25 * n));
  check_advertised(make_cyclic(graded));

  CHECK_THROWS_AS(make_cyclic({0.5, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(make_cyclic({1.0, -0.5}), std::invalid_argument);
}

TEST_CASE("block schedules") {
  const BlockSchedule s({1, 3});
  CHECK(s.blocks() == 2);
  CHECK(s.block_size(1) == 2);
  CHECK(s.mean_power(1, 1.0) == doctest::Approx(2.5));
  CHECK(BlockSchedule::super_exponential(500).block_ends() == std::vector<std::size_t>{3, 55, 500});
  CHECK_THROWS_AS(BlockSchedule({3, 3}), std::invalid_argument);
  CHECK_THROWS_AS(BlockSchedule(std::vector<std::size_t>{}), std::invalid_argument);
}

TEST_CASE("weyl sharpness operator") {
  const ClassParams p(1, 1);
  const GalleryMatrix w = make_weyl_sharpness(p, BlockSchedule({1, 3}));
  CHECK(w.singular_values[0] == doctest::Approx(std::exp(-1.0)));
  CHECK(w.singular_values[1] == doctest::Approx(std::exp(-2.0)));
  CHECK(w.singular_values[2] == doctest::Approx(std::exp(-3.0)));
  check_advertised(w);

  const GalleryMatrix big = make_weyl_sharpness(p, BlockSchedule::super_exponential(200));
  check_advertised(big);
  const OperatorGauge g = gauge_from_singular_values(big.singular_values, p);
  for (std::size_t k = 1; k <= big.eigenvalue_moduli.size(); ++k) {
    CHECK(big.eigenvalue_moduli[k - 1] <= weyl_bound(g, k) * (1 + 1e-8));
  }
  CHECK_THROWS_AS(make_weyl_sharpness(p, BlockSchedule({10, 501})), std::invalid_argument);
}

TEST_CASE("interleaved sums") {
  const InterleavedSum one = make_interleaved_sum({1.5}, 1.0, 5);
  CHECK(one.sum.matrix == one.summands[0].matrix);

  const InterleavedSum two = make_interleaved_sum({1.0, 1.0}, 1.0, 6);
  const RealVector s = singular_values(two.sum.matrix);
  const std::vector<double> expected = {std::exp(-1.0), std::exp(-1.0), std::exp(-2.0),
                                        std::exp(-2.0), std::exp(-3.0), std::exp(-3.0)};
  for (int i = 0; i < 6; ++i) CHECK(s(i) == doctest::Approx(expected[i]));
  check_advertised(two.sum);

  const std::vector<double> rates = {1.0, 2.0, 4.0};
  const InterleavedSum three = make_interleaved_sum(rates, 1.0, 60);
  const double a_prime = combined_exponent(rates, 1.0);
  // The truncation only cuts the tail; the interior obeys the lower bound.
  for (std::size_t n = 1; n <= 20; ++n) {
    CHECK(three.sum.singular_values[n - 1] >= std::exp(-a_prime * static_cast<double>(n + 3)));
  }
  CHECK_THROWS_AS(make_interleaved_sum({1.0, 2.0}, 1.0, 5), std::invalid_argument);
}

TEST_CASE("convolution model") {
  const GalleryMatrix c = make_convolution_diagonal(1.0, 5);
  CHECK(c.normal);
  CHECK(c.matrix(0, 0) == Complex(1.0, 0.0));
  CHECK(c.matrix(1, 1).real() == doctest::Approx(std::exp(-1.0)));
  CHECK(c.matrix(2, 2).real() == doctest::Approx(std::exp(-1.0)));
  CHECK(c.matrix(3, 3).real() == doctest::Approx(std::exp(-2.0)));
  check_advertised(make_convolution_diagonal(1.0, 60));

  for (double a : {0.5, 1.0, 3.0}) {
    const GalleryMatrix g = make_convolution_diagonal(a, 80);
    CHECK(operator_gauge(g.matrix, ClassParams(a / 2, 1)).gauge <= std::exp(a / 2) * (1 + 1e-12));
    const DepartureEstimate dep = departure_upper(g.matrix, ClassParams(a / 2, 1));
    CHECK(dep.upper <= linear_tolerance(g.matrix));
  }
  CHECK_THROWS_AS(make_convolution_diagonal(0.0, 5), std::invalid_argument);
}
