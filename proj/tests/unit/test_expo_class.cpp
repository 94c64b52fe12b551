#include <doctest.h>

#include <cmath>
#include <vector>

#include "expobound/expo_class.hpp"
#include "expobound/gallery.hpp"
#include "expobound/random.hpp"

using namespace expobound;

TEST_CASE("operator gauge") {
  CHECK(operator_gauge(make_shift(ClassParams(1, 1), 40).matrix, ClassParams(1, 1)).gauge ==
        doctest::Approx(1.0).epsilon(1e-10));
  CHECK(operator_gauge(ComplexMatrix::Identity(3, 3), ClassParams(1, 1)).gauge == doctest::Approx(std::exp(3.0)));
  CHECK(operator_gauge(ComplexMatrix::Zero(4, 4), ClassParams(1, 1)).gauge == 0.0);

  SUBCASE("unitary invariance") {
    Rng rng(21);
    const auto s = exponential_decay(2.0, 0.5, 1.0, 20);
    const ComplexMatrix A = random_with_singular_values(rng, s);
    const ComplexMatrix U = random_unitary(rng, 20);
    const ComplexMatrix V = random_unitary(rng, 20);
    const ClassParams p(0.5, 1.0);
    CHECK(operator_gauge(U * A * V, p).gauge == doctest::Approx(operator_gauge(A, p).gauge).epsilon(1e-8));
    CHECK(operator_gauge(A, p).gauge == doctest::Approx(2.0).epsilon(1e-8));
  }
  SUBCASE("known singular values") {
    const std::vector<double> s = {1.0, 0.5, 1e-20};
    CHECK(gauge_from_singular_values(s, ClassParams(1, 1)).gauge == doctest::Approx(0.5 * std::exp(2.0)));
    CHECK(gauge_from_singular_values(s, ClassParams(30, 1), 1e-15).gauge == doctest::Approx(0.5 * std::exp(60.0)));
  }
}

TEST_CASE("class order") {
  CHECK(class_precedes(ClassParams(1, 1), ClassParams(0.5, 2)));
  CHECK(class_precedes(ClassParams(1, 1), ClassParams(2, 1)));
  CHECK_FALSE(class_precedes(ClassParams(1, 1), ClassParams(1, 1)));
  CHECK_FALSE(class_precedes(ClassParams(0.5, 2), ClassParams(1, 1)));

  // A member of the later class is a member of the earlier one with no larger gauge
  // once the gauge is taken at the smaller rate.
  const auto s = exponential_decay(1.0, 2.0, 1.0, 30);
  CHECK(gauge_from_singular_values(s, ClassParams(1, 1)).gauge <= gauge_from_singular_values(s, ClassParams(2, 1)).gauge);
}

TEST_CASE("product gauge") {
  const OperatorGauge g{ClassParams(1, 1), 3.5};
  CHECK(product_gauge_bound(1.0, g, 1.0) == 3.5);
  CHECK(product_gauge_bound(2.0, OperatorGauge{ClassParams(1, 1), 1.0}, 3.0) == 6.0);
  CHECK_THROWS_AS(product_gauge_bound(-1.0, g, 1.0), std::invalid_argument);

  Rng rng(4);
  const ClassParams p(1, 1);
  const ComplexMatrix B = make_shift(p, 16).matrix;
  for (int trial = 0; trial < 5; ++trial) {
    const ComplexMatrix A = random_gaussian(rng, 16, 16);
    const ComplexMatrix C = random_gaussian(rng, 16, 16);
    const ComplexMatrix ABC = A * B * C;
    const double bound = product_gauge_bound(operator_norm(A), operator_gauge(B, p), operator_norm(C));
    CHECK(operator_gauge(ABC, p).gauge <= bound * (1 + 1e-8) + linear_tolerance(ABC));
  }
}

TEST_CASE("sums of operators") {
  const std::vector<double> same = {0.8, 0.8};
  CHECK(sum_class(same, 1.5) == doctest::Approx(std::pow(2.0, -1.5) * 0.8));
  const std::vector<double> one = {0.8};
  CHECK(sum_class(one, 2.0) == 0.8);
  const std::vector<double> mixed = {1.0, 4.0};
  CHECK(sum_class(mixed, 1.0) == doctest::Approx(0.8));
  const std::vector<double> bad = {-1.0};
  CHECK_THROWS_AS(sum_class(bad, 1.0), std::invalid_argument);

  const std::vector<OperatorGauge> pair = {{ClassParams(1, 1), 2.0}, {ClassParams(1, 1), 2.0}};
  const OperatorGauge s = sum_gauge_bound(pair);
  CHECK(s.params.a == doctest::Approx(0.5));
  CHECK(s.params.alpha == 1.0);
  CHECK(s.gauge == 4.0);
  const std::vector<OperatorGauge> single = {{ClassParams(0.3, 2), 1.7}};
  CHECK(sum_gauge_bound(single).gauge == 1.7);
  CHECK(sum_gauge_bound(single).params.a == doctest::Approx(0.3));
  const std::vector<OperatorGauge> mixed_alpha = {{ClassParams(1, 1), 1.0}, {ClassParams(1, 2), 1.0}};
  CHECK_THROWS_AS(sum_gauge_bound(mixed_alpha), std::invalid_argument);

  SUBCASE("against the gauge of the actual sum") {
    const std::vector<double> rates = {1.0, 2.0};
    const InterleavedSum is = make_interleaved_sum(rates, 1.0, 40);
    std::vector<OperatorGauge> gauges;
    for (std::size_t k = 0; k < 2; ++k) gauges.push_back(operator_gauge(is.summands[k].matrix, ClassParams(rates[k], 1)));
    const OperatorGauge bound = sum_gauge_bound(gauges);
    CHECK(operator_gauge(is.sum.matrix, bound.params).gauge <= bound.gauge * (1 + 1e-8));
  }
}

TEST_CASE("eigenvalue decay") {
  const OperatorGauge unit{ClassParams(1, 1), 1.0};
  CHECK(weyl_bound(unit, 2) == doctest::Approx(std::exp(-1.0)));
  CHECK(weyl_bound(unit, 1) == doctest::Approx(std::exp(-0.5)));
  CHECK(weyl_bound(OperatorGauge{ClassParams(2, 0.5), 3.0}, 4) == doctest::Approx(3.0 * std::exp(-4.0 / 1.5)));
  CHECK_THROWS_AS(weyl_bound(unit, 0), std::invalid_argument);

  Rng rng(8);
  const ClassParams p(0.7, 1.0);
  for (int trial = 0; trial < 5; ++trial) {
    const ComplexMatrix A = random_upper_triangular(rng, exponential_decay(1.0, p.a, p.alpha, 25));
    const OperatorGauge g = operator_gauge(A, p);
    const auto moduli = eigenvalues(A).moduli();
    for (std::size_t k = 1; k <= moduli.size(); ++k) CHECK(moduli[k - 1] <= weyl_bound(g, k) * (1 + 1e-8));
  }
}
