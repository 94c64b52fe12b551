#include <doctest.h>

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <numbers>

#include "expobound/bound_engine.hpp"
#include "expobound/gallery.hpp"
#include "expobound/random.hpp"
#include "expobound/special_functions.hpp"

using namespace expobound;

namespace {

long double brute_log_f(ClassParams p, double r, int factors) {
  long double s = 0.0L;
  for (int n = factors; n >= 1; --n) {
    s += std::log1p(static_cast<long double>(r) *
                    std::exp(-static_cast<long double>(p.a) * std::pow(static_cast<long double>(n), p.alpha)));
  }
  return s;
}

}  // namespace

TEST_CASE("incomplete gamma") {
  for (double s : {0.0, 0.3, 1.0, 5.0, 40.0}) {
    CHECK(incomplete_gamma(1.0, s) == doctest::Approx(std::exp(-s)).epsilon(1e-13));
    CHECK(incomplete_gamma(2.0, s) == doctest::Approx((1 + s) * std::exp(-s)).epsilon(1e-13));
  }
  CHECK(incomplete_gamma(2.0, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(incomplete_gamma(2.0, 1.0) == doctest::Approx(2.0 / std::numbers::e).epsilon(1e-14));

  SUBCASE("against an independent implementation") {
    for (double beta : {0.1, 0.5, 1.5, 2.0, 3.0, 11.0, 30.0}) {
      for (double s : {0.0, 1e-3, 0.5, 2.0, 7.5, 25.0, 60.0}) {
        const double expected = boost::math::tgamma(beta, s);
        CHECK(incomplete_gamma(beta, s) == doctest::Approx(expected).epsilon(1e-12));
        CHECK(log_incomplete_gamma(beta, s) == doctest::Approx(std::log(expected)).epsilon(1e-12));
      }
    }
  }
  SUBCASE("log form survives underflow") {
    const double lg = log_incomplete_gamma(2.0, 1000.0);
    CHECK(lg == doctest::Approx(std::log(1001.0) - 1000.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(incomplete_gamma(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(incomplete_gamma(1.0, -1.0), std::invalid_argument);
}

TEST_CASE("f") {
  const ClassParams p11(1, 1);
  CHECK(f_eval(p11, 0.0).value == 1.0);
  CHECK(f_eval(p11, 0.0).error_radius == 0.0);

  SUBCASE("half-powers") {
    const CertifiedValue f = f_eval(ClassParams(std::numbers::ln2, 1), 1.0);
    long double prod = 1.0L;
    for (int n = 1; n <= 60; ++n) prod *= 1.0L + std::ldexp(1.0L, -n);
    CHECK(f.contains(static_cast<double>(prod)));
    CHECK(f.value == doctest::Approx(2.384231).epsilon(1e-6));
  }
  SUBCASE("enclosures contain the long-double product") {
    for (ClassParams p : {ClassParams(1, 1), ClassParams(0.5, 2), ClassParams(2, 0.5)}) {
      for (double r : {0.01, 1.0, 50.0, 1e4}) {
        const CertifiedValue lf = log_f_eval(p, r);
        const double brute = static_cast<double>(brute_log_f(p, r, 200000));
        CHECK(lf.lower() <= brute);
        CHECK(brute <= lf.upper());
        CHECK(lf.error_radius <= 1e-12 * std::max(1.0, lf.value));
      }
    }
  }
  CHECK(f_eval(p11, 1.0).value < f_eval(p11, 2.0).value);
  CHECK_THROWS_AS(f_eval(p11, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(f_eval(p11, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(f_eval(p11, 1e300), std::overflow_error);
}

TEST_CASE("closed-form upper bound") {
  const ClassParams p11(1, 1);
  CHECK(f_upper_closed_form(p11, std::numbers::e) == doctest::Approx(std::exp(2.5)).epsilon(1e-12));
  // r <= 1: only the incomplete-gamma term remains, Gamma(2, 0) = 1.
  CHECK(f_upper_closed_form(p11, 0.5) == doctest::Approx(std::exp(0.5)).epsilon(1e-12));
  const ClassParams p(0.5, 2.0);
  CHECK(log_f_upper_closed_form(p, 0.3) ==
        doctest::Approx(std::pow(0.5, -0.5) * 0.3 * std::tgamma(1.5)).epsilon(1e-12));
  for (ClassParams q : {ClassParams(1, 1), ClassParams(0.5, 2), ClassParams(2, 0.5)}) {
    for (double r : {0.0, 0.1, 1.0, 10.0, 1e3, 1e8}) {
      CHECK(log_f_eval(q, r).lower() <= log_f_upper_closed_form(q, r));
    }
  }
}

TEST_CASE("g and its inverse") {
  const ClassParams half(std::numbers::ln2, 1);
  CHECK(g_eval(half, 0.0).value == 0.0);
  CHECK(g_invert(half, 0.0) == 0.0);
  CHECK(g_eval(half, 1.0).value == doctest::Approx(2.384231).epsilon(1e-6));
  CHECK(g_invert(half, 2.384231029031) == doctest::Approx(1.0).epsilon(1e-10));

  const ClassParams p11(1, 1);
  for (double r = 1e-6; r < 1e6; r *= 7.3) {
    const double g = g_eval(p11, r, 1e-10).value;
    CHECK(g >= r);
    CHECK(std::abs(g_invert(p11, g, 1e-10) - r) <= 2e-10 * r);
  }
  CHECK_THROWS_WITH(g_invert(p11, INFINITY), "inversion out of range");
  CHECK_THROWS_AS(g_invert(p11, -1.0), std::invalid_argument);
  // Far beyond the double range in log form.
  CHECK(std::isfinite(log_g_invert(p11, 5000.0)));
}

TEST_CASE("h") {
  const ClassParams p11(1, 1);
  CHECK(h_eval(p11, 0.0) == 0.0);
  double prev = 0.0;
  for (double r : {1e-8, 0.1, 1.0, 10.0, 1e3}) {
    const double h = h_eval(p11, r);
    CHECK(h >= r);
    CHECK(h > prev);
    prev = h;
  }
  SUBCASE("small-argument asymptote") {
    const double r = 1e-12;
    const double predicted = -std::pow(2.0, 0.5) * std::pow(std::abs(std::log(r)), 0.5);
    const double ratio = log_h_eval(p11, std::log(r)) / predicted;
    CHECK(ratio >= 0.85);
    CHECK(ratio <= 1.15);
  }
  CHECK_THROWS_AS(h_eval(p11, -1.0), std::invalid_argument);
}

TEST_CASE("departure from normality") {
  CHECK(departure_rate(ClassParams(1, 1)) == doctest::Approx(1.0 / 3.0));
  CHECK(departure_rate(ClassParams(3, 2)) == doctest::Approx(3.0 * std::pow(1.0 + std::sqrt(3.0), -2.0)));

  SUBCASE("normal matrices") {
    Rng rng(2);
    const ComplexMatrix A = random_normal(rng, {2.0, Complex(0, -1), 0.5, 0.1});
    const DepartureEstimate dep = departure_upper(A, ClassParams(1, 1));
    REQUIRE(dep.schur_value.has_value());
    CHECK(*dep.schur_value <= linear_tolerance(A));
    CHECK(dep.upper <= linear_tolerance(A));
  }
  SUBCASE("a triangular 2x2") {
    ComplexMatrix A(2, 2);
    A << 1.0, 5.0, 0.0, 2.0;
    const ClassParams p(1, 1);
    const DepartureEstimate dep = departure_upper(A, p);
    CHECK(dep.params.a == doctest::Approx(1.0 / 3.0));
    REQUIRE(dep.schur_value.has_value());
    CHECK(*dep.schur_value == doctest::Approx(5.0 * std::exp(1.0 / 3.0)).epsilon(1e-10));
    CHECK(dep.gauge_bound == doctest::Approx(2.0 * operator_gauge(A, p).gauge));
    CHECK(dep.upper == std::min(dep.gauge_bound, *dep.schur_value));
  }
}

TEST_CASE("resolvent bound") {
  const DepartureEstimate normal{ClassParams(1.0 / 3.0, 1), 0.0, 0.0, 0.0};
  CHECK(resolvent_bound(1.0, normal) == 1.0);
  CHECK(resolvent_bound(0.25, normal) == 4.0);
  const DepartureEstimate dep{ClassParams(0.5, 1), 0.7, 0.7, {}};
  CHECK(resolvent_bound(0.7, dep) == doctest::Approx(f_eval(ClassParams(0.5, 1), 1.0).value / 0.7));
  CHECK_THROWS_AS(resolvent_bound(0.0, dep), std::invalid_argument);

  SUBCASE("holds for the shift on a ring of points") {
    const ClassParams p(1, 1);
    const ComplexMatrix B = make_shift(p, 30).matrix;
    const DepartureEstimate d = departure_upper(B, p);
    for (double rho : {0.05, 0.3, 1.0, 4.0}) {
      for (int k = 0; k < 8; ++k) {
        const Complex z = std::polar(rho, 0.7 * k);
        CHECK(resolvent_norm(B, z) <= resolvent_bound(rho, d) * (1 + 1e-6));
      }
    }
  }
  SUBCASE("quasi-nilpotent form") {
    const OperatorGauge g{ClassParams(1, 1), 2.0};
    CHECK(quasinilpotent_resolvent_bound(g, 1.0) == doctest::Approx(f_eval(ClassParams(1, 1), 2.0).value));
    CHECK(quasinilpotent_resolvent_bound(g, 1e12) < 1e-11);
    CHECK_THROWS_AS(quasinilpotent_resolvent_bound(g, 0.0), std::invalid_argument);
  }
}

TEST_CASE("spectral variation and distance") {
  const DepartureEstimate normal{ClassParams(1.0 / 3.0, 1), 0.0, 0.0, 0.0};
  CHECK(spectral_variation_bound(0.3, normal) == 0.3);
  const DepartureEstimate dep{ClassParams(1.0 / 3.0, 1), 1.5, 1.5, {}};
  CHECK(spectral_variation_bound(0.0, dep) == 0.0);
  CHECK(spectral_variation_bound(0.2, dep) == doctest::Approx(1.5 * h_eval(ClassParams(1.0 / 3.0, 1), 0.2 / 1.5)));
  CHECK(spectral_variation_bound(0.2, dep) >= 0.2);
  CHECK(spectral_distance_bound(0.3, normal, normal) == 0.3);
  CHECK(spectral_distance_bound(0.2, dep, normal) == spectral_variation_bound(0.2, dep));
  const DepartureEstimate other{ClassParams(0.2, 1), 0.0, 0.0, 0.0};
  CHECK_THROWS_AS(spectral_distance_bound(0.1, dep, other), std::invalid_argument);

  const Spectrum s01{{0.0, 1.0}};
  const Spectrum s0{{0.0}};
  CHECK(hausdorff_distance(s01, s0) == 1.0);
  CHECK(hausdorff_distance(Spectrum{{1.0, -1.0}}, Spectrum{{1.0}}) == 2.0);
  CHECK(hausdorff_distance(s01, s01) == 0.0);
  CHECK(directed_distance(s0, s01) == 0.0);
  CHECK(directed_distance(s01, s0) == 1.0);
  CHECK_THROWS_AS(hausdorff_distance(Spectrum{}, s0), std::invalid_argument);
}
