#include <doctest.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <limits>

#include "expobound/commands.hpp"
#include "expobound/gallery.hpp"
#include "expobound/json_io.hpp"
#include "expobound/random.hpp"
#include "expobound/report.hpp"
#include "expobound/resolvent_grid.hpp"
#include "expobound/suites.hpp"

using namespace expobound;

TEST_CASE("matrix JSON round-trips bit-exactly") {
  Rng rng(17);
  ComplexMatrix A = random_gaussian(rng, 4, 3);
  A(0, 0) = Complex(1.0 / 3.0, -std::numeric_limits<double>::denorm_min());
  A(1, 2) = Complex(1e308, -0.0);
  const ComplexMatrix B = matrix_from_json(json::parse(matrix_to_json(A).dump()));
  REQUIRE(B.rows() == 4);
  REQUIRE(B.cols() == 3);
  CHECK(std::memcmp(A.data(), B.data(), sizeof(Complex) * 12) == 0);

  CHECK_THROWS_AS(matrix_from_json(json{{"rows", 2}, {"cols", 2}, {"entries", {{1, 0}}}}), std::invalid_argument);
  CHECK_THROWS_AS(matrix_from_json(json{{"rows", 1}, {"cols", 1}, {"entries", {{"nan", 0}}}}), std::invalid_argument);
  CHECK_THROWS_AS(matrix_from_json(json::array()), std::invalid_argument);

  const DecaySequence x({0.5, 0.125, 1e-300});
  const DecaySequence y = sequence_from_json(json::parse(sequence_to_json(x).dump()));
  CHECK(std::equal(x.values().begin(), x.values().end(), y.values().begin(), y.values().end()));
}

TEST_CASE("check results") {
  CHECK(make_check("c", 1.0, 1.0, 0.0, 0.0).passed());
  CHECK(make_check("c", 1.0 + 5e-7, 1.0).passed());
  CHECK_FALSE(make_check("c", 1.0 + 2e-6, 1.0).passed());
  CHECK_FALSE(make_check("c", NAN, 1.0).passed());
  CHECK(make_check("c", 1.0, 2.0).margin == 1.0);
  CHECK(make_equality_check("e", 1.0, 1.0 + 1e-9, 1e-8).passed());
  CHECK_FALSE(make_equality_check("e", 1.0, 1.1, 1e-8).passed());
  CHECK(make_predicate_check("p", true).passed());
  CHECK_FALSE(make_predicate_check("p", false).passed());

  VerificationReport r{"s", 3, {make_check("a", 0, 1), make_check("b", 2, 1)}};
  CHECK(r.passed() == 1);
  CHECK(r.failed() == 1);
  const json j = report_to_json(r);
  CHECK(j["summary"]["total"] == 2);
  CHECK(j["checks"][1]["status"] == "fail");
  CHECK(number_json(std::numeric_limits<double>::infinity()) == "inf");
}

TEST_CASE("random streams are reproducible") {
  Rng a(99), b(99);
  for (int i = 0; i < 100; ++i) CHECK(a.uniform() == b.uniform());
  CHECK(a.fork(3).uniform() == b.fork(3).uniform());
  CHECK(Rng(1).fork(1).uniform() != Rng(1).fork(2).uniform());
  for (int i = 0; i < 1000; ++i) {
    const std::size_t k = a.uniform_index(2, 5);
    CHECK(k >= 2);
    CHECK(k <= 5);
  }
  Rng u(5);
  const ComplexMatrix Q = random_unitary(u, 9);
  CHECK((Q.adjoint() * Q - ComplexMatrix::Identity(9, 9)).norm() < 1e-12);
  const ComplexMatrix R = random_upper_triangular(u, {3.0, 1.0, 0.1});
  CHECK(is_upper_triangular(R));
  const RealVector s = singular_values(R);
  CHECK(s(2) == doctest::Approx(0.1));
}

TEST_CASE("resolvent grid") {
  const ClassParams p(1, 1);
  const ComplexMatrix B = make_shift(p, 20).matrix;
  const Spectrum sp = eigenvalues(B);
  const DepartureEstimate dep = departure_upper(B, p);
  const GridSpec spec{7, 5, {}};
  const GridEvaluation one = evaluate_resolvent_grid(B, sp, dep, spec, 1);
  const GridEvaluation many = evaluate_resolvent_grid(B, sp, dep, spec, 3);
  REQUIRE(one.points.size() == 35);
  for (std::size_t i = 0; i < one.points.size(); ++i) {
    CHECK(one.points[i].index == i);
    CHECK(one.points[i].true_norm == many.points[i].true_norm);
    CHECK(one.points[i].bound == many.points[i].bound);
    if (one.points[i].status == PointStatus::ok) CHECK(one.points[i].true_norm <= one.points[i].bound * (1 + 1e-6));
  }
  // A point spectrum {0} still gets a nondegenerate box.
  const GridBox box = default_grid_box(sp, operator_norm(B));
  CHECK(box.re_max > box.re_min);
  CHECK(box.im_max > box.im_min);
}

TEST_CASE("commands") {
  SUBCASE("normal input gives ratio one") {
    const GalleryMatrix c = make_convolution_diagonal(1.0, 12);
    const CommandReport r = bound_resolvent_command(c.matrix, ClassParams(0.5, 1), GridSpec{6, 6, {}}, 1);
    CHECK(r.ok);
    for (const auto& pt : r.report["points"]) {
      if (pt["status"] == "pass") CHECK(pt["ratio"].get<double>() == doctest::Approx(1.0).epsilon(1e-8));
    }
  }
  SUBCASE("shift input") {
    const CommandReport r = bound_resolvent_command(make_shift(ClassParams(1, 1), 20).matrix, ClassParams(1, 1),
                                                    GridSpec{8, 8, {}}, 1);
    CHECK(r.ok);
    CHECK(r.report["summary"]["failed"] == 0);
  }
  SUBCASE("spectral distance") {
    const ComplexMatrix A = make_shift(ClassParams(1, 1), 10).matrix;
    const CommandReport same = bound_spectral_command(A, A, ClassParams(1, 1));
    CHECK(same.report["normE"] == 0.0);
    CHECK(same.report["exact_hdist"] == 0.0);
    CHECK(same.report["bound"] == 0.0);

    Rng rng(12);
    const ComplexMatrix D1 = random_normal(rng, {1.0, -2.0, Complex(0, 1)});
    const ComplexMatrix D2 = D1 + 0.01 * ComplexMatrix::Identity(3, 3);
    const CommandReport normal = bound_spectral_command(D1, D2, ClassParams(1, 1));
    CHECK(normal.ok);
    CHECK(normal.report["bound"].get<double>() == doctest::Approx(0.01).epsilon(1e-8));

    ComplexMatrix E = ComplexMatrix::Zero(10, 10);
    E(0, 9) = 1e-3;
    const CommandReport pert = bound_spectral_command(A, A + E, ClassParams(1, 1));
    CHECK(pert.ok);
    CHECK(pert.report["slack"].get<double>() >= 0.0);

    CHECK_THROWS_AS(bound_spectral_command(A, ComplexMatrix::Zero(3, 3), ClassParams(1, 1)), std::invalid_argument);
  }
}

TEST_CASE("suites") {
  CHECK(run_suite("arrangements", 42, 100).all_passed());
  CHECK_THROWS_WITH_AS(run_suite("nope", 1, 10), doctest::Contains("arrangements"), std::invalid_argument);

  const std::string first = report_to_json(run_suite("classes", 5, 30)).dump();
  const std::string second = report_to_json(run_suite("classes", 5, 30)).dump();
  CHECK(first == second);
  SuiteConfig threaded = suite_config_for_budget(30);
  threaded.threads = 1;
  CHECK(report_to_json(run_suite("classes", 5, threaded)).dump() == first);

  const SuiteConfig full = suite_config_for_budget(500);
  CHECK(full.arrangement_instances == 500);
  CHECK(full.grid_nx == 40);
  CHECK(suite_config_for_budget(10).arrangement_instances == 10);
}
