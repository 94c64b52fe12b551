#include "expobound/commands.hpp"

#include <algorithm>
#include <stdexcept>

#include "expobound/bound_engine.hpp"
#include "expobound/report.hpp"

namespace expobound {

namespace {

const char* status_name(PointStatus s) {
  switch (s) {
    case PointStatus::ok: return "ok";
    case PointStatus::excluded: return "excluded";
    case PointStatus::blow_up: return "blow_up";
  }
  return "unknown";
}

json departure_json(const DepartureEstimate& dep) {
  json j{{"b", dep.params.a}, {"alpha", dep.params.alpha}, {"nu", dep.upper}, {"gauge_bound", number_json(dep.gauge_bound)}};
  j["schur_value"] = dep.schur_value ? number_json(*dep.schur_value) : json(nullptr);
  return j;
}

}  // namespace

CommandReport bound_resolvent_command(const ComplexMatrix& A, ClassParams p, const GridSpec& grid, unsigned threads) {
  if (A.rows() != A.cols() || A.rows() == 0) throw std::invalid_argument("bound-resolvent: matrix must be square and nonempty");
  const OperatorGauge gauge = operator_gauge(A, p);
  const DepartureEstimate dep = departure_upper(A, gauge);
  const Spectrum spectrum = eigenvalues(A);
  const GridEvaluation eval = evaluate_resolvent_grid(A, spectrum, dep, grid, threads);

  CommandReport out;
  json points = json::array();
  std::size_t checked = 0;
  std::size_t failed = 0;
  double worst_ratio = 0.0;
  for (const auto& pt : eval.points) {
    json j{{"index", pt.index}, {"z", {pt.z.real(), pt.z.imag()}}, {"d", pt.distance}};
    if (pt.status == PointStatus::ok) {
      const CheckResult c = make_check("resolvent", pt.true_norm, pt.bound);
      j["true_norm"] = number_json(pt.true_norm);
      j["bound"] = number_json(pt.bound);
      j["ratio"] = number_json(pt.ratio());
      j["status"] = c.passed() ? "pass" : "fail";
      ++checked;
      if (!c.passed()) ++failed;
      worst_ratio = std::max(worst_ratio, pt.ratio());
    } else {
      j["status"] = status_name(pt.status);
    }
    points.push_back(std::move(j));
  }
  out.ok = failed == 0;
  out.report = json{
      {"command", "bound-resolvent"},
      {"params", {{"a", p.a}, {"alpha", p.alpha}}},
      {"gauge", number_json(gauge.gauge)},
      {"departure", departure_json(dep)},
      {"grid",
       {{"nx", eval.nx},
        {"ny", eval.ny},
        {"box", {eval.box.re_min, eval.box.re_max, eval.box.im_min, eval.box.im_max}},
        {"exclusion_radius", eval.exclusion_radius}}},
      {"tolerance", {{"relative", kCheckRelTol}, {"absolute", kCheckAbsTol}}},
      {"summary", {{"points", eval.points.size()}, {"checked", checked}, {"failed", failed}, {"max_ratio", worst_ratio}}},
      {"status", out.ok ? "pass" : "fail"},
      {"points", std::move(points)}};
  return out;
}

CommandReport bound_spectral_command(const ComplexMatrix& A, const ComplexMatrix& B, ClassParams p) {
  if (A.rows() != A.cols() || B.rows() != B.cols()) throw std::invalid_argument("bound-spectral: matrices must be square");
  if (A.rows() != B.rows()) throw std::invalid_argument("bound-spectral: dimension mismatch");
  if (A.rows() == 0) throw std::invalid_argument("bound-spectral: empty matrices");
  const DepartureEstimate dep_a = departure_upper(A, p);
  const DepartureEstimate dep_b = departure_upper(B, p);
  const double norm_e = operator_norm(B - A);
  const double bound = spectral_distance_bound(norm_e, dep_a, dep_b);
  const double hdist = hausdorff_distance(eigenvalues(A), eigenvalues(B));
  const double tol_abs = std::max(kCheckAbsTol, std::max(linear_tolerance(A), linear_tolerance(B)));
  const CheckResult c = make_check("spectral_distance", hdist, bound, kCheckRelTol, tol_abs);

  CommandReport out;
  out.ok = c.passed();
  out.report = json{{"command", "bound-spectral"},
                    {"params", {{"a", p.a}, {"alpha", p.alpha}}},
                    {"departure_a", departure_json(dep_a)},
                    {"departure_b", departure_json(dep_b)},
                    {"normE", norm_e},
                    {"m", std::max(dep_a.upper, dep_b.upper)},
                    {"bound", number_json(bound)},
                    {"exact_hdist", hdist},
                    {"slack", number_json(bound - hdist)},
                    {"check", check_to_json(c)},
                    {"status", out.ok ? "pass" : "fail"}};
  return out;
}

}  // namespace expobound
