#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "expobound/bound_engine.hpp"
#include "expobound/commands.hpp"
#include "expobound/expo_class.hpp"
#include "expobound/gallery.hpp"
#include "expobound/sequence_kit.hpp"
#include "expobound/suites.hpp"

namespace py = pybind11;
using namespace expobound;

namespace {

// Reports cross the boundary as JSON text; the Python side parses it.
std::string dump(const json& j) { return j.dump(); }

std::vector<DecaySequence> to_sequences(const std::vector<std::vector<double>>& xs) {
  std::vector<DecaySequence> out;
  for (const auto& x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exponential-class resolvent and spectral-distance bounds";

  py::class_<ClassParams>(m, "ClassParams")
      .def(py::init<double, double>(), py::arg("a"), py::arg("alpha"))
      .def_readonly("a", &ClassParams::a)
      .def_readonly("alpha", &ClassParams::alpha)
      .def("__repr__", [](const ClassParams& p) {
        return "ClassParams(a=" + std::to_string(p.a) + ", alpha=" + std::to_string(p.alpha) + ")";
      });

  py::class_<CertifiedValue>(m, "CertifiedValue")
      .def_readonly("value", &CertifiedValue::value)
      .def_readonly("error_radius", &CertifiedValue::error_radius)
      .def("contains", &CertifiedValue::contains);

  py::class_<DepartureEstimate>(m, "DepartureEstimate")
      .def_readonly("params", &DepartureEstimate::params)
      .def_readonly("upper", &DepartureEstimate::upper)
      .def_readonly("gauge_bound", &DepartureEstimate::gauge_bound)
      .def_readonly("schur_value", &DepartureEstimate::schur_value);

  m.def("gauge_of_sequence",
        [](const std::vector<double>& x, const ClassParams& p) { return gauge_of_sequence(DecaySequence(x), p); });
  m.def("arrange", [](const std::vector<std::vector<double>>& xs, bool increasing) {
    const auto r = monotone_arrangement(to_sequences(xs), increasing ? Direction::increasing : Direction::decreasing);
    return py::make_tuple(r.values, r.source_sequence, r.source_position);
  }, py::arg("sequences"), py::arg("increasing") = false);
  m.def("combined_exponent", [](const std::vector<double>& rates, double alpha) { return combined_exponent(rates, alpha); });

  m.def("singular_values", &singular_values);
  m.def("eigenvalues", [](const ComplexMatrix& A) { return eigenvalues(A).eigenvalues; });
  m.def("operator_gauge", [](const ComplexMatrix& A, const ClassParams& p) { return operator_gauge(A, p).gauge; });
  m.def("resolvent_norm", [](const ComplexMatrix& A, Complex z) { return resolvent_norm(A, z); });

  m.def("f_eval", &f_eval, py::arg("p"), py::arg("r"), py::arg("rel_tol") = kDefaultRelTol);
  m.def("g_eval", &g_eval, py::arg("p"), py::arg("r"), py::arg("rel_tol") = kDefaultRelTol);
  m.def("g_invert", &g_invert, py::arg("p"), py::arg("y"), py::arg("rel_tol") = kDefaultRelTol);
  m.def("h_eval", &h_eval);
  m.def("f_upper_closed_form", &f_upper_closed_form);
  m.def("departure_rate", &departure_rate);
  m.def("departure_upper", [](const ComplexMatrix& A, const ClassParams& p) { return departure_upper(A, p); });
  m.def("resolvent_bound", &resolvent_bound);
  m.def("hausdorff_distance", [](const std::vector<Complex>& x, const std::vector<Complex>& y) {
    return hausdorff_distance(Spectrum{x}, Spectrum{y});
  });

  m.def("gallery_shift", [](const ClassParams& p, std::size_t dim) { return make_shift(p, dim).matrix; });
  m.def("gallery_cyclic", [](const std::vector<double>& taus) { return make_cyclic(taus).matrix; });
  m.def("gallery_weyl", [](const ClassParams& p, std::size_t dim) {
    return make_weyl_sharpness(p, BlockSchedule::super_exponential(dim)).matrix;
  });
  m.def("gallery_convolution", [](double a, std::size_t dim) { return make_convolution_diagonal(a, dim).matrix; });

  m.def("_bound_resolvent", [](const ComplexMatrix& A, const ClassParams& p, std::size_t nx, std::size_t ny) {
    return dump(bound_resolvent_command(A, p, GridSpec{nx, ny, {}}).report);
  });
  m.def("_bound_spectral", [](const ComplexMatrix& A, const ComplexMatrix& B, const ClassParams& p) {
    return dump(bound_spectral_command(A, B, p).report);
  });
  m.def("_verify", [](const std::string& suite, std::uint64_t seed, std::size_t budget) {
    py::gil_scoped_release release;
    return dump(report_to_json(run_suite(suite, seed, budget)));
  });
}
