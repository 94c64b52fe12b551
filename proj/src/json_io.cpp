#include "expobound/json_io.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace expobound {

json matrix_to_json(const ComplexMatrix& A) {
  json entries = json::array();
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    for (Eigen::Index j = 0; j < A.cols(); ++j) entries.push_back({A(i, j).real(), A(i, j).imag()});
  }
  return json{{"rows", A.rows()}, {"cols", A.cols()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries")) {
    throw std::invalid_argument("matrix JSON: expected object with rows, cols, entries");
  }
  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  const json& entries = j.at("entries");
  if (rows < 0 || cols < 0 || !entries.is_array() || static_cast<Eigen::Index>(entries.size()) != rows * cols) {
    throw std::invalid_argument("matrix JSON: entries length must equal rows * cols");
  }
  ComplexMatrix A(rows, cols);
  for (Eigen::Index k = 0; k < rows * cols; ++k) {
    const json& e = entries[static_cast<std::size_t>(k)];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw std::invalid_argument("matrix JSON: each entry must be [re, im]");
    }
    const double re = e[0].get<double>();
    const double im = e[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im)) throw std::invalid_argument("matrix JSON: non-finite entry");
    A(k / cols, k % cols) = Complex(re, im);
  }
  return A;
}

json sequence_to_json(const DecaySequence& x) { return json(std::vector<double>(x.values().begin(), x.values().end())); }

DecaySequence sequence_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("sequence JSON: expected an array of numbers");
  std::vector<double> v;
  v.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_number()) throw std::invalid_argument("sequence JSON: expected an array of numbers");
    v.push_back(e.get<double>());
  }
  return DecaySequence(std::move(v));
}

json arrangement_to_json(const ArrangementResult& r) {
  return json{{"values", r.values}, {"source_sequence", r.source_sequence}, {"source_position", r.source_position}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error("cannot parse " + path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

void emit_json(const std::string& path, const json& j) {
  if (path == "-") {
    std::cout << j.dump(2) << '\n';
  } else {
    write_json_file(path, j);
  }
}

}  // namespace expobound
