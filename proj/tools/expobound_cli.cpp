// expobound: verification suites and certified bounds from the command line.
//
// Exit status: 0 when every asserted inequality holds, 1 when one fails,
// 2 on bad usage or unreadable input.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "expobound/commands.hpp"
#include "expobound/expo_class.hpp"
#include "expobound/gallery.hpp"
#include "expobound/json_io.hpp"
#include "expobound/sequence_kit.hpp"
#include "expobound/suites.hpp"

using namespace expobound;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Common {
  bool quiet = false;
};

void say(const Common& c, const std::string& line) {
  if (!c.quiet) std::cerr << line << '\n';
}

std::vector<std::size_t> parse_grid(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("--grid expects NX,NY");
  return {std::stoul(s.substr(0, comma)), std::stoul(s.substr(comma + 1))};
}

int run_verify(const Common& common, const std::string& suite, std::uint64_t seed, std::size_t budget,
               unsigned threads, const std::string& out) {
  SuiteConfig cfg = suite_config_for_budget(budget);
  cfg.threads = threads;
  const VerificationReport rep = run_suite(suite, seed, cfg);
  emit_json(out, report_to_json(rep));
  for (const auto& c : rep.checks) {
    if (!c.passed()) say(common, "FAIL " + c.name);
  }
  say(common, "suite " + suite + " seed " + std::to_string(seed) + ": " + std::to_string(rep.passed()) + "/" +
                  std::to_string(rep.checks.size()) + " checks passed");
  return rep.all_passed() ? 0 : kExitFail;
}

GalleryMatrix build_gallery(const std::string& kind, std::size_t dim, double a, double alpha,
                            const std::vector<double>& taus, const std::vector<double>& rates,
                            const std::vector<std::size_t>& schedule) {
  const ClassParams p(a, alpha);
  if (kind == "shift") return make_shift(p, dim);
  if (kind == "cyclic") {
    if (!taus.empty()) return make_cyclic(taus);
    std::vector<double> t;
    for (std::size_t n = 1; n <= dim; ++n) t.push_back(std::exp(-p.log_weight(static_cast<double>(n))));
    return make_cyclic(t);
  }
  if (kind == "weyl") {
    return make_weyl_sharpness(p, schedule.empty() ? BlockSchedule::super_exponential(dim) : BlockSchedule(schedule));
  }
  if (kind == "interleave") return make_interleaved_sum(rates.empty() ? std::vector<double>{1.0, 2.0} : rates, alpha, dim).sum;
  if (kind == "convolution") return make_convolution_diagonal(a, dim);
  throw std::invalid_argument("unknown gallery kind '" + kind + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified resolvent and spectral-distance bounds for exponential classes"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_flag("--quiet,-q", common.quiet, "Suppress the human-readable summary");

  // verify
  std::string suite = "all";
  std::uint64_t seed = 7;
  std::size_t budget = 100;
  unsigned threads = 0;
  std::string verify_out = "-";
  auto* verify = app.add_subcommand("verify", "Run a property suite");
  verify->add_option("--suite", suite, "arrangements, classes, resolvent, spectral_distance, gallery or all")
      ->capture_default_str();
  verify->add_option("--seed", seed, "PRNG seed")->capture_default_str();
  verify->add_option("--budget", budget, "Size budget (>= 500 runs the full-size suites)")->capture_default_str();
  verify->add_option("--threads", threads, "Worker threads, 0 for all cores")->capture_default_str();
  verify->add_option("--out", verify_out, "Report path, - for stdout")->capture_default_str();

  // bound-resolvent
  std::string matrix_path;
  double a = 1.0;
  double alpha = 1.0;
  std::string grid = "40,40";
  std::string resolvent_out = "-";
  auto* resolvent = app.add_subcommand("bound-resolvent", "Resolvent norm against the bound on a grid");
  resolvent->add_option("--matrix", matrix_path, "Matrix JSON")->required();
  resolvent->add_option("--a", a, "Class rate a")->required();
  resolvent->add_option("--alpha", alpha, "Class exponent alpha")->required();
  resolvent->add_option("--grid", grid, "NX,NY")->capture_default_str();
  resolvent->add_option("--threads", threads, "Worker threads, 0 for all cores");
  resolvent->add_option("--out", resolvent_out, "Report path, - for stdout")->capture_default_str();

  // bound-spectral
  std::string matrix_a;
  std::string matrix_b;
  std::string spectral_out = "-";
  auto* spectral = app.add_subcommand("bound-spectral", "Hausdorff distance of spectra against the bound");
  spectral->add_option("--matrix-a", matrix_a, "Matrix JSON for A")->required();
  spectral->add_option("--matrix-b", matrix_b, "Matrix JSON for B")->required();
  spectral->add_option("--a", a, "Class rate a")->required();
  spectral->add_option("--alpha", alpha, "Class exponent alpha")->required();
  spectral->add_option("--out", spectral_out, "Report path, - for stdout")->capture_default_str();

  // gallery
  std::string kind;
  std::size_t dim = 0;
  std::vector<double> taus;
  std::vector<double> rates;
  std::vector<std::size_t> schedule;
  std::string gallery_out = "-";
  auto* gallery = app.add_subcommand("gallery", "Emit a gallery matrix");
  gallery->add_option("--kind", kind, "shift, cyclic, weyl, interleave or convolution")
      ->required()
      ->check(CLI::IsMember({"shift", "cyclic", "weyl", "interleave", "convolution"}));
  gallery->add_option("--dim", dim, "Dimension")->required();
  gallery->add_option("--a", a, "Rate a")->capture_default_str();
  gallery->add_option("--alpha", alpha, "Exponent alpha")->capture_default_str();
  gallery->add_option("--taus", taus, "cyclic: explicit weights (overrides --dim)")->delimiter(',');
  gallery->add_option("--rates", rates, "interleave: rates a_k")->delimiter(',');
  gallery->add_option("--schedule", schedule, "weyl: block ends N_1,N_2,...")->delimiter(',');
  gallery->add_option("--out", gallery_out, "Matrix path, - for stdout")->capture_default_str();

  // arrange
  std::vector<std::string> inputs;
  std::string direction = "dec";
  std::string arrange_out = "-";
  auto* arrange = app.add_subcommand("arrange", "Monotone arrangement of several sequences");
  arrange->add_option("--inputs", inputs, "Sequence JSON files")->required()->delimiter(',');
  arrange->add_option("--direction", direction, "inc or dec")
      ->check(CLI::IsMember({"inc", "dec"}))
      ->capture_default_str();
  arrange->add_option("--out", arrange_out, "Result path, - for stdout")->capture_default_str();

  // gauge
  std::string gauge_input;
  std::string gauge_out = "-";
  auto* gauge = app.add_subcommand("gauge", "Gauge of a sequence or of a matrix's singular values");
  gauge->add_option("--input", gauge_input, "Sequence or matrix JSON")->required();
  gauge->add_option("--a", a, "Class rate a")->required();
  gauge->add_option("--alpha", alpha, "Class exponent alpha")->required();
  gauge->add_option("--out", gauge_out, "Result path, - for stdout")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) return run_verify(common, suite, seed, budget, threads, verify_out);

    if (*resolvent) {
      const auto g = parse_grid(grid);
      const ComplexMatrix A = matrix_from_json(read_json_file(matrix_path));
      const CommandReport r = bound_resolvent_command(A, ClassParams(a, alpha), GridSpec{g[0], g[1], {}}, threads);
      emit_json(resolvent_out, r.report);
      say(common, std::string("bound-resolvent: ") + (r.ok ? "bound holds" : "bound violated") + " at " +
                      r.report["summary"]["checked"].dump() + " checked points");
      return r.ok ? 0 : kExitFail;
    }

    if (*spectral) {
      const ComplexMatrix A = matrix_from_json(read_json_file(matrix_a));
      const ComplexMatrix B = matrix_from_json(read_json_file(matrix_b));
      const CommandReport r = bound_spectral_command(A, B, ClassParams(a, alpha));
      emit_json(spectral_out, r.report);
      say(common, "bound-spectral: hdist " + r.report["exact_hdist"].dump() + " <= bound " +
                      r.report["bound"].dump() + (r.ok ? " holds" : " VIOLATED"));
      return r.ok ? 0 : kExitFail;
    }

    if (*gallery) {
      const GalleryMatrix g = build_gallery(kind, dim, a, alpha, taus, rates, schedule);
      json j = matrix_to_json(g.matrix);
      j["kind"] = g.kind;
      j["singular_values"] = g.singular_values;
      j["eigenvalue_moduli"] = g.eigenvalue_moduli;
      emit_json(gallery_out, j);
      say(common, "gallery: " + g.kind + " " + std::to_string(g.matrix.rows()) + "x" + std::to_string(g.matrix.cols()));
      return 0;
    }

    if (*arrange) {
      std::vector<DecaySequence> seqs;
      for (const auto& f : inputs) seqs.push_back(sequence_from_json(read_json_file(f)));
      const auto r = monotone_arrangement(seqs, direction == "inc" ? Direction::increasing : Direction::decreasing);
      emit_json(arrange_out, arrangement_to_json(r));
      say(common, "arrange: " + std::to_string(r.values.size()) + " entries from " + std::to_string(seqs.size()) +
                      " sequences");
      return 0;
    }

    if (*gauge) {
      const json in = read_json_file(gauge_input);
      const ClassParams p(a, alpha);
      json out{{"params", {{"a", a}, {"alpha", alpha}}}};
      if (in.is_array()) {
        out["input"] = "sequence";
        out["gauge"] = gauge_of_sequence(sequence_from_json(in), p);
      } else {
        out["input"] = "matrix";
        out["gauge"] = operator_gauge(matrix_from_json(in), p).gauge;
      }
      emit_json(gauge_out, out);
      say(common, "gauge: " + out["gauge"].dump());
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
