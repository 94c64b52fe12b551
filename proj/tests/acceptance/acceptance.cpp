// One PASS/FAIL line per acceptance criterion, each timed against its limit.
// Runs the full-size suite configuration.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "expobound/suites.hpp"

using namespace expobound;

namespace {

struct Criterion {
  int id;
  std::string what;
  double limit_s;  // <= 0: no runtime limit
  std::function<VerificationReport()> run;
};

std::string failures(const VerificationReport& r) {
  std::string s;
  for (const auto& c : r.checks) {
    if (c.passed()) continue;
    s += s.empty() ? " failing:" : ",";
    s += " " + c.name;
  }
  return s;
}

VerificationReport merged(std::string suite, std::initializer_list<VerificationReport> parts) {
  VerificationReport r{std::move(suite), 0, {}};
  for (const auto& p : parts) r.append(p);
  return r;
}

}  // namespace

int main() {
  const SuiteConfig cfg = suite_config_for_budget(500);
  constexpr std::uint64_t kSeed = 7;

  const std::vector<Criterion> criteria = {
      {1, "arrangements match brute-force sort, counting identity, growth bounds", 10.0,
       [&] { return check_arrangements(cfg, kSeed); }},
      {2, "sum bound s_n(sum A_k) <= K sigma_n on random instances", 60.0, [&] { return check_sum_bound(cfg, kSeed); }},
      {3, "eigenvalue decay bound on gallery and random triangular matrices, sharpness witness", 0.0,
       [&] { return check_weyl(cfg, kSeed); }},
      {4, "f/g/h: enclosures, closed form, round trip, asymptotic ratios", 30.0,
       [&] { return merged("fgh", {check_f_functions(cfg), check_h_functions(cfg)}); }},
      {5, "resolvent bound on 40x40 grids for every gallery matrix", 300.0,
       [&] { return check_resolvent_bound(cfg); }},
      {6, "shift sharpness ratio at |z| = 1e6", 5.0, [&] { return check_shift_sharpness(cfg); }},
      {7, "spectral distance bound on perturbed gallery and normal pairs", 120.0,
       [&] { return check_spectral_distance(cfg, kSeed); }},
      {8, "verify --suite all --seed 7 is byte-identical across runs", 0.0,
       [&] {
         const std::string first = report_to_json(run_suite("all", kSeed, 100)).dump(2);
         const std::string second = report_to_json(run_suite("all", kSeed, 100)).dump(2);
         VerificationReport r{"determinism", kSeed, {}};
         r.checks.push_back(make_predicate_check("determinism.byte_identical", first == second,
                                                 {{"bytes", first.size()}}));
         return r;
       }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      const VerificationReport r = c.run();
      ok = r.all_passed();
      detail = std::to_string(r.passed()) + "/" + std::to_string(r.checks.size()) + " checks" + failures(r);
    } catch (const std::exception& e) {
      detail = std::string("error: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char timing[96];
    if (c.limit_s > 0.0) {
      std::snprintf(timing, sizeof timing, "%.2f s (limit %.0f s)", secs, c.limit_s);
      if (secs >= c.limit_s) {
        ok = false;
        detail += "; over time limit";
      }
    } else {
      std::snprintf(timing, sizeof timing, "%.2f s", secs);
    }
    std::printf("%s criterion %d: %s -- %s, %s\n", ok ? "PASS" : "FAIL", c.id, c.what.c_str(), detail.c_str(), timing);
    std::fflush(stdout);
    if (!ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
