#pragma once

// Property suites: every bound is checked against an independent computation
// (brute-force sort, long-double products, SVD, eigenvalues) on deterministic
// random and gallery instances.

#include <cstdint>
#include <string>
#include <vector>

#include "expobound/gallery.hpp"
#include "expobound/report.hpp"

namespace expobound {

struct GalleryDims {
  std::size_t shift = 120;
  std::size_t cyclic = 16;
  std::size_t weyl = 200;
  std::size_t interleave = 120;  // multiple of 3
  std::size_t convolution = 120;
  std::size_t unitary = 32;
};

struct SuiteConfig {
  std::size_t arrangement_instances = 500;
  std::size_t max_sequences = 5;
  std::size_t max_length = 200;

  std::size_t sum_instances = 200;
  std::size_t sum_max_dim = 100;
  std::size_t sum_max_terms = 4;
  std::size_t weyl_random_instances = 100;
  std::size_t weyl_random_max_dim = 60;

  std::size_t brute_force_factors = 1000000;

  std::size_t grid_nx = 40;
  std::size_t grid_ny = 40;
  GalleryDims dims;
  std::size_t sharpness_dim = 60;
  double sharpness_z = 1e6;

  std::size_t distance_pairs = 100;
  std::size_t normal_pairs = 20;
  std::size_t distance_max_dim = 48;

  unsigned threads = 0;  // 0: hardware concurrency
};

/// Full-size configuration scaled down for small budgets; budget >= 500 gives
/// the defaults.
SuiteConfig suite_config_for_budget(std::size_t budget);

/// A gallery operator with the class parameters it is checked against.
struct GalleryCase {
  std::string label;
  GalleryMatrix g;
  ClassParams p;
};

std::vector<GalleryCase> gallery_cases(const GalleryDims& dims);

VerificationReport check_arrangements(const SuiteConfig& cfg, std::uint64_t seed);
VerificationReport check_sum_bound(const SuiteConfig& cfg, std::uint64_t seed);
VerificationReport check_weyl(const SuiteConfig& cfg, std::uint64_t seed);
VerificationReport check_class_properties(const SuiteConfig& cfg, std::uint64_t seed);
VerificationReport check_f_functions(const SuiteConfig& cfg);
VerificationReport check_h_functions(const SuiteConfig& cfg);
VerificationReport check_resolvent_bound(const SuiteConfig& cfg);
VerificationReport check_resolvent_basics(const SuiteConfig& cfg);
VerificationReport check_shift_sharpness(const SuiteConfig& cfg);
VerificationReport check_spectral_distance(const SuiteConfig& cfg, std::uint64_t seed);
VerificationReport check_gallery(const SuiteConfig& cfg);

const std::vector<std::string>& suite_names();

/// Runs one named suite (or "all"). Throws std::invalid_argument listing the
/// valid names for an unknown suite.
VerificationReport run_suite(const std::string& name, std::uint64_t seed, std::size_t budget);
VerificationReport run_suite(const std::string& name, std::uint64_t seed, const SuiteConfig& cfg);

}  // namespace expobound
