#pragma once

// Report builders behind the command-line subcommands.

#include "expobound/json_io.hpp"
#include "expobound/resolvent_grid.hpp"

namespace expobound {

struct CommandReport {
  json report;
  bool ok = true;  // every asserted inequality holds
};

/// Per grid point {index, z, d, true_norm, bound, ratio, status}. Points too
/// close to the spectrum are reported as "excluded" or "blow_up" and do not
/// affect ok. The gauge of A is taken from its computed singular values.
CommandReport bound_resolvent_command(const ComplexMatrix& A, ClassParams p, const GridSpec& grid,
                                      unsigned threads = 0);

/// {normE, m, bound, exact_hdist, slack} for the pair (A, B), both measured
/// in the class p. Throws std::invalid_argument unless both are square of the
/// same dimension.
CommandReport bound_spectral_command(const ComplexMatrix& A, const ComplexMatrix& B, ClassParams p);

}  // namespace expobound
