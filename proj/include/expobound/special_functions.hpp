#pragma once

namespace expobound {

/// Upper incomplete gamma function Gamma(beta, s) = int_s^inf exp(-t) t^{beta-1} dt,
/// beta > 0, s >= 0. Power series for s < beta + 1, Lentz continued fraction
/// otherwise. Relative accuracy about 1e-14 for beta <= 50.
double incomplete_gamma(double beta, double s);

/// log Gamma(beta, s), finite well past the point where Gamma(beta, s) underflows.
double log_incomplete_gamma(double beta, double s);

}  // namespace expobound
