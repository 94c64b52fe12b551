#pragma once

// Outcome of one asserted inequality lhs <= rhs and collections of them.

#include <cstdint>
#include <string>
#include <vector>

#include "expobound/json_io.hpp"

namespace expobound {

inline constexpr double kCheckRelTol = 1e-6;
inline constexpr double kCheckAbsTol = 1e-12;

enum class CheckStatus { pass, fail };

struct CheckResult {
  std::string name;
  json params = json::object();  // free-form context: matrix kind, grid index, ...
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // rhs - lhs
  double tolerance = kCheckRelTol;
  double tolerance_abs = kCheckAbsTol;
  CheckStatus status = CheckStatus::fail;

  [[nodiscard]] bool passed() const { return status == CheckStatus::pass; }
};

/// pass iff lhs <= rhs (1 + tol) + tol_abs. NaN on either side fails.
CheckResult make_check(std::string name, double lhs, double rhs, double tol = kCheckRelTol,
                       double tol_abs = kCheckAbsTol, json params = json::object());

/// Two-sided check |lhs - rhs| <= tol |rhs| + tol_abs, reported as
/// lhs = |lhs - rhs|, rhs = tol |rhs| + tol_abs with zero slack.
CheckResult make_equality_check(std::string name, double lhs, double rhs, double tol,
                                double tol_abs = kCheckAbsTol, json params = json::object());

/// A boolean property reported as lhs = 0 (holds) or 1 (violated) against rhs = 0.
CheckResult make_predicate_check(std::string name, bool holds, json params = json::object());

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  [[nodiscard]] std::size_t passed() const;
  [[nodiscard]] std::size_t failed() const { return checks.size() - passed(); }
  [[nodiscard]] bool all_passed() const { return failed() == 0; }

  void append(const VerificationReport& other);
};

/// Doubles that JSON cannot hold (inf, nan) are written as strings.
json number_json(double x);

json check_to_json(const CheckResult& c);
json report_to_json(const VerificationReport& r);

}  // namespace expobound
