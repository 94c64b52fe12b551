#include "expobound/report.hpp"

#include <algorithm>
#include <cmath>

namespace expobound {

CheckResult make_check(std::string name, double lhs, double rhs, double tol, double tol_abs, json params) {
  CheckResult c;
  c.name = std::move(name);
  c.params = std::move(params);
  c.lhs = lhs;
  c.rhs = rhs;
  c.margin = rhs - lhs;
  c.tolerance = tol;
  c.tolerance_abs = tol_abs;
  const bool ok = !std::isnan(lhs) && !std::isnan(rhs) && lhs <= rhs * (1.0 + tol) + tol_abs;
  c.status = ok ? CheckStatus::pass : CheckStatus::fail;
  return c;
}

CheckResult make_equality_check(std::string name, double lhs, double rhs, double tol, double tol_abs,
                                json params) {
  params["value"] = number_json(lhs);
  params["expected"] = number_json(rhs);
  return make_check(std::move(name), std::abs(lhs - rhs), tol * std::abs(rhs) + tol_abs, 0.0, 0.0,
                    std::move(params));
}

CheckResult make_predicate_check(std::string name, bool holds, json params) {
  return make_check(std::move(name), holds ? 0.0 : 1.0, 0.0, 0.0, 0.0, std::move(params));
}

std::size_t VerificationReport::passed() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); }));
}

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

json number_json(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

json check_to_json(const CheckResult& c) {
  return json{{"check", c.name},
              {"params", c.params},
              {"lhs", number_json(c.lhs)},
              {"rhs", number_json(c.rhs)},
              {"margin", number_json(c.margin)},
              {"tolerance", {{"relative", c.tolerance}, {"absolute", c.tolerance_abs}}},
              {"status", c.passed() ? "pass" : "fail"}};
}

json report_to_json(const VerificationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(check_to_json(c));
  return json{{"suite", r.suite},
              {"seed", r.seed},
              {"summary", {{"total", r.checks.size()}, {"passed", r.passed()}, {"failed", r.failed()}}},
              {"checks", std::move(checks)}};
}

}  // namespace expobound
