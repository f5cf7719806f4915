#include "mzv/report.hpp"

#include <algorithm>
#include <cmath>

namespace mzv {

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::DiscrepancyRecorded:
      break;
  }
  return "discrepancy-recorded";
}

const char* mode_name(Mode m) { return m == Mode::Exact ? "exact" : "numeric"; }

bool Report::all_checks_ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

void Report::add_check(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok, std::move(detail)});
}

bool Report::compare(double lhs_value, double rhs_value, double tol) {
  abs_diff = std::fabs(lhs_value - rhs_value);
  const double scale = std::max(std::fabs(lhs_value), std::fabs(rhs_value));
  rel_diff = scale > 0 ? abs_diff / scale : abs_diff;
  tolerance = tol;
  return rel_diff <= tol;
}

nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["identity"] = r.identity;
  j["params"] = r.params;
  j["mode"] = mode_name(r.mode);
  j["status"] = status_name(r.status);
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["abs_diff"] = r.abs_diff;
  j["rel_diff"] = r.rel_diff;
  j["tolerance"] = r.tolerance;
  j["seed"] = r.seed ? nlohmann::ordered_json(*r.seed) : nlohmann::ordered_json(nullptr);
  j["elapsed_ms"] = r.elapsed_ms;
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  }
  j["checks"] = checks;
  return j;
}

}  // namespace mzv
