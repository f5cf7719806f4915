#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace mzv {

enum class Status { Pass, Fail, DiscrepancyRecorded };
enum class Mode { Exact, Numeric };

const char* status_name(Status s);
const char* mode_name(Mode m);

/// One named sub-check inside a report.
struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct Report {
  std::string identity;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  Mode mode = Mode::Exact;
  Status status = Status::Fail;
  std::string lhs;
  std::string rhs;
  double abs_diff = 0;
  double rel_diff = 0;
  double tolerance = 0;
  std::optional<std::uint64_t> seed;
  double elapsed_ms = 0;
  std::vector<Check> checks;

  bool all_checks_ok() const;
  void add_check(std::string name, bool ok, std::string detail = {});
  /// Records a numeric comparison and returns whether it is within `tol`.
  bool compare(double lhs_value, double rhs_value, double tol);
};

nlohmann::ordered_json to_json(const Report& r);

}  // namespace mzv
