#pragma once

#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace fofana {

enum class CheckStatus {
  kOk,             // the check ran and its pass flag is meaningful
  kVacuous,        // a precondition (e.g. weight-class membership) failed
  kNotApplicable,  // hypotheses of the underlying statement do not hold
};

const char* to_string(CheckStatus s);

struct CheckRow {
  std::string case_id;
  std::string input;
  double r = std::numeric_limits<double>::quiet_NaN();
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  bool pass = true;
};

// Result of one empirical check: per-case rows, the empirical constant
// C_emp = max ratio, and a pass flag judged against a configured cap (caps
// are configuration, not claims about sharp constants). Checks that resample
// at h/2 also record the refined constant and its relative drift.
struct CheckReport {
  std::string check_id;
  CheckStatus status = CheckStatus::kOk;
  std::string note;

  std::vector<CheckRow> rows;
  std::size_t skipped = 0;  // 0/0 rows excluded from ratios

  double cap = std::numeric_limits<double>::infinity();
  double c_emp = std::numeric_limits<double>::quiet_NaN();
  std::optional<double> c_emp_refined;
  std::optional<double> drift;
  double drift_bound = 0.10;

  std::map<std::string, double> extras;
  bool pass = false;

  nlohmann::json to_json(bool include_rows = true) const;
  void append_csv(std::ostream& os, const std::string& suite) const;
  std::string summary_line() const;
};

void write_csv_header(std::ostream& os);

}  // namespace fofana
