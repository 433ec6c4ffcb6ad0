#include "fofana/report.hpp"

#include <cstdio>

namespace fofana {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kOk:
      return "ok";
    case CheckStatus::kVacuous:
      return "vacuous";
    case CheckStatus::kNotApplicable:
      return "not-applicable";
  }
  return "?";
}

namespace {

nlohmann::json number_or_null(double v) {
  if (std::isnan(v)) return nullptr;
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

}  // namespace

nlohmann::json CheckReport::to_json(bool include_rows) const {
  nlohmann::json j;
  j["check"] = check_id;
  j["status"] = to_string(status);
  if (!note.empty()) j["note"] = note;
  j["pass"] = pass;
  j["cap"] = number_or_null(cap);
  j["c_emp"] = number_or_null(c_emp);
  if (c_emp_refined) j["c_emp_refined"] = number_or_null(*c_emp_refined);
  if (drift) {
    j["drift"] = number_or_null(*drift);
    j["drift_bound"] = drift_bound;
  }
  j["skipped_rows"] = skipped;
  if (!extras.empty()) {
    nlohmann::json e;
    for (const auto& [k, v] : extras) e[k] = number_or_null(v);
    j["extras"] = e;
  }
  if (include_rows) {
    nlohmann::json rows_json = nlohmann::json::array();
    for (const CheckRow& row : rows) {
      nlohmann::json rj;
      rj["case"] = row.case_id;
      rj["input"] = row.input;
      if (!std::isnan(row.r)) rj["r"] = row.r;
      rj["lhs"] = number_or_null(row.lhs);
      rj["rhs"] = number_or_null(row.rhs);
      rj["ratio"] = number_or_null(row.ratio);
      rj["pass"] = row.pass;
      rows_json.push_back(std::move(rj));
    }
    j["rows"] = std::move(rows_json);
  }
  return j;
}

void write_csv_header(std::ostream& os) {
  os << "suite,case_id,input_desc,r,lhs,rhs,ratio,pass\n";
}

void CheckReport::append_csv(std::ostream& os, const std::string& suite) const {
  char buf[64];
  const auto num = [&buf](double v) -> std::string {
    if (std::isnan(v)) return "";
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
  };
  const auto quoted = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += '"';
      out += c;
    }
    out += '"';
    return out;
  };
  for (const CheckRow& row : rows) {
    os << suite << ',' << quoted(row.case_id) << ',' << quoted(row.input) << ',' << num(row.r)
       << ',' << num(row.lhs) << ',' << num(row.rhs) << ',' << num(row.ratio) << ','
       << (row.pass ? "true" : "false") << '\n';
  }
}

std::string CheckReport::summary_line() const {
  char buf[256];
  if (status != CheckStatus::kOk) {
    std::snprintf(buf, sizeof buf, "%-18s %s%s%s", check_id.c_str(), to_string(status),
                  note.empty() ? "" : ": ", note.c_str());
    return buf;
  }
  std::string tail;
  if (drift) {
    char d[64];
    std::snprintf(d, sizeof d, ", drift=%.3g (bound %.3g)", *drift, drift_bound);
    tail = d;
  }
  std::snprintf(buf, sizeof buf, "%-18s %s  C_emp=%.6g (cap %.4g)%s, rows=%zu, skipped=%zu",
                check_id.c_str(), pass ? "pass" : "FAIL", c_emp, cap, tail.c_str(), rows.size(),
                skipped);
  return buf;
}

}  // namespace fofana
