#include "catalog/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace ssp {

std::string format_double(double v) {
  if (v == 0.0) return "0";
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

bool CaseReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

int CaseReport::failed_count() const {
  int n = 0;
  for (const auto& c : checks) n += !c.pass;
  return n;
}

void CaseReport::add(const std::string& name, const std::string& anchor,
                     const std::string& expected, const std::string& computed, double residual,
                     bool pass) {
  checks.push_back({name, anchor, expected, computed, residual, pass});
}

void CaseReport::add_residual(const std::string& name, const std::string& anchor, double residual,
                              double tol, const std::string& note) {
  add(name, anchor, note.empty() ? ("residual < " + format_double(tol)) : note,
      format_double(residual), residual, std::isfinite(residual) && residual < tol);
}

void CaseReport::add_value(const std::string& name, const std::string& anchor, double expected,
                           double computed, double tol) {
  const double r = std::abs(expected - computed);
  add(name, anchor, format_double(expected), format_double(computed), r,
      std::isfinite(r) && r < tol);
}

void CaseReport::add_count(const std::string& name, const std::string& anchor, long expected,
                           long computed) {
  add(name, anchor, std::to_string(expected), std::to_string(computed),
      std::abs(double(expected - computed)), expected == computed);
}

void CaseReport::add_flag(const std::string& name, const std::string& anchor, bool expected,
                          bool computed) {
  add(name, anchor, expected ? "true" : "false", computed ? "true" : "false",
      expected == computed ? 0.0 : 1.0, expected == computed);
}

nlohmann::json CaseReport::to_json() const {
  nlohmann::json j;
  j["case"] = case_id;
  j["params"] = params;
  j["wall_time_sec"] = wall_time_sec;
  j["passed"] = all_passed();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    j["checks"].push_back({{"name", c.name},
                           {"anchor", c.anchor},
                           {"expected", c.expected},
                           {"computed", c.computed},
                           {"residual", c.residual},
                           {"pass", c.pass}});
  }
  return j;
}

CaseReport CaseReport::from_json(const nlohmann::json& j) {
  CaseReport r;
  r.case_id = j.at("case").get<std::string>();
  if (j.contains("params")) r.params = j.at("params").get<std::map<std::string, double>>();
  if (j.contains("wall_time_sec")) r.wall_time_sec = j.at("wall_time_sec").get<double>();
  for (const auto& c : j.at("checks")) {
    r.checks.push_back({c.at("name").get<std::string>(), c.at("anchor").get<std::string>(),
                        c.at("expected").get<std::string>(), c.at("computed").get<std::string>(),
                        c.at("residual").get<double>(), c.at("pass").get<bool>()});
  }
  return r;
}

std::string CaseReport::to_markdown() const {
  std::ostringstream os;
  os << "## " << case_id;
  if (!params.empty()) {
    os << " (";
    bool first = true;
    for (const auto& [k, v] : params) {
      if (!first) os << ", ";
      os << k << "=" << format_double(v);
      first = false;
    }
    os << ")";
  }
  os << "\n\n";
  os << "| check | anchor | expected | computed | residual | pass |\n";
  os << "|---|---|---|---|---|---|\n";
  for (const auto& c : checks)
    os << "| " << c.name << " | " << c.anchor << " | " << c.expected << " | " << c.computed
       << " | " << format_double(c.residual) << " | " << (c.pass ? "yes" : "**NO**") << " |\n";
  os << "\n" << (all_passed() ? "all checks passed" : std::to_string(failed_count()) + " check(s) FAILED")
     << " (" << format_double(wall_time_sec) << " s)\n";
  return os.str();
}

bool RunReport::all_passed() const {
  for (const auto& c : cases)
    if (!c.all_passed()) return false;
  return true;
}

nlohmann::json RunReport::to_json() const {
  nlohmann::json j;
  j["passed"] = all_passed();
  j["cases"] = nlohmann::json::array();
  for (const auto& c : cases) j["cases"].push_back(c.to_json());
  return j;
}

RunReport RunReport::from_json(const nlohmann::json& j) {
  RunReport r;
  for (const auto& c : j.at("cases")) r.cases.push_back(CaseReport::from_json(c));
  return r;
}

std::string RunReport::to_markdown() const {
  std::ostringstream os;
  os << "# verification report\n\n";
  for (const auto& c : cases) os << c.to_markdown() << "\n";
  os << (all_passed() ? "**ALL CASES PASSED**" : "**FAILURES PRESENT**") << "\n";
  return os.str();
}

}  // namespace ssp
