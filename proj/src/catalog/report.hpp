#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace ssp {

/// One verified fact: a named check with expected/computed values and the
/// residual that decided it.
struct CheckItem {
  std::string name;      // short human label
  std::string anchor;    // stable identifier of the verified fact
  std::string expected;  // rendered expected value
  std::string computed;  // rendered computed value
  double residual = 0;
  bool pass = false;
};

struct CaseReport {
  std::string case_id;
  std::map<std::string, double> params;
  std::vector<CheckItem> checks;
  double wall_time_sec = 0;

  bool all_passed() const;
  int failed_count() const;

  void add(const std::string& name, const std::string& anchor, const std::string& expected,
           const std::string& computed, double residual, bool pass);
  /// Residual-driven check against a tolerance.
  void add_residual(const std::string& name, const std::string& anchor, double residual,
                    double tol, const std::string& note = "");
  /// Scalar comparison |expected - computed| < tol.
  void add_value(const std::string& name, const std::string& anchor, double expected,
                 double computed, double tol);
  /// Exact integer comparison (dimension counts).
  void add_count(const std::string& name, const std::string& anchor, long expected, long computed);
  /// Boolean expectation.
  void add_flag(const std::string& name, const std::string& anchor, bool expected, bool computed);

  nlohmann::json to_json() const;
  static CaseReport from_json(const nlohmann::json& j);
  std::string to_markdown() const;
};

/// A full verification run: several case reports plus global status.
struct RunReport {
  std::vector<CaseReport> cases;
  bool all_passed() const;
  nlohmann::json to_json() const;
  static RunReport from_json(const nlohmann::json& j);
  std::string to_markdown() const;
};

std::string format_double(double v);

}  // namespace ssp
