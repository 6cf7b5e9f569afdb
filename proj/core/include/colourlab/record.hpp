#pragma once

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace colourlab {

/// One compared statistic. Qualitative checks are reported but never fail a
/// record.
struct Check {
  std::string statistic;
  double value = 0.0;
  double reference = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  bool qualitative = false;
};

struct ExperimentRecord {
  std::string name;
  nlohmann::json params = nlohmann::json::object();
  nlohmann::json statistics = nlohmann::json::object();
  nlohmann::json reference = nlohmann::json::object();
  std::vector<Check> checks;
  std::vector<std::string> warnings;

  /// Adds a check of |value - reference| <= tolerance.
  Check& check_within(const std::string& statistic, double value, double reference, double tolerance);
  /// Adds a check with an externally decided outcome.
  Check& check(const std::string& statistic, double value, double reference, double tolerance, bool passed);

  /// True iff every non-qualitative check passed.
  bool passed() const;

  nlohmann::json to_json() const;
};

/// Copy of `j` with every floating-point number rounded to 9 significant
/// digits, so printed records are stable across platforms.
nlohmann::json round_floats(const nlohmann::json& j);

/// One JSON object per line.
void write_json_line(std::ostream& out, const ExperimentRecord& r);

void write_csv_header(std::ostream& out);
/// Rows: experiment,statistic,value,reference,tolerance,verdict
void write_csv_rows(std::ostream& out, const ExperimentRecord& r);

/// Shortest decimal form of x at 9 significant digits.
std::string format_number(double x);

}  // namespace colourlab
