#include "colourlab/record.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>

namespace colourlab {

namespace {

double round9(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return std::strtod(buf, nullptr);
}

std::string verdict(const Check& c) {
  if (c.qualitative) return c.passed ? "pass (qualitative)" : "fail (qualitative)";
  return c.passed ? "pass" : "fail";
}

}  // namespace

Check& ExperimentRecord::check_within(const std::string& statistic, double value, double reference, double tolerance) {
  return check(statistic, value, reference, tolerance, std::fabs(value - reference) <= tolerance);
}

Check& ExperimentRecord::check(const std::string& statistic, double value, double reference, double tolerance,
                               bool ok) {
  checks.push_back(Check{statistic, value, reference, tolerance, ok, false});
  return checks.back();
}

bool ExperimentRecord::passed() const {
  for (const auto& c : checks)
    if (!c.qualitative && !c.passed) return false;
  return true;
}

nlohmann::json ExperimentRecord::to_json() const {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : checks)
    cs.push_back({{"statistic", c.statistic},
                  {"value", c.value},
                  {"reference", c.reference},
                  {"tolerance", c.tolerance},
                  {"verdict", verdict(c)}});
  nlohmann::json j{{"experiment", name},  {"params", params}, {"statistics", statistics},
                   {"reference", reference}, {"checks", cs},   {"verdict", passed() ? "pass" : "fail"}};
  if (!warnings.empty()) j["warnings"] = warnings;
  return round_floats(j);
}

nlohmann::json round_floats(const nlohmann::json& j) {
  if (j.is_number_float()) {
    const double x = j.get<double>();
    if (!std::isfinite(x)) return std::isnan(x) ? nlohmann::json("nan") : nlohmann::json(x > 0 ? "inf" : "-inf");
    return round9(x);
  }
  if (j.is_array() || j.is_object()) {
    nlohmann::json out = j;
    for (auto it = out.begin(); it != out.end(); ++it) *it = round_floats(*it);
    return out;
  }
  return j;
}

void write_json_line(std::ostream& out, const ExperimentRecord& r) { out << r.to_json().dump() << '\n'; }

void write_csv_header(std::ostream& out) { out << "experiment,statistic,value,reference,tolerance,verdict\n"; }

namespace {

// RFC 4180 quoting for fields holding a comma, quote or newline.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + '"';
}

}  // namespace

void write_csv_rows(std::ostream& out, const ExperimentRecord& r) {
  for (const auto& c : r.checks)
    out << csv_field(r.name) << ',' << csv_field(c.statistic) << ',' << format_number(c.value) << ','
        << format_number(c.reference) << ',' << format_number(c.tolerance) << ',' << verdict(c) << '\n';
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

}  // namespace colourlab
