#pragma once

// Deterministic machine-readable reports.  JSON is emitted by hand so that
// identical inputs produce byte-identical output: fixed key order, floats at
// 17 significant digits, no locale dependence.

#include <cstdio>
#include <string>
#include <vector>

namespace dkw {

inline std::string json_float(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

struct Check {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;
  long seed = 0;
  std::vector<std::pair<std::string, std::string>> config;  // key, raw json value

  void add(const std::string& name, double residual, double tolerance) {
    checks.push_back({name, residual, tolerance, residual < tolerance});
  }
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  std::string to_json() const {
    std::string out = "{\n  \"suite\": " + json_string(suite) + ",\n  \"checks\": [";
    for (std::size_t k = 0; k < checks.size(); ++k) {
      out += (k ? ",\n    " : "\n    ");
      out += "{\"name\": " + json_string(checks[k].name) +
             ", \"residual\": " + json_float(checks[k].residual) +
             ", \"tolerance\": " + json_float(checks[k].tolerance) +
             ", \"pass\": " + (checks[k].pass ? "true" : "false") + "}";
    }
    out += "\n  ],\n  \"seed\": " + std::to_string(seed) + ",\n  \"config\": {";
    for (std::size_t k = 0; k < config.size(); ++k) {
      out += (k ? ", " : "");
      out += json_string(config[k].first) + ": " + config[k].second;
    }
    out += "}\n}\n";
    return out;
  }
};

}  // namespace dkw
