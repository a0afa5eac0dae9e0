#pragma once

// Text and JSON rendering of identity reports.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include <kummer/identities.hpp>

namespace kummer::cli {

inline std::string fmt17(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

/// JSON array with keys id, grid_point, lhs, rhs, abs_residual, tolerance, pass, paper_ref.
/// Numbers carry 17 significant digits; non-finite values become null.
inline std::string reports_to_json(const std::vector<IdentityReport>& reports) {
  std::string out = "[";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    out += i ? ",\n  " : "\n  ";
    out += "{\"id\": " + json_string(r.id);
    out += ", \"grid_point\": " + (r.grid_point ? fmt17(*r.grid_point) : std::string("null"));
    out += ", \"lhs\": " + fmt17(r.lhs);
    out += ", \"rhs\": " + fmt17(r.rhs);
    out += ", \"abs_residual\": " + fmt17(r.abs_residual);
    out += ", \"tolerance\": " + fmt17(r.tolerance);
    out += std::string(", \"pass\": ") + (r.pass ? "true" : "false");
    out += ", \"paper_ref\": " + json_string(r.paper_ref) + "}";
  }
  out += reports.empty() ? "]\n" : "\n]\n";
  return out;
}

inline double json_number(const nlohmann::json& j) {
  return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

inline std::vector<IdentityReport> reports_from_json(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  std::vector<IdentityReport> out;
  for (const auto& o : doc) {
    IdentityReport r;
    r.id = o.at("id").get<std::string>();
    if (!o.at("grid_point").is_null()) r.grid_point = o.at("grid_point").get<double>();
    r.lhs = json_number(o.at("lhs"));
    r.rhs = json_number(o.at("rhs"));
    r.abs_residual = json_number(o.at("abs_residual"));
    r.tolerance = json_number(o.at("tolerance"));
    r.pass = o.at("pass").get<bool>();
    r.paper_ref = o.at("paper_ref").get<std::string>();
    out.push_back(std::move(r));
  }
  return out;
}

inline std::string reports_to_table(const std::vector<IdentityReport>& reports) {
  std::string out;
  char line[512];
  std::snprintf(line, sizeof line, "%-16s %-22s %-25s %-25s %-25s %-25s %s\n", "id", "point", "lhs", "rhs",
                "abs_residual", "tolerance", "status");
  out += line;
  for (const auto& r : reports) {
    const std::string point = r.grid_point ? fmt17(*r.grid_point) : "-";
    std::snprintf(line, sizeof line, "%-16s %-22s %-25s %-25s %-25s %-25s %s\n", r.id.c_str(), point.c_str(),
                  fmt17(r.lhs).c_str(), fmt17(r.rhs).c_str(), fmt17(r.abs_residual).c_str(),
                  fmt17(r.tolerance).c_str(), r.pass ? "PASS" : "FAIL");
    out += line;
  }
  return out;
}

}  // namespace kummer::cli
