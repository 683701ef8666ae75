#pragma once

// JSON and CSV rendering of verification reports.
// Requires nlohmann/json (json.hpp) on the include path.

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "binomsum/approx.hpp"
#include "binomsum/identity_record.hpp"

namespace binomsum {

inline const std::vector<std::string>& report_columns() {
  static const std::vector<std::string> cols{"id", "params", "lhs", "rhs", "status", "residual", "bound"};
  return cols;
}

inline nlohmann::ordered_json to_json(const VerifyReport& r) {
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [name, value] : r.params.named()) params[name] = value;
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["params"] = std::move(params);
  j["lhs"] = r.lhs ? nlohmann::ordered_json(to_string(*r.lhs)) : nlohmann::ordered_json(nullptr);
  j["rhs"] = r.rhs ? nlohmann::ordered_json(to_string(*r.rhs)) : nlohmann::ordered_json(nullptr);
  j["status"] = std::string(to_string(r.status));
  j["residual"] = r.residual ? nlohmann::ordered_json(*r.residual) : nlohmann::ordered_json(nullptr);
  j["bound"] = r.bound ? nlohmann::ordered_json(*r.bound) : nlohmann::ordered_json(nullptr);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline nlohmann::ordered_json to_json(const std::vector<VerifyReport>& rs) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rs) arr.push_back(to_json(r));
  return arr;
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

}  // namespace detail

/// "n=1;a=1/2" style parameter cell.
inline std::string params_cell(const IdentityParams& p) {
  std::string out;
  for (const auto& [name, value] : p.named()) {
    if (!out.empty()) out += ';';
    out += name + '=' + value;
  }
  return out;
}

inline void write_csv_header(std::ostream& os) {
  const auto& cols = report_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  os << '\n';
}

inline void write_csv_row(std::ostream& os, const VerifyReport& r) {
  std::vector<std::string> cells{r.id,
                                 params_cell(r.params),
                                 r.lhs ? to_string(*r.lhs) : "",
                                 r.rhs ? to_string(*r.rhs) : "",
                                 std::string(to_string(r.status)),
                                 r.residual ? format_double(*r.residual) : "",
                                 r.bound ? format_double(*r.bound) : ""};
  for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << detail::csv_field(cells[i]);
  os << '\n';
}

inline void write_csv(std::ostream& os, const std::vector<VerifyReport>& rs) {
  write_csv_header(os);
  for (const auto& r : rs) write_csv_row(os, r);
}

/// One line per report: "<id> <params> <status> lhs=... rhs=...".
inline void write_plain(std::ostream& os, const VerifyReport& r) {
  os << r.id << ' ' << params_cell(r.params) << ' ' << to_string(r.status);
  if (r.lhs) os << " lhs=" << to_string(*r.lhs);
  if (r.rhs) os << " rhs=" << to_string(*r.rhs);
  if (r.residual) os << " residual=" << format_double(*r.residual);
  if (r.bound) os << " bound=" << format_double(*r.bound);
  if (!r.note.empty()) os << " (" << r.note << ')';
  os << '\n';
}

}  // namespace binomsum
