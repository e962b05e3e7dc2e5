#include "holoform/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace holoform {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join_params(const std::vector<std::pair<std::string, std::string>>& params) {
  std::string out;
  for (const auto& [k, v] : params) {
    if (!out.empty()) out += ';';
    out += k + "=" + v;
  }
  return out;
}

// JSON has no inf or nan; those values go out as strings.
nlohmann::json json_number(double x) {
  if (std::isfinite(x)) return x;
  return format_number(x);
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

const char* version_string() {
  return "0.1.0";
}

bool ResultTable::all_pass() const {
  for (const auto& r : rows) {
    if (!r.pass) return false;
  }
  return true;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const double ax = std::fabs(x);
  if (ax != 0.0 && ax < 1e-4) {
    std::snprintf(buf, sizeof buf, "%.12e", x);
  } else {
    std::snprintf(buf, sizeof buf, "%.12g", x);
  }
  return buf;
}

std::string to_csv(const ResultTable& t) {
  std::string out = "label,params,value,refinement_delta,pass,error\n";
  for (const auto& r : t.rows) {
    out += csv_field(r.label) + "," + csv_field(join_params(r.params)) + "," + format_number(r.value) + "," +
           format_number(r.refinement_delta) + "," + (r.pass ? "true" : "false") + "," + csv_field(r.error) + "\n";
  }
  return out;
}

nlohmann::json to_json(const ResultTable& t, bool with_timestamp) {
  nlohmann::json meta = {{"version", version_string()}, {"seed", t.seed}, {"command", t.command}};
  if (with_timestamp) meta["timestamp"] = utc_timestamp();
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : t.rows) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    nlohmann::json row = {{"label", r.label},
                          {"params", params},
                          {"value", json_number(r.value)},
                          {"refinement_delta", json_number(r.refinement_delta)},
                          {"pass", r.pass}};
    if (!r.error.empty()) row["error"] = r.error;
    rows.push_back(row);
  }
  nlohmann::json j = {{"metadata", meta}, {"all_pass", t.all_pass()}, {"rows", rows}};
  if (!t.extra.empty()) j["details"] = t.extra;
  return j;
}

std::string carleson_csv(const CarlesonReport& r) {
  std::string out = "theta0,len,ratio\n";
  for (const auto& [arc, ratio] : r.per_arc) {
    out += format_number(arc.theta0) + "," + format_number(arc.len) + "," + format_number(ratio) + "\n";
  }
  return out;
}

nlohmann::json carleson_json(const CarlesonReport& r, double refinement_delta) {
  return {{"sup", json_number(r.sup_value)},
          {"argmax", {{"theta0", r.argmax.theta0}, {"len", r.argmax.len}}},
          {"refinement_delta", json_number(refinement_delta)}};
}

nlohmann::json to_json(const ComparabilityReport& r) {
  return {{"label", r.label},
          {"left", json_number(r.left)},
          {"right", json_number(r.right)},
          {"ratio", json_number(r.ratio)},
          {"slack", r.slack},
          {"pass", r.pass},
          {"refinement_delta", json_number(r.refinement_delta)},
          {"left_delta", json_number(r.left_delta)},
          {"right_delta", json_number(r.right_delta)},
          {"left_finite", r.left_finite},
          {"right_finite", r.right_finite},
          {"mode", r.mode == CompareMode::OneSided ? "one-sided" : "two-sided"},
          {"classification", r.classification}};
}

void append_reports(ResultTable& t, const std::vector<ComparabilityReport>& reports) {
  if (!t.extra.contains("reports")) t.extra["reports"] = nlohmann::json::array();
  for (const auto& r : reports) {
    ResultRow row;
    row.label = r.label;
    row.params = {{"left", format_number(r.left)},
                  {"right", format_number(r.right)},
                  {"slack", format_number(r.slack)},
                  {"class", r.classification}};
    row.value = r.ratio;
    row.refinement_delta = r.refinement_delta;
    row.pass = r.pass;
    t.rows.push_back(std::move(row));
    t.extra["reports"].push_back(to_json(r));
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

void write_outputs(const ResultTable& t, const std::string& dir) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path base(dir);
  write_text_file((base / (t.command + ".csv")).string(), to_csv(t));
  write_text_file((base / (t.command + ".json")).string(), to_json(t).dump(2) + "\n");
  for (const auto& [name, text] : t.attachments) write_text_file((base / name).string(), text);
}

}  // namespace holoform
