#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "holoform/measures.hpp"
#include "holoform/theoremlab.hpp"

namespace holoform {

struct ResultRow {
  std::string label;
  std::vector<std::pair<std::string, std::string>> params;
  double value = 0.0;
  double refinement_delta = 0.0;
  bool pass = true;
  std::string error;  // non-empty for a row whose computation failed
};

struct ResultTable {
  std::string command;
  std::uint64_t seed = 0;
  std::vector<ResultRow> rows;
  nlohmann::json extra = nlohmann::json::object();
  /// Extra files written next to the table: (file name, contents).
  std::vector<std::pair<std::string, std::string>> attachments;

  bool all_pass() const;
};

/// %.12g, switching to %.12e when 0 < |x| < 1e-4; inf and nan spelled out.
std::string format_number(double x);

/// Header `label,params,value,refinement_delta,pass,error`; params joined as k=v;k=v.
/// No timestamp, so equal tables give equal bytes.
std::string to_csv(const ResultTable& t);

/// Rows plus metadata (tool version, seed, command, UTC timestamp).
nlohmann::json to_json(const ResultTable& t, bool with_timestamp = true);

/// Per-arc table `theta0,len,ratio`.
std::string carleson_csv(const CarlesonReport& r);
nlohmann::json carleson_json(const CarlesonReport& r, double refinement_delta);

nlohmann::json to_json(const ComparabilityReport& r);

/// Adds one row per report (value = ratio, delta = refinement delta).
void append_reports(ResultTable& t, const std::vector<ComparabilityReport>& reports);

void write_text_file(const std::string& path, const std::string& text);

/// <dir>/<command>.csv, <dir>/<command>.json and the attachments; creates dir if needed.
void write_outputs(const ResultTable& t, const std::string& dir);

const char* version_string();

}  // namespace holoform
