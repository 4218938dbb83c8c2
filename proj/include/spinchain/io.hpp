#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "spinchain/types.hpp"

namespace spinchain {

// Floating-point cell rendering used by every CSV writer: 12 significant
// digits, locale independent, so repeated runs are byte-identical.
std::string format_cell(double v);
std::string format_cell(int v);
std::string format_cell(const std::string& v);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::string to_string() const;
};

void write_text_file(const std::string& path, const std::string& content);

// Schema-versioned result envelope for JSON output.
struct ResultRecord {
  int schema_version = 1;
  std::string command;
  nlohmann::json params;
  nlohmann::json payload;
  std::string started_at;
  std::string finished_at;

  nlohmann::json to_json() const;
  static ResultRecord from_json(const nlohmann::json& j);
  bool operator==(const ResultRecord&) const = default;
};

nlohmann::json params_to_json(const ModelParams& p);

std::string iso_timestamp();

}  // namespace spinchain
