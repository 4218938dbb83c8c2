#include "spinchain/io.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace spinchain {

std::string format_cell(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string format_cell(int v) { return std::to_string(v); }

std::string format_cell(const std::string& v) { return v; }

std::string CsvTable::to_string() const {
  std::ostringstream out;
  for (size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << '\n';
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << '\n';
  }
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << content;
  if (!f) throw std::runtime_error("failed writing output file: " + path);
}

nlohmann::json ResultRecord::to_json() const {
  return {{"schema_version", schema_version}, {"command", command},       {"params", params},
          {"payload", payload},               {"started_at", started_at}, {"finished_at", finished_at}};
}

ResultRecord ResultRecord::from_json(const nlohmann::json& j) {
  ResultRecord r;
  r.schema_version = j.at("schema_version").get<int>();
  r.command = j.at("command").get<std::string>();
  r.params = j.at("params");
  r.payload = j.at("payload");
  r.started_at = j.at("started_at").get<std::string>();
  r.finished_at = j.at("finished_at").get<std::string>();
  return r;
}

nlohmann::json params_to_json(const ModelParams& p) {
  nlohmann::json j;
  j["n_sites"] = p.n_sites;
  j["regime"] = to_string(p.regime);
  switch (p.regime) {
    case Regime::RealEtaHermitian:
      j["eta"] = p.eta;
      j["b"] = p.b;
      break;
    case Regime::ImagEtaHermitian:
      j["gamma"] = p.gamma;
      j["a"] = p.a;
      break;
    case Regime::NonHermitian:
      j["eta"] = p.eta;
      j["a"] = p.a;
      break;
  }
  return j;
}

std::string iso_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm_utc{};
  gmtime_r(&t, &tm_utc);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

}  // namespace spinchain
