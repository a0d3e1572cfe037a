#pragma once

#include <chrono>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "io.hpp"

namespace cordial {

/// Outcome of one CLI command. Inputs and verdicts keep insertion order.
struct RunReport {
  using Fields = std::vector<std::pair<std::string, std::string>>;

  std::string command;
  Fields inputs;
  Fields verdicts;
  std::chrono::microseconds timing{0};

  void input(std::string key, std::string value) { inputs.emplace_back(std::move(key), std::move(value)); }
  void verdict(std::string key, std::string value) {
    verdicts.emplace_back(std::move(key), std::move(value));
  }

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

inline nlohmann::ordered_json to_json(const RunReport& r) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  auto fields = [](const RunReport::Fields& f) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [k, v] : f) arr.push_back({k, v});
    return arr;
  };
  j["inputs"] = fields(r.inputs);
  j["verdicts"] = fields(r.verdicts);
  j["timing_us"] = r.timing.count();
  return j;
}

inline RunReport report_from_json(const nlohmann::ordered_json& j) {
  RunReport r;
  try {
    r.command = j.at("command").get<std::string>();
    for (const auto& kv : j.at("inputs")) r.input(kv.at(0).get<std::string>(), kv.at(1).get<std::string>());
    for (const auto& kv : j.at("verdicts"))
      r.verdict(kv.at(0).get<std::string>(), kv.at(1).get<std::string>());
    r.timing = std::chrono::microseconds(j.at("timing_us").get<std::int64_t>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
  return r;
}

inline std::string serialize_json(const RunReport& r) { return to_json(r).dump(); }

inline RunReport parse_json_report(const std::string& text) {
  try {
    return report_from_json(nlohmann::ordered_json::parse(text));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

// Key-value text form:
//   command = NAME
//   input.KEY = VALUE
//   verdict.KEY = VALUE
//   timing_us = N
inline std::string serialize_text(const RunReport& r) {
  std::ostringstream out;
  out << "command = " << r.command << '\n';
  for (const auto& [k, v] : r.inputs) out << "input." << k << " = " << v << '\n';
  for (const auto& [k, v] : r.verdicts) out << "verdict." << k << " = " << v << '\n';
  out << "timing_us = " << r.timing.count() << '\n';
  return out.str();
}

inline RunReport parse_text_report(const std::string& text) {
  RunReport r;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto sep = line.find(" = ");
    if (sep == std::string::npos) throw ParseError("malformed report line: " + line);
    const std::string key = line.substr(0, sep);
    std::string value = line.substr(sep + 3);
    if (key == "command") {
      r.command = value;
    } else if (key == "timing_us") {
      r.timing = std::chrono::microseconds(std::stoll(value));
    } else if (key.rfind("input.", 0) == 0) {
      r.input(key.substr(6), std::move(value));
    } else if (key.rfind("verdict.", 0) == 0) {
      r.verdict(key.substr(8), std::move(value));
    } else {
      throw ParseError("unknown report key: " + key);
    }
  }
  return r;
}

}  // namespace cordial
