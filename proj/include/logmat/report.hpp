#pragma once

// Machine-readable reports. A report is one ordered JSON document
//   { schema_version, command, params, results: [...], summary, timestamp? }
// with every rational serialized as an exact string ("n/d" or "inf"); no
// floating point anywhere. Ordered construction makes identical runs
// byte-identical, modulo the suppressible timestamp.

#include <json.hpp>

#include <ctime>
#include <ostream>
#include <string>
#include <vector>

#include "logmat/checks.hpp"
#include "logmat/logmatrix.hpp"
#include "logmat/rational.hpp"

namespace logmat {

using Json = nlohmann::ordered_json;

inline Json json_of(const ValMat& m) {
  return Json::array({Json::array({m.at(0, 0).str(), m.at(0, 1).str()}),
                      Json::array({m.at(1, 0).str(), m.at(1, 1).str()})});
}

struct Report {
  Json doc;

  static constexpr int schema_version = 1;

  explicit Report(const std::string& command) {
    doc["schema_version"] = schema_version;
    doc["command"] = command;
    doc["params"] = Json::object();
    doc["results"] = Json::array();
  }

  void param(const std::string& key, const std::string& value) { doc["params"][key] = value; }
  void param(const std::string& key, long value) { doc["params"][key] = value; }

  /// Every result item carries at least {"item": ..., "pass": ...}.
  void add(Json item) { doc["results"].push_back(std::move(item)); }

  void add_check_report(const CheckReport& rep, const std::string& prefix = "") {
    for (const auto& it : rep.items) {
      Json j;
      j["item"] = prefix.empty() ? it.name : prefix + ": " + it.name;
      j["pass"] = it.pass;
      if (!it.detail.empty()) j["detail"] = it.detail;
      add(std::move(j));
    }
  }

  int passed() const {
    int n = 0;
    for (const auto& r : doc["results"])
      if (r.value("pass", false)) ++n;
    return n;
  }
  int failed() const { return static_cast<int>(doc["results"].size()) - passed(); }

  void finalize(bool with_timestamp) {
    doc["summary"] = Json{{"passed", passed()}, {"failed", failed()}};
    if (with_timestamp) {
      std::time_t now = std::time(nullptr);
      std::tm tm{};
      gmtime_r(&now, &tm);
      char buf[32];
      std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
      doc["timestamp"] = buf;
    }
  }

  bool all_pass() const { return failed() == 0; }

  friend bool operator==(const Report& a, const Report& b) { return a.doc == b.doc; }

  std::string to_json() const { return doc.dump(2) + "\n"; }

  static Report from_json(const std::string& text) {
    Report r("");
    r.doc = Json::parse(text);
    return r;
  }
};

namespace detail {

inline void flatten_into(const Json& j, const std::string& prefix,
                         std::vector<std::pair<std::string, Json>>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items())
      flatten_into(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array()) {
    int idx = 0;
    for (const auto& v : j) flatten_into(v, prefix + "." + std::to_string(idx++), out);
  } else {
    out.emplace_back(prefix, j);
  }
}

inline std::string csv_cell(const Json& v) {
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    std::string quoted = "\"";
    for (char c : s) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    return quoted + "\"";
  }
  return v.dump();
}

}  // namespace detail

/// Flattens result items into one CSV row each; matrices become row-major
/// dotted columns. Headers come from the union of item keys in first-seen
/// order.
inline std::string report_to_csv(const Report& rep) {
  std::vector<std::string> headers;
  std::vector<std::vector<std::pair<std::string, Json>>> rows;
  for (const auto& item : rep.doc["results"]) {
    std::vector<std::pair<std::string, Json>> flat;
    detail::flatten_into(item, "", flat);
    for (const auto& [k, v] : flat)
      if (std::find(headers.begin(), headers.end(), k) == headers.end()) headers.push_back(k);
    rows.push_back(std::move(flat));
  }
  std::string out;
  for (std::size_t i = 0; i < headers.size(); ++i)
    out += (i ? "," : "") + headers[i];
  out += "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < headers.size(); ++i) {
      if (i) out += ",";
      for (const auto& [k, v] : row)
        if (k == headers[i]) {
          out += detail::csv_cell(v);
          break;
        }
    }
    out += "\n";
  }
  return out;
}

inline std::string report_to_text(const Report& rep, bool color) {
  const char* green = color ? "\033[32m" : "";
  const char* red = color ? "\033[31m" : "";
  const char* reset = color ? "\033[0m" : "";
  std::string out = "command: " + rep.doc["command"].get<std::string>() + "\n";
  if (!rep.doc["params"].empty()) {
    out += "params:";
    for (const auto& [k, v] : rep.doc["params"].items())
      out += " " + k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
    out += "\n";
  }
  for (const auto& item : rep.doc["results"]) {
    const bool pass = item.value("pass", false);
    out += pass ? std::string(green) + "[PASS]" + reset : std::string(red) + "[FAIL]" + reset;
    out += " " + item.value("item", std::string("?"));
    for (const auto& [k, v] : item.items()) {
      if (k == "item" || k == "pass") continue;
      out += "\n       " + k + " = " + (v.is_string() ? v.get<std::string>() : v.dump());
    }
    out += "\n";
  }
  if (rep.doc.contains("summary"))
    out += "summary: " + std::to_string(rep.doc["summary"]["passed"].get<int>()) + " passed, " +
           std::to_string(rep.doc["summary"]["failed"].get<int>()) + " failed\n";
  return out;
}

}  // namespace logmat
