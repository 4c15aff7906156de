#pragma once

#include <string>
#include <utility>
#include <vector>

namespace repkit {

// Deterministic command report: ordered key/value fields plus free-form
// payload lines, rendered as text or JSON byte-stably.
struct Report {
  std::string command;
  std::string algebra;
  std::string status = "OK"; // OK | FINITE | UNDETERMINED | FAIL
  std::vector<std::pair<std::string, std::string>> fields;
  std::vector<std::string> lines;

  void add(std::string key, std::string value) {
    fields.emplace_back(std::move(key), std::move(value));
  }
  void add(std::string key, long long value) {
    fields.emplace_back(std::move(key), std::to_string(value));
  }
  void line(std::string l) { lines.push_back(std::move(l)); }

  std::string to_text() const;
  std::string to_json() const;
};

} // namespace repkit
