#include "repkit/report.hpp"

#include <nlohmann/json.hpp>

namespace repkit {

std::string Report::to_text() const {
  std::string out;
  out += "command: " + command + "\n";
  out += "algebra: " + algebra + "\n";
  for (const auto& [k, v] : fields) out += k + ": " + v + "\n";
  for (const auto& l : lines) out += l + "\n";
  out += "status: " + status + "\n";
  return out;
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["algebra"] = algebra;
  nlohmann::ordered_json f = nlohmann::ordered_json::object();
  for (const auto& [k, v] : fields) f[k] = v;
  j["fields"] = f;
  j["lines"] = lines;
  j["status"] = status;
  return j.dump(2) + "\n";
}

} // namespace repkit
