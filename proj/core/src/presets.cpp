#include "repkit/presets.hpp"

#include "repkit/errors.hpp"

#include <map>

namespace repkit {

namespace {

// Kept as JSON text so every preset also exercises the parser.
const std::map<std::string, std::string>& preset_texts() {
  static const std::map<std::string, std::string> texts = {
      {"A1", R"({
  "name": "A1",
  "vertices": ["1"],
  "arrows": []
})"},
      {"A2", R"({
  "name": "A2",
  "vertices": ["1", "2"],
  "arrows": [{"name": "a", "from": "1", "to": "2"}]
})"},
      {"A3", R"({
  "name": "A3",
  "vertices": ["1", "2", "3"],
  "arrows": [
    {"name": "a", "from": "1", "to": "2"},
    {"name": "b", "from": "2", "to": "3"}
  ]
})"},
      {"N3", R"({
  "name": "N3",
  "vertices": ["1"],
  "arrows": [{"name": "x", "from": "1", "to": "1"}],
  "relations": [[{"coeff": "1", "path": ["x", "x", "x"]}]]
})"},
      {"kronecker", R"({
  "name": "kronecker",
  "vertices": ["1", "2"],
  "arrows": [
    {"name": "a", "from": "1", "to": "2"},
    {"name": "b", "from": "1", "to": "2"}
  ]
})"},
      {"QH4", R"({
  "name": "QH4",
  "vertices": ["1", "2", "3"],
  "arrows": [
    {"name": "a", "from": "1", "to": "2"},
    {"name": "b", "from": "2", "to": "3"}
  ],
  "relations": [[{"coeff": "1", "path": ["a", "b"]}]],
  "qh_order": ["2", "1", "3"]
})"}};
  return texts;
}

} // namespace

std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : preset_texts()) out.push_back(k);
  return out;
}

bool has_preset(const std::string& name) { return preset_texts().count(name) > 0; }

AlgebraFile preset(const std::string& name) {
  auto it = preset_texts().find(name);
  if (it == preset_texts().end())
    throw ValidationError("unknown preset '" + name + "'");
  return parse_algebra(it->second);
}

} // namespace repkit
