#include "repkit/algebra_file.hpp"

#include "repkit/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <set>

namespace repkit {

namespace {

using nlohmann::json;

std::string require_string(const json& j, const std::string& key,
                           const std::string& where) {
  if (!j.contains(key) || !j[key].is_string())
    throw ValidationError(where + ": missing string field '" + key + "'");
  return j[key].get<std::string>();
}

} // namespace

AlgebraFile parse_algebra(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("algebra file: ") + e.what());
  }
  if (!j.is_object()) throw ValidationError("algebra file: top level must be an object");

  AlgebraFile f;
  f.name = j.value("name", std::string("unnamed"));

  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw ValidationError("algebra file: 'vertices' must be an array of names");
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) throw ValidationError("algebra file: vertex names must be strings");
    f.vertices.push_back(v.get<std::string>());
  }
  std::set<std::string> vset(f.vertices.begin(), f.vertices.end());
  if (vset.size() != f.vertices.size())
    throw ValidationError("algebra file: duplicate vertex name");
  if (f.vertices.empty()) throw ValidationError("algebra file: no vertices");

  std::set<std::string> aset;
  for (const auto& a : j.value("arrows", json::array())) {
    AlgebraFile::ArrowSpec spec;
    spec.name = require_string(a, "name", "arrow");
    spec.from = require_string(a, "from", "arrow " + spec.name);
    spec.to = require_string(a, "to", "arrow " + spec.name);
    if (!vset.count(spec.from))
      throw ValidationError("arrow " + spec.name + ": unknown vertex '" + spec.from + "'");
    if (!vset.count(spec.to))
      throw ValidationError("arrow " + spec.name + ": unknown vertex '" + spec.to + "'");
    if (!aset.insert(spec.name).second)
      throw ValidationError("algebra file: duplicate arrow name '" + spec.name + "'");
    f.arrows.push_back(std::move(spec));
  }

  for (const auto& rel : j.value("relations", json::array())) {
    if (!rel.is_array() || rel.empty())
      throw ValidationError("algebra file: each relation is a nonempty array of terms");
    std::vector<AlgebraFile::TermSpec> terms;
    for (const auto& t : rel) {
      AlgebraFile::TermSpec term;
      term.coeff = t.value("coeff", std::string("1"));
      if (!t.contains("path") || !t["path"].is_array() || t["path"].size() < 2)
        throw ValidationError("algebra file: relation paths need length >= 2");
      for (const auto& an : t["path"]) {
        if (!an.is_string())
          throw ValidationError("algebra file: path entries must be arrow names");
        std::string name = an.get<std::string>();
        if (!aset.count(name))
          throw ValidationError("algebra file: unknown arrow '" + name + "' in relation");
        term.path.push_back(std::move(name));
      }
      terms.push_back(std::move(term));
    }
    f.relations.push_back(std::move(terms));
  }

  for (const auto& v : j.value("qh_order", json::array())) {
    if (!v.is_string() || !vset.count(v.get<std::string>()))
      throw ValidationError("algebra file: qh_order entries must be vertex names");
    f.qh_order.push_back(v.get<std::string>());
  }
  if (f.qh_order.empty()) f.qh_order = f.vertices;
  std::set<std::string> oset(f.qh_order.begin(), f.qh_order.end());
  if (oset != vset)
    throw ValidationError("algebra file: qh_order must be a permutation of the vertices");
  return f;
}

std::string algebra_file_to_json(const AlgebraFile& f) {
  json j;
  j["name"] = f.name;
  j["vertices"] = f.vertices;
  j["arrows"] = json::array();
  for (const auto& a : f.arrows)
    j["arrows"].push_back({{"name", a.name}, {"from", a.from}, {"to", a.to}});
  j["relations"] = json::array();
  for (const auto& rel : f.relations) {
    json terms = json::array();
    for (const auto& t : rel)
      terms.push_back({{"coeff", t.coeff}, {"path", t.path}});
    j["relations"].push_back(terms);
  }
  j["qh_order"] = f.qh_order;
  return j.dump(2);
}

AlgebraPtr build_algebra(const AlgebraFile& f, int max_len) {
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  for (const auto& a : f.arrows) arrows.emplace_back(a.name, a.from, a.to);
  Quiver q(f.qh_order.empty() ? f.vertices : f.qh_order, arrows);

  std::vector<Relation> rels;
  for (const auto& rel : f.relations) {
    Relation r;
    for (const auto& t : rel) {
      Path p;
      for (const auto& an : t.path) {
        int ai = q.arrow_index(an);
        const Arrow& arr = q.arrow(ai);
        if (p.arrows.empty()) {
          p.source = arr.source;
        } else if (p.target != arr.source) {
          throw ValidationError("relation path not composable at arrow '" + an + "'");
        }
        p.arrows.push_back(ai);
        p.target = arr.target;
      }
      r.terms.emplace_back(rat_from_string(t.coeff), std::move(p));
    }
    validate_relation(q, r);
    rels.push_back(std::move(r));
  }
  return Algebra::make(std::move(q), std::move(rels), max_len);
}

} // namespace repkit
