#include "repkit/quiver.hpp"

#include "repkit/errors.hpp"

namespace repkit {

Quiver::Quiver(std::vector<std::string> vertices,
               std::vector<std::tuple<std::string, std::string, std::string>> arrows)
    : vertices_(std::move(vertices)) {
  for (int i = 0; i < static_cast<int>(vertices_.size()); ++i) {
    if (!vertex_index_.emplace(vertices_[i], i).second)
      throw ValidationError("duplicate vertex name '" + vertices_[i] + "'");
  }
  for (const auto& [name, from, to] : arrows) {
    auto fi = vertex_index_.find(from);
    auto ti = vertex_index_.find(to);
    if (fi == vertex_index_.end()) throw ValidationError("arrow '" + name + "': unknown source '" + from + "'");
    if (ti == vertex_index_.end()) throw ValidationError("arrow '" + name + "': unknown target '" + to + "'");
    int idx = static_cast<int>(arrows_.size());
    if (!arrow_index_.emplace(name, idx).second)
      throw ValidationError("duplicate arrow name '" + name + "'");
    arrows_.push_back(Arrow{name, fi->second, ti->second});
  }
}

int Quiver::vertex_index(const std::string& name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) throw ValidationError("unknown vertex '" + name + "'");
  return it->second;
}

int Quiver::arrow_index(const std::string& name) const {
  auto it = arrow_index_.find(name);
  if (it == arrow_index_.end()) throw ValidationError("unknown arrow '" + name + "'");
  return it->second;
}

Quiver Quiver::reversed() const {
  std::vector<std::tuple<std::string, std::string, std::string>> arrs;
  for (const auto& a : arrows_)
    arrs.emplace_back(a.name, vertices_[a.target], vertices_[a.source]);
  return Quiver(vertices_, arrs);
}

Path concat(const Path& p, const Path& q) {
  if (p.target != q.source) throw ValidationError("concat: paths do not compose");
  Path r;
  r.arrows = p.arrows;
  r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
  r.source = p.source;
  r.target = q.target;
  return r;
}

Path reversed_path(const Path& p) {
  Path r;
  r.arrows.assign(p.arrows.rbegin(), p.arrows.rend());
  r.source = p.target;
  r.target = p.source;
  return r;
}

std::string path_to_string(const Quiver& q, const Path& p) {
  if (p.is_trivial()) return "e_" + q.vertex_name(p.source);
  std::string s;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += "*";
    s += q.arrow(p.arrows[i]).name;
  }
  return s;
}

void validate_relation(const Quiver& q, const Relation& r) {
  if (r.terms.empty()) throw ValidationError("relation has no terms");
  bool has_nonzero = false;
  int src = r.terms.front().second.source;
  int tgt = r.terms.front().second.target;
  for (const auto& [coeff, path] : r.terms) {
    if (coeff != 0) has_nonzero = true;
    if (path.length() < 2)
      throw ValidationError("relation term of length < 2");
    if (path.source != src || path.target != tgt)
      throw ValidationError("relation terms are not parallel");
    int at = path.source;
    for (int a : path.arrows) {
      if (a < 0 || a >= q.num_arrows()) throw ValidationError("relation references unknown arrow");
      if (q.arrow(a).source != at) throw ValidationError("relation path does not compose");
      at = q.arrow(a).target;
    }
    if (at != path.target) throw ValidationError("relation path endpoint mismatch");
  }
  if (!has_nonzero) throw ValidationError("relation has all-zero coefficients");
}

} // namespace repkit
