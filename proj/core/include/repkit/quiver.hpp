#pragma once

#include "repkit/rat.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace repkit {

struct Arrow {
  std::string name;
  int source; // vertex index
  int target;
};

// The vertex ordering is significant: it doubles as the quasi-hereditary
// ordering of the simple modules.
class Quiver {
public:
  Quiver(std::vector<std::string> vertices,
         std::vector<std::tuple<std::string, std::string, std::string>> arrows);

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }
  const std::string& vertex_name(int v) const { return vertices_[v]; }
  const Arrow& arrow(int a) const { return arrows_[a]; }
  int vertex_index(const std::string& name) const;
  int arrow_index(const std::string& name) const;
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  Quiver reversed() const; // same names, arrows flipped

private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, int> vertex_index_;
  std::map<std::string, int> arrow_index_;
};

// A path in a quiver: arrow indices in traversal order (first-traversed
// first). The empty path is the trivial path at `source` (= `target`).
struct Path {
  std::vector<int> arrows;
  int source = -1;
  int target = -1;

  static Path trivial(int v) { return Path{{}, v, v}; }
  std::size_t length() const { return arrows.size(); }
  bool is_trivial() const { return arrows.empty(); }
  bool operator==(const Path& o) const {
    return source == o.source && target == o.target && arrows == o.arrows;
  }
  // Degree-then-lexicographic order on arrow indices, refined by endpoints
  // so parallel-class bookkeeping stays deterministic.
  auto operator<=>(const Path& o) const {
    if (auto c = arrows.size() <=> o.arrows.size(); c != 0) return c;
    if (auto c = arrows <=> o.arrows; c != 0) return c;
    if (auto c = source <=> o.source; c != 0) return c;
    return target <=> o.target;
  }
};

// p followed by q (q's source must be p's target).
Path concat(const Path& p, const Path& q);
Path reversed_path(const Path& p); // same arrow indices, reversed order/endpoints
std::string path_to_string(const Quiver& q, const Path& p);

// One relation of an admissible ideal: a linear combination of parallel
// paths of length >= 2.
struct Relation {
  std::vector<std::pair<Rat, Path>> terms;
};

void validate_relation(const Quiver& q, const Relation& r);

} // namespace repkit
