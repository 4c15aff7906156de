#pragma once

#include "repkit/quiver.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace repkit {

// A linear combination of parallel-or-not paths; ordered map so the leading
// (greatest) term is *rbegin.
using PathPoly = std::map<Path, Rat>;

// kQ/I for an admissible ideal I, with the surviving path basis per vertex
// pair. Construction certifies admissibility by basis extinction: some
// length L must have no surviving path for any pair.
class Algebra : public std::enable_shared_from_this<Algebra> {
public:
  static std::shared_ptr<const Algebra> make(Quiver q, std::vector<Relation> rels,
                                             int max_len = 30);

  const Quiver& quiver() const { return quiver_; }
  const std::vector<Relation>& relations() const { return relations_; }
  int nilpotency_bound() const { return nilpotency_bound_; }
  int max_len() const { return max_len_; }

  // Basis paths u ⇝ v in degree-then-lexicographic order.
  const std::vector<Path>& basis_paths(int u, int v) const {
    return basis_[u][v];
  }
  int dim() const { return total_dim_; }
  int dim_pair(int u, int v) const { return static_cast<int>(basis_[u][v].size()); }
  // Index of a basis path within basis_paths(u,v); -1 if not a basis path.
  int basis_index(const Path& p) const;

  // Coordinates of the residue class of p in basis_paths(p.source, p.target).
  std::vector<Rat> normal_form(const Path& p) const;
  // Normal form of an arbitrary combination of parallel paths.
  std::vector<Rat> normal_form(const PathPoly& poly, int source, int target) const;

  std::shared_ptr<const Algebra> opposite() const;

private:
  Algebra() = default;
  Quiver quiver_{{}, {}};
  std::vector<Relation> relations_;
  int max_len_ = 0;
  int nilpotency_bound_ = 0;
  int total_dim_ = 0;
  std::vector<std::vector<std::vector<Path>>> basis_; // [u][v]
  std::map<Path, int> basis_pos_;
  std::vector<PathPoly> groebner_; // monic, interreduced, degree-truncated

  PathPoly reduce(PathPoly p) const;

  mutable std::mutex opp_mutex_;
  mutable std::shared_ptr<const Algebra> opp_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

} // namespace repkit
