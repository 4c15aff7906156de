#pragma once

#include "repkit/algebra.hpp"
#include "repkit/matrix.hpp"

#include <vector>

namespace repkit {

// A module over the algebra as a quiver representation: a space per vertex,
// a matrix per arrow. A path acts by composing its arrow maps in traversal
// order (first arrow applied first).
struct Rep {
  AlgebraPtr algebra;
  std::vector<int> dims;       // per vertex
  std::vector<Mat> arrow_maps; // per arrow a: u -> v, shape dims[v] x dims[u]

  int total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  Mat path_action(const Path& p) const;
  bool relations_hold() const;
  std::vector<int> vertex_offsets() const; // flat layout, vertex order

  bool operator==(const Rep& o) const {
    return algebra == o.algebra && dims == o.dims && arrow_maps == o.arrow_maps;
  }
};

Rep zero_rep(AlgebraPtr a);
Rep projective_rep(AlgebraPtr a, int v);
Rep simple_rep(AlgebraPtr a, int v);
Rep injective_rep(AlgebraPtr a, int v);

// The same spaces over the opposite algebra, all matrices transposed.
Rep dual_rep(const Rep& m);

std::string dim_vector_string(const Rep& m);

} // namespace repkit
