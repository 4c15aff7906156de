#pragma once

#include "repkit/ar.hpp"

namespace repkit {

// A finite list of pairwise non-isomorphic indecomposables together with the
// complete Hom table between them.
struct IndexedCategory {
  AlgebraPtr algebra;
  std::vector<Rep> objects;
  std::vector<std::vector<HomBasis>> hom; // hom[i][j] = Hom(X_i, X_j)
  bool is_full_module_category = false;

  int size() const { return static_cast<int>(objects.size()); }
  const HomBasis& hom_at(int i, int j) const { return hom[i][j]; }
};

// Builds the Hom table; throws ValidationError if two objects are isomorphic.
IndexedCategory make_category(AlgebraPtr a, std::vector<Rep> objects,
                              bool is_full_module_category = false);

// The category on the complement of `removed` (indices into c.objects).
IndexedCategory restrict(const IndexedCategory& c, const std::vector<int>& removed);

// Index of the object isomorphic to m, if any.
std::optional<int> find_object(const IndexedCategory& c, const Rep& m);

// Stable display name for object i: dimension vector plus a disambiguator
// index in enumeration order.
std::string object_name(const IndexedCategory& c, int i);

} // namespace repkit
