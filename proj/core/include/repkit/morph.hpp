#pragma once

#include "repkit/rep.hpp"

#include <vector>

namespace repkit {

// Morphism of representations: one matrix per vertex, intertwining the
// arrow maps.
struct Morph {
  Rep source;
  Rep target;
  std::vector<Mat> mats; // per vertex v: target.dims[v] x source.dims[v]

  static Morph identity(const Rep& m);
  static Morph zero(const Rep& source, const Rep& target);

  bool is_valid() const; // intertwining equations hold exactly
  bool is_zero() const;
  bool is_mono() const;
  bool is_epi() const;
  bool is_iso() const;

  Morph operator+(const Morph& o) const;
  Morph operator-(const Morph& o) const;
  Morph scaled(const Rat& c) const;

  std::vector<Rat> flatten() const;
  static Morph unflatten(const Rep& source, const Rep& target, const std::vector<Rat>& flat);
};

// g after f.
Morph compose(const Morph& g, const Morph& f);

// Morph between the duals, matrices transposed.
Morph dual_morph(const Morph& f);

// Direct sum of representations with the canonical inclusions/projections.
struct DirectSum {
  Rep rep;
  std::vector<Morph> inclusions;
  std::vector<Morph> projections;
};
DirectSum direct_sum(const std::vector<Rep>& parts);

// ⊕ f_i : ⊕ source_i -> ⊕ target_i, block diagonal.
Morph block_diag(const std::vector<Morph>& fs);

// [f_1 ... f_k] : ⊕ source_i -> n, all f_i sharing target n.
Morph glue_from_sum(const DirectSum& sum, const std::vector<Morph>& fs);
// [f_1 ... f_k]^t : m -> ⊕ target_i.
Morph glue_into_sum(const DirectSum& sum, const std::vector<Morph>& fs);

} // namespace repkit
