#pragma once

#include "repkit/hom.hpp"

#include <optional>

namespace repkit {

// Per-vertex subspaces of a representation.
using VertexSubspaces = std::vector<Subspace>;

VertexSubspaces zero_subspaces(const Rep& m);
VertexSubspaces full_subspaces(const Rep& m);
bool is_subrep(const Rep& m, const VertexSubspaces& w);

// Representation on the subspaces with its inclusion; w must be arrow-closed.
std::pair<Rep, Morph> sub_rep(const Rep& m, const VertexSubspaces& w);
// Quotient representation with its projection.
std::pair<Rep, Morph> quotient_rep(const Rep& m, const VertexSubspaces& w);

// f: M -> N with ker f ⊇ w, epi: M -> M/w: the induced M/w -> N.
Morph factor_through_quotient(const Morph& epi, const Morph& f);
// f: M -> N with im f inside the sub given by mono: S -> N: the induced M -> S.
Morph factor_through_mono(const Morph& mono, const Morph& f);

struct KernelImageCokernel {
  Rep kernel;
  Morph kernel_mono; // kernel -> source
  Rep image;
  Morph image_mono; // image -> target
  Rep cokernel;
  Morph cokernel_epi; // target -> cokernel
};
KernelImageCokernel kernel_image_cokernel(const Morph& f);

VertexSubspaces image_subspaces(const Morph& f);
VertexSubspaces kernel_subspaces(const Morph& f);

struct RadTopSoc {
  Rep rad;
  Morph rad_mono;
  Rep top;
  Morph top_epi;
  Rep soc;
  Morph soc_mono;
};
RadTopSoc radical_top_socle(const Rep& m);

// P = ⊕ P(v)^{mult of S(v) in top m} with the cover epi; kernel(epi) ⊆ rad P.
std::pair<Rep, Morph> projective_cover(const Rep& m);
std::pair<Rep, Morph> injective_envelope(const Rep& m);

bool is_projective(const Rep& m);
bool is_injective(const Rep& m);

// ⊕ P(v_i) with the generator locations tracked.
struct ProjSum {
  Rep rep;
  std::vector<int> vertices;  // summand vertices
  std::vector<int> gen_index; // row index of the i-th generator inside rep at vertices[i]
  std::vector<std::vector<int>> block_offsets; // [summand][vertex]
};
ProjSum proj_sum(AlgebraPtr a, const std::vector<int>& vertices);
std::pair<ProjSum, Morph> projective_cover_sum(const Rep& m);
// The morphism ⊕ P(v_i) -> n sending the i-th generator to gen_images[i] (a
// vector in n at vertex v_i).
Morph morph_from_proj(const ProjSum& p, const Rep& n,
                      const std::vector<std::vector<Rat>>& gen_images);

} // namespace repkit
