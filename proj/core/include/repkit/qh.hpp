#pragma once

#include "repkit/partition.hpp"

namespace repkit {

// Standard and costandard modules for the vertex ordering of the quiver
// (vertex order doubles as the quasi-hereditary order), plus the
// characteristic tilting data once computed.
struct QHData {
  AlgebraPtr algebra;
  std::vector<Rep> delta;  // Δ(i) at index i
  std::vector<Morph> pi;   // P(i) -> Δ(i)
  std::vector<Rep> nabla;  // ∇(i)
  std::vector<Rep> T;      // characteristic modules, filled by characteristic_modules
  std::vector<Morph> beta; // Δ(i) -> T(i)
  std::vector<Rep> X;      // cokernel of beta(i)
};

// Δ(i) = P(i) / (trace of all P(j), j > i); ∇(i) dual inside I(i).
QHData make_qh_data(AlgebraPtr a);

// Two checks: End(Δ(i)) one-dimensional, and every P(i) has a Δ-filtration
// with top layer Δ(i) and deeper layers Δ(j), j > i.
CheckReport is_quasi_hereditary(const QHData& qh);

struct DeltaFiltration {
  Rep module;
  // Layer indices top-to-bottom: the first entry i gives the epi
  // module -> Δ(i), the next filters its kernel, and so on.
  std::vector<int> layers;
};

// Backtracking construction; nullopt iff m has no Δ-filtration.
std::optional<DeltaFiltration> delta_filtration(const QHData& qh, const Rep& m);

// Ext¹(m, ∇(j)) = 0 for all j, cross-checked against delta_filtration;
// disagreement throws InternalInconsistency.
bool delta_membership(const QHData& qh, const Rep& m);

// Universal extension of m by Δ(j): 0 -> m -> E -> Δ(j)^e -> 0 with
// e = dim Ext¹(Δ(j), m) and Ext¹(Δ(j), E) = 0 afterwards.
struct UniversalExtension {
  Rep e;
  Morph mono; // m -> e
  Morph epi;  // e -> Δ(j)^e
};
UniversalExtension universal_extension(const QHData& qh, const Rep& m, int j);

// Fills T, beta, X by descending universal extensions j = i-1 .. 0 and
// verifies the Ext-injectivity and F(Δ) postconditions.
void characteristic_modules(QHData& qh);

// F(Δ) inside a closed enumeration of mod A, with its relative radical
// table and both partitions.
struct DeltaGoodCategory {
  std::vector<int> base_indices; // objects of `base` lying in F(Δ)
  IndexedCategory fdelta;
  RadTable rad_table;
  Partition post, pre;
  int p_delta = -1, q_delta = -1;
};

DeltaGoodCategory delta_good_category(const QHData& qh, const IndexedCategory& base,
                                      int max_power = 256);

// The F(Δ) verification suite: level-0 identification, finite depths of
// π(i) and β(i), (rad_Δ^∞)² = 0, the p(Δ)/q(Δ) bounds, the relative
// Hom = rad_Δ^i identity, and the mono-chain witnesses.
CheckReport verify_section4(const QHData& qh, const DeltaGoodCategory& dgc);

} // namespace repkit
