#pragma once

#include "repkit/radical.hpp"
#include "repkit/submodule.hpp"

namespace repkit {

enum class PartitionKind { Postprojective, Preinjective };

struct Partition {
  PartitionKind kind = PartitionKind::Postprojective;
  std::vector<std::vector<int>> levels; // object indices, level 0 first

  int summary() const { return static_cast<int>(levels.size()) - 1; }
  int level_of(int object) const; // -1 if absent
};

// Trace/reject of the ambient radical morphisms in object n.
struct TraceReject {
  int object = -1;
  VertexSubspaces trace;  // sum of images of radical morphisms into n
  VertexSubspaces reject; // intersection of kernels of radical morphisms out
};

// `active` lists the object indices forming the current subcategory; n must
// be among them. Splitting projective iff trace(n) is a proper submodule;
// splitting injective iff reject(n) is nonzero.
std::pair<bool, TraceReject> is_splitting_projective(const IndexedCategory& c,
                                                     const std::vector<int>& active,
                                                     int n);
std::pair<bool, TraceReject> is_splitting_injective(const IndexedCategory& c,
                                                    const std::vector<int>& active,
                                                    int n);

// Iterative peeling; throws EmptyLevelWithRemainder if a level comes out
// empty while objects remain.
Partition postprojective_partition(const IndexedCategory& c);
Partition preinjective_partition(const IndexedCategory& c);

// Level k must cover (resp. cocover) every object of the k-th truncated
// category, and be minimal for it (dropping any member breaks it).
CheckReport verify_cover(const IndexedCategory& c, const Partition& p, int k);
CheckReport verify_cocover(const IndexedCategory& c, const Partition& p, int k);

// Greedy explicit witness: an epi ⊕(level-k objects) -> X_x, resp. a mono
// X_x -> ⊕(level-k objects); throws CoverFailure when impossible.
Morph epi_from_cover(const IndexedCategory& c, const Partition& p, int x, int k);
Morph mono_into_cocover(const IndexedCategory& c, const Partition& p, int x, int k);

// For m in level k of the preinjective partition: monos
// m -> Z_{k-1} -> ... -> Z_0 with Z_j a sum of level-j objects.
struct MonoChain {
  std::vector<Morph> steps;
  std::vector<int> final_targets; // level-0 object indices composing Z_0
};
MonoChain preinjective_mono_chain(const IndexedCategory& c, const Partition& p,
                                  int m);

// Dual chain for m in level k of the postprojective partition: epis
// W_0 -> W_1 -> ... -> m with W_j a sum of level-j objects.
struct EpiChain {
  std::vector<Morph> steps;          // first step starts at the level-0 sum
  std::vector<int> initial_sources;  // level-0 object indices composing W_0
};
EpiChain postprojective_epi_chain(const IndexedCategory& c, const Partition& p,
                                  int m);

// Hom(M, N) = rad^i(M, N) for M in level 0, N in level i (and dually).
CheckReport verify_propdan(const RadTable& t, const Partition& p);

} // namespace repkit
