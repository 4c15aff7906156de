#pragma once

#include "repkit/endo.hpp"

#include <optional>

namespace repkit {

struct Summand {
  Rep rep;
  int multiplicity = 1;
  // Split witnesses for the first copy: epi ∘ mono = id, and the idempotents
  // mono_i ∘ epi_i over all copies sum to the identity of the input.
  std::vector<Morph> monos; // one per copy, X -> m
  std::vector<Morph> epis;  // one per copy, m -> X
  // Set when End/rad is (as far as the search can tell) a division algebra
  // of dimension > 1 over Q; the summand is still indecomposable.
  bool division_algebra_end = false;
};

// Complete decomposition into indecomposables. Zero module -> empty list.
std::vector<Summand> decompose(const Rep& m);

bool is_indecomposable(const Rep& m);

// An explicit isomorphism, or nullopt. The search is a deterministic
// widening schedule of small-integer combinations of a Hom basis; failure
// after the schedule plus the dimension prechecks is treated as conclusive.
std::optional<Morph> is_isomorphic(const Rep& m, const Rep& n);

} // namespace repkit
