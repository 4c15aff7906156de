#pragma once

// Shared helpers for the test and acceptance binaries: deterministic RNG,
// preset loading, random module construction, an independent chain-enumeration
// oracle for radical powers, and the randomized property suites.

#include <repkit/commands.hpp>
#include <repkit/decompose.hpp>
#include <repkit/presets.hpp>
#include <repkit/qh.hpp>

#include <random>
#include <string>
#include <vector>

namespace testsupport {

using namespace repkit;

inline AlgebraPtr algebra(const std::string& name) {
  return build_algebra(preset(name));
}

// The full list of indecomposables for a finite-type preset; throws if the
// enumeration does not close.
std::vector<Rep> indec_pool(AlgebraPtr a);

// Finds the pool entry isomorphic to dims (unique for the presets used here).
const Rep& by_dims(const std::vector<Rep>& pool, const std::vector<int>& dims);

// Random invertible change of basis at every vertex; the result is isomorphic
// to m but has scrambled matrices.
Rep base_change(const Rep& m, std::mt19937& rng);

// Direct sum of 1..max_parts random pool members.
Rep random_sum(const std::vector<Rep>& pool, std::mt19937& rng, int max_parts = 3);

// rad^n(i, j) computed by explicit chain enumeration: the span of all
// composites b_n ∘ ... ∘ b_1 where b_t runs over a basis of
// rad(X_{k_{t-1}}, X_{k_t}) and (k_0 = i, k_1, ..., k_n = j) runs over all
// intermediate vertex sequences. Independent of the table recursion.
Subspace chain_rad_power(const IndexedCategory& c, int i, int j, int n);

// Depth of f recomputed against chain_rad_power up to max_n; returns the
// same Depth convention as the table-based routine (infinite if still inside
// at max_n, which callers choose past the stabilization index).
Depth chain_depth(const IndexedCategory& c, int i, int j, const Morph& f, int max_n);

// Property suites. Each runs at least `cases` randomized checks and returns
// one message per failure (empty = all passed).
std::vector<std::string> suite_intertwining(int cases, unsigned seed);
std::vector<std::string> suite_krull_schmidt(int cases, unsigned seed);
std::vector<std::string> suite_tau_inverse(int cases, unsigned seed);
std::vector<std::string> suite_rad_ideal(int cases, unsigned seed);
std::vector<std::string> suite_linalg(int cases, unsigned seed);

} // namespace testsupport
