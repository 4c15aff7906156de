#pragma once

#include "repkit/check.hpp"
#include "repkit/indexed_category.hpp"

namespace repkit {

// rad(X_i, X_j) inside the Hom-basis coordinates of c: the full Hom space
// for i != j, the radical of End(X_i) for i == j.
Subspace rad_basis(const IndexedCategory& c, int i, int j);

// The chain rad^1 ⊇ rad^2 ⊇ ... in Hom-basis coordinates, iterated to the
// global fixed point (then rad^∞ = the stabilized table) or to max_power.
struct RadTable {
  IndexedCategory category;
  // powers[n-1][i][j] = rad^n(X_i, X_j); the last entry repeats forever once
  // stabilized.
  std::vector<std::vector<std::vector<Subspace>>> powers;
  bool stabilized = false;
  int stabilization_index = -1; // N0: least n with rad^n = rad^{n+1}

  // rad^n(i, j) for n >= 1; values beyond the table clamp to the last row,
  // which is exact when stabilized and an upper bound otherwise.
  const Subspace& power(int i, int j, int n) const;
  const std::vector<std::vector<Subspace>>& rad_infinity() const;
};

RadTable rad_power_table(const IndexedCategory& c, int max_power = 256);

// Depth of a morphism relative to the table: 0 when f ∉ rad, n when
// f ∈ rad^n \ rad^{n+1}, infinite when f ∈ rad^∞.
struct Depth {
  bool infinite = false;
  int value = 0;
  std::string to_string() const { return infinite ? "inf" : std::to_string(value); }
  bool operator==(const Depth&) const = default;
};

Depth depth(const RadTable& t, int i, int j, const Morph& f);

// Conjugates f to a morphism between the category objects isomorphic to its
// endpoints; throws InternalInconsistency if either is missing.
std::tuple<int, int, Morph> transport(const IndexedCategory& c, const Morph& f);

// (rad^∞)²(i, j) = Σ_k span of compositions through k.
std::vector<std::vector<Subspace>> rad_inf_square(const RadTable& t);
bool is_rad_inf_square_zero(const RadTable& t);

// Per simple S(v): the fixed projective cover π, injective envelope ι and
// θ = ι ∘ π.
struct SimpleEnvelope {
  Rep s, p, i;
  Morph pi;    // p -> s
  Morph iota;  // s -> i
  Morph theta; // p -> i
};
std::vector<SimpleEnvelope> simple_envelopes(AlgebraPtr a);

struct FiniteTypeCertificate {
  enum class Status { Finite, Undetermined };
  Status status = Status::Undetermined;
  std::string reason; // set when Undetermined
  int module_count = 0;
  IndexedCategory category; // enumerated objects (partial when Undetermined)
  RadTable table;           // bounded approximation when Undetermined
  CheckReport report;       // the certificate clause checks, only run when Finite
  std::vector<Depth> dp_pi, dp_iota; // per simple, vertex order
};

// Enumerates mod A; when the enumeration closes, certifies finite type and
// checks the equivalent characterizations (finite depths of every π_S and
// ι_S, θ_S ∉ (rad^∞)², (rad^∞)² = 0); any failed check there throws
// InternalInconsistency.
FiniteTypeCertificate finite_type_certificate(AlgebraPtr a,
                                              const EnumerationLimits& limits = {},
                                              int max_power = 256);

} // namespace repkit
