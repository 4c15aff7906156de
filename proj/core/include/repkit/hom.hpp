#pragma once

#include "repkit/morph.hpp"
#include "repkit/subspace.hpp"

namespace repkit {

// Canonical basis of Hom(source, target), computed as the kernel of the
// stacked intertwining system. Coordinates round-trip exactly.
class HomBasis {
public:
  HomBasis(Rep source, Rep target);

  const Rep& source() const { return source_; }
  const Rep& target() const { return target_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Morph>& basis() const { return basis_; }
  const Morph& operator[](std::size_t i) const { return basis_[i]; }
  const Subspace& space() const { return space_; }

  std::vector<Rat> coordinates(const Morph& f) const; // throws if not a morphism here
  Morph from_coordinates(const std::vector<Rat>& coords) const;

private:
  Rep source_, target_;
  std::vector<Morph> basis_;
  Subspace space_;
};

HomBasis hom_basis(const Rep& m, const Rep& n);

// Some h with g ∘ h = f (f: X -> Z, g: Y -> Z), or nullopt.
std::optional<Morph> lift_through(const Morph& f, const Morph& g);
// Some h with h ∘ g = f (f: X -> Z, g: X -> Y), or nullopt.
std::optional<Morph> colift_through(const Morph& f, const Morph& g);

} // namespace repkit
