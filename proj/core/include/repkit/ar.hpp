#pragma once

#include "repkit/decompose.hpp"
#include "repkit/submodule.hpp"

namespace repkit {

// Minimal projective presentation P1 -> P0 -> M -> 0 with the syzygy.
struct ProjPresentation {
  Rep module;
  ProjSum p0;
  Morph p; // p0.rep -> module, projective cover
  Rep syzygy;
  Morph syzygy_mono; // syzygy -> p0.rep
  ProjSum p1;
  Morph p1_to_syzygy; // projective cover of the syzygy
  Morph d;            // p1.rep -> p0.rep
};

ProjPresentation min_presentation(const Rep& m);

// Transpose over the opposite algebra and the AR translates.
Rep transpose_rep(const Rep& m);
Rep tau(const Rep& m);
Rep tau_inverse(const Rep& m);

// Ext^1(m, n) presented on cocycles Hom(Ω m, n) modulo restrictions from
// Hom(P0, n).
struct Ext1Space {
  ProjPresentation pres; // of m
  Rep n;
  HomBasis cocycles;     // Hom(Ω m, n)
  Subspace restricted;   // image of Hom(P0, n) in cocycle coordinates
  Mat class_projection;  // cocycle coords -> Ext class coords
  std::vector<Morph> representatives; // one cocycle per Ext class basis vector

  int dimension() const { return static_cast<int>(class_projection.rows()); }
  std::vector<Rat> class_of(const Morph& cocycle) const;
};

Ext1Space ext1(const Rep& m, const Rep& n);

struct ShortExact {
  Rep left, middle, right;
  Morph mono; // left -> middle
  Morph epi;  // middle -> right
  bool is_exact() const;
};

// Realizes the class of the given cocycle xi: Ω m -> n as 0 -> n -> E -> m -> 0.
ShortExact build_extension(const Ext1Space& ext, const Morph& xi);

// Push-out of f: Z -> X, g: Z -> Y; returns W with the two structure maps.
struct Pushout {
  Rep w;
  Morph from_x; // X -> W
  Morph from_y; // Y -> W
};
Pushout pushout(const Morph& f, const Morph& g);

// Almost split sequence 0 -> tau n -> E -> n -> 0 for indecomposable
// non-projective n. The right map is verified right-almost-split against
// `known` (every radical morphism X -> n factors through it).
ShortExact almost_split_sequence(const Rep& n, const std::vector<Rep>& known);

struct EnumerationLimits {
  int max_modules = 500;
  int max_dim = 60;
};

struct EnumerationResult {
  enum class Status { Finite, Undetermined };
  Status status = Status::Undetermined;
  std::vector<Rep> objects; // pairwise non-isomorphic indecomposables
  std::string reason;       // set when Undetermined
};

// Worklist closure from projectives and injectives under rad P, I/soc I,
// tau, tau^-1 and middle terms of almost split sequences.
EnumerationResult enumerate_indecomposables(AlgebraPtr a, const EnumerationLimits& limits = {});

} // namespace repkit
