#pragma once

#include "repkit/hom.hpp"
#include "repkit/submodule.hpp"

namespace repkit {

// End(m) with its multiplication table in the canonical Hom basis and its
// Jacobson radical. The radical is the kernel of the trace form
// (x, y) -> tr(L_x L_y), which is correct over a field of characteristic
// zero; this is one reason the base field is fixed to the rationals.
struct EndAlgebra {
  HomBasis hom;
  std::vector<Mat> left_mult; // per basis element: matrix of x∘(-) in coords
  std::vector<Rat> identity_coords;
  Subspace radical;

  int dim() const { return hom.dim(); }
  std::vector<Rat> mul(const std::vector<Rat>& a, const std::vector<Rat>& b) const;
  Mat left_mult_of(const std::vector<Rat>& a) const;
};

EndAlgebra end_algebra(const Rep& m);
Subspace radical_of_end(const Rep& m);

// --- small dense polynomial helpers over Q (coefficients ascending) ---
using Poly = std::vector<Rat>;

Poly poly_trim(Poly p);
Poly poly_mul(const Poly& a, const Poly& b);
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly poly_gcd(Poly a, Poly b); // monic
Poly poly_derivative(const Poly& p);
int poly_deg(const Poly& p);

// All rational roots with multiplicity 1 entry each.
std::vector<Rat> rational_roots(const Poly& p);

// A factorization f = f1 * f2 with gcd(f1, f2) = 1 and both nonconstant,
// if one can be found (rational roots, squarefree splitting, Kronecker
// fallback for small degrees). nullopt means no split was found.
std::optional<std::pair<Poly, Poly>> coprime_split(const Poly& f);

} // namespace repkit
