#include "repkit/hom.hpp"

#include "repkit/errors.hpp"

namespace repkit {

HomBasis::HomBasis(Rep source, Rep target)
    : source_(std::move(source)), target_(std::move(target)), space_(0) {
  if (source_.algebra != target_.algebra)
    throw ValidationError("hom_basis: different algebras");
  const Quiver& q = source_.algebra->quiver();
  int nv = q.num_vertices();

  // Unknown layout: per vertex v, the entries of f_v row-major.
  std::vector<int> unknown_off(nv + 1, 0);
  for (int v = 0; v < nv; ++v)
    unknown_off[v + 1] = unknown_off[v] + target_.dims[v] * source_.dims[v];
  int nunk = unknown_off[nv];

  std::size_t neq = 0;
  for (int a = 0; a < q.num_arrows(); ++a)
    neq += static_cast<std::size_t>(target_.dims[q.arrow(a).target]) * source_.dims[q.arrow(a).source];

  Mat c(neq, nunk);
  std::size_t eq = 0;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& arr = q.arrow(a);
    const Mat& na = target_.arrow_maps[a];  // target.dims[tgt] x target.dims[src]
    const Mat& ma = source_.arrow_maps[a];  // source.dims[tgt] x source.dims[src]
    // equation (i, j): sum_k na[i,k] f_src[k,j] - sum_l f_tgt[i,l] ma[l,j] = 0
    for (int i = 0; i < target_.dims[arr.target]; ++i)
      for (int j = 0; j < source_.dims[arr.source]; ++j) {
        for (int k = 0; k < target_.dims[arr.source]; ++k)
          if (na.at(i, k) != 0)
            c.at(eq, unknown_off[arr.source] + k * source_.dims[arr.source] + j) += na.at(i, k);
        for (int l = 0; l < source_.dims[arr.target]; ++l)
          if (ma.at(l, j) != 0)
            c.at(eq, unknown_off[arr.target] + i * source_.dims[arr.target] + l) -= ma.at(l, j);
        ++eq;
      }
  }

  space_ = Subspace::span(kernel_mat(c));
  for (std::size_t i = 0; i < space_.dim(); ++i) {
    Morph f = Morph::unflatten(source_, target_, space_.basis_vector(i));
    basis_.push_back(std::move(f));
  }
}

std::vector<Rat> HomBasis::coordinates(const Morph& f) const {
  auto c = space_.coordinates(f.flatten());
  if (!c) throw ValidationError("HomBasis::coordinates: not an intertwiner");
  return *c;
}

Morph HomBasis::from_coordinates(const std::vector<Rat>& coords) const {
  if (coords.size() != static_cast<std::size_t>(dim()))
    throw ValidationError("HomBasis::from_coordinates: wrong length");
  std::vector<Rat> flat(space_.ambient_dim(), Rat(0));
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] == 0) continue;
    auto row = space_.basis_vector(i);
    for (std::size_t j = 0; j < flat.size(); ++j) flat[j] += coords[i] * row[j];
  }
  return Morph::unflatten(source_, target_, flat);
}

HomBasis hom_basis(const Rep& m, const Rep& n) { return HomBasis(m, n); }

std::optional<Morph> lift_through(const Morph& f, const Morph& g) {
  HomBasis cands(f.source, g.source);
  auto b = f.flatten();
  Mat a(b.size(), cands.dim());
  for (int i = 0; i < cands.dim(); ++i) {
    auto col = compose(g, cands[i]).flatten();
    for (std::size_t r = 0; r < col.size(); ++r) a.at(r, i) = col[r];
  }
  auto x = solve(a, b);
  if (!x) return std::nullopt;
  return cands.from_coordinates(*x);
}

std::optional<Morph> colift_through(const Morph& f, const Morph& g) {
  HomBasis cands(g.target, f.target);
  auto b = f.flatten();
  Mat a(b.size(), cands.dim());
  for (int i = 0; i < cands.dim(); ++i) {
    auto col = compose(cands[i], g).flatten();
    for (std::size_t r = 0; r < col.size(); ++r) a.at(r, i) = col[r];
  }
  auto x = solve(a, b);
  if (!x) return std::nullopt;
  return cands.from_coordinates(*x);
}

} // namespace repkit
