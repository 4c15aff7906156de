#include "repkit/submodule.hpp"

#include "repkit/errors.hpp"

#include <cassert>

namespace repkit {

VertexSubspaces zero_subspaces(const Rep& m) {
  VertexSubspaces w;
  for (int d : m.dims) w.push_back(Subspace::zero(d));
  return w;
}

VertexSubspaces full_subspaces(const Rep& m) {
  VertexSubspaces w;
  for (int d : m.dims) w.push_back(Subspace::full(d));
  return w;
}

bool is_subrep(const Rep& m, const VertexSubspaces& w) {
  const Quiver& q = m.algebra->quiver();
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& arr = q.arrow(a);
    for (std::size_t i = 0; i < w[arr.source].dim(); ++i) {
      auto img = m.arrow_maps[a].apply(w[arr.source].basis_vector(i));
      if (!w[arr.target].contains(img)) return false;
    }
  }
  return true;
}

std::pair<Rep, Morph> sub_rep(const Rep& m, const VertexSubspaces& w) {
  assert(is_subrep(m, w));
  const Quiver& q = m.algebra->quiver();
  Rep s;
  s.algebra = m.algebra;
  s.dims.resize(q.num_vertices());
  std::vector<Mat> inc(q.num_vertices()); // m.dims[v] x w[v].dim()
  for (int v = 0; v < q.num_vertices(); ++v) {
    s.dims[v] = static_cast<int>(w[v].dim());
    inc[v] = w[v].basis().transpose();
  }
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& arr = q.arrow(a);
    auto sa = solve_mat(inc[arr.target], m.arrow_maps[a] * inc[arr.source]);
    if (!sa) throw InternalInconsistency("sub_rep: subspaces not arrow-closed");
    s.arrow_maps.push_back(std::move(*sa));
  }
  Morph mono;
  mono.source = s;
  mono.target = m;
  mono.mats = std::move(inc);
  return {std::move(s), std::move(mono)};
}
std::pair<Rep, Morph> quotient_rep(const Rep& m, const VertexSubspaces& w) {
  assert(is_subrep(m, w));
  const Quiver& q = m.algebra->quiver();
  Rep qr;
  qr.algebra = m.algebra;
  qr.dims.resize(q.num_vertices());
  std::vector<Mat> proj(q.num_vertices());
  for (int v = 0; v < q.num_vertices(); ++v) {
    proj[v] = quotient_projection(w[v]);
    qr.dims[v] = static_cast<int>(proj[v].rows());
  }
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& arr = q.arrow(a);
    // qa * proj_src = proj_tgt * m_a; proj_src is surjective.
    Mat rhs = (proj[arr.target] * m.arrow_maps[a]).transpose();
    auto qat = solve_mat(proj[arr.source].transpose(), rhs);
    if (!qat) throw InternalInconsistency("quotient_rep: projection solve failed");
    qr.arrow_maps.push_back(qat->transpose());
  }
  Morph epi;
  epi.source = m;
  epi.target = qr;
  epi.mats = std::move(proj);
  return {std::move(qr), std::move(epi)};
}

Morph factor_through_quotient(const Morph& epi, const Morph& f) {
  Morph g;
  g.source = epi.target;
  g.target = f.target;
  for (std::size_t v = 0; v < f.mats.size(); ++v) {
    auto gt = solve_mat(epi.mats[v].transpose(), f.mats[v].transpose());
    if (!gt) throw InternalInconsistency("factor_through_quotient: kernel not contained");
    g.mats.push_back(gt->transpose());
  }
  return g;
}

Morph factor_through_mono(const Morph& mono, const Morph& f) {
  Morph g;
  g.source = f.source;
  g.target = mono.source;
  for (std::size_t v = 0; v < f.mats.size(); ++v) {
    auto gv = solve_mat(mono.mats[v], f.mats[v]);
    if (!gv) throw InternalInconsistency("factor_through_mono: image not contained");
    g.mats.push_back(std::move(*gv));
  }
  return g;
}

VertexSubspaces image_subspaces(const Morph& f) {
  VertexSubspaces w;
  for (const auto& m : f.mats) w.push_back(Subspace::span(m.transpose()));
  return w;
}

VertexSubspaces kernel_subspaces(const Morph& f) {
  VertexSubspaces w;
  for (const auto& m : f.mats) w.push_back(Subspace::span(kernel_mat(m)));
  return w;
}

KernelImageCokernel kernel_image_cokernel(const Morph& f) {
  KernelImageCokernel out;
  auto kw = kernel_subspaces(f);
  std::tie(out.kernel, out.kernel_mono) = sub_rep(f.source, kw);
  auto iw = image_subspaces(f);
  std::tie(out.image, out.image_mono) = sub_rep(f.target, iw);
  std::tie(out.cokernel, out.cokernel_epi) = quotient_rep(f.target, iw);
  return out;
}

RadTopSoc radical_top_socle(const Rep& m) {
  const Quiver& q = m.algebra->quiver();
  RadTopSoc out;
  VertexSubspaces rad = zero_subspaces(m);
  VertexSubspaces soc = full_subspaces(m);
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& arr = q.arrow(a);
    rad[arr.target] = rad[arr.target].sum(Subspace::span(m.arrow_maps[a].transpose()));
    soc[arr.source] = soc[arr.source].intersect(Subspace::span(kernel_mat(m.arrow_maps[a])));
  }
  std::tie(out.rad, out.rad_mono) = sub_rep(m, rad);
  std::tie(out.top, out.top_epi) = quotient_rep(m, rad);
  std::tie(out.soc, out.soc_mono) = sub_rep(m, soc);
  return out;
}

ProjSum proj_sum(AlgebraPtr a, const std::vector<int>& vertices) {
  ProjSum out;
  out.vertices = vertices;
  if (vertices.empty()) {
    out.rep = zero_rep(a);
    return out;
  }
  std::vector<Rep> parts;
  for (int v : vertices) parts.push_back(projective_rep(a, v));
  auto ds = direct_sum(parts);
  out.rep = ds.rep;
  // Generator of P(v) is the trivial path, which sorts first in basis(v, v).
  std::vector<int> used(a->quiver().num_vertices(), 0);
  std::vector<std::vector<int>> offs(parts.size(), std::vector<int>(a->quiver().num_vertices(), 0));
  {
    std::vector<int> acc(a->quiver().num_vertices(), 0);
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (int v = 0; v < a->quiver().num_vertices(); ++v) {
        offs[i][v] = acc[v];
        acc[v] += parts[i].dims[v];
      }
  }
  for (std::size_t i = 0; i < parts.size(); ++i)
    out.gen_index.push_back(offs[i][vertices[i]]);
  out.block_offsets = std::move(offs);
  return out;
}

Morph morph_from_proj(const ProjSum& p, const Rep& n,
                      const std::vector<std::vector<Rat>>& gen_images) {
  AlgebraPtr a = p.rep.algebra ? p.rep.algebra : n.algebra;
  const Quiver& q = a->quiver();
  Morph f = Morph::zero(p.rep, n);
  std::vector<int> col(q.num_vertices(), 0);
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    int v = p.vertices[i];
    for (int u = 0; u < q.num_vertices(); ++u) {
      for (const Path& path : a->basis_paths(v, u)) {
        auto img = n.path_action(path).apply(gen_images[i]);
        for (std::size_t r = 0; r < img.size(); ++r) f.mats[u].at(r, col[u]) = img[r];
        ++col[u];
      }
    }
  }
  return f;
}

std::pair<ProjSum, Morph> projective_cover_sum(const Rep& m) {
  auto rts = radical_top_socle(m);
  // One projective summand per basis vector of top m at each vertex.
  std::vector<int> gens;
  std::vector<std::vector<Rat>> gen_images;
  const auto& epi = rts.top_epi;
  for (std::size_t v = 0; v < m.dims.size(); ++v) {
    for (int i = 0; i < rts.top.dims[v]; ++i) {
      std::vector<Rat> e(rts.top.dims[v], Rat(0));
      e[i] = 1;
      auto x = solve(epi.mats[v], e);
      if (!x) throw InternalInconsistency("projective_cover: top projection not surjective");
      gens.push_back(static_cast<int>(v));
      gen_images.push_back(std::move(*x));
    }
  }
  ProjSum p = proj_sum(m.algebra, gens);
  Morph cover = morph_from_proj(p, m, gen_images);
  if (!cover.is_epi())
    throw InternalInconsistency("projective_cover: lifted map not surjective");
  return {std::move(p), std::move(cover)};
}

std::pair<Rep, Morph> projective_cover(const Rep& m) {
  auto [p, cover] = projective_cover_sum(m);
  return {std::move(p.rep), std::move(cover)};
}

std::pair<Rep, Morph> injective_envelope(const Rep& m) {
  auto [p, epi] = projective_cover(dual_rep(m));
  Rep env = dual_rep(p);
  Morph mono = dual_morph(epi); // m -> env
  return {std::move(env), std::move(mono)};
}

bool is_projective(const Rep& m) {
  if (m.is_zero()) return true;
  auto [p, epi] = projective_cover(m);
  return epi.is_iso();
}

bool is_injective(const Rep& m) {
  if (m.is_zero()) return true;
  return is_projective(dual_rep(m));
}

} // namespace repkit
