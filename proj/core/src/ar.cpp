#include "repkit/ar.hpp"

#include "repkit/errors.hpp"

#include <deque>

namespace repkit {

ProjPresentation min_presentation(const Rep& m) {
  ProjPresentation pr;
  pr.module = m;
  std::tie(pr.p0, pr.p) = projective_cover_sum(m);
  std::tie(pr.syzygy, pr.syzygy_mono) = sub_rep(pr.p0.rep, kernel_subspaces(pr.p));
  std::tie(pr.p1, pr.p1_to_syzygy) = projective_cover_sum(pr.syzygy);
  pr.d = compose(pr.syzygy_mono, pr.p1_to_syzygy);
  return pr;
}

Rep transpose_rep(const Rep& m) {
  ProjPresentation pres = min_presentation(m);
  AlgebraPtr opp = m.algebra->opposite();
  if (pres.p1.vertices.empty()) return zero_rep(opp);

  // Dualize d: P1 -> P0 to Hom(P0, A) -> Hom(P1, A) over the opposite
  // algebra, where Hom(P(v), A) is the opposite projective at v. In path
  // coordinates the dual map reverses every basis path, re-expressed in the
  // opposite algebra's own normal form.
  ProjSum src = proj_sum(opp, pres.p0.vertices);
  ProjSum tgt = proj_sum(opp, pres.p1.vertices);

  std::vector<std::vector<Rat>> gen_images(src.vertices.size());
  for (std::size_t i = 0; i < src.vertices.size(); ++i)
    gen_images[i].assign(tgt.rep.dims[src.vertices[i]], Rat(0));

  for (std::size_t j = 0; j < pres.p1.vertices.size(); ++j) {
    int wj = pres.p1.vertices[j];
    auto col = pres.d.mats[wj].col(pres.p1.gen_index[j]);
    for (std::size_t i = 0; i < pres.p0.vertices.size(); ++i) {
      int vi = pres.p0.vertices[i];
      const auto& paths = m.algebra->basis_paths(vi, wj);
      int off = pres.p0.block_offsets[i][wj];
      for (std::size_t t = 0; t < paths.size(); ++t) {
        const Rat& c = col[off + t];
        if (c == 0) continue;
        auto coords = opp->normal_form(reversed_path(paths[t]));
        int toff = tgt.block_offsets[j][vi];
        for (std::size_t s = 0; s < coords.size(); ++s)
          gen_images[i][toff + s] += c * coords[s];
      }
    }
  }

  Morph dop = morph_from_proj(src, tgt.rep, gen_images);
  auto [tr, epi] = quotient_rep(tgt.rep, image_subspaces(dop));
  (void)epi;
  return tr;
}

Rep tau(const Rep& m) { return dual_rep(transpose_rep(m)); }

Rep tau_inverse(const Rep& m) { return transpose_rep(dual_rep(m)); }

std::vector<Rat> Ext1Space::class_of(const Morph& cocycle) const {
  return class_projection.apply(cocycles.coordinates(cocycle));
}

Ext1Space ext1(const Rep& m, const Rep& n) {
  ProjPresentation pres = min_presentation(m);
  HomBasis cocycles(pres.syzygy, n);
  HomBasis from_p0(pres.p0.rep, n);

  std::vector<std::vector<Rat>> restricted_rows;
  for (int i = 0; i < from_p0.dim(); ++i)
    restricted_rows.push_back(
        cocycles.coordinates(compose(from_p0[i], pres.syzygy_mono)));
  Subspace restricted = Subspace::span(restricted_rows, cocycles.dim());
  Mat proj = quotient_projection(restricted);

  std::vector<Morph> representatives;
  if (proj.rows() > 0) {
    auto section = solve_mat(proj, Mat::identity(proj.rows()));
    if (!section)
      throw InternalInconsistency("ext1: class projection has no section");
    for (std::size_t k = 0; k < proj.rows(); ++k)
      representatives.push_back(cocycles.from_coordinates(section->col(k)));
  }

  return Ext1Space{std::move(pres),      n,
                   std::move(cocycles),  std::move(restricted),
                   std::move(proj),      std::move(representatives)};
}

bool ShortExact::is_exact() const {
  if (!mono.is_valid() || !epi.is_valid()) return false;
  if (!mono.is_mono() || !epi.is_epi()) return false;
  return image_subspaces(mono) == kernel_subspaces(epi);
}

ShortExact build_extension(const Ext1Space& ext, const Morph& xi) {
  auto ds = direct_sum({ext.pres.p0.rep, ext.n});
  Morph h = compose(ds.inclusions[0], ext.pres.syzygy_mono) -
            compose(ds.inclusions[1], xi);
  auto [e, quot] = quotient_rep(ds.rep, image_subspaces(h));
  ShortExact s;
  s.left = ext.n;
  s.middle = e;
  s.right = ext.pres.module;
  s.mono = compose(quot, ds.inclusions[1]);
  s.epi = factor_through_quotient(quot, compose(ext.pres.p, ds.projections[0]));
  if (!s.is_exact())
    throw InternalInconsistency("build_extension: sequence not exact");
  return s;
}

Pushout pushout(const Morph& f, const Morph& g) {
  auto ds = direct_sum({f.target, g.target});
  Morph h = compose(ds.inclusions[0], f) - compose(ds.inclusions[1], g);
  auto [w, quot] = quotient_rep(ds.rep, image_subspaces(h));
  return Pushout{std::move(w), compose(quot, ds.inclusions[0]),
                 compose(quot, ds.inclusions[1])};
}

namespace {

// Morphisms from the radical of End(m), in the End hom basis.
std::vector<Morph> radical_endos(const EndAlgebra& e) {
  std::vector<Morph> out;
  for (std::size_t r = 0; r < e.radical.dim(); ++r)
    out.push_back(e.hom.from_coordinates(e.radical.basis_vector(r)));
  return out;
}

// The endomorphism of the syzygy induced by phi: m -> m through a lift to P0.
Morph syzygy_endo(const ProjPresentation& pres, const Morph& phi) {
  auto phi0 = lift_through(compose(phi, pres.p), pres.p);
  if (!phi0)
    throw InternalInconsistency("syzygy_endo: lift through projective cover failed");
  return factor_through_mono(pres.syzygy_mono, compose(*phi0, pres.syzygy_mono));
}

bool right_almost_split(const ShortExact& seq, const std::vector<Rep>& known,
                        const EndAlgebra& end_n) {
  for (const Rep& x : known) {
    if (auto iso = is_isomorphic(x, seq.right)) {
      for (const Morph& phi : radical_endos(end_n))
        if (!lift_through(compose(phi, *iso), seq.epi)) return false;
    } else {
      HomBasis h(x, seq.right);
      for (int i = 0; i < h.dim(); ++i)
        if (!lift_through(h[i], seq.epi)) return false;
    }
  }
  return true;
}

} // namespace

ShortExact almost_split_sequence(const Rep& n, const std::vector<Rep>& known) {
  if (n.is_zero() || is_projective(n))
    throw ValidationError("almost_split_sequence: module must be non-projective");
  Rep t = tau(n);
  Ext1Space ext = ext1(n, t);
  int d = ext.dimension();
  if (d == 0)
    throw InternalInconsistency("almost_split_sequence: Ext^1(n, tau n) vanished");

  EndAlgebra en = end_algebra(n);
  EndAlgebra et = end_algebra(t);

  // The almost split classes are the nonzero elements killed by the radical
  // of End(n) acting by pullback and of End(tau n) acting by pushforward.
  std::vector<Mat> actions;
  for (const Morph& phi : radical_endos(en)) {
    Morph om = syzygy_endo(ext.pres, phi);
    Mat a(d, d);
    for (int k = 0; k < d; ++k) {
      auto cls = ext.class_of(compose(ext.representatives[k], om));
      for (int r = 0; r < d; ++r) a.at(r, k) = cls[r];
    }
    actions.push_back(std::move(a));
  }
  for (const Morph& psi : radical_endos(et)) {
    Mat a(d, d);
    for (int k = 0; k < d; ++k) {
      auto cls = ext.class_of(compose(psi, ext.representatives[k]));
      for (int r = 0; r < d; ++r) a.at(r, k) = cls[r];
    }
    actions.push_back(std::move(a));
  }

  Mat stacked(actions.size() * d, d);
  for (std::size_t i = 0; i < actions.size(); ++i)
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) stacked.at(i * d + r, c) = actions[i].at(r, c);
  Subspace socle = Subspace::span(kernel_mat(stacked));
  if (socle.is_zero())
    throw InternalInconsistency("almost_split_sequence: socle of Ext is zero");

  // Candidate class vectors: socle basis, then pairwise sums.
  std::vector<std::vector<Rat>> cands;
  for (std::size_t i = 0; i < socle.dim(); ++i)
    cands.push_back(socle.basis_vector(i));
  for (std::size_t i = 0; i < socle.dim(); ++i)
    for (std::size_t j = i + 1; j < socle.dim(); ++j) {
      auto v = socle.basis_vector(i);
      auto w = socle.basis_vector(j);
      for (std::size_t r = 0; r < v.size(); ++r) v[r] += w[r];
      cands.push_back(std::move(v));
    }

  for (const auto& v : cands) {
    Morph xi = Morph::zero(ext.pres.syzygy, t);
    for (int k = 0; k < d; ++k)
      if (v[k] != 0) xi = xi + ext.representatives[k].scaled(v[k]);
    ShortExact seq = build_extension(ext, xi);
    if (lift_through(Morph::identity(seq.right), seq.epi)) continue; // split
    if (right_almost_split(seq, known, en)) return seq;
  }
  throw InternalInconsistency("almost_split_sequence: no verified class found");
}

EnumerationResult enumerate_indecomposables(AlgebraPtr a,
                                            const EnumerationLimits& limits) {
  EnumerationResult out;
  std::deque<Rep> work;

  // Returns false when a limit fires; out is then already Undetermined.
  auto add = [&](const Rep& x) -> bool {
    if (x.is_zero()) return true;
    if (x.total_dim() > limits.max_dim) {
      out.status = EnumerationResult::Status::Undetermined;
      out.reason = "candidate of total dimension " +
                   std::to_string(x.total_dim()) + " exceeds max_dim " +
                   std::to_string(limits.max_dim);
      return false;
    }
    for (const Rep& y : out.objects)
      if (y.dims == x.dims && is_isomorphic(y, x)) return true;
    if (static_cast<int>(out.objects.size()) >= limits.max_modules) {
      out.status = EnumerationResult::Status::Undetermined;
      out.reason = "more than max_modules = " +
                   std::to_string(limits.max_modules) +
                   " pairwise non-isomorphic modules found";
      return false;
    }
    out.objects.push_back(x);
    work.push_back(x);
    return true;
  };
  auto add_summands = [&](const Rep& x) -> bool {
    for (const Summand& s : decompose(x))
      if (!add(s.rep)) return false;
    return true;
  };

  const Quiver& q = a->quiver();
  for (int v = 0; v < q.num_vertices(); ++v)
    if (!add(projective_rep(a, v))) return out;
  for (int v = 0; v < q.num_vertices(); ++v)
    if (!add(injective_rep(a, v))) return out;

  while (!work.empty()) {
    Rep x = work.front();
    work.pop_front();

    auto rts = radical_top_socle(x);
    if (!add_summands(rts.rad)) return out;
    auto soc_sub = image_subspaces(rts.soc_mono);
    if (!add_summands(quotient_rep(x, soc_sub).first)) return out;

    if (!is_projective(x)) {
      if (!add_summands(tau(x))) return out;
      ShortExact seq = almost_split_sequence(x, {});
      if (!add_summands(seq.middle)) return out;
    }
    if (!is_injective(x)) {
      if (!add_summands(tau_inverse(x))) return out;
    }
  }

  std::stable_sort(out.objects.begin(), out.objects.end(),
                   [](const Rep& l, const Rep& r) {
                     if (l.total_dim() != r.total_dim())
                       return l.total_dim() < r.total_dim();
                     return l.dims < r.dims;
                   });
  out.status = EnumerationResult::Status::Finite;
  return out;
}

} // namespace repkit
