#include "repkit/qh.hpp"

#include "repkit/errors.hpp"

#include <algorithm>
#include <functional>

namespace repkit {

namespace {

// P(i) modulo the trace of all P(j) with j above i in the order, with the
// quotient epi.
std::pair<Rep, Morph> standard_at(AlgebraPtr a, int i) {
  Rep p = projective_rep(a, i);
  VertexSubspaces tr = zero_subspaces(p);
  for (int j = i + 1; j < a->quiver().num_vertices(); ++j) {
    HomBasis h(projective_rep(a, j), p);
    for (int f = 0; f < h.dim(); ++f) {
      auto im = image_subspaces(h[f]);
      for (std::size_t v = 0; v < tr.size(); ++v) tr[v] = tr[v].sum(im[v]);
    }
  }
  return quotient_rep(p, tr);
}

} // namespace

QHData make_qh_data(AlgebraPtr a) {
  QHData qh;
  qh.algebra = a;
  int n = a->quiver().num_vertices();
  AlgebraPtr opp = a->opposite();
  for (int i = 0; i < n; ++i) {
    auto [d, pi] = standard_at(a, i);
    qh.delta.push_back(std::move(d));
    qh.pi.push_back(std::move(pi));
    qh.nabla.push_back(dual_rep(standard_at(opp, i).first));
  }
  return qh;
}

std::optional<DeltaFiltration> delta_filtration(const QHData& qh, const Rep& m) {
  int n = static_cast<int>(qh.delta.size());
  // Pre-compute the top projections of the standards; an f: x -> Δ(i) is epi
  // iff its composite with top Δ(i) = S(i) is nonzero (simple top).
  std::vector<Morph> tops;
  for (int i = 0; i < n; ++i) tops.push_back(radical_top_socle(qh.delta[i]).top_epi);

  std::vector<int> layers;
  std::function<bool(const Rep&)> rec = [&](const Rep& x) -> bool {
    if (x.is_zero()) return true;
    for (int i = 0; i < n; ++i) {
      if (qh.delta[i].total_dim() > x.total_dim()) continue;
      HomBasis h(x, qh.delta[i]);
      for (int f = 0; f < h.dim(); ++f) {
        if (compose(tops[i], h[f]).is_zero()) continue;
        auto kic = kernel_image_cokernel(h[f]);
        layers.push_back(i);
        if (rec(kic.kernel)) return true;
        layers.pop_back();
      }
    }
    return false;
  };
  if (!rec(m)) return std::nullopt;
  DeltaFiltration out;
  out.module = m;
  out.layers = std::move(layers);
  return out;
}

bool delta_membership(const QHData& qh, const Rep& m) {
  bool ext_ok = true;
  for (const Rep& nb : qh.nabla)
    if (ext1(m, nb).dimension() != 0) {
      ext_ok = false;
      break;
    }
  bool filt_ok = delta_filtration(qh, m).has_value();
  if (ext_ok != filt_ok)
    throw InternalInconsistency(
        "delta_membership: Ext criterion and constructive filtration disagree on " +
        dim_vector_string(m));
  return ext_ok;
}

CheckReport is_quasi_hereditary(const QHData& qh) {
  CheckReport r;
  const Quiver& q = qh.algebra->quiver();
  for (std::size_t i = 0; i < qh.delta.size(); ++i) {
    r.check(hom_basis(qh.delta[i], qh.delta[i]).dim() == 1,
            "End(Delta(" + q.vertex_name(static_cast<int>(i)) +
                ")) is not one-dimensional");
    auto filt = delta_filtration(qh, projective_rep(qh.algebra, static_cast<int>(i)));
    if (!filt) {
      r.check(false, "P(" + q.vertex_name(static_cast<int>(i)) +
                         ") has no Delta-filtration");
      continue;
    }
    r.check(!filt->layers.empty() &&
                filt->layers.front() == static_cast<int>(i),
            "top layer of P(" + q.vertex_name(static_cast<int>(i)) +
                ") is not Delta(" + q.vertex_name(static_cast<int>(i)) + ")");
    for (std::size_t l = 1; l < filt->layers.size(); ++l)
      r.check(filt->layers[l] > static_cast<int>(i),
              "P(" + q.vertex_name(static_cast<int>(i)) +
                  ") has a deeper layer with index not above " +
                  q.vertex_name(static_cast<int>(i)));
  }
  return r;
}

UniversalExtension universal_extension(const QHData& qh, const Rep& m, int j) {
  if (ext1(qh.delta[j], qh.delta[j]).dimension() != 0)
    throw NonVanishingSelfExt("universal_extension: Ext^1(Delta, Delta) != 0 at " +
                              qh.algebra->quiver().vertex_name(j));
  Ext1Space ext = ext1(qh.delta[j], m);
  int e = ext.dimension();
  if (e == 0)
    return UniversalExtension{m, Morph::identity(m),
                              Morph::zero(m, zero_rep(m.algebra))};

  // One extension 0 -> m -> E -> Delta(j)^e -> 0 whose cocycle restricts to
  // the chosen representative on the k-th syzygy copy.
  std::vector<Morph> pis(e, ext.pres.p);
  std::vector<Morph> monos(e, ext.pres.syzygy_mono);
  Morph p_all = block_diag(pis);          // P0^e -> Delta(j)^e
  Morph mono_all = block_diag(monos);     // syzygy^e -> P0^e
  DirectSum ds_syz = direct_sum(std::vector<Rep>(e, ext.pres.syzygy));
  Morph xi = glue_from_sum(ds_syz, ext.representatives); // syzygy^e -> m

  DirectSum ds = direct_sum({p_all.source, m});
  Morph h = compose(ds.inclusions[0], mono_all) - compose(ds.inclusions[1], xi);
  auto [E, quot] = quotient_rep(ds.rep, image_subspaces(h));

  UniversalExtension out;
  out.e = E;
  out.mono = compose(quot, ds.inclusions[1]);
  out.epi = factor_through_quotient(quot, compose(p_all, ds.projections[0]));
  if (!out.mono.is_mono() || !out.epi.is_epi() ||
      image_subspaces(out.mono) != kernel_subspaces(out.epi))
    throw InternalInconsistency("universal_extension: sequence not exact");
  if (ext1(qh.delta[j], E).dimension() != 0)
    throw InternalInconsistency("universal_extension: Ext did not vanish");
  return out;
}

void characteristic_modules(QHData& qh) {
  qh.T.clear();
  qh.beta.clear();
  qh.X.clear();
  int n = static_cast<int>(qh.delta.size());
  for (int i = 0; i < n; ++i) {
    Rep c = qh.delta[i];
    Morph beta = Morph::identity(c);
    for (int j = i - 1; j >= 0; --j) {
      UniversalExtension ue = universal_extension(qh, c, j);
      beta = compose(ue.mono, beta);
      c = ue.e;
    }
    for (int l = 0; l < n; ++l)
      if (ext1(qh.delta[l], c).dimension() != 0)
        throw InternalInconsistency("characteristic_modules: T(" +
                                    std::to_string(i) + ") not Ext-injective");
    if (!delta_membership(qh, c))
      throw InternalInconsistency("characteristic_modules: T not Delta-good");
    if (!is_indecomposable(c))
      throw InternalInconsistency("characteristic_modules: T decomposable");
    Rep x = kernel_image_cokernel(beta).cokernel;
    if (!x.is_zero()) {
      auto filt = delta_filtration(qh, x);
      if (!filt)
        throw InternalInconsistency("characteristic_modules: X not Delta-good");
      for (int l : filt->layers)
        if (l >= i)
          throw InternalInconsistency(
              "characteristic_modules: X has a layer not below its index");
    }
    qh.T.push_back(std::move(c));
    qh.beta.push_back(std::move(beta));
    qh.X.push_back(std::move(x));
  }
}

DeltaGoodCategory delta_good_category(const QHData& qh, const IndexedCategory& base,
                                      int max_power) {
  DeltaGoodCategory dgc;
  std::vector<int> removed;
  for (int i = 0; i < base.size(); ++i) {
    if (delta_membership(qh, base.objects[i]))
      dgc.base_indices.push_back(i);
    else
      removed.push_back(i);
  }
  dgc.fdelta = restrict(base, removed);
  dgc.rad_table = rad_power_table(dgc.fdelta, max_power);
  dgc.post = postprojective_partition(dgc.fdelta);
  dgc.pre = preinjective_partition(dgc.fdelta);
  dgc.p_delta = dgc.post.summary();
  dgc.q_delta = dgc.pre.summary();
  return dgc;
}

CheckReport verify_section4(const QHData& qh, const DeltaGoodCategory& dgc) {
  CheckReport r;
  const IndexedCategory& c = dgc.fdelta;
  const Quiver& q = qh.algebra->quiver();
  int n = q.num_vertices();

  // (1) Level 0 of the postprojective partition = the indecomposable
  // projectives; level 0 of the preinjective partition = the T(i).
  {
    std::vector<int> projs, tees;
    for (int i = 0; i < n; ++i) {
      auto pi = find_object(c, projective_rep(qh.algebra, i));
      r.check(pi.has_value(), "P(" + q.vertex_name(i) + ") missing from F(Delta)");
      if (pi) projs.push_back(*pi);
      auto ti = find_object(c, qh.T[i]);
      r.check(ti.has_value(), "T(" + q.vertex_name(i) + ") missing from F(Delta)");
      if (ti) tees.push_back(*ti);
    }
    auto p0 = dgc.post.levels.empty() ? std::vector<int>{} : dgc.post.levels[0];
    auto i0 = dgc.pre.levels.empty() ? std::vector<int>{} : dgc.pre.levels[0];
    std::sort(projs.begin(), projs.end());
    std::sort(tees.begin(), tees.end());
    std::sort(p0.begin(), p0.end());
    std::sort(i0.begin(), i0.end());
    r.check(p0 == projs, "P_0(Delta) differs from the indecomposable projectives");
    r.check(i0 == tees, "I_0(Delta) differs from {T(i)}");
  }

  // (2) and (4): finite depths of pi(i) and beta(i), and the level bounds.
  int max_dp_pi = 0, max_dp_beta = 0;
  for (int i = 0; i < n; ++i) {
    auto [a, b, pf] = transport(c, qh.pi[i]);
    Depth dp = depth(dgc.rad_table, a, b, pf);
    r.check(!dp.infinite, "dp_Delta(pi(" + q.vertex_name(i) + ")) infinite");
    if (!dp.infinite) max_dp_pi = std::max(max_dp_pi, dp.value);
    r.note("dp_Delta(pi(" + q.vertex_name(i) + ")) = " + dp.to_string());

    auto [s, t, bf] = transport(c, qh.beta[i]);
    Depth db = depth(dgc.rad_table, s, t, bf);
    r.check(!db.infinite, "dp_Delta(beta(" + q.vertex_name(i) + ")) infinite");
    if (!db.infinite) max_dp_beta = std::max(max_dp_beta, db.value);
    r.note("dp_Delta(beta(" + q.vertex_name(i) + ")) = " + db.to_string());
  }
  r.check(dgc.p_delta <= max_dp_pi,
          "p(Delta) = " + std::to_string(dgc.p_delta) + " exceeds max dp(pi) = " +
              std::to_string(max_dp_pi));
  r.check(dgc.q_delta <= max_dp_beta,
          "q(Delta) = " + std::to_string(dgc.q_delta) +
              " exceeds max dp(beta) = " + std::to_string(max_dp_beta));

  // (3) The relative radical is eventually zero with zero square.
  r.check(dgc.rad_table.stabilized, "rad_Delta table did not stabilize");
  r.check(is_rad_inf_square_zero(dgc.rad_table), "(rad_Delta^inf)^2 != 0");

  // (5) Hom = rad^level identities for both partitions.
  r.merge(verify_propdan(dgc.rad_table, dgc.post));
  r.merge(verify_propdan(dgc.rad_table, dgc.pre));

  // (6) Mono-chain witnesses: each object at preinjective level k admits a
  // nonzero composite into a level-0 object of depth >= k.
  for (std::size_t k = 1; k < dgc.pre.levels.size(); ++k) {
    for (int m : dgc.pre.levels[k]) {
      MonoChain chain = preinjective_mono_chain(c, dgc.pre, m);
      Morph composite = chain.steps.front();
      for (std::size_t s = 1; s < chain.steps.size(); ++s)
        composite = compose(chain.steps[s], composite);
      r.check(composite.is_mono(), "mono chain composite not mono at " +
                                       object_name(c, m));
      std::vector<Rep> tgts;
      for (int t : chain.final_targets) tgts.push_back(c.objects[t]);
      auto ds = direct_sum(tgts);
      bool witness = false;
      for (std::size_t t = 0; t < tgts.size(); ++t) {
        Morph comp = compose(ds.projections[t], composite);
        if (comp.is_zero()) continue;
        Depth d = depth(dgc.rad_table, m, chain.final_targets[t], comp);
        if (d.infinite || d.value >= static_cast<int>(k)) witness = true;
      }
      r.check(witness, "no deep component for " + object_name(c, m) +
                           " at level " + std::to_string(k));
    }
  }
  return r;
}

} // namespace repkit
