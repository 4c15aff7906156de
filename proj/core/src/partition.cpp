#include "repkit/partition.hpp"

#include "repkit/errors.hpp"

#include <algorithm>

namespace repkit {

int Partition::level_of(int object) const {
  for (std::size_t k = 0; k < levels.size(); ++k)
    if (std::find(levels[k].begin(), levels[k].end(), object) != levels[k].end())
      return static_cast<int>(k);
  return -1;
}

namespace {

// Basis morphisms x -> n inside the subcategory, radical when x == n.
std::vector<Morph> radical_morphs(const IndexedCategory& c, int x, int n) {
  std::vector<Morph> out;
  if (x == n) {
    Subspace r = rad_basis(c, n, n);
    for (std::size_t i = 0; i < r.dim(); ++i)
      out.push_back(c.hom_at(n, n).from_coordinates(r.basis_vector(i)));
  } else {
    for (int i = 0; i < c.hom_at(x, n).dim(); ++i) out.push_back(c.hom_at(x, n)[i]);
  }
  return out;
}

VertexSubspaces trace_of(const IndexedCategory& c, const std::vector<int>& sources,
                         int n, bool radical_only) {
  VertexSubspaces tr = zero_subspaces(c.objects[n]);
  for (int x : sources) {
    std::vector<Morph> fs;
    if (radical_only)
      fs = radical_morphs(c, x, n);
    else
      for (int i = 0; i < c.hom_at(x, n).dim(); ++i) fs.push_back(c.hom_at(x, n)[i]);
    for (const Morph& f : fs) {
      auto im = image_subspaces(f);
      for (std::size_t v = 0; v < tr.size(); ++v) tr[v] = tr[v].sum(im[v]);
    }
  }
  return tr;
}

VertexSubspaces reject_of(const IndexedCategory& c, const std::vector<int>& targets,
                          int n, bool radical_only) {
  VertexSubspaces rj = full_subspaces(c.objects[n]);
  for (int x : targets) {
    std::vector<Morph> fs;
    if (radical_only) {
      if (x == n) {
        Subspace r = rad_basis(c, n, n);
        for (std::size_t i = 0; i < r.dim(); ++i)
          fs.push_back(c.hom_at(n, n).from_coordinates(r.basis_vector(i)));
      } else {
        for (int i = 0; i < c.hom_at(n, x).dim(); ++i) fs.push_back(c.hom_at(n, x)[i]);
      }
    } else {
      for (int i = 0; i < c.hom_at(n, x).dim(); ++i) fs.push_back(c.hom_at(n, x)[i]);
    }
    for (const Morph& f : fs) {
      auto ker = kernel_subspaces(f);
      for (std::size_t v = 0; v < rj.size(); ++v) rj[v] = rj[v].intersect(ker[v]);
    }
  }
  return rj;
}

bool is_full(const VertexSubspaces& w, const Rep& m) {
  for (std::size_t v = 0; v < w.size(); ++v)
    if (static_cast<int>(w[v].dim()) != m.dims[v]) return false;
  return true;
}

bool is_zero(const VertexSubspaces& w) {
  for (const auto& s : w)
    if (!s.is_zero()) return false;
  return true;
}

// In a proper subcategory the admissible monos are the inflations: monos
// whose cokernel again lies in (the additive closure of) the category. In
// the full module category every mono qualifies.
bool cokernel_in_category(const IndexedCategory& c, const Morph& f) {
  if (c.is_full_module_category) return true;
  KernelImageCokernel kic = kernel_image_cokernel(f);
  for (const Summand& s : decompose(kic.cokernel))
    if (!find_object(c, s.rep)) return false;
  return true;
}

// Glues hom-basis maps x -> t over t in `targets`. With `greedy` only maps
// that shrink the running common kernel are kept; otherwise all are taken.
std::pair<Morph, std::vector<int>> glued_into_targets(const IndexedCategory& c,
                                                      const std::vector<int>& targets,
                                                      int x, bool greedy) {
  VertexSubspaces rj = full_subspaces(c.objects[x]);
  auto total = [&] {
    std::size_t d = 0;
    for (const auto& s : rj) d += s.dim();
    return d;
  };
  std::vector<Rep> parts;
  std::vector<Morph> fs;
  std::vector<int> idx;
  for (int t : targets) {
    for (int i = 0; i < c.hom_at(x, t).dim(); ++i) {
      const Morph& f = c.hom_at(x, t)[i];
      std::size_t before = total();
      auto ker = kernel_subspaces(f);
      for (std::size_t v = 0; v < rj.size(); ++v) rj[v] = rj[v].intersect(ker[v]);
      if (!greedy || total() < before) {
        parts.push_back(c.objects[t]);
        fs.push_back(f);
        idx.push_back(t);
      }
    }
  }
  if (!is_zero(rj) || parts.empty())
    return {Morph::zero(c.objects[x], zero_rep(c.algebra)), {}};
  auto ds = direct_sum(parts);
  return {glue_into_sum(ds, fs), std::move(idx)};
}

// Whether x admits an inflation into a sum of `targets`. Tries the greedy
// glued map first, then the full one.
std::pair<Morph, std::vector<int>> inflation_into_targets(
    const IndexedCategory& c, const std::vector<int>& targets, int x) {
  for (bool greedy : {true, false}) {
    auto [m, idx] = glued_into_targets(c, targets, x, greedy);
    if (!idx.empty() && m.is_mono() && cokernel_in_category(c, m))
      return {std::move(m), std::move(idx)};
  }
  return {Morph::zero(c.objects[x], zero_rep(c.algebra)), {}};
}

bool embeds_into_targets(const IndexedCategory& c, const std::vector<int>& targets,
                         int x) {
  return !inflation_into_targets(c, targets, x).second.empty();
}

// A non-split inflation n -> E with cokernel in `active` and every summand
// of E in `active` witnesses that n is not splitting injective relative to
// the subcategory's exact structure.
bool has_nonsplit_inflation(const IndexedCategory& c, const std::vector<int>& active,
                            int n) {
  for (int m : active) {
    Ext1Space e = ext1(c.objects[m], c.objects[n]);
    if (e.dimension() == 0) continue;
    std::vector<Morph> candidates = e.representatives;
    for (std::size_t i = 0; i < e.representatives.size(); ++i)
      for (std::size_t j = i + 1; j < e.representatives.size(); ++j)
        candidates.push_back(e.representatives[i] + e.representatives[j]);
    for (const Morph& xi : candidates) {
      std::vector<Rat> cls = e.class_of(xi);
      if (std::all_of(cls.begin(), cls.end(), [](const Rat& r) { return r == 0; }))
        continue;
      ShortExact se = build_extension(e, xi);
      bool inside = true;
      for (const Summand& s : decompose(se.middle)) {
        auto at = find_object(c, s.rep);
        inside = inside && at.has_value() &&
                 std::find(active.begin(), active.end(), *at) != active.end();
      }
      if (inside) return true;
    }
  }
  return false;
}

} // namespace

std::pair<bool, TraceReject> is_splitting_projective(const IndexedCategory& c,
                                                     const std::vector<int>& active,
                                                     int n) {
  TraceReject tr;
  tr.object = n;
  tr.trace = trace_of(c, active, n, /*radical_only=*/true);
  tr.reject = reject_of(c, active, n, /*radical_only=*/true);
  return {!is_full(tr.trace, c.objects[n]), tr};
}

std::pair<bool, TraceReject> is_splitting_injective(const IndexedCategory& c,
                                                    const std::vector<int>& active,
                                                    int n) {
  TraceReject tr;
  tr.object = n;
  tr.trace = trace_of(c, active, n, /*radical_only=*/true);
  tr.reject = reject_of(c, active, n, /*radical_only=*/true);
  if (c.is_full_module_category) return {!is_zero(tr.reject), tr};
  // Relative exact structure: splitting injective iff no non-split
  // inflation out of n stays inside the active subcategory.
  return {!has_nonsplit_inflation(c, active, n), tr};
}

namespace {

Partition peel(const IndexedCategory& c, PartitionKind kind) {
  Partition p;
  p.kind = kind;
  std::vector<int> active(c.size());
  for (int i = 0; i < c.size(); ++i) active[i] = i;
  while (!active.empty()) {
    std::vector<int> level;
    for (int n : active) {
      bool split = kind == PartitionKind::Postprojective
                       ? is_splitting_projective(c, active, n).first
                       : is_splitting_injective(c, active, n).first;
      if (split) level.push_back(n);
    }
    if (level.empty())
      throw EmptyLevelWithRemainder(
          "partition: empty level with " + std::to_string(active.size()) +
          " objects remaining (incomplete category?)");
    p.levels.push_back(level);
    std::vector<int> next;
    for (int n : active)
      if (std::find(level.begin(), level.end(), n) == level.end()) next.push_back(n);
    active = std::move(next);
  }
  return p;
}

// Objects at levels >= k.
std::vector<int> truncated(const Partition& p, int k) {
  std::vector<int> out;
  for (std::size_t l = k; l < p.levels.size(); ++l)
    out.insert(out.end(), p.levels[l].begin(), p.levels[l].end());
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

Partition postprojective_partition(const IndexedCategory& c) {
  return peel(c, PartitionKind::Postprojective);
}

Partition preinjective_partition(const IndexedCategory& c) {
  return peel(c, PartitionKind::Preinjective);
}

CheckReport verify_cover(const IndexedCategory& c, const Partition& p, int k) {
  CheckReport r;
  auto objs = truncated(p, k);
  const auto& level = p.levels[k];
  for (int x : objs)
    r.check(is_full(trace_of(c, level, x, false), c.objects[x]),
            "level " + std::to_string(k) + " does not cover " + object_name(c, x));
  // Minimality: dropping any member must break the cover somewhere.
  for (int d : level) {
    std::vector<int> rest;
    for (int s : level)
      if (s != d) rest.push_back(s);
    bool still_covers = true;
    for (int x : objs)
      still_covers = still_covers && is_full(trace_of(c, rest, x, false), c.objects[x]);
    r.check(!still_covers, "cover level " + std::to_string(k) +
                               " not minimal: can drop " + object_name(c, d));
  }
  return r;
}

CheckReport verify_cocover(const IndexedCategory& c, const Partition& p, int k) {
  CheckReport r;
  auto objs = truncated(p, k);
  const auto& level = p.levels[k];
  for (int x : objs)
    r.check(embeds_into_targets(c, level, x),
            "level " + std::to_string(k) + " does not cocover " + object_name(c, x));
  for (int d : level) {
    std::vector<int> rest;
    for (int s : level)
      if (s != d) rest.push_back(s);
    bool still = true;
    for (int x : objs) still = still && embeds_into_targets(c, rest, x);
    r.check(!still, "cocover level " + std::to_string(k) +
                        " not minimal: can drop " + object_name(c, d));
  }
  return r;
}

namespace {

std::pair<Morph, std::vector<int>> epi_from_cover_indexed(const IndexedCategory& c,
                                                          const Partition& p,
                                                          int x, int k) {
  VertexSubspaces tr = zero_subspaces(c.objects[x]);
  auto total = [&] {
    std::size_t d = 0;
    for (const auto& s : tr) d += s.dim();
    return d;
  };
  std::vector<Rep> sources;
  std::vector<Morph> fs;
  std::vector<int> source_idx;
  for (int s : p.levels[k]) {
    for (int i = 0; i < c.hom_at(s, x).dim(); ++i) {
      const Morph& f = c.hom_at(s, x)[i];
      auto im = image_subspaces(f);
      std::size_t before = total();
      for (std::size_t v = 0; v < tr.size(); ++v) tr[v] = tr[v].sum(im[v]);
      if (total() > before) {
        sources.push_back(c.objects[s]);
        fs.push_back(f);
        source_idx.push_back(s);
      }
    }
  }
  if (!is_full(tr, c.objects[x]))
    throw CoverFailure("epi_from_cover: level " + std::to_string(k) +
                       " cannot reach " + object_name(c, x));
  auto ds = direct_sum(sources);
  Morph e = glue_from_sum(ds, fs);
  if (!e.is_epi()) throw InternalInconsistency("epi_from_cover: glued map not epi");
  return {std::move(e), std::move(source_idx)};
}

} // namespace

Morph epi_from_cover(const IndexedCategory& c, const Partition& p, int x, int k) {
  return epi_from_cover_indexed(c, p, x, k).first;
}

EpiChain postprojective_epi_chain(const IndexedCategory& c, const Partition& p,
                                  int m) {
  if (p.kind != PartitionKind::Postprojective)
    throw ValidationError("postprojective_epi_chain: needs a postprojective partition");
  int k = p.level_of(m);
  if (k < 0) throw ValidationError("postprojective_epi_chain: object not in partition");
  EpiChain out;
  std::vector<int> cur = {m};
  for (int level = k - 1; level >= 0; --level) {
    std::vector<Morph> parts;
    std::vector<int> next;
    for (int t : cur) {
      auto [f, idx] = epi_from_cover_indexed(c, p, t, level);
      parts.push_back(std::move(f));
      next.insert(next.end(), idx.begin(), idx.end());
    }
    out.steps.push_back(block_diag(parts));
    cur = std::move(next);
  }
  std::reverse(out.steps.begin(), out.steps.end());
  out.initial_sources = std::move(cur);
  return out;
}

namespace {

std::pair<Morph, std::vector<int>> mono_into_cocover_indexed(const IndexedCategory& c,
                                                             const Partition& p,
                                                             int x, int k) {
  auto [m, target_idx] = inflation_into_targets(c, p.levels[k], x);
  if (target_idx.empty())
    throw CoverFailure("mono_into_cocover: level " + std::to_string(k) +
                       " cannot embed " + object_name(c, x));
  if (!m.is_mono())
    throw InternalInconsistency("mono_into_cocover: glued map not mono");
  return {std::move(m), std::move(target_idx)};
}

} // namespace

Morph mono_into_cocover(const IndexedCategory& c, const Partition& p, int x, int k) {
  return mono_into_cocover_indexed(c, p, x, k).first;
}

MonoChain preinjective_mono_chain(const IndexedCategory& c, const Partition& p,
                                  int m) {
  if (p.kind != PartitionKind::Preinjective)
    throw ValidationError("preinjective_mono_chain: needs a preinjective partition");
  int k = p.level_of(m);
  if (k < 0) throw ValidationError("preinjective_mono_chain: object not in partition");
  MonoChain out;
  std::vector<int> cur = {m};
  for (int level = k - 1; level >= 0; --level) {
    std::vector<Morph> parts;
    std::vector<int> next;
    for (int t : cur) {
      auto [f, idx] = mono_into_cocover_indexed(c, p, t, level);
      parts.push_back(std::move(f));
      next.insert(next.end(), idx.begin(), idx.end());
    }
    out.steps.push_back(block_diag(parts));
    cur = std::move(next);
  }
  out.final_targets = std::move(cur);
  return out;
}

CheckReport verify_propdan(const RadTable& t, const Partition& p) {
  CheckReport r;
  const IndexedCategory& c = t.category;
  for (std::size_t i = 1; i < p.levels.size(); ++i) {
    for (int deep : p.levels[i]) {
      for (int top : p.levels[0]) {
        int from = p.kind == PartitionKind::Postprojective ? top : deep;
        int to = p.kind == PartitionKind::Postprojective ? deep : top;
        const Subspace& s = t.power(from, to, static_cast<int>(i));
        r.check(s.dim() == static_cast<std::size_t>(c.hom_at(from, to).dim()),
                std::string("Hom != rad^") + std::to_string(i) + " between " +
                    object_name(c, from) + " and " + object_name(c, to));
      }
    }
  }
  return r;
}

} // namespace repkit
