#include "support.hpp"

#include <repkit/errors.hpp>
#include <repkit/radical.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace testsupport {

std::vector<Rep> indec_pool(AlgebraPtr a) {
  EnumerationResult r = enumerate_indecomposables(a);
  if (r.status != EnumerationResult::Status::Finite)
    throw std::runtime_error("indec_pool: enumeration did not close: " + r.reason);
  return r.objects;
}

const Rep& by_dims(const std::vector<Rep>& pool, const std::vector<int>& dims) {
  for (const Rep& m : pool)
    if (m.dims == dims) return m;
  throw std::runtime_error("by_dims: no pool member with the requested dims");
}

namespace {

Rat small_rat(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  return rat(num(rng), den(rng));
}

Mat random_invertible(int n, std::mt19937& rng) {
  for (;;) {
    Mat t(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) t.at(r, c) = small_rat(rng);
    if (t.inverse()) return t;
  }
}

} // namespace

Rep base_change(const Rep& m, std::mt19937& rng) {
  const Quiver& q = m.algebra->quiver();
  std::vector<Mat> t, tinv;
  for (int v = 0; v < q.num_vertices(); ++v) {
    Mat tv = random_invertible(m.dims[v], rng);
    tinv.push_back(*tv.inverse());
    t.push_back(std::move(tv));
  }
  Rep out = m;
  for (int a = 0; a < q.num_arrows(); ++a) {
    int u = q.arrow(a).source, v = q.arrow(a).target;
    out.arrow_maps[a] = t[v] * m.arrow_maps[a] * tinv[u];
  }
  return out;
}

Rep random_sum(const std::vector<Rep>& pool, std::mt19937& rng, int max_parts) {
  std::uniform_int_distribution<int> count(1, max_parts);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::vector<Rep> parts;
  int n = count(rng);
  for (int i = 0; i < n; ++i) parts.push_back(pool[pick(rng)]);
  return direct_sum(parts).rep;
}

Subspace chain_rad_power(const IndexedCategory& c, int i, int j, int n) {
  if (n < 1) throw std::invalid_argument("chain_rad_power: n >= 1 required");
  auto rad_morphs = [&](int u, int v) {
    Subspace s = rad_basis(c, u, v);
    std::vector<Morph> out;
    for (std::size_t b = 0; b < s.dim(); ++b)
      out.push_back(c.hom_at(u, v).from_coordinates(s.basis_vector(b)));
    return out;
  };

  std::vector<std::vector<Rat>> rows;
  // Current partial composites grouped by their current target vertex.
  // seq recursion: extend (i -> k) composites by one radical step.
  std::vector<std::pair<int, Morph>> frontier;
  for (int k = 0; k < c.size(); ++k)
    for (Morph& f : rad_morphs(i, k)) frontier.emplace_back(k, std::move(f));
  for (int step = 2; step <= n; ++step) {
    std::vector<std::pair<int, Morph>> next;
    for (const auto& [k, f] : frontier)
      for (int l = 0; l < c.size(); ++l)
        for (const Morph& g : rad_morphs(k, l)) next.emplace_back(l, compose(g, f));
    frontier = std::move(next);
  }
  for (const auto& [k, f] : frontier)
    if (k == j) rows.push_back(c.hom_at(i, j).coordinates(f));
  return Subspace::span(rows, static_cast<std::size_t>(c.hom_at(i, j).dim()));
}

Depth chain_depth(const IndexedCategory& c, int i, int j, const Morph& f, int max_n) {
  std::vector<Rat> coords = c.hom_at(i, j).coordinates(f);
  Depth d;
  if (!rad_basis(c, i, j).contains(coords)) return d; // depth 0
  for (int n = 1; n <= max_n; ++n) {
    if (!chain_rad_power(c, i, j, n).contains(coords)) return d;
    d.value = n;
  }
  d.infinite = true;
  return d;
}

// ---------------------------------------------------------------------------
// Property suites
// ---------------------------------------------------------------------------

namespace {

const std::vector<std::string>& suite_presets() {
  static const std::vector<std::string> names = {"A2", "A3", "N3", "QH4"};
  return names;
}

struct PoolSet {
  std::vector<AlgebraPtr> algebras;
  std::vector<std::vector<Rep>> pools;
};

const PoolSet& pool_set() {
  static const PoolSet ps = [] {
    PoolSet out;
    for (const auto& name : suite_presets()) {
      out.algebras.push_back(algebra(name));
      out.pools.push_back(indec_pool(out.algebras.back()));
    }
    return out;
  }();
  return ps;
}

Morph random_hom(const Rep& m, const Rep& n, std::mt19937& rng) {
  HomBasis h = hom_basis(m, n);
  std::vector<Rat> coords(static_cast<std::size_t>(h.dim()));
  for (auto& c : coords) c = small_rat(rng);
  return h.from_coordinates(coords);
}

} // namespace

std::vector<std::string> suite_intertwining(int cases, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<std::string> fails;
  const PoolSet& ps = pool_set();
  std::uniform_int_distribution<std::size_t> pa(0, ps.pools.size() - 1);
  for (int t = 0; t < cases; ++t) {
    std::size_t k = pa(rng);
    const auto& pool = ps.pools[k];
    Rep m = base_change(random_sum(pool, rng), rng);
    Rep n = base_change(random_sum(pool, rng), rng);
    Morph f = random_hom(m, n, rng);
    if (!f.is_valid())
      fails.push_back("case " + std::to_string(t) + ": hom-basis combination not a morphism");
    auto [p, cover] = projective_cover_sum(m);
    if (!cover.is_valid() || !cover.is_epi())
      fails.push_back("case " + std::to_string(t) + ": projective cover map invalid");
    Morph g = compose(f, cover);
    if (!g.is_valid())
      fails.push_back("case " + std::to_string(t) + ": composite not a morphism");
  }
  return fails;
}

std::vector<std::string> suite_krull_schmidt(int cases, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<std::string> fails;
  const PoolSet& ps = pool_set();
  std::uniform_int_distribution<std::size_t> pa(0, ps.pools.size() - 1);
  for (int t = 0; t < cases; ++t) {
    const auto& pool = ps.pools[pa(rng)];
    std::uniform_int_distribution<int> count(1, 3);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::vector<Rep> parts;
    int n = count(rng);
    for (int i = 0; i < n; ++i) parts.push_back(pool[pick(rng)]);
    std::multiset<std::vector<int>> expected;
    for (const Rep& p : parts) expected.insert(p.dims);

    Rep scrambled = base_change(direct_sum(parts).rep, rng);
    std::multiset<std::vector<int>> got;
    bool ok = true;
    for (const Summand& s : decompose(scrambled)) {
      for (int c = 0; c < s.multiplicity; ++c) got.insert(s.rep.dims);
      // Each summand must be isomorphic to a pool member with equal dims.
      bool found = false;
      for (const Rep& p : pool)
        if (p.dims == s.rep.dims && is_isomorphic(p, s.rep)) found = true;
      ok = ok && found;
    }
    if (got != expected || !ok)
      fails.push_back("case " + std::to_string(t) + ": decomposition changed under base change");
  }
  return fails;
}

std::vector<std::string> suite_tau_inverse(int cases, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<std::string> fails;
  const PoolSet& ps = pool_set();
  std::uniform_int_distribution<std::size_t> pa(0, ps.pools.size() - 1);
  int done = 0;
  while (done < cases) {
    const auto& pool = ps.pools[pa(rng)];
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    const Rep& m0 = pool[pick(rng)];
    if (is_projective(m0)) continue;
    Rep m = base_change(m0, rng);
    Rep back = tau_inverse(tau(m));
    if (!is_isomorphic(back, m))
      fails.push_back("case " + std::to_string(done) + ": tau^- tau not the identity up to iso");
    ++done;
  }
  return fails;
}

std::vector<std::string> suite_rad_ideal(int cases, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<std::string> fails;
  const PoolSet& ps = pool_set();
  struct Ctx {
    IndexedCategory cat;
    RadTable table;
  };
  static std::vector<Ctx> ctxs = [] {
    std::vector<Ctx> out;
    for (std::size_t k = 0; k < pool_set().pools.size(); ++k) {
      IndexedCategory c = make_category(pool_set().algebras[k], pool_set().pools[k], true);
      RadTable t = rad_power_table(c);
      out.push_back({std::move(c), std::move(t)});
    }
    return out;
  }();
  std::uniform_int_distribution<std::size_t> pa(0, ctxs.size() - 1);
  for (int t = 0; t < cases; ++t) {
    const Ctx& cx = ctxs[pa(rng)];
    int sz = cx.cat.size();
    std::uniform_int_distribution<int> po(0, sz - 1);
    int i = po(rng), j = po(rng), k = po(rng);
    std::uniform_int_distribution<int> pn(1, std::max(1, cx.table.stabilization_index));
    int n = pn(rng);
    const Subspace& rn = cx.table.power(i, j, n);
    if (rn.dim() == 0) continue;
    std::vector<Rat> coords(rn.ambient_dim());
    for (std::size_t b = 0; b < rn.dim(); ++b) {
      Rat c = small_rat(rng);
      auto bv = rn.basis_vector(b);
      for (std::size_t x = 0; x < coords.size(); ++x) coords[x] += c * bv[x];
    }
    Morph f = cx.cat.hom_at(i, j).from_coordinates(coords);
    Morph g = random_hom(cx.cat.objects[j], cx.cat.objects[k], rng);
    Morph h = random_hom(cx.cat.objects[k], cx.cat.objects[i], rng);
    // rad^n is an ideal: arbitrary post- and pre-composition stays inside.
    Morph gf = compose(g, f);
    Morph fh = compose(f, h);
    if (!cx.table.power(i, k, n).contains(cx.cat.hom_at(i, k).coordinates(gf)))
      fails.push_back("case " + std::to_string(t) + ": post-composition left rad^n");
    if (!cx.table.power(k, j, n).contains(cx.cat.hom_at(k, j).coordinates(fh)))
      fails.push_back("case " + std::to_string(t) + ": pre-composition left rad^n");
  }
  return fails;
}

std::vector<std::string> suite_linalg(int cases, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<std::string> fails;
  std::uniform_int_distribution<int> dims(1, 6);
  for (int t = 0; t < cases; ++t) {
    int r = dims(rng), c = dims(rng);
    Mat m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.at(i, j) = small_rat(rng);
    Mat k = kernel_mat(m);
    if (m.rank() + k.rows() != static_cast<std::size_t>(c))
      fails.push_back("case " + std::to_string(t) + ": rank-nullity violated");
    if (k.rows() > 0 && !(m * k.transpose()).is_zero())
      fails.push_back("case " + std::to_string(t) + ": kernel vectors not annihilated");

    // Modular law (U + V) ∩ W = U + (V ∩ W) for U ⊆ W.
    int amb = dims(rng) + 2;
    auto rand_space = [&](int gens) {
      std::vector<std::vector<Rat>> rows;
      for (int g = 0; g < gens; ++g) {
        std::vector<Rat> row(amb);
        for (auto& x : row) x = small_rat(rng);
        rows.push_back(std::move(row));
      }
      return Subspace::span(rows, amb);
    };
    Subspace u = rand_space(2);
    Subspace v = rand_space(2);
    Subspace w = u.sum(rand_space(2)); // guarantees U ⊆ W
    Subspace lhs = u.sum(v).intersect(w);
    Subspace rhs = u.sum(v.intersect(w));
    if (!(lhs == rhs))
      fails.push_back("case " + std::to_string(t) + ": modular law violated");
  }
  return fails;
}

} // namespace testsupport
