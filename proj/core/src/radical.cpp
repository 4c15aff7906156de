#include "repkit/radical.hpp"

#include "repkit/endo.hpp"
#include "repkit/errors.hpp"

namespace repkit {

Subspace rad_basis(const IndexedCategory& c, int i, int j) {
  if (i != j) return c.hom_at(i, j).space().dim() == 0
                         ? Subspace::zero(0)
                         : Subspace::full(c.hom_at(i, j).dim());
  // End(X_i): coordinates agree with c.hom[i][i] because the Hom basis
  // computation is deterministic in the pair of representations.
  return radical_of_end(c.objects[i]);
}

namespace {

using Table = std::vector<std::vector<Subspace>>;

Table compose_tables(const IndexedCategory& c, const Table& first, const Table& then) {
  int n = c.size();
  Table out;
  for (int i = 0; i < n; ++i) {
    std::vector<Subspace> row;
    for (int j = 0; j < n; ++j) {
      std::vector<std::vector<Rat>> span;
      for (int k = 0; k < n; ++k) {
        const Subspace& a = first[i][k];
        const Subspace& b = then[k][j];
        for (std::size_t fi = 0; fi < a.dim(); ++fi) {
          Morph f = c.hom_at(i, k).from_coordinates(a.basis_vector(fi));
          for (std::size_t gi = 0; gi < b.dim(); ++gi) {
            Morph g = c.hom_at(k, j).from_coordinates(b.basis_vector(gi));
            span.push_back(c.hom_at(i, j).coordinates(compose(g, f)));
          }
        }
      }
      row.push_back(Subspace::span(span, c.hom_at(i, j).dim()));
    }
    out.push_back(std::move(row));
  }
  return out;
}

} // namespace

const Subspace& RadTable::power(int i, int j, int n) const {
  std::size_t idx = std::min<std::size_t>(n, powers.size()) - 1;
  return powers[idx][i][j];
}

const std::vector<std::vector<Subspace>>& RadTable::rad_infinity() const {
  return powers.back();
}

RadTable rad_power_table(const IndexedCategory& c, int max_power) {
  RadTable t;
  t.category = c;
  int n = c.size();
  Table r1;
  for (int i = 0; i < n; ++i) {
    std::vector<Subspace> row;
    for (int j = 0; j < n; ++j) row.push_back(rad_basis(c, i, j));
    r1.push_back(std::move(row));
  }
  t.powers.push_back(r1);
  for (int step = 1; step < max_power; ++step) {
    Table next = compose_tables(c, r1, t.powers.back());
    if (next == t.powers.back()) {
      t.stabilized = true;
      t.stabilization_index = step;
      return t;
    }
    t.powers.push_back(std::move(next));
  }
  if (n == 0 || max_power == 1) { // vacuous tables are stable by definition
    t.stabilized = true;
    t.stabilization_index = 1;
  }
  return t;
}

Depth depth(const RadTable& t, int i, int j, const Morph& f) {
  auto coords = t.category.hom_at(i, j).coordinates(f);
  Depth d;
  int last_in = 0;
  for (std::size_t n = 0; n < t.powers.size(); ++n) {
    if (t.powers[n][i][j].contains(coords))
      last_in = static_cast<int>(n) + 1;
    else
      break;
  }
  if (last_in == static_cast<int>(t.powers.size()) && t.stabilized) {
    d.infinite = true;
    return d;
  }
  d.value = last_in;
  return d;
}

std::vector<std::vector<Subspace>> rad_inf_square(const RadTable& t) {
  return compose_tables(t.category, t.rad_infinity(), t.rad_infinity());
}

bool is_rad_inf_square_zero(const RadTable& t) {
  for (const auto& row : rad_inf_square(t))
    for (const auto& s : row)
      if (!s.is_zero()) return false;
  return true;
}

std::vector<SimpleEnvelope> simple_envelopes(AlgebraPtr a) {
  std::vector<SimpleEnvelope> out;
  for (int v = 0; v < a->quiver().num_vertices(); ++v) {
    SimpleEnvelope e;
    e.s = simple_rep(a, v);
    std::tie(e.p, e.pi) = projective_cover(e.s);
    std::tie(e.i, e.iota) = injective_envelope(e.s);
    e.theta = compose(e.iota, e.pi);
    if (e.theta.is_zero())
      throw InternalInconsistency("simple_envelopes: theta vanished");
    out.push_back(std::move(e));
  }
  return out;
}

// Conjugates f: src -> tgt to a morphism between the category objects
// isomorphic to src and tgt, returning (i, j, f').
std::tuple<int, int, Morph> transport(const IndexedCategory& c, const Morph& f) {
  auto i = find_object(c, f.source);
  auto j = find_object(c, f.target);
  if (!i || !j)
    throw InternalInconsistency("transport: morphism endpoints missing from category");
  auto phi = is_isomorphic(c.objects[*i], f.source);
  auto psi = is_isomorphic(f.target, c.objects[*j]);
  if (!phi || !psi) throw InternalInconsistency("transport: isomorphism witness lost");
  return {*i, *j, compose(*psi, compose(f, *phi))};
}

FiniteTypeCertificate finite_type_certificate(AlgebraPtr a,
                                              const EnumerationLimits& limits,
                                              int max_power) {
  FiniteTypeCertificate cert;
  EnumerationResult en = enumerate_indecomposables(a, limits);
  cert.module_count = static_cast<int>(en.objects.size());
  cert.category = make_category(a, en.objects,
                                en.status == EnumerationResult::Status::Finite);
  cert.table = rad_power_table(cert.category, max_power);
  if (en.status == EnumerationResult::Status::Undetermined) {
    cert.status = FiniteTypeCertificate::Status::Undetermined;
    cert.reason = en.reason;
    return cert;
  }
  cert.status = FiniteTypeCertificate::Status::Finite;

  CheckReport& r = cert.report;
  r.check(cert.table.stabilized, "rad table did not stabilize");
  bool inf_zero = true;
  for (const auto& row : cert.table.rad_infinity())
    for (const auto& s : row) inf_zero = inf_zero && s.is_zero();
  r.check(inf_zero, "rad^inf != 0 on a closed enumeration");
  auto sq = rad_inf_square(cert.table);
  bool sq_zero = true;
  for (const auto& row : sq)
    for (const auto& s : row) sq_zero = sq_zero && s.is_zero();
  r.check(sq_zero, "(rad^inf)^2 != 0 on a closed enumeration");

  auto envs = simple_envelopes(a);
  for (std::size_t v = 0; v < envs.size(); ++v) {
    const auto& env = envs[v];
    const std::string at = " at vertex " + a->quiver().vertex_name(static_cast<int>(v));
    auto [pi_i, pi_j, pi_f] = transport(cert.category, env.pi);
    Depth dpi = depth(cert.table, pi_i, pi_j, pi_f);
    r.check(!dpi.infinite, "dp(pi_S) infinite" + at);
    cert.dp_pi.push_back(dpi);

    auto [io_i, io_j, io_f] = transport(cert.category, env.iota);
    Depth dio = depth(cert.table, io_i, io_j, io_f);
    r.check(!dio.infinite, "dp(iota_S) infinite" + at);
    cert.dp_iota.push_back(dio);

    auto [th_i, th_j, th_f] = transport(cert.category, env.theta);
    auto th_coords = cert.category.hom_at(th_i, th_j).coordinates(th_f);
    r.check(!sq[th_i][th_j].contains(th_coords), "theta_S in (rad^inf)^2" + at);
    r.check(sq[th_i][th_j].is_zero(), "(rad^inf)^2(P_S, I_S) != 0" + at);
  }

  if (!r.pass) {
    std::string msg = "finite_type_certificate: ";
    for (const auto& f : r.failures) msg += f + "; ";
    throw InternalInconsistency(msg);
  }
  return cert;
}

} // namespace repkit
