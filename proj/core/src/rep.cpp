#include "repkit/rep.hpp"

#include <numeric>

namespace repkit {

int Rep::total_dim() const {
  return std::accumulate(dims.begin(), dims.end(), 0);
}

std::vector<int> Rep::vertex_offsets() const {
  std::vector<int> off(dims.size() + 1, 0);
  for (std::size_t v = 0; v < dims.size(); ++v) off[v + 1] = off[v] + dims[v];
  return off;
}

Mat Rep::path_action(const Path& p) const {
  Mat m = Mat::identity(dims[p.source]);
  for (int a : p.arrows) m = arrow_maps[a] * m;
  return m;
}

bool Rep::relations_hold() const {
  for (const auto& r : algebra->relations()) {
    int src = r.terms.front().second.source;
    int tgt = r.terms.front().second.target;
    Mat acc(dims[tgt], dims[src]);
    for (const auto& [c, p] : r.terms)
      if (c != 0) acc = acc + path_action(p).scaled(c);
    if (!acc.is_zero()) return false;
  }
  return true;
}

Rep zero_rep(AlgebraPtr a) {
  Rep m;
  m.algebra = a;
  m.dims.assign(a->quiver().num_vertices(), 0);
  for (int i = 0; i < a->quiver().num_arrows(); ++i)
    m.arrow_maps.emplace_back(0, 0);
  return m;
}

Rep projective_rep(AlgebraPtr a, int v) {
  const Quiver& q = a->quiver();
  Rep m;
  m.algebra = a;
  m.dims.resize(q.num_vertices());
  for (int u = 0; u < q.num_vertices(); ++u)
    m.dims[u] = a->dim_pair(v, u);
  for (int ai = 0; ai < q.num_arrows(); ++ai) {
    const Arrow& arr = q.arrow(ai);
    Mat mat(m.dims[arr.target], m.dims[arr.source]);
    const auto& from = a->basis_paths(v, arr.source);
    for (std::size_t k = 0; k < from.size(); ++k) {
      Path ext = from[k];
      ext.arrows.push_back(ai);
      ext.target = arr.target;
      auto coords = a->normal_form(ext);
      for (std::size_t r = 0; r < coords.size(); ++r) mat.at(r, k) = coords[r];
    }
    m.arrow_maps.push_back(std::move(mat));
  }
  return m;
}

Rep simple_rep(AlgebraPtr a, int v) {
  const Quiver& q = a->quiver();
  Rep m;
  m.algebra = a;
  m.dims.assign(q.num_vertices(), 0);
  m.dims[v] = 1;
  for (int ai = 0; ai < q.num_arrows(); ++ai) {
    const Arrow& arr = q.arrow(ai);
    m.arrow_maps.emplace_back(m.dims[arr.target], m.dims[arr.source]);
  }
  return m;
}

Rep dual_rep(const Rep& m) {
  auto opp = m.algebra->opposite();
  Rep d;
  d.algebra = opp;
  d.dims = m.dims;
  d.arrow_maps.resize(m.arrow_maps.size());
  // Arrow i of the opposite quiver is the reversal of arrow i of the quiver.
  for (std::size_t i = 0; i < m.arrow_maps.size(); ++i)
    d.arrow_maps[i] = m.arrow_maps[i].transpose();
  return d;
}

Rep injective_rep(AlgebraPtr a, int v) {
  return dual_rep(projective_rep(a->opposite(), v));
}

std::string dim_vector_string(const Rep& m) {
  std::string s = "(";
  for (std::size_t i = 0; i < m.dims.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(m.dims[i]);
  }
  return s + ")";
}

} // namespace repkit
