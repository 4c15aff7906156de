#include "repkit/morph.hpp"

#include "repkit/errors.hpp"

namespace repkit {

Morph Morph::identity(const Rep& m) {
  Morph f;
  f.source = m;
  f.target = m;
  for (int d : m.dims) f.mats.push_back(Mat::identity(d));
  return f;
}

Morph Morph::zero(const Rep& source, const Rep& target) {
  Morph f;
  f.source = source;
  f.target = target;
  for (std::size_t v = 0; v < source.dims.size(); ++v)
    f.mats.emplace_back(target.dims[v], source.dims[v]);
  return f;
}

bool Morph::is_valid() const {
  const Quiver& q = source.algebra->quiver();
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& arr = q.arrow(a);
    if (!(target.arrow_maps[a] * mats[arr.source] - mats[arr.target] * source.arrow_maps[a]).is_zero())
      return false;
  }
  return true;
}

bool Morph::is_zero() const {
  for (const auto& m : mats)
    if (!m.is_zero()) return false;
  return true;
}

bool Morph::is_mono() const {
  for (const auto& m : mats)
    if (m.rank() != m.cols()) return false;
  return true;
}

bool Morph::is_epi() const {
  for (const auto& m : mats)
    if (m.rank() != m.rows()) return false;
  return true;
}

bool Morph::is_iso() const {
  for (const auto& m : mats)
    if (m.rows() != m.cols() || m.rank() != m.rows()) return false;
  return true;
}

Morph Morph::operator+(const Morph& o) const {
  Morph f = *this;
  for (std::size_t v = 0; v < mats.size(); ++v) f.mats[v] = mats[v] + o.mats[v];
  return f;
}

Morph Morph::operator-(const Morph& o) const {
  Morph f = *this;
  for (std::size_t v = 0; v < mats.size(); ++v) f.mats[v] = mats[v] - o.mats[v];
  return f;
}

Morph Morph::scaled(const Rat& c) const {
  Morph f = *this;
  for (auto& m : f.mats) m = m.scaled(c);
  return f;
}

std::vector<Rat> Morph::flatten() const {
  std::vector<Rat> out;
  for (const auto& m : mats)
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m.at(r, c));
  return out;
}

Morph Morph::unflatten(const Rep& source, const Rep& target, const std::vector<Rat>& flat) {
  Morph f = Morph::zero(source, target);
  std::size_t i = 0;
  for (auto& m : f.mats)
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = flat.at(i++);
  return f;
}

Morph compose(const Morph& g, const Morph& f) {
  if (f.target.dims != g.source.dims)
    throw ValidationError("compose: middle objects do not match");
  Morph h;
  h.source = f.source;
  h.target = g.target;
  for (std::size_t v = 0; v < f.mats.size(); ++v) h.mats.push_back(g.mats[v] * f.mats[v]);
  return h;
}

Morph dual_morph(const Morph& f) {
  Morph d;
  d.source = dual_rep(f.target);
  d.target = dual_rep(f.source);
  for (const auto& m : f.mats) d.mats.push_back(m.transpose());
  return d;
}

DirectSum direct_sum(const std::vector<Rep>& parts) {
  if (parts.empty()) throw ValidationError("direct_sum: empty list");
  AlgebraPtr a = parts.front().algebra;
  const Quiver& q = a->quiver();
  DirectSum out;
  out.rep.algebra = a;
  out.rep.dims.assign(q.num_vertices(), 0);
  std::vector<std::vector<int>> offsets(parts.size(), std::vector<int>(q.num_vertices()));
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (int v = 0; v < q.num_vertices(); ++v) {
      offsets[i][v] = out.rep.dims[v];
      out.rep.dims[v] += parts[i].dims[v];
    }
  for (int ai = 0; ai < q.num_arrows(); ++ai) {
    const Arrow& arr = q.arrow(ai);
    Mat m(out.rep.dims[arr.target], out.rep.dims[arr.source]);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const Mat& b = parts[i].arrow_maps[ai];
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
          m.at(offsets[i][arr.target] + r, offsets[i][arr.source] + c) = b.at(r, c);
    }
    out.rep.arrow_maps.push_back(std::move(m));
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    Morph inc = Morph::zero(parts[i], out.rep);
    Morph prj = Morph::zero(out.rep, parts[i]);
    for (int v = 0; v < q.num_vertices(); ++v)
      for (int r = 0; r < parts[i].dims[v]; ++r) {
        inc.mats[v].at(offsets[i][v] + r, r) = 1;
        prj.mats[v].at(r, offsets[i][v] + r) = 1;
      }
    out.inclusions.push_back(std::move(inc));
    out.projections.push_back(std::move(prj));
  }
  return out;
}

Morph block_diag(const std::vector<Morph>& fs) {
  std::vector<Rep> srcs, tgts;
  for (const Morph& f : fs) {
    srcs.push_back(f.source);
    tgts.push_back(f.target);
  }
  auto ds = direct_sum(srcs);
  auto dt = direct_sum(tgts);
  Morph out = Morph::zero(ds.rep, dt.rep);
  for (std::size_t i = 0; i < fs.size(); ++i)
    out = out + compose(dt.inclusions[i], compose(fs[i], ds.projections[i]));
  return out;
}

Morph glue_from_sum(const DirectSum& sum, const std::vector<Morph>& fs) {
  Morph g = Morph::zero(sum.rep, fs.front().target);
  for (std::size_t i = 0; i < fs.size(); ++i)
    g = g + compose(fs[i], sum.projections[i]);
  return g;
}

Morph glue_into_sum(const DirectSum& sum, const std::vector<Morph>& fs) {
  Morph g = Morph::zero(fs.front().source, sum.rep);
  for (std::size_t i = 0; i < fs.size(); ++i)
    g = g + compose(sum.inclusions[i], fs[i]);
  return g;
}

} // namespace repkit
