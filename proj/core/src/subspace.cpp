#include "repkit/subspace.hpp"

#include "repkit/errors.hpp"

namespace repkit {

Subspace Subspace::span(const Mat& rows) {
  auto [r, piv] = rref(rows);
  Subspace s(rows.cols());
  Mat b(piv.size(), rows.cols());
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (std::size_t c = 0; c < rows.cols(); ++c) b.at(i, c) = r.at(i, c);
  s.basis_ = std::move(b);
  s.pivots_ = piv;
  return s;
}

Subspace Subspace::span(const std::vector<std::vector<Rat>>& rows, std::size_t ambient) {
  return span(Mat::from_rows(rows, ambient));
}

void Subspace::check_ambient(const Subspace& o) const {
  if (ambient_ != o.ambient_)
    throw AmbientMismatch("subspace ambient dimensions differ: " +
                          std::to_string(ambient_) + " vs " + std::to_string(o.ambient_));
}

Subspace Subspace::sum(const Subspace& o) const {
  check_ambient(o);
  return span(basis_.vstack(o.basis_));
}

Subspace Subspace::intersect(const Subspace& o) const {
  check_ambient(o);
  // Zassenhaus: rref of [U U; V 0]; rows whose left half is zero carry a
  // basis of the intersection in the right half.
  std::size_t n = ambient_;
  Mat top = basis_.hstack(basis_);
  Mat bottom = o.basis_.hstack(Mat(o.basis_.rows(), n));
  auto [r, piv] = rref(top.vstack(bottom));
  std::vector<std::vector<Rat>> inter;
  for (std::size_t i = 0; i < piv.size(); ++i) {
    if (piv[i] < n) continue;
    std::vector<Rat> v(n);
    for (std::size_t c = 0; c < n; ++c) v[c] = r.at(i, n + c);
    inter.push_back(std::move(v));
  }
  return span(inter, n);
}

bool Subspace::contains(const std::vector<Rat>& v) const {
  return coordinates(v).has_value();
}

std::optional<std::vector<Rat>> Subspace::coordinates(const std::vector<Rat>& v) const {
  if (v.size() != ambient_)
    throw AmbientMismatch("coordinates: vector length mismatch");
  // Basis rows are RREF, so candidate coordinates are read off pivot columns.
  std::vector<Rat> coords(dim());
  for (std::size_t i = 0; i < dim(); ++i) coords[i] = v[pivots_[i]];
  std::vector<Rat> rec(ambient_, Rat(0));
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t c = 0; c < ambient_; ++c)
      if (basis_.at(i, c) != 0) rec[c] += coords[i] * basis_.at(i, c);
  if (rec != v) return std::nullopt;
  return coords;
}

bool Subspace::contains(const Subspace& o) const {
  check_ambient(o);
  for (std::size_t i = 0; i < o.dim(); ++i)
    if (!contains(o.basis_.row(i))) return false;
  return true;
}

Mat quotient_projection(const Subspace& w) {
  std::size_t n = w.ambient_dim();
  std::vector<bool> is_pivot(n, false);
  std::vector<std::size_t> pivot_col(w.dim());
  for (std::size_t i = 0; i < w.dim(); ++i) {
    std::size_t c = 0;
    while (w.basis().at(i, c) == 0) ++c;
    pivot_col[i] = c;
    is_pivot[c] = true;
  }
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat p(free_cols.size(), n);
  // e_c reduced modulo w is supported on the free columns; those entries
  // are the projection of e_c.
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<Rat> v(n, Rat(0));
    v[c] = 1;
    for (std::size_t i = 0; i < w.dim(); ++i) {
      Rat coeff = v[pivot_col[i]];
      if (coeff != 0)
        for (std::size_t j = 0; j < n; ++j) v[j] -= coeff * w.basis().at(i, j);
    }
    for (std::size_t r = 0; r < free_cols.size(); ++r) p.at(r, c) = v[free_cols[r]];
  }
  return p;
}

} // namespace repkit
