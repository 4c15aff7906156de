#include "repkit/matrix.hpp"

#include <cassert>
#include <stdexcept>

namespace repkit {

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<std::vector<Rat>>& rows, std::size_t cols) {
  Mat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    assert(rows[r].size() == cols);
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

std::vector<Rat> Mat::row(std::size_t r) const {
  std::vector<Rat> v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

std::vector<Rat> Mat::col(std::size_t c) const {
  std::vector<Rat> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("Mat::operator*: shape mismatch");
  Mat p(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (o.at(k, j) != 0) p.at(i, j) += a * o.at(k, j);
    }
  return p;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat::operator+: shape mismatch");
  Mat s(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) s.e_[i] = e_[i] + o.e_[i];
  return s;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat::operator-: shape mismatch");
  Mat s(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) s.e_[i] = e_[i] - o.e_[i];
  return s;
}

Mat Mat::scaled(const Rat& c) const {
  Mat s(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) s.e_[i] = e_[i] * c;
  return s;
}

std::vector<Rat> Mat::apply(const std::vector<Rat>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("Mat::apply: shape mismatch");
  std::vector<Rat> out(rows_, Rat(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0) out[i] += at(i, j) * v[j];
  return out;
}

bool Mat::is_zero() const {
  for (const auto& x : e_)
    if (x != 0) return false;
  return true;
}

Mat Mat::vstack(const Mat& below) const {
  if (rows_ == 0 && cols_ == 0) return below;
  if (below.rows_ == 0 && below.cols_ == 0) return *this;
  if (cols_ != below.cols_) throw std::invalid_argument("Mat::vstack: column mismatch");
  Mat s(rows_ + below.rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) s.at(r, c) = at(r, c);
  for (std::size_t r = 0; r < below.rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) s.at(rows_ + r, c) = below.at(r, c);
  return s;
}

Mat Mat::hstack(const Mat& right) const {
  if (rows_ != right.rows_) throw std::invalid_argument("Mat::hstack: row mismatch");
  Mat s(rows_, cols_ + right.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) s.at(r, c) = at(r, c);
    for (std::size_t c = 0; c < right.cols_; ++c) s.at(r, cols_ + c) = right.at(r, c);
  }
  return s;
}

Mat Mat::pow(std::size_t n) const {
  if (rows_ != cols_) throw std::invalid_argument("Mat::pow: not square");
  Mat acc = Mat::identity(rows_);
  Mat base = *this;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

Rat Mat::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("Mat::trace: not square");
  Rat t(0);
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

std::pair<Mat, std::vector<std::size_t>> rref(const Mat& m) {
  Mat a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t sel = r;
    while (sel < a.rows() && a.at(sel, c) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(sel, j), a.at(r, j));
    Rat inv = 1 / a.at(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a.at(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      Rat f = a.at(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {a, pivots};
}

std::size_t Mat::rank() const { return rref(*this).second.size(); }

std::optional<Mat> Mat::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  auto [r, piv] = rref(hstack(Mat::identity(rows_)));
  if (piv.size() != rows_) return std::nullopt;
  for (std::size_t i = 0; i < rows_; ++i)
    if (piv[i] != i) return std::nullopt;
  Mat inv(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = r.at(i, cols_ + j);
  return inv;
}

Mat kernel_mat(const Mat& m) {
  auto [r, piv] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::vector<Rat>> rows;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rat> v(m.cols(), Rat(0));
    v[c] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r.at(i, c);
    rows.push_back(std::move(v));
  }
  // Rows are already in echelon shape up to sign pattern; re-run rref so the
  // result is the canonical basis.
  return rref(Mat::from_rows(rows, m.cols())).first;
}

std::optional<std::vector<Rat>> solve(const Mat& a, const std::vector<Rat>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: shape mismatch");
  Mat aug = a.hstack(Mat::from_rows({b}, b.size()).transpose());
  auto [r, piv] = rref(aug);
  for (auto c : piv)
    if (c == a.cols()) return std::nullopt; // pivot in the constant column
  std::vector<Rat> x(a.cols(), Rat(0));
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = r.at(i, a.cols());
  return x;
}

std::optional<Mat> solve_mat(const Mat& a, const Mat& b) {
  if (b.rows() != a.rows()) throw std::invalid_argument("solve_mat: shape mismatch");
  Mat aug = a.hstack(b);
  auto [r, piv] = rref(aug);
  for (auto c : piv)
    if (c >= a.cols()) return std::nullopt;
  Mat x(a.cols(), b.cols());
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x.at(piv[i], j) = r.at(i, a.cols() + j);
  return x;
}

} // namespace repkit
