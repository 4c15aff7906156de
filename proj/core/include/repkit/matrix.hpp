#pragma once

#include "repkit/rat.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace repkit {

// Dense matrix over the rationals, row-major.
class Mat {
public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols, Rat(0)) {}

  static Mat identity(std::size_t n);
  static Mat from_rows(const std::vector<std::vector<Rat>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  std::vector<Rat> row(std::size_t r) const;
  std::vector<Rat> col(std::size_t c) const;

  Mat transpose() const;
  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(const Rat& c) const;
  std::vector<Rat> apply(const std::vector<Rat>& v) const; // m * v
  bool operator==(const Mat& o) const = default;

  bool is_zero() const;
  Mat vstack(const Mat& below) const;
  Mat hstack(const Mat& right) const;
  Mat pow(std::size_t n) const; // square matrices only
  Rat trace() const;

  std::size_t rank() const;
  bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }
  std::optional<Mat> inverse() const;

private:
  std::size_t rows_, cols_;
  std::vector<Rat> e_;
};

// Reduced row-echelon form; second component lists pivot columns.
std::pair<Mat, std::vector<std::size_t>> rref(const Mat& m);

// Canonical basis of {x : m x = 0}, rows of the result (as a Subspace basis
// the caller wraps it). Returned via matrix whose rows span the kernel in RREF.
Mat kernel_mat(const Mat& m);

// Some x with a x = b, or nullopt if inconsistent.
std::optional<std::vector<Rat>> solve(const Mat& a, const std::vector<Rat>& b);

// Solve a X = B columnwise; nullopt if any column is inconsistent.
std::optional<Mat> solve_mat(const Mat& a, const Mat& b);

} // namespace repkit
