#pragma once

#include "repkit/matrix.hpp"

#include <vector>

namespace repkit {

// A subspace of Q^n in canonical form: the basis matrix is the RREF of any
// spanning set, with zero rows dropped. Two subspaces are equal iff their
// basis matrices are identical.
class Subspace {
public:
  explicit Subspace(std::size_t ambient_dim)
      : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  static Subspace span(const Mat& rows);
  static Subspace span(const std::vector<std::vector<Rat>>& rows, std::size_t ambient);
  static Subspace full(std::size_t ambient) { return span(Mat::identity(ambient)); }
  static Subspace zero(std::size_t ambient) { return Subspace(ambient); }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  std::vector<Rat> basis_vector(std::size_t i) const { return basis_.row(i); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  bool contains(const std::vector<Rat>& v) const;
  bool contains(const Subspace& o) const;
  bool operator==(const Subspace& o) const = default;

  // Coordinates of v in the canonical basis; nullopt if v is outside.
  std::optional<std::vector<Rat>> coordinates(const std::vector<Rat>& v) const;

private:
  std::size_t ambient_;
  Mat basis_;
  std::vector<std::size_t> pivots_;
  void check_ambient(const Subspace& o) const;
};

// Projection Q^n -> Q^{n - dim w} along w, reading off the non-pivot
// coordinates of the reduction modulo w's canonical basis.
Mat quotient_projection(const Subspace& w);

} // namespace repkit
