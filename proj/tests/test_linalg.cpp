#include <doctest.h>

#include <repkit/matrix.hpp>
#include <repkit/subspace.hpp>

using namespace repkit;

namespace {
Mat mat(const std::vector<std::vector<long>>& rows, std::size_t cols) {
  Mat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rat(rows[r][c]);
  return m;
}
} // namespace

TEST_CASE("rational scalars canonicalize") {
  CHECK(rat(2, 4) == rat(1, 2));
  CHECK(rat_from_string("-3/6") == rat(-1, 2));
  CHECK(rat_to_string(rat(-1, 2)) == "-1/2");
  CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("abc"), std::invalid_argument);
}

TEST_CASE("rref, rank and kernel on a fixed matrix") {
  // rows span a 2-dimensional space; kernel is 1-dimensional.
  Mat m = mat({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}}, 3);
  CHECK(m.rank() == 2);
  Mat k = kernel_mat(m);
  REQUIRE(k.rows() == 1);
  CHECK((m * k.transpose()).is_zero());
}

TEST_CASE("solve and inverse") {
  Mat a = mat({{2, 1}, {1, 1}}, 2);
  auto x = solve(a, {rat(3), rat(2)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == rat(1));
  CHECK((*x)[1] == rat(1));
  auto inv = a.inverse();
  REQUIRE(inv.has_value());
  CHECK(a * *inv == Mat::identity(2));

  Mat singular = mat({{1, 2}, {2, 4}}, 2);
  CHECK(!singular.inverse().has_value());
  CHECK(!solve(singular, {rat(1), rat(0)}).has_value());
}

TEST_CASE("underdetermined systems admit any witness") {
  Mat a = mat({{1, 1}}, 2);
  auto x = solve(a, {rat(2)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] + (*x)[1] == rat(2));
}

TEST_CASE("subspace lattice basics") {
  Subspace u = Subspace::span({{rat(1), rat(0), rat(0)}}, 3);
  Subspace v = Subspace::span({{rat(0), rat(1), rat(0)}}, 3);
  Subspace s = u.sum(v);
  CHECK(s.dim() == 2);
  CHECK(s.contains(std::vector<Rat>{rat(1), rat(1), rat(0)}));
  CHECK(u.intersect(v).dim() == 0);
  CHECK(Subspace::full(3).contains(s));
  // Canonical bases make equality exact.
  Subspace s2 = Subspace::span({{rat(1), rat(1), rat(0)}, {rat(1), rat(-1), rat(0)}}, 3);
  CHECK(s == s2);
}

TEST_CASE("quotient projection reads complement coordinates") {
  Subspace w = Subspace::span({{rat(1), rat(0), rat(0)}}, 3);
  Mat p = quotient_projection(w);
  CHECK(p.rows() == 2);
  CHECK(p.cols() == 3);
  // Vectors in w map to zero.
  CHECK(p.apply({rat(5), rat(0), rat(0)}) == std::vector<Rat>{rat(0), rat(0)});
}
