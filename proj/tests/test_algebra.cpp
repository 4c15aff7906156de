#include <doctest.h>

#include "support.hpp"

#include <repkit/errors.hpp>

using namespace repkit;
using testsupport::algebra;

TEST_CASE("preset library") {
  auto names = preset_names();
  CHECK(std::find(names.begin(), names.end(), "A3") != names.end());
  CHECK(has_preset("kronecker"));
  CHECK(!has_preset("nope"));
  CHECK_THROWS_AS(preset("nope"), ValidationError);
  AlgebraFile n3 = preset("N3");
  REQUIRE(n3.relations.size() == 1);
  CHECK(n3.relations[0][0].path.size() == 3);
}

TEST_CASE("path basis dimensions of the presets") {
  CHECK(algebra("A1")->dim() == 1);
  CHECK(algebra("A2")->dim() == 3);  // e1, e2, a
  CHECK(algebra("A3")->dim() == 6);  // e1, e2, e3, a, b, ab
  CHECK(algebra("N3")->dim() == 3);  // 1, x, x^2
  CHECK(algebra("kronecker")->dim() == 4);
  CHECK(algebra("QH4")->dim() == 5); // e1, e2, e3, a, b (ab = 0)
}

TEST_CASE("a loop with no relation is not admissible") {
  AlgebraFile f;
  f.name = "freeloop";
  f.vertices = {"1"};
  f.arrows = {{"x", "1", "1"}};
  CHECK_THROWS_AS(build_algebra(f), NonAdmissible);
}

TEST_CASE("normal forms respect the relations") {
  AlgebraPtr a = algebra("N3");
  const Quiver& q = a->quiver();
  Path x{{0}, 0, 0};
  Path x3{{0, 0, 0}, 0, 0};
  CHECK(a->basis_index(x) >= 0);
  auto nf = a->normal_form(x3);
  for (const Rat& c : nf) CHECK(c == rat(0));
  (void)q;
}

TEST_CASE("opposite algebra round-trips") {
  AlgebraPtr a = algebra("A3");
  auto opp = a->opposite();
  CHECK(opp->dim() == a->dim());
  CHECK(opp->opposite().get() == a.get());
  // Paths 1 -> 3 become paths 3 -> 1.
  CHECK(opp->dim_pair(2, 0) == a->dim_pair(0, 2));
}

TEST_CASE("algebra file validation") {
  CHECK_THROWS_AS(parse_algebra("{ not json"), ParseError);
  CHECK_THROWS_AS(parse_algebra(R"({"name":"x","vertices":["1","1"],"arrows":[]})"),
                  ValidationError);
  CHECK_THROWS_AS(
      parse_algebra(
          R"({"name":"x","vertices":["1","2"],
              "arrows":[{"name":"a","from":"1","to":"2"}],
              "relations":[[{"coeff":"1","path":["zz","a"]}]]})"),
      ValidationError);
  // Relation paths must have length >= 2.
  CHECK_THROWS_AS(
      parse_algebra(
          R"({"name":"x","vertices":["1","2"],
              "arrows":[{"name":"a","from":"1","to":"2"}],
              "relations":[[{"coeff":"1","path":["a"]}]]})"),
      ValidationError);
  // qh_order must be a permutation of the vertices.
  CHECK_THROWS_AS(
      parse_algebra(
          R"({"name":"x","vertices":["1","2"],
              "arrows":[{"name":"a","from":"1","to":"2"}],
              "qh_order":["1","1"]})"),
      ValidationError);
  // Non-composable relation path is rejected at algebra construction.
  CHECK_THROWS(build_algebra(parse_algebra(
      R"({"name":"x","vertices":["1","2"],
          "arrows":[{"name":"a","from":"1","to":"2"}],
          "relations":[[{"coeff":"1","path":["a","a"]}]]})")));
}

TEST_CASE("qh_order reorders the vertices") {
  AlgebraPtr a = algebra("QH4");
  const Quiver& q = a->quiver();
  CHECK(q.vertex_name(0) == "2");
  CHECK(q.vertex_name(1) == "1");
  CHECK(q.vertex_name(2) == "3");
}

TEST_CASE("serialization round-trips through the parser") {
  AlgebraFile f = preset("N3");
  AlgebraFile g = parse_algebra(algebra_file_to_json(f));
  CHECK(g.name == f.name);
  CHECK(g.vertices == f.vertices);
  REQUIRE(g.relations.size() == 1);
  CHECK(g.relations[0][0].coeff == f.relations[0][0].coeff);
  CHECK(g.relations[0][0].path == f.relations[0][0].path);
}
