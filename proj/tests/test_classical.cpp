#include <doctest.h>

#include "support/fixtures.hpp"
#include "ttkh/classical.hpp"
#include "ttkh/errors.hpp"
#include "ttkh/spantree.hpp"

using namespace ttkh;

TEST_CASE("matrix signature and determinant") {
  CHECK(matrix_signature({{2, 1}, {1, 2}}) == 2);
  CHECK(matrix_signature({{0, 1}, {1, 0}}) == 0);
  CHECK(matrix_signature({{-3}}) == -1);
  CHECK(matrix_signature({{1, 2, 0}, {2, 1, 0}, {0, 0, 0}}) == 0);
  CHECK(matrix_signature({{0, 0}, {0, 5}}) == 1);
  CHECK(matrix_determinant({{2, 1}, {1, 2}}) == 3);
  CHECK(matrix_determinant({{0, 1}, {1, 0}}) == -1);
  CHECK(matrix_determinant({}) == 1);
}

TEST_CASE("trefoil, figure-eight and the curl") {
  LinkDiagram t = fixtures::entry("3_1").diagram();
  CHECK(signature(t) == -2);
  CHECK(determinant(t) == 3);
  CHECK(signature(mirror(t)) == 2);
  LinkDiagram f = fixtures::entry("4_1").diagram();
  CHECK(signature(f) == 0);
  CHECK(determinant(f) == 5);
  LinkDiagram curl = fixtures::load("basic/curl.pd");
  CHECK(signature(curl) == 0);
  CHECK(determinant(curl) == 1);
}

TEST_CASE("Goritz matrices") {
  LinkDiagram d = fixtures::entry("5_2").diagram();
  FaceSet fs = colored_faces(d);
  for (Color white : {Color::White, Color::Black}) {
    GoritzData g = goritz(d, fs, white);
    CHECK(g.minor.size() + 1 == g.faces.size());
    for (const auto& row : g.full) {
      long sum = 0;
      for (long v : row) sum += v;
      CHECK(sum == 0);
    }
    for (std::size_t i = 0; i < g.full.size(); ++i) {
      for (std::size_t j = 0; j < g.full.size(); ++j) CHECK(g.full[i][j] == g.full[j][i]);
    }
    CHECK(signature(d, fs, white) == signature(d));
  }
}

TEST_CASE("table values") {
  for (const auto& e : fixtures::catalog()) {
    LinkDiagram d = e.diagram();
    CHECK_MESSAGE(signature(d) == e.signature, e.name);
    CHECK_MESSAGE(determinant(d) == e.determinant, e.name);
    CHECK_MESSAGE(signature(mirror(d)) == -e.signature, e.name);
    CHECK_MESSAGE(determinant(mirror(d)) == e.determinant, e.name);
  }
}

TEST_CASE("split diagrams") {
  LinkDiagram d = fixtures::load("basic/split.pd");
  CHECK(determinant(d) == 0);
  CHECK_THROWS_AS(signature(d), Error);
}

TEST_CASE("tree polynomial identities") {
  for (const char* name : {"3_1", "4_1", "8_19", "9_42", "L6n1{0,0}", "11n_57"}) {
    LinkDiagram d = fixtures::entry(name).diagram();
    TreePolynomials tp = tree_polynomial(d);
    HomologyReport h = spanning_tree_homology(d);
    CHECK(evaluate(tp.q, 1) == h.generators);
    CHECK(abs(evaluate(tp.q, -1)) == determinant(d));
    IntPoly chain;
    for (const auto& [k, v] : h.chain_ranks) chain[k] = v;
    CHECK(tp.r == chain);
  }
  TreePolynomials t = tree_polynomial(fixtures::entry("3_1").diagram());
  CHECK(poly_text(t.q) == "3d");
  CHECK(poly_text(t.r) == "3d^-2");
}

TEST_CASE("Euler characteristic") {
  CHECK(modulus_squared_at_i({{0, 1}, {2, 1}}) == 0);
  CHECK(modulus_squared_at_i({{-2, 3}}) == 9);
  CHECK(modulus_squared_at_i({{1, 2}, {0, 1}}) == 5);
  LinkDiagram d = fixtures::entry("11n_38").diagram();
  EulerCheck e = euler_check(d, spanning_tree_homology(d).poincare);
  CHECK(e.ok);
  CHECK(e.modulus_squared == e.det * e.det);
  CHECK_FALSE(euler_check(d, Poincare{{0, 1}}).ok);
}

TEST_CASE("polynomial helpers") {
  IntPoly p = to_int_poly(Poincare{{-1, 2}, {3, 1}});
  CHECK(evaluate(p, 1) == 3);
  CHECK(poly_text(p) == "2d^-1 + d^3");
  CHECK(poly_text({}) == "0");
}
