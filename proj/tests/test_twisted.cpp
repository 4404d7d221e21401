#include <doctest.h>

#include <set>

#include "support/fixtures.hpp"
#include "ttkh/errors.hpp"
#include "ttkh/spantree.hpp"
#include "ttkh/twisted.hpp"

using namespace ttkh;

TEST_CASE("smoothing partners") {
  CHECK(smoothing_partner(0, false) == 1);
  CHECK(smoothing_partner(2, false) == 3);
  CHECK(smoothing_partner(0, true) == 3);
  CHECK(smoothing_partner(1, true) == 2);
}

TEST_CASE("resolutions of the two-crossing unlink") {
  LinkDiagram d = fixtures::load("basic/unlink2.pd");
  FaceSet fs = colored_faces(d);
  CHECK(resolve(d, fs, CrossingSet()).n_circles() == 1);
  CHECK(resolve(d, fs, CrossingSet(0b11)).n_circles() == 1);
  CHECK(resolve(d, fs, CrossingSet(0b01)).n_circles() == 2);
  CHECK(resolve(d, fs, CrossingSet(0b10)).n_circles() == 2);
  for (std::uint64_t s = 0; s < 4; ++s) {
    Resolution r = resolve(d, fs, CrossingSet(s));
    CHECK(r.circles[0].marked);
    CHECK(r.circles[0].edges.front() <= d.marked_edge());
  }
  // 1 + 2 + 2 + 1 generators.
  CHECK(build_twisted_complex_symbolic(d).size() == 6);
}

TEST_CASE("unmarked circle areas are faces away from the marked point") {
  LinkDiagram d = fixtures::load("basic/unlink2.pd");
  FaceSet fs = colored_faces(d);
  std::set<std::string> areas;
  for (std::uint64_t s : {0b01u, 0b10u}) {
    Resolution r = resolve(d, fs, CrossingSet(s));
    areas.insert(area_of(r.circles[1].interior).to_string());
  }
  CHECK(areas == std::set<std::string>{"x3", "x4"});
}

TEST_CASE("d^2 = 0 on the symbolic cube") {
  for (const char* name : {"3_1", "4_1", "L2a1{0}", "5_2", "6_3"}) {
    auto c = build_twisted_complex_symbolic(fixtures::entry(name).diagram());
    CHECK_FALSE(verify_d_squared(c).has_value());
  }
  for (const char* file : {"basic/unlink2.pd", "basic/split.pd", "basic/curl.pd"}) {
    auto c = build_twisted_complex_symbolic(fixtures::load(file));
    CHECK_MESSAGE(!verify_d_squared(c).has_value(), file);
  }
}

TEST_CASE("Koszul part sends v+ to v- times the area") {
  LinkDiagram d = fixtures::load("basic/unlink2.pd");
  FaceSet fs = colored_faces(d);
  CubeState st{CrossingSet(0b01), 0b1};
  auto terms = koszul_component(d, fs, st);
  REQUIRE(terms.size() == 1);
  CHECK(terms[0].state.plus == 0);
  CHECK(terms[0].coefficient.size() == 1);
}

TEST_CASE("reduced Khovanov homology of small knots") {
  CHECK(reduced_khovanov_delta(fixtures::entry("3_1").diagram()) == Poincare{{-2, 3}});
  CHECK(reduced_khovanov_delta(fixtures::entry("4_1").diagram()) == Poincare{{0, 5}});
  CHECK(reduced_khovanov_delta(fixtures::load("basic/curl.pd")) == Poincare{{0, 1}});
  CHECK(reduced_khovanov_delta(fixtures::load("basic/unlink2.pd")) == Poincare{{-1, 1}, {1, 1}});
}

TEST_CASE("twisted homology equals the spanning-tree answer") {
  for (const char* name : {"3_1", "5_2", "8_19", "L6n1{0,0}"}) {
    LinkDiagram d = fixtures::entry(name).diagram();
    CHECK(twisted_homology(d) == spanning_tree_homology(d).poincare);
  }
  CHECK(twisted_homology(fixtures::load("basic/unlink2.pd")).empty());
}

TEST_CASE("the cube refuses large diagrams") {
  CubeOptions small;
  small.threshold = 5;
  try {
    reduced_khovanov_delta(fixtures::entry("8_19").diagram(), small);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooLarge);
  }
}

TEST_CASE("gradings") {
  LinkDiagram d = fixtures::load("basic/unlink2.pd");
  FaceSet fs = colored_faces(d);
  Resolution r = resolve(d, fs, CrossingSet(0b01));
  CHECK(q_grading(r, 1) - q_grading(r, 0) == 2);
  CHECK(delta_unshifted(r, 1) - delta_unshifted(r, 0) == -2);
}
