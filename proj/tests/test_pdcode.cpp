#include <doctest.h>

#include "support/fixtures.hpp"
#include "ttkh/braids.hpp"
#include "ttkh/errors.hpp"
#include "ttkh/pdcode.hpp"

using namespace ttkh;

namespace {

const char* kTrefoil = "X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]";

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::TooLarge;
}

}  // namespace

TEST_CASE("trefoil parses with three positive crossings") {
  LinkDiagram d = parse_pd(kTrefoil);
  CHECK(d.n_crossings() == 3);
  CHECK(d.n_edges() == 6);
  CHECK(d.n_components() == 1);
  CHECK_FALSE(d.is_split());
  SignCount s = crossing_signs(d);
  CHECK(s.n_plus == 3);
  CHECK(s.n_minus == 0);
  CHECK(is_alternating(d));
}

TEST_CASE("figure-eight has two crossings of each sign") {
  SignCount s = crossing_signs(fixtures::entry("4_1").diagram());
  CHECK(s.n_plus == 2);
  CHECK(s.n_minus == 2);
}

TEST_CASE("every edge has one tail and one head") {
  LinkDiagram d = fixtures::entry("8_19").diagram();
  for (int e = 0; e < d.n_edges(); ++e) {
    EdgeEnd t = d.tail(e);
    EdgeEnd h = d.head(e);
    CHECK(d.edge_at(t.crossing, t.pos) == e);
    CHECK(d.edge_at(h.crossing, h.pos) == e);
    CHECK(d.partner(t) == h);
  }
}

TEST_CASE("render and parse round-trip") {
  for (const char* name : {"3_1", "8_19", "L6n1{0,0}", "10_132"}) {
    LinkDiagram d = fixtures::entry(name).diagram();
    CHECK(parse_pd(render_pd(d)) == d);
  }
  LinkDiagram marked = parse_pd(std::string(kTrefoil) + " mark=4");
  CHECK(marked.marked_edge() == 3);
  CHECK(parse_pd(render_pd(marked)) == marked);
}

TEST_CASE("PD wrapper and separators are accepted") {
  CHECK(parse_pd("PD[X[1,5,2,4], X[3,1,4,6], X[5,3,6,2]]") == parse_pd(kTrefoil));
}

TEST_CASE("malformed input is rejected with a named error") {
  CHECK(kind_of([] { parse_pd("X[1,5,2,4] X[3,1,4,6] Y[5,3,6,2]"); }) == ErrorKind::MalformedToken);
  CHECK(kind_of([] { parse_pd("X[1,5,2] X[3,1,4,6]"); }) == ErrorKind::MalformedToken);
  CHECK(kind_of([] { parse_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,7]"); }) == ErrorKind::EdgeDegree);
  CHECK(kind_of([] { parse_pd(std::string(kTrefoil) + " mark=9"); }) == ErrorKind::MalformedToken);
  CHECK(kind_of([] { parse_pd("X[1,4,2,3] X[3,6,4,5] X[5,2,6,1]"); }) == ErrorKind::NonSpherical);
}

TEST_CASE("batch files carry names and skip comments") {
  auto items = split_batch("# header\n\na: X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]\nX[2,2,1,1]\n");
  REQUIRE(items.size() == 2);
  CHECK(items[0].name == "a");
  CHECK(parse_pd(items[1].pd).n_crossings() == 1);
}

TEST_CASE("mirror swaps crossing signs") {
  LinkDiagram d = fixtures::entry("5_2").diagram();
  SignCount a = crossing_signs(d);
  SignCount b = crossing_signs(mirror(d));
  CHECK(a.n_plus == b.n_minus);
  CHECK(a.n_minus == b.n_plus);
  CHECK(mirror(mirror(d)) == d);
}

TEST_CASE("connected sum adds crossings and keeps one component") {
  LinkDiagram a = parse_pd(kTrefoil);
  LinkDiagram b = fixtures::entry("4_1").diagram();
  LinkDiagram s = connect_sum(a, b);
  CHECK(s.n_crossings() == 7);
  CHECK(s.n_components() == 1);
  CHECK(crossing_signs(s).n_plus == 5);
}

TEST_CASE("disjoint pieces are reported as split") {
  LinkDiagram d = fixtures::load("basic/split.pd");
  CHECK(d.is_split());
  CHECK(d.n_pieces() == 2);
}

TEST_CASE("alternation is detected") {
  CHECK(is_alternating(fixtures::entry("7_4").diagram()));
  CHECK_FALSE(is_alternating(fixtures::entry("8_19").diagram()));
}

TEST_CASE("braid closures") {
  LinkDiagram t = LinkDiagram::from_tuples(braid_closure(2, {1, 1, 1}));
  CHECK(t.n_components() == 1);
  CHECK(crossing_signs(t).n_plus == 3);
  LinkDiagram hopf = LinkDiagram::from_tuples(braid_closure(2, {1, 1}));
  CHECK(hopf.n_components() == 2);
  CHECK(torus_braid(3, 5).size() == 10);
  CHECK(parse_braid("[1, -2, 1]") == std::vector<int>{1, -2, 1});
  CHECK_THROWS_AS(parse_braid("1,x"), Error);
}
