#include <doctest.h>

#include <set>

#include "support/fixtures.hpp"
#include "ttkh/errors.hpp"
#include "ttkh/planar.hpp"

using namespace ttkh;

TEST_CASE("connected diagrams have n + 2 faces") {
  for (const char* name : {"3_1", "4_1", "8_19", "L6n1{0,0}", "10_124"}) {
    LinkDiagram d = fixtures::entry(name).diagram();
    CHECK(colored_faces(d).n_faces() == d.n_crossings() + 2);
  }
}

TEST_CASE("marked edge has x1 black on the left and x2 white on the right") {
  LinkDiagram d = fixtures::entry("5_2").diagram();
  FaceSet fs = colored_faces(d);
  CHECK(left_face(d, fs, d.marked_edge()) == 0);
  CHECK(right_face(d, fs, d.marked_edge()) == 1);
  CHECK(fs.faces[0].color == Color::Black);
  CHECK(fs.faces[1].color == Color::White);
  CHECK(fs.faces[0].variable == 1);
  CHECK(fs.faces[1].variable == 2);
}

TEST_CASE("coloring is proper across every edge and alternates around crossings") {
  for (const auto& e : fixtures::catalog()) {
    LinkDiagram d = e.diagram();
    FaceSet fs = colored_faces(d);
    for (int edge = 0; edge < d.n_edges(); ++edge) {
      CHECK(fs.faces[left_face(d, fs, edge)].color != fs.faces[right_face(d, fs, edge)].color);
    }
    for (int c = 0; c < d.n_crossings(); ++c) {
      for (int q = 0; q < 4; ++q) CHECK(fs.color_at(c, q) != fs.color_at(c, (q + 1) % 4));
    }
  }
}

TEST_CASE("Tait graphs share the crossings and span all faces") {
  LinkDiagram d = fixtures::entry("6_2").diagram();
  FaceSet fs = colored_faces(d);
  TaitPair t = tait_graphs(d, fs);
  CHECK(t.black.edges.size() == 6);
  CHECK(t.white.edges.size() == 6);
  CHECK(t.black.vertices.size() + t.white.vertices.size() == 8);
  CHECK(t.black.root == 0);
  CHECK(t.white.root == 1);
  for (const auto& e : t.black.edges) {
    CHECK(fs.faces[e.u].color == Color::Black);
    CHECK(fs.faces[e.v].color == Color::Black);
  }
}

TEST_CASE("quadrant 0 colour alternates with crossing position") {
  LinkDiagram d = fixtures::entry("3_1").diagram();
  FaceSet fs = colored_faces(d);
  for (int c = 0; c < d.n_crossings(); ++c) {
    CHECK(quadrant0_black(fs, c) == (fs.color_at(c, 0) == Color::Black));
  }
}

TEST_CASE("virtual diagram fails the Euler count") {
  try {
    LinkDiagram::from_tuples({{1, 4, 2, 3}, {3, 6, 4, 5}, {5, 2, 6, 1}});
    FAIL("expected NonSpherical");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonSpherical);
  }
  validate_spherical(fixtures::entry("3_1").diagram());
}

TEST_CASE("split diagrams colour each piece") {
  LinkDiagram d = fixtures::load("basic/split.pd");
  FaceSet fs = colored_faces(d);
  // Both pieces share the face they sit in: (3 + 2) + (3 + 2) - 1.
  CHECK(fs.n_faces() == 9);
  std::set<int> pieces;
  for (const auto& corner : fs.faces[0].boundary) pieces.insert(d.piece_of_crossing(corner.crossing));
  CHECK(pieces.size() == 2);
  for (int c = 0; c < d.n_crossings(); ++c) {
    for (int q = 0; q < 4; ++q) CHECK(fs.color_at(c, q) != fs.color_at(c, (q + 1) % 4));
  }
}

TEST_CASE("face table output names every face") {
  LinkDiagram d = fixtures::entry("3_1").diagram();
  std::string text = face_table_text(d, colored_faces(d));
  CHECK(text.find("x5") != std::string::npos);
  CHECK(face_table_json(d, colored_faces(d)).front() == '{');
}
