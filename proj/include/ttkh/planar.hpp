#pragma once

#include <string>
#include <vector>

#include "ttkh/pdcode.hpp"

namespace ttkh {

enum class Color { Black, White };

inline Color opposite(Color c) { return c == Color::Black ? Color::White : Color::Black; }
const char* to_string(Color c);

// Corner (crossing, quadrant): quadrant q lies between positions q and q+1,
// counterclockwise.
struct Face {
  int id = 0;
  int variable = 0;  // 1-based index of x_f
  Color color = Color::Black;
  std::vector<EdgeEnd> boundary;  // corners in boundary order
};

struct FaceSet {
  std::vector<Face> faces;
  std::vector<int> corner_face;  // indexed by 4 * crossing + quadrant
  int marked_black = 0;          // left of the marked edge
  int marked_white = 1;          // right of the marked edge

  int n_faces() const { return static_cast<int>(faces.size()); }
  int face_at(int crossing, int quadrant) const { return corner_face[4 * crossing + quadrant]; }
  Color color_at(int crossing, int quadrant) const { return faces[face_at(crossing, quadrant)].color; }
};

// Faces on either side of an edge, travelling along its orientation.
int left_face(const LinkDiagram& d, const FaceSet& fs, int edge);
int right_face(const LinkDiagram& d, const FaceSet& fs, int edge);

// Faces are numbered in discovery order: the left and right faces of the
// marked edge are x1 and x2, then edges are scanned cyclically from there.
// Colors are filled in by checkerboard().
FaceSet trace_faces(const LinkDiagram& d);
// Proper 2-coloring with the left face of the marked edge black.  Further
// pieces of a split diagram lie in that face, entered from the left of their
// least edge, so the face count is n + 1 + #pieces.
FaceSet checkerboard(const LinkDiagram& d, FaceSet fs);
// trace_faces followed by checkerboard.
FaceSet colored_faces(const LinkDiagram& d);

void validate_spherical(const LinkDiagram& d);

struct TaitEdge {
  int crossing = 0;
  int u = 0;  // face ids
  int v = 0;
};

struct TaitGraph {
  Color color = Color::Black;
  std::vector<int> vertices;  // face ids
  std::vector<TaitEdge> edges;  // one per crossing, in crossing order
  int root = 0;
};

struct TaitPair {
  TaitGraph black;
  TaitGraph white;
};

TaitPair tait_graphs(const LinkDiagram& d, const FaceSet& fs);

// True iff the quadrant between the incoming under-strand and the next
// counterclockwise strand is black; those quadrants merge in the 1-resolution.
bool quadrant0_black(const FaceSet& fs, int crossing);

std::string face_table_text(const LinkDiagram& d, const FaceSet& fs);
std::string face_table_json(const LinkDiagram& d, const FaceSet& fs);

}  // namespace ttkh
