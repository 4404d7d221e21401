#include "ttkh/planar.hpp"

#include <deque>
#include <json.hpp>
#include <sstream>

#include "ttkh/errors.hpp"

namespace ttkh {

const char* to_string(Color c) { return c == Color::Black ? "black" : "white"; }

int left_face(const LinkDiagram& d, const FaceSet& fs, int edge) {
  EdgeEnd t = d.tail(edge);
  return fs.face_at(t.crossing, t.pos);
}

int right_face(const LinkDiagram& d, const FaceSet& fs, int edge) {
  EdgeEnd t = d.tail(edge);
  return fs.face_at(t.crossing, (t.pos + 3) % 4);
}

namespace {

// The other pieces of a split diagram sit side by side inside face 0 (left
// of the marked edge): the face left of each piece's least edge is merged
// into it, leaving n + 1 + #pieces faces as on the sphere.
void merge_outer_faces(const LinkDiagram& d, FaceSet& fs) {
  const int home = d.piece_of_crossing(d.tail(d.marked_edge()).crossing);
  std::vector<char> seen(d.n_pieces(), 0);
  seen[home] = 1;
  std::vector<int> target(fs.n_faces());
  for (int f = 0; f < fs.n_faces(); ++f) target[f] = f;
  for (int e = 0; e < d.n_edges(); ++e) {
    int p = d.piece_of_crossing(d.tail(e).crossing);
    if (seen[p]) continue;
    seen[p] = 1;
    target[left_face(d, fs, e)] = 0;
  }
  std::vector<int> renumber(fs.n_faces(), -1);
  std::vector<Face> kept;
  for (int f = 0; f < fs.n_faces(); ++f) {
    if (target[f] != f) continue;
    renumber[f] = static_cast<int>(kept.size());
    kept.push_back(std::move(fs.faces[f]));
    kept.back().id = renumber[f];
    kept.back().variable = renumber[f] + 1;
  }
  for (int f = 0; f < fs.n_faces(); ++f) {
    if (target[f] == f) continue;
    auto& into = kept[renumber[target[f]]].boundary;
    into.insert(into.end(), fs.faces[f].boundary.begin(), fs.faces[f].boundary.end());
  }
  for (int& cf : fs.corner_face) cf = renumber[target[cf]];
  fs.faces = std::move(kept);
}

FaceSet trace_uncolored(const LinkDiagram& d) {
  const int n = d.n_crossings();
  const int m = d.n_edges();
  FaceSet fs;
  fs.corner_face.assign(4 * n, -1);

  auto trace = [&](EdgeEnd start) {
    if (fs.corner_face[4 * start.crossing + start.pos] >= 0) return;
    Face f;
    f.id = fs.n_faces();
    f.variable = f.id + 1;
    EdgeEnd corner = start;
    do {
      fs.corner_face[4 * corner.crossing + corner.pos] = f.id;
      f.boundary.push_back(corner);
      corner = d.partner({corner.crossing, (corner.pos + 1) % 4});
    } while (!(corner == start));
    fs.faces.push_back(std::move(f));
  };

  for (int k = 0; k < m; ++k) {
    EdgeEnd t = d.tail((d.marked_edge() + k) % m);
    trace({t.crossing, t.pos});
    trace({t.crossing, (t.pos + 3) % 4});
  }

  std::vector<int> faces_in_piece(d.n_pieces(), 0);
  std::vector<int> crossings_in_piece(d.n_pieces(), 0);
  for (int c = 0; c < n; ++c) ++crossings_in_piece[d.piece_of_crossing(c)];
  for (const auto& f : fs.faces) ++faces_in_piece[d.piece_of_crossing(f.boundary.front().crossing)];
  for (int p = 0; p < d.n_pieces(); ++p) {
    if (faces_in_piece[p] != crossings_in_piece[p] + 2) {
      throw Error(ErrorKind::NonSpherical,
                  "piece with " + std::to_string(crossings_in_piece[p]) + " crossings has " +
                      std::to_string(faces_in_piece[p]) + " faces");
    }
  }
  if (d.n_pieces() > 1) merge_outer_faces(d, fs);
  return fs;
}

}  // namespace

void validate_spherical(const LinkDiagram& d) { (void)trace_uncolored(d); }

FaceSet trace_faces(const LinkDiagram& d) {
  FaceSet fs = trace_uncolored(d);
  fs.marked_black = left_face(d, fs, d.marked_edge());
  fs.marked_white = right_face(d, fs, d.marked_edge());
  return fs;
}

FaceSet checkerboard(const LinkDiagram& d, FaceSet fs) {
  const int nf = fs.n_faces();
  std::vector<std::vector<int>> adj(nf);
  for (int e = 0; e < d.n_edges(); ++e) {
    int l = left_face(d, fs, e);
    int r = right_face(d, fs, e);
    adj[l].push_back(r);
    adj[r].push_back(l);
  }
  std::vector<int> seed_edge(d.n_pieces(), -1);
  seed_edge[d.piece_of_crossing(d.tail(d.marked_edge()).crossing)] = d.marked_edge();
  for (int e = 0; e < d.n_edges(); ++e) {
    int p = d.piece_of_crossing(d.tail(e).crossing);
    if (seed_edge[p] < 0) seed_edge[p] = e;
  }

  std::vector<int> color(nf, -1);
  for (int seed : seed_edge) {
    int start = left_face(d, fs, seed);
    color[start] = 0;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int f = queue.front();
      queue.pop_front();
      for (int g : adj[f]) {
        if (color[g] < 0) {
          color[g] = 1 - color[f];
          queue.push_back(g);
        } else if (color[g] == color[f]) {
          throw Error(ErrorKind::NotBipartite, "adjacent faces share a color");
        }
      }
    }
  }
  for (int f = 0; f < nf; ++f) fs.faces[f].color = color[f] == 0 ? Color::Black : Color::White;
  return fs;
}

FaceSet colored_faces(const LinkDiagram& d) { return checkerboard(d, trace_faces(d)); }

bool quadrant0_black(const FaceSet& fs, int crossing) {
  return fs.color_at(crossing, 0) == Color::Black;
}

TaitPair tait_graphs(const LinkDiagram& d, const FaceSet& fs) {
  TaitPair out;
  out.black.color = Color::Black;
  out.white.color = Color::White;
  out.black.root = fs.marked_black;
  out.white.root = fs.marked_white;
  for (const auto& f : fs.faces) {
    (f.color == Color::Black ? out.black : out.white).vertices.push_back(f.id);
  }
  for (int c = 0; c < d.n_crossings(); ++c) {
    int q = quadrant0_black(fs, c) ? 0 : 1;
    out.black.edges.push_back({c, fs.face_at(c, q), fs.face_at(c, q + 2)});
    out.white.edges.push_back({c, fs.face_at(c, 1 - q), fs.face_at(c, 3 - q)});
  }
  return out;
}

std::string face_table_text(const LinkDiagram& d, const FaceSet& fs) {
  std::ostringstream out;
  out << "faces " << fs.n_faces() << " (crossings " << d.n_crossings() << ", marked edge "
      << d.marked_edge() + 1 << ")\n";
  for (const auto& f : fs.faces) {
    out << 'x' << f.variable << ' ' << to_string(f.color);
    if (f.id == fs.marked_black || f.id == fs.marked_white) out << " root";
    out << " :";
    for (const auto& c : f.boundary) out << " (" << c.crossing + 1 << ',' << c.pos << ')';
    out << '\n';
  }
  return out.str();
}

std::string face_table_json(const LinkDiagram& d, const FaceSet& fs) {
  nlohmann::json faces = nlohmann::json::array();
  for (const auto& f : fs.faces) {
    nlohmann::json corners = nlohmann::json::array();
    for (const auto& c : f.boundary) corners.push_back({c.crossing + 1, c.pos});
    faces.push_back({{"variable", f.variable},
                     {"color", to_string(f.color)},
                     {"corners", corners}});
  }
  nlohmann::json j = {{"n_crossings", d.n_crossings()},
                      {"marked_edge", d.marked_edge() + 1},
                      {"marked_black", fs.faces[fs.marked_black].variable},
                      {"marked_white", fs.faces[fs.marked_white].variable},
                      {"faces", faces}};
  return j.dump(2);
}

}  // namespace ttkh
