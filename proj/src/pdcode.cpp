#include "ttkh/pdcode.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "ttkh/errors.hpp"
#include "ttkh/planar.hpp"

namespace ttkh {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  bool at_end() {
    skip_separators();
    return pos_ >= text_.size();
  }

  bool consume(std::string_view lit) {
    skip_spaces();
    if (text_.substr(pos_, lit.size()) != lit) return false;
    pos_ += lit.size();
    return true;
  }

  void expect(std::string_view lit) {
    if (!consume(lit)) fail("expected '" + std::string(lit) + "'");
  }

  int integer() {
    skip_spaces();
    std::size_t start = pos_;
    long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000'000) fail("edge label too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a positive integer");
    if (value == 0) fail("edge labels must be positive");
    return static_cast<int>(value);
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::MalformedToken, why + " at offset " + std::to_string(pos_));
  }

 private:
  void skip_spaces() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void skip_separators() {
    while (pos_ < text_.size() &&
           (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == ',')) {
      ++pos_;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

EdgeEnd LinkDiagram::partner(EdgeEnd end) const {
  int e = edge_at(end.crossing, end.pos);
  return tail_[e] == end ? head_[e] : tail_[e];
}

LinkDiagram LinkDiagram::with_marked_edge(int edge) const {
  if (edge < 0 || edge >= n_edges()) {
    throw Error(ErrorKind::MalformedToken, "marked edge out of range");
  }
  LinkDiagram out = *this;
  out.marked_edge_ = edge;
  return out;
}

std::vector<LinkDiagram::OrientationHint> LinkDiagram::orientation_hints() const {
  std::vector<OrientationHint> hints;
  hints.reserve(n_edges());
  for (int e = 0; e < n_edges(); ++e) hints.push_back({e + 1, tail_[e]});
  return hints;
}

LinkDiagram LinkDiagram::from_tuples(const std::vector<std::array<int, 4>>& tuples,
                                     std::optional<int> mark,
                                     const std::vector<OrientationHint>& hints) {
  const int n = static_cast<int>(tuples.size());
  if (n == 0) throw Error(ErrorKind::MalformedToken, "diagram has no crossings");
  if (n > kMaxCrossings) {
    throw Error(ErrorKind::TooLarge, std::to_string(n) + " crossings exceeds the limit of " +
                                         std::to_string(kMaxCrossings));
  }

  std::map<int, int> count;
  for (const auto& t : tuples) {
    for (int label : t) ++count[label];
  }
  std::map<int, int> rank;
  for (const auto& [label, k] : count) {
    if (k != 2) {
      throw Error(ErrorKind::EdgeDegree,
                  "edge " + std::to_string(label) + " appears " + std::to_string(k) + " times");
    }
    int r = static_cast<int>(rank.size());
    rank[label] = r;
  }
  std::vector<int> raw_label(rank.size());
  for (const auto& [label, r] : rank) raw_label[r] = label;

  LinkDiagram d;
  const int m = 2 * n;
  d.crossings_.resize(n);
  std::vector<std::vector<EdgeEnd>> ends(m);
  for (int c = 0; c < n; ++c) {
    for (int p = 0; p < 4; ++p) {
      int e = rank[tuples[c][p]];
      d.crossings_[c].edges[p] = e;
      ends[e].push_back({c, p});
    }
  }

  std::map<int, EdgeEnd> hint_tail;
  for (const auto& h : hints) {
    auto it = rank.find(h.edge);
    if (it != rank.end()) hint_tail[it->second] = h.tail;
  }

  d.tail_.assign(m, {});
  d.head_.assign(m, {});
  d.component_.assign(m, -1);
  d.n_components_ = 0;
  for (int start = 0; start < m; ++start) {
    if (d.component_[start] >= 0) continue;
    const int comp = d.n_components_++;
    std::vector<int> path;
    int forward = 0;
    int backward = 0;
    int e = start;
    EdgeEnd tail = ends[e][0];
    for (;;) {
      EdgeEnd head = ends[e][0] == tail ? ends[e][1] : ends[e][0];
      d.tail_[e] = tail;
      d.head_[e] = head;
      d.component_[e] = comp;
      path.push_back(e);
      if (head.pos == 0) ++forward;
      if (head.pos == 2) ++backward;
      EdgeEnd next_tail{head.crossing, (head.pos + 2) % 4};
      int next = d.crossings_[next_tail.crossing].edges[next_tail.pos];
      if (next == start) break;
      if (d.component_[next] >= 0) {
        throw Error(ErrorKind::InconsistentOrientation, "strand revisits an edge");
      }
      e = next;
      tail = next_tail;
    }
    if (forward > 0 && backward > 0) {
      throw Error(ErrorKind::InconsistentOrientation,
                  "component through edge " + std::to_string(raw_label[start]) +
                      " enters crossings along both directions of the under-strand");
    }
    bool reverse = backward > 0;
    if (forward == 0 && backward == 0) {
      bool hinted = false;
      for (int x : path) {
        auto it = hint_tail.find(x);
        if (it == hint_tail.end()) continue;
        reverse = !(it->second == d.tail_[x]);
        hinted = true;
        break;
      }
      if (!hinted) {
        int up = 0;
        int down = 0;
        for (std::size_t i = 0; i < path.size(); ++i) {
          int a = raw_label[path[i]];
          int b = raw_label[path[(i + 1) % path.size()]];
          if (b == a + 1) ++up;
          if (a == b + 1) ++down;
        }
        reverse = down > up;
      }
    }
    if (reverse) {
      for (int x : path) std::swap(d.tail_[x], d.head_[x]);
    }
  }

  for (int c = 0; c < n; ++c) {
    // Over-strand leaving through b means it runs d -> b.
    int over = d.crossings_[c].edges[1];
    d.crossings_[c].sign = d.tail_[over] == EdgeEnd{c, 1} ? 1 : -1;
  }

  UnionFind uf(n);
  for (int e = 0; e < m; ++e) uf.unite(d.tail_[e].crossing, d.head_[e].crossing);
  d.piece_.assign(n, -1);
  std::map<int, int> piece_id;
  for (int c = 0; c < n; ++c) {
    auto [it, inserted] = piece_id.try_emplace(uf.find(c), static_cast<int>(piece_id.size()));
    d.piece_[c] = it->second;
  }
  d.n_pieces_ = static_cast<int>(piece_id.size());

  d.marked_edge_ = 0;
  if (mark) {
    auto it = rank.find(*mark);
    if (it == rank.end()) {
      throw Error(ErrorKind::MalformedToken, "mark refers to unknown edge " + std::to_string(*mark));
    }
    d.marked_edge_ = it->second;
  }

  validate_spherical(d);
  return d;
}

LinkDiagram parse_pd(std::string_view text) {
  std::string_view body = trim(text);
  if (body.starts_with("PD[") && body.ends_with("]")) body = body.substr(3, body.size() - 4);

  std::vector<std::array<int, 4>> tuples;
  std::optional<int> mark;
  Scanner sc(body);
  while (!sc.at_end()) {
    if (sc.consume("X[")) {
      std::array<int, 4> t{};
      for (int i = 0; i < 4; ++i) {
        if (i > 0) sc.expect(",");
        t[i] = sc.integer();
      }
      sc.expect("]");
      tuples.push_back(t);
    } else if (sc.consume("mark=")) {
      if (mark) sc.fail("duplicate mark");
      mark = sc.integer();
    } else {
      sc.fail("unrecognised token");
    }
  }
  return LinkDiagram::from_tuples(tuples, mark);
}

std::string render_pd(const LinkDiagram& d) {
  std::ostringstream out;
  for (int c = 0; c < d.n_crossings(); ++c) {
    const auto& e = d.crossing(c).edges;
    if (c > 0) out << ' ';
    out << "X[" << e[0] + 1 << ',' << e[1] + 1 << ',' << e[2] + 1 << ',' << e[3] + 1 << ']';
  }
  if (d.marked_edge() != 0) out << " mark=" << d.marked_edge() + 1;
  return out.str();
}

std::vector<NamedDiagramText> split_batch(std::string_view text) {
  std::vector<NamedDiagramText> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view s = trim(line);
    if (s.empty() || s.front() == '#') continue;
    auto colon = s.find(':');
    if (colon == std::string_view::npos) {
      out.push_back({"line" + std::to_string(line_no), std::string(s)});
    } else {
      out.push_back({std::string(trim(s.substr(0, colon))), std::string(trim(s.substr(colon + 1)))});
    }
  }
  return out;
}

SignCount crossing_signs(const LinkDiagram& d) {
  SignCount s;
  for (const auto& x : d.crossings()) (x.sign > 0 ? s.n_plus : s.n_minus)++;
  return s;
}

bool is_alternating(const LinkDiagram& d) {
  for (int e = 0; e < d.n_edges(); ++e) {
    if ((d.tail(e).pos % 2 == 0) == (d.head(e).pos % 2 == 0)) return false;
  }
  return true;
}

LinkDiagram mirror(const LinkDiagram& d) {
  std::vector<std::array<int, 4>> tuples;
  tuples.reserve(d.n_crossings());
  for (const auto& x : d.crossings()) {
    const auto& e = x.edges;
    if (x.sign > 0) {
      tuples.push_back({e[3] + 1, e[0] + 1, e[1] + 1, e[2] + 1});
    } else {
      tuples.push_back({e[1] + 1, e[2] + 1, e[3] + 1, e[0] + 1});
    }
  }
  auto hints = d.orientation_hints();
  for (auto& h : hints) {
    int shift = d.crossing(h.tail.crossing).sign > 0 ? 1 : 3;
    h.tail.pos = (h.tail.pos + shift) % 4;
  }
  return LinkDiagram::from_tuples(tuples, d.marked_edge() + 1, hints);
}

LinkDiagram connect_sum(const LinkDiagram& d1, const LinkDiagram& d2) {
  if (d1.is_split() || d2.is_split()) {
    throw Error(ErrorKind::SplitInput, "connect sum requires connected diagrams");
  }
  const int n1 = d1.n_crossings();
  const int offset = d1.n_edges();
  std::vector<std::array<int, 4>> tuples;
  for (const auto& x : d1.crossings()) {
    tuples.push_back({x.edges[0] + 1, x.edges[1] + 1, x.edges[2] + 1, x.edges[3] + 1});
  }
  for (const auto& x : d2.crossings()) {
    tuples.push_back({x.edges[0] + 1 + offset, x.edges[1] + 1 + offset, x.edges[2] + 1 + offset,
                      x.edges[3] + 1 + offset});
  }
  const int m1 = d1.marked_edge();
  const int m2 = d2.marked_edge();
  const int a = m1 + 1;
  const int b = m2 + 1 + offset;
  // a: tail of m1 -> head of m2; b: tail of m2 -> head of m1.
  EdgeEnd h1 = d1.head(m1);
  EdgeEnd h2 = d2.head(m2);
  tuples[h1.crossing][h1.pos] = b;
  tuples[n1 + h2.crossing][h2.pos] = a;

  std::vector<LinkDiagram::OrientationHint> hints = d1.orientation_hints();
  for (auto h : d2.orientation_hints()) {
    h.edge += offset;
    h.tail.crossing += n1;
    hints.push_back(h);
  }
  return LinkDiagram::from_tuples(tuples, a, hints);
}

}  // namespace ttkh
