#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ttkh {

// Crossing and face masks are 64-bit; a diagram has at most n + 2 faces.
inline constexpr int kMaxCrossings = 62;

// Subset of the crossings of a diagram, indexed 0..n-1.
class CrossingSet {
 public:
  constexpr CrossingSet() = default;
  constexpr explicit CrossingSet(std::uint64_t bits) : bits_(bits) {}

  constexpr bool contains(int c) const { return (bits_ >> c) & 1u; }
  constexpr CrossingSet with(int c) const { return CrossingSet(bits_ | (std::uint64_t{1} << c)); }
  constexpr CrossingSet without(int c) const { return CrossingSet(bits_ & ~(std::uint64_t{1} << c)); }
  constexpr CrossingSet toggled(int c) const { return CrossingSet(bits_ ^ (std::uint64_t{1} << c)); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint64_t bits() const { return bits_; }

  friend constexpr bool operator==(CrossingSet, CrossingSet) = default;
  friend constexpr auto operator<=>(CrossingSet, CrossingSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

// Positions inside a crossing tuple X[a,b,c,d], counterclockwise from the
// incoming under-strand: 0 = a, 1 = b, 2 = c, 3 = d.
struct EdgeEnd {
  int crossing = 0;
  int pos = 0;
  friend bool operator==(const EdgeEnd&, const EdgeEnd&) = default;
};

struct Crossing {
  std::array<int, 4> edges{};  // normalized edge ids
  int sign = 1;                // +1 right-handed, -1 left-handed
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

// Oriented 4-valent planar diagram with a marked edge.
//
// Edge ids are normalized to 0..2n-1 on construction (by rank of the raw
// labels); render() prints them 1-based.  The sign convention is the one used
// by the public knot tables: with the under-strand running a -> c, the
// crossing is positive iff the over-strand runs d -> b.
class LinkDiagram {
 public:
  // Tail hint for components that never pass under: the position through
  // which `edge` leaves `crossing`.
  struct OrientationHint {
    int edge = 0;  // raw label
    EdgeEnd tail;
  };

  static LinkDiagram from_tuples(const std::vector<std::array<int, 4>>& tuples,
                                 std::optional<int> mark = std::nullopt,
                                 const std::vector<OrientationHint>& hints = {});

  int n_crossings() const { return static_cast<int>(crossings_.size()); }
  int n_edges() const { return 2 * n_crossings(); }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  const Crossing& crossing(int c) const { return crossings_[c]; }
  int marked_edge() const { return marked_edge_; }
  LinkDiagram with_marked_edge(int edge) const;

  int edge_at(int crossing, int pos) const { return crossings_[crossing].edges[pos]; }
  EdgeEnd tail(int edge) const { return tail_[edge]; }
  EdgeEnd head(int edge) const { return head_[edge]; }
  // The other end of the edge attached at `end`.
  EdgeEnd partner(EdgeEnd end) const;

  int n_components() const { return n_components_; }
  int component_of(int edge) const { return component_[edge]; }
  // Connected pieces of the underlying 4-valent graph.
  int n_pieces() const { return n_pieces_; }
  int piece_of_crossing(int c) const { return piece_[c]; }
  bool is_split() const { return n_pieces_ > 1; }

  std::vector<OrientationHint> orientation_hints() const;

  friend bool operator==(const LinkDiagram& a, const LinkDiagram& b) {
    return a.crossings_ == b.crossings_ && a.marked_edge_ == b.marked_edge_;
  }

 private:
  std::vector<Crossing> crossings_;
  std::vector<EdgeEnd> tail_;
  std::vector<EdgeEnd> head_;
  std::vector<int> component_;
  std::vector<int> piece_;
  int n_components_ = 0;
  int n_pieces_ = 0;
  int marked_edge_ = 0;
};

// `X[a,b,c,d] ... [mark=<edge>]`, optionally wrapped in PD[...].
LinkDiagram parse_pd(std::string_view text);
std::string render_pd(const LinkDiagram& d);

struct NamedDiagramText {
  std::string name;
  std::string pd;
};

// One diagram per line, `name: <pd>`; blank lines and `#` comments skipped.
std::vector<NamedDiagramText> split_batch(std::string_view text);

struct SignCount {
  int n_plus = 0;
  int n_minus = 0;
};

SignCount crossing_signs(const LinkDiagram& d);
// Every edge runs from an over-pass to an under-pass or back.
bool is_alternating(const LinkDiagram& d);
LinkDiagram mirror(const LinkDiagram& d);
// Splices d2 into the marked edge of d1; the result is marked on the arc
// running from d1 into d2.
LinkDiagram connect_sum(const LinkDiagram& d1, const LinkDiagram& d2);

}  // namespace ttkh
