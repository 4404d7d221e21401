#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ttkh/gf2algebra.hpp"
#include "ttkh/homology.hpp"
#include "ttkh/pdcode.hpp"
#include "ttkh/planar.hpp"

namespace ttkh {

// Diagram with its faces, coloring and Tait graphs computed once.
struct PreparedDiagram {
  LinkDiagram diagram;
  FaceSet faces;
  TaitPair tait;
  std::vector<char> q0_black;  // per crossing
  int n_plus = 0;
  int n_minus = 0;

  explicit PreparedDiagram(LinkDiagram d);
  int n_crossings() const { return diagram.n_crossings(); }
};

// Single-circle resolution, equivalently a spanning tree of the black Tait graph.
struct TreeGenerator {
  CrossingSet subset;      // S
  CrossingSet black_tree;  // crossings whose black quadrants are joined
  int delta_unshifted = 0;  // |S|
  std::vector<int> visits;  // crossings met along L_S from the marked edge; each twice
};

// Spanning trees of the black Tait graph by contraction and deletion; empty
// for split diagrams.
std::vector<CrossingSet> black_spanning_trees(const PreparedDiagram& p);
CrossingSet subset_of_tree(const PreparedDiagram& p, CrossingSet black_tree);
std::vector<TreeGenerator> enumerate_generators(const PreparedDiagram& p);

// Crossings met by the circles of L_S when walking from the marked edge
// (only meaningful when L_S is one circle).
std::vector<int> circle_visits(const LinkDiagram& d, CrossingSet s);

struct AdmissiblePair {
  CrossingSet target;  // T + {c1, c2}
  int c1 = 0;          // joins black faces in L_T
  int c2 = 0;          // joins white faces in L_T
};

// Pairs of crossings outside T whose resolution arcs interleave on L_T.
std::vector<AdmissiblePair> admissible_pairs(const PreparedDiagram& p, const TreeGenerator& t);

struct CleavedAreas {
  std::uint64_t black = 0;  // faces of B
  std::uint64_t white = 0;  // faces of W
  MultiPoly area_black() const;
  MultiPoly area_white() const;
};

CleavedAreas cleaved_areas(const PreparedDiagram& p, const TreeGenerator& t, const AdmissiblePair& pair);
// 1/[B] + 1/[W].
RationalFn differential_coefficient(const PreparedDiagram& p, const TreeGenerator& t,
                                    const AdmissiblePair& pair);

// Generators in enumeration order, graded by |S| - n_plus.
GradedComplex<RationalOps> build_complex_exact(const PreparedDiagram& p);
// Coefficients evaluated at pt; ZeroDenominator if some [B] or [W] vanishes.
GradedComplex<Gf2kOps> build_complex_evaluated(const PreparedDiagram& p, const Gf2kField& f,
                                               const EvaluationPoint& pt);

enum class Mode { Auto, Exact, Evaluated };
const char* to_string(Mode m);

struct HomologyOptions {
  Mode mode = Mode::Auto;
  // Auto reports exact ranks up to this many crossings when d^2 = 0 pins them
  // down from the evaluated lower bounds; otherwise it stays evaluated.
  int exact_threshold = 8;
  int field_bits = 16;
  int trials = 3;
  std::uint64_t seed = 0;
  int jobs = 1;
};

struct HomologyReport {
  Poincare poincare;
  std::map<int, int> chain_ranks;  // delta -> number of generators
  int generators = 0;
  bool split = false;
  Mode mode = Mode::Evaluated;
};

HomologyReport spanning_tree_homology(const PreparedDiagram& p, const HomologyOptions& opt = {});
HomologyReport spanning_tree_homology(const LinkDiagram& d, const HomologyOptions& opt = {});

// Evaluation points for successive trials; points whose areas vanish are
// skipped deterministically.
std::vector<std::uint64_t> trial_seeds(std::uint64_t seed, int trials);

// ---------------------------------------------------------------- LES

// Diagram obtained by smoothing crossing c (one = the c in S rule), oriented
// to agree with L on the first strand of each new component.
LinkDiagram resolve_crossing(const LinkDiagram& d, int c, bool one);
// The four faces around c are pairwise distinct.
bool both_resolutions_connected(const PreparedDiagram& p, int c);

struct LesReport {
  int crossing = 0;
  int sign = 1;
  int e = 0;  // n_plus(L) - n_plus(L1)
  int f = 0;  // n_plus(L) - n_plus(L0)
  Poincare h_l;         // HT(L)
  Poincare h_c0;        // quotient complex, gradings of L
  Poincare h_c1;        // subcomplex, gradings of L
  Poincare h_l0;        // HT(L0), its own gradings
  Poincare h_l1;        // HT(L1), its own gradings
  std::map<int, int> tau_rank;  // grading of L at the source -> rank of tau_*
  bool c0_matches = false;      // h_c0(i) = h_l0(i + f)
  bool c1_matches = false;      // h_c1(i) = h_l1(i - 1 + e)
  bool exact = false;           // rank identity of the long exact sequence
};

// DegenerateCrossing unless both resolutions at c are connected.
LesReport decompose_at_crossing(const PreparedDiagram& p, int c, const HomologyOptions& opt = {});

}  // namespace ttkh
