#pragma once

#include <cstdint>
#include <vector>

#include "ttkh/gf2algebra.hpp"
#include "ttkh/homology.hpp"
#include "ttkh/pdcode.hpp"
#include "ttkh/planar.hpp"

namespace ttkh {

// Positions joined by the smoothing of a crossing: c not in S joins 0-1 and
// 2-3, c in S joins 0-3 and 1-2.
inline int smoothing_partner(int pos, bool in_s) { return in_s ? 3 - pos : pos ^ 1; }

struct Circle {
  std::vector<int> edges;        // sorted
  std::uint64_t interior = 0;    // face ids on the side away from the marked point
  bool marked = false;
};

struct Resolution {
  CrossingSet subset;
  std::vector<Circle> circles;   // marked circle first, then by least edge id
  std::vector<int> circle_of_edge;

  int n_circles() const { return static_cast<int>(circles.size()); }
};

Resolution resolve(const LinkDiagram& d, const FaceSet& fs, CrossingSet s);
// Formal area of a face mask.
MultiPoly area_of(std::uint64_t face_mask);

// Basis element of the cube: a resolution plus a sign on every unmarked
// circle (bit i of `plus` set means circle i + 1 carries v+).
struct CubeState {
  CrossingSet subset;
  std::uint64_t plus = 0;
  friend bool operator==(const CubeState&, const CubeState&) = default;
};

int q_grading(const Resolution& r, std::uint64_t plus);
int delta_unshifted(const Resolution& r, std::uint64_t plus);

struct CubeTerm {
  CubeState state;
  MultiPoly coefficient;
};

// Image of the merge or split map at c (c not in the subset).
std::vector<CubeTerm> khovanov_component(const LinkDiagram& d, const FaceSet& fs,
                                         const CubeState& state, int c);
// Koszul part: each v+ on an unmarked circle flips to v- times the circle's area.
std::vector<CubeTerm> koszul_component(const LinkDiagram& d, const FaceSet& fs, const CubeState& state);

struct CubeOptions {
  int threshold = 14;  // TooLarge above this many crossings
  int jobs = 1;
};

// Whole cube with d = d_KH + d_V over the polynomial ring, gradings shifted
// by -n_plus; secondary grading unused.
GradedComplex<PolyOps> build_twisted_complex_symbolic(const LinkDiagram& d, const CubeOptions& opt = {});
// Same complex with the face variables evaluated at a point.
GradedComplex<Gf2kOps> build_twisted_complex_evaluated(const LinkDiagram& d, const Gf2kField& f,
                                                       const EvaluationPoint& pt,
                                                       const CubeOptions& opt = {});

struct TwistedOptions {
  CubeOptions cube;
  int field_bits = 16;
  int trials = 3;
  std::uint64_t seed = 0;
};

// Homology of the cube over the fraction field, by evaluation.
Poincare twisted_homology(const LinkDiagram& d, const TwistedOptions& opt = {});

// Reduced Khovanov homology over GF(2) with delta = 2i - j in the standard
// normalisation.
Poincare reduced_khovanov_delta(const LinkDiagram& d, const CubeOptions& opt = {});

}  // namespace ttkh
