#pragma once

#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ttkh/homology.hpp"
#include "ttkh/pdcode.hpp"
#include "ttkh/planar.hpp"

namespace ttkh {

using BigInt = boost::multiprecision::cpp_int;
// Laurent polynomial in delta: exponent -> coefficient, no zero entries.
using IntPoly = std::map<int, BigInt>;

enum class CrossingType { I, II };

// Göritz data relative to a choice of which color plays "white".
struct GoritzData {
  Color white = Color::White;
  std::vector<int> faces;                  // face ids of that color; faces[0] is the root
  std::vector<std::vector<long>> full;     // over all of `faces`; rows sum to zero
  std::vector<std::vector<long>> minor;    // root row and column removed
  std::vector<int> mu;                     // per crossing: -1 iff c in S merges the other color
  std::vector<CrossingType> type;          // I iff mu(c) n(c) = -1
  int mu_l = 0;                            // sum of mu over Type II
};

GoritzData goritz(const LinkDiagram& d, const FaceSet& fs, Color white = Color::White);

// Exact signature of a symmetric integer matrix by congruence diagonalisation.
int matrix_signature(const std::vector<std::vector<long>>& m);
BigInt matrix_determinant(const std::vector<std::vector<long>>& m);

// sign(G) - mu(L).  Computed from both colorings; a disagreement throws.
int signature(const LinkDiagram& d);
int signature(const LinkDiagram& d, const FaceSet& fs, Color white);
// |det G|; 0 for split diagrams.
BigInt determinant(const LinkDiagram& d);

struct TreePolynomials {
  IntPoly q;  // sum over spanning trees of the white graph of delta^(ic edges in the tree)
  IntPoly r;  // delta^nu Q(delta^2)
  int nu = 0;
  int e_tilde = 0;
};

TreePolynomials tree_polynomial(const LinkDiagram& d);

IntPoly to_int_poly(const Poincare& p);
BigInt evaluate(const IntPoly& p, long x);
// |p(i)|^2 with i a square root of -1, in exact integers.
BigInt modulus_squared_at_i(const IntPoly& p);
std::string poly_text(const IntPoly& p, const char* var = "d");

struct EulerCheck {
  BigInt det;
  BigInt modulus_squared;  // |P(i)|^2
  bool ok = false;
};

// Compares |P(i)| for a Poincaré polynomial with det(L).
EulerCheck euler_check(const LinkDiagram& d, const Poincare& p);

}  // namespace ttkh
