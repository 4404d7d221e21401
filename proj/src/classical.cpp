#include "ttkh/classical.hpp"

#include <algorithm>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "ttkh/errors.hpp"

namespace ttkh {

using Rational = boost::multiprecision::cpp_rational;

GoritzData goritz(const LinkDiagram& d, const FaceSet& fs, Color white) {
  GoritzData g;
  g.white = white;
  const int root = white == Color::White ? fs.marked_white : fs.marked_black;
  g.faces.push_back(root);
  for (const auto& f : fs.faces) {
    if (f.color == white && f.id != root) g.faces.push_back(f.id);
  }
  std::vector<int> row(fs.n_faces(), -1);
  for (std::size_t i = 0; i < g.faces.size(); ++i) row[g.faces[i]] = static_cast<int>(i);

  const int n = d.n_crossings();
  const std::size_t m = g.faces.size();
  g.full.assign(m, std::vector<long>(m, 0));
  g.mu.resize(n);
  g.type.resize(n);
  for (int c = 0; c < n; ++c) {
    // The 1-resolution merges quadrants 0 and 2.
    bool q0_white = fs.color_at(c, 0) == white;
    g.mu[c] = q0_white ? 1 : -1;
    int q = q0_white ? 0 : 1;
    int a = row[fs.face_at(c, q)];
    int b = row[fs.face_at(c, q + 2)];
    if (a != b) {
      g.full[a][b] -= g.mu[c];
      g.full[b][a] -= g.mu[c];
    }
    bool type_two = g.mu[c] * d.crossing(c).sign == 1;
    g.type[c] = type_two ? CrossingType::II : CrossingType::I;
    if (type_two) g.mu_l += g.mu[c];
  }
  for (std::size_t i = 0; i < m; ++i) {
    long s = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (j != i) s += g.full[i][j];
    }
    g.full[i][i] = -s;
  }
  g.minor.assign(m - 1, std::vector<long>(m - 1, 0));
  for (std::size_t i = 1; i < m; ++i) {
    for (std::size_t j = 1; j < m; ++j) g.minor[i - 1][j - 1] = g.full[i][j];
  }
  return g;
}

int matrix_signature(const std::vector<std::vector<long>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  }
  int sig = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t j = k + 1;
      while (j < n && a[j][j] == 0) ++j;
      if (j < n) {
        std::swap(a[k], a[j]);
        for (auto& r : a) std::swap(r[k], r[j]);
      } else {
        j = k + 1;
        while (j < n && a[k][j] == 0) ++j;
        if (j == n) continue;  // zero row: null direction
        // Add row and column j to k; the new pivot is 2 a[k][j] != 0.
        for (std::size_t t = 0; t < n; ++t) a[k][t] += a[j][t];
        for (std::size_t t = 0; t < n; ++t) a[t][k] += a[t][j];
      }
    }
    const Rational p = a[k][k];
    sig += p > 0 ? 1 : -1;
    // Schur complement; stays symmetric.
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      Rational f = a[i][k] / p;
      for (std::size_t t = k + 1; t < n; ++t) a[i][t] -= f * a[k][t];
    }
    for (std::size_t i = k + 1; i < n; ++i) a[i][k] = a[k][i] = 0;
  }
  return sig;
}

namespace {

// Fraction-free elimination; exact over the integers.
BigInt bareiss(std::vector<std::vector<BigInt>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace

BigInt matrix_determinant(const std::vector<std::vector<long>>& m) {
  std::vector<std::vector<BigInt>> a(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) a[i].assign(m[i].begin(), m[i].end());
  return bareiss(std::move(a));
}

int signature(const LinkDiagram& d, const FaceSet& fs, Color white) {
  GoritzData g = goritz(d, fs, white);
  return matrix_signature(g.minor) - g.mu_l;
}

int signature(const LinkDiagram& d) {
  if (d.is_split()) throw Error(ErrorKind::SplitInput, "signature needs a connected diagram");
  FaceSet fs = colored_faces(d);
  int a = signature(d, fs, Color::White);
  int b = signature(d, fs, Color::Black);
  if (a != b) {
    throw Error(ErrorKind::NonSpherical,
                "signatures from the two colorings disagree: " + std::to_string(a) + " vs " + std::to_string(b));
  }
  return a;
}

BigInt determinant(const LinkDiagram& d) {
  if (d.is_split()) return 0;
  FaceSet fs = colored_faces(d);
  return abs(matrix_determinant(goritz(d, fs, Color::White).minor));
}

TreePolynomials tree_polynomial(const LinkDiagram& d) {
  TreePolynomials out;
  if (d.is_split()) return out;
  FaceSet fs = colored_faces(d);
  GoritzData g = goritz(d, fs, Color::White);
  const int v = static_cast<int>(g.faces.size());
  std::vector<int> row(fs.n_faces(), -1);
  for (int i = 0; i < v; ++i) row[g.faces[i]] = i;
  int n0 = 0;
  for (int mu : g.mu) n0 += mu == -1;
  out.e_tilde = n0 - v + 1;
  out.nu = out.e_tilde - crossing_signs(d).n_plus;

  // Q has degree at most v - 1: evaluate the labelled Laplacian minor at v
  // integer points and interpolate.
  const int points = v;
  std::vector<BigInt> values(points);
  for (int x = 0; x < points; ++x) {
    std::vector<std::vector<BigInt>> a(v, std::vector<BigInt>(v, 0));
    for (int c = 0; c < d.n_crossings(); ++c) {
      int q = g.mu[c] == 1 ? 0 : 1;
      int i = row[fs.face_at(c, q)];
      int j = row[fs.face_at(c, q + 2)];
      if (i == j) continue;
      long kappa = g.mu[c] == 1 ? x : 1;
      a[i][j] -= kappa;
      a[j][i] -= kappa;
      a[i][i] += kappa;
      a[j][j] += kappa;
    }
    std::vector<std::vector<BigInt>> minor(v - 1);
    for (int i = 1; i < v; ++i) minor[i - 1].assign(a[i].begin() + 1, a[i].end());
    values[x] = bareiss(std::move(minor));
  }
  // Newton divided differences on x = 0..points-1.
  std::vector<Rational> coef(values.begin(), values.end());
  for (int k = 1; k < points; ++k) {
    for (int i = points - 1; i >= k; --i) coef[i] = (coef[i] - coef[i - 1]) / k;
  }
  std::vector<Rational> poly(points, 0);  // monomial basis
  std::vector<Rational> basis{1};         // prod_{j<k} (x - j)
  for (int k = 0; k < points; ++k) {
    for (std::size_t t = 0; t < basis.size(); ++t) poly[t] += coef[k] * basis[t];
    std::vector<Rational> next(basis.size() + 1, 0);
    for (std::size_t t = 0; t < basis.size(); ++t) {
      next[t + 1] += basis[t];
      next[t] -= basis[t] * k;
    }
    basis = std::move(next);
  }
  for (int k = 0; k < points; ++k) {
    if (poly[k] == 0) continue;
    if (denominator(poly[k]) != 1) throw Error(ErrorKind::NotInvertible, "tree polynomial is not integral");
    out.q[k] = numerator(poly[k]);
    out.r[2 * k + out.nu] = numerator(poly[k]);
  }
  return out;
}

IntPoly to_int_poly(const Poincare& p) {
  IntPoly out;
  for (const auto& [k, v] : p) {
    if (v) out[k] = v;
  }
  return out;
}

BigInt evaluate(const IntPoly& p, long x) {
  BigInt s = 0;
  for (const auto& [k, c] : p) {
    if (k >= 0) {
      s += c * boost::multiprecision::pow(BigInt(x), k);
    } else if (x == 1 || x == -1) {
      s += c * boost::multiprecision::pow(BigInt(x), -k);  // x^-1 = x
    } else {
      throw Error(ErrorKind::DivisionByZero, "negative exponent at an integer point other than +-1");
    }
  }
  return s;
}

BigInt modulus_squared_at_i(const IntPoly& p) {
  BigInt re = 0;
  BigInt im = 0;
  for (const auto& [k, c] : p) {
    switch (((k % 4) + 4) % 4) {
      case 0: re += c; break;
      case 1: im += c; break;
      case 2: re -= c; break;
      case 3: im -= c; break;
    }
  }
  return re * re + im * im;
}

std::string poly_text(const IntPoly& p, const char* var) {
  if (p.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : p) {
    BigInt mag = abs(c);
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << '-';
    first = false;
    if (k == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag;
    out << var;
    if (k != 1) out << '^' << k;
  }
  return out.str();
}

EulerCheck euler_check(const LinkDiagram& d, const Poincare& p) {
  EulerCheck e;
  e.det = determinant(d);
  e.modulus_squared = modulus_squared_at_i(to_int_poly(p));
  e.ok = e.modulus_squared == e.det * e.det;
  return e;
}

}  // namespace ttkh
