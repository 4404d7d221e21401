#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace ttkh {

// Monomial in x1, x2, ...: exps[i] is the exponent of x_{i+1}, with no
// trailing zeros.  Ordered lexicographically (x1 > x2 > ...).
class Monomial {
 public:
  Monomial() = default;
  static Monomial var(int v, int power = 1);

  int degree() const;
  int exponent(int v) const { return v - 1 < static_cast<int>(exps_.size()) ? exps_[v - 1] : 0; }
  int n_vars() const { return static_cast<int>(exps_.size()); }
  bool is_one() const { return exps_.empty(); }
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  // Requires divides(other) from the divisor side: (*this) / d.
  Monomial operator/(const Monomial& d) const;
  static Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

  std::string to_string() const;

 private:
  void trim();
  std::vector<std::uint8_t> exps_;
};

// Polynomial over GF(2): a set of monomials, sorted descending so the
// leading term comes first.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(Monomial m) { terms_.push_back(std::move(m)); }
  static MultiPoly zero() { return {}; }
  static MultiPoly one() { return MultiPoly(Monomial()); }
  static MultiPoly var(int v) { return MultiPoly(Monomial::var(v)); }
  static MultiPoly from_terms(std::vector<Monomial> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].is_one(); }
  const std::vector<Monomial>& terms() const { return terms_; }
  const Monomial& leading() const { return terms_.front(); }
  std::size_t size() const { return terms_.size(); }
  int degree() const;
  int max_var() const;

  MultiPoly operator+(const MultiPoly& other) const;
  MultiPoly& operator+=(const MultiPoly& other) { return *this = *this + other; }
  MultiPoly operator*(const MultiPoly& other) const;
  MultiPoly operator*(const Monomial& m) const;
  MultiPoly& operator*=(const MultiPoly& other) { return *this = *this * other; }
  // Exact quotient; throws NotInvertible when the division leaves a remainder.
  MultiPoly exact_div(const MultiPoly& divisor) const;
  // Greatest monomial dividing every term.
  Monomial monomial_content() const;

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  std::string to_string() const;

 private:
  std::vector<Monomial> terms_;
};

// Multilinear sum of x_v over the given variables; duplicates cancel.
MultiPoly area_sum(const std::vector<int>& vars);

// Element of GF(2)(x1..xm).  No GCDs: only common monomial factors and
// num == den are normalised away.
class RationalFn {
 public:
  RationalFn() : num_(), den_(MultiPoly::one()) {}
  RationalFn(MultiPoly num) : num_(std::move(num)), den_(MultiPoly::one()) {}  // NOLINT
  RationalFn(MultiPoly num, MultiPoly den);

  static RationalFn zero() { return {}; }
  static RationalFn one() { return RationalFn(MultiPoly::one()); }

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFn operator+(const RationalFn& other) const;
  RationalFn operator*(const RationalFn& other) const;
  RationalFn& operator+=(const RationalFn& other) { return *this = *this + other; }
  RationalFn& operator*=(const RationalFn& other) { return *this = *this * other; }
  RationalFn inv() const;  // DivisionByZero on zero

  friend bool operator==(const RationalFn& a, const RationalFn& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  std::string to_string() const;

 private:
  void normalize();
  MultiPoly num_;
  MultiPoly den_;
};

RationalFn rat_add(const RationalFn& a, const RationalFn& b);
RationalFn rat_mul(const RationalFn& a, const RationalFn& b);
RationalFn rat_inv(const RationalFn& a);

// GF(2^k) = GF(2)[t]/(modulus), elements as k-bit integers.
class Gf2kField {
 public:
  explicit Gf2kField(int k);
  Gf2kField(int k, std::uint64_t modulus);

  // Lexicographically least irreducible trinomial x^k + x^a + 1, else
  // pentanomial x^k + x^a + x^b + x^c + 1 (a > b > c), as a bit mask.
  static std::uint64_t default_modulus(int k);
  static bool is_irreducible(std::uint64_t poly, int degree);

  int bits() const { return k_; }
  std::uint64_t modulus() const { return modulus_; }
  std::uint32_t size_mask() const { return mask_; }

  static std::uint32_t add(std::uint32_t a, std::uint32_t b) { return a ^ b; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (!log_.empty()) {
      std::uint32_t s = log_[a] + log_[b];
      if (s >= order_) s -= order_;
      return exp_[s];
    }
    return slow_mul(a, b);
  }
  std::uint32_t inv(std::uint32_t a) const;  // DivisionByZero on zero
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

 private:
  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const;
  void build_tables();

  int k_;
  std::uint64_t modulus_;
  std::uint32_t mask_;
  std::uint32_t order_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
};

// Shared instance with the default modulus.
const Gf2kField& gf2k_field(int k);

struct EvaluationPoint {
  std::vector<std::uint32_t> values;  // values[v - 1] is the image of x_v
  std::uint64_t seed = 0;
  int k = 16;

  std::uint32_t operator[](int v) const { return values[v - 1]; }
};

// Uniform nonzero values, deterministic in the seed.
EvaluationPoint random_point(std::uint64_t seed, int k, int nvars);

std::uint32_t evaluate(const MultiPoly& p, const Gf2kField& f, const EvaluationPoint& pt);
// ZeroDenominator when the denominator vanishes at pt.
std::uint32_t evaluate(const RationalFn& r, const Gf2kField& f, const EvaluationPoint& pt);

}  // namespace ttkh
