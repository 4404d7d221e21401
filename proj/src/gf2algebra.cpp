#include "ttkh/gf2algebra.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <sstream>

#include "ttkh/errors.hpp"

namespace ttkh {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::var(int v, int power) {
  Monomial m;
  if (power > 0) {
    m.exps_.assign(v, 0);
    m.exps_[v - 1] = static_cast<std::uint8_t>(power);
  }
  return m;
}

void Monomial::trim() {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

int Monomial::degree() const {
  int d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  if (exps_.size() > other.exps_.size()) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  const auto& longer = exps_.size() >= other.exps_.size() ? exps_ : other.exps_;
  const auto& shorter = exps_.size() >= other.exps_.size() ? other.exps_ : exps_;
  out.exps_ = longer;
  for (std::size_t i = 0; i < shorter.size(); ++i) {
    unsigned s = unsigned{out.exps_[i]} + shorter[i];
    if (s > 255) throw Error(ErrorKind::TooLarge, "monomial exponent overflow");
    out.exps_[i] = static_cast<std::uint8_t>(s);
  }
  return out;
}

Monomial Monomial::operator/(const Monomial& d) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < d.exps_.size(); ++i) out.exps_[i] -= d.exps_[i];
  out.trim();
  return out;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial out;
  std::size_t n = std::min(a.exps_.size(), b.exps_.size());
  out.exps_.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
  out.trim();
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  std::size_t n = std::max(a.exps_.size(), b.exps_.size());
  for (std::size_t i = 0; i < n; ++i) {
    int x = i < a.exps_.size() ? a.exps_[i] : 0;
    int y = i < b.exps_.size() ? b.exps_[i] : 0;
    if (x != y) return x <=> y;
  }
  return std::strong_ordering::equal;
}

std::string Monomial::to_string() const {
  if (exps_.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!first) out << '*';
    first = false;
    out << 'x' << i + 1;
    if (exps_[i] > 1) out << '^' << int{exps_[i]};
  }
  return out.str();
}

// --------------------------------------------------------------- MultiPoly

namespace {

// Sorts descending and cancels equal monomials in pairs.
std::vector<Monomial> canonical(std::vector<Monomial> terms) {
  std::sort(terms.begin(), terms.end(), std::greater<>());
  std::vector<Monomial> out;
  out.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(std::move(terms[i]));
    i = j;
  }
  return out;
}

}  // namespace

MultiPoly MultiPoly::from_terms(std::vector<Monomial> terms) {
  MultiPoly p;
  p.terms_ = canonical(std::move(terms));
  return p;
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.degree());
  return d;
}

int MultiPoly::max_var() const {
  int v = 0;
  for (const auto& t : terms_) v = std::max(v, t.n_vars());
  return v;
}

MultiPoly MultiPoly::operator+(const MultiPoly& other) const {
  MultiPoly out;
  out.terms_.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() && b != other.terms_.end()) {
    auto cmp = *a <=> *b;
    if (cmp == 0) {
      ++a;
      ++b;
    } else if (cmp > 0) {
      out.terms_.push_back(*a++);
    } else {
      out.terms_.push_back(*b++);
    }
  }
  out.terms_.insert(out.terms_.end(), a, terms_.end());
  out.terms_.insert(out.terms_.end(), b, other.terms_.end());
  return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& other) const {
  if (is_zero() || other.is_zero()) return {};
  if (other.terms_.size() == 1) return *this * other.terms_[0];
  if (terms_.size() == 1) return other * terms_[0];
  std::vector<Monomial> prods;
  prods.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) prods.push_back(a * b);
  }
  MultiPoly out;
  out.terms_ = canonical(std::move(prods));
  return out;
}

MultiPoly MultiPoly::operator*(const Monomial& m) const {
  // Multiplying by a monomial preserves the order and cannot collide.
  MultiPoly out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back(t * m);
  return out;
}

MultiPoly MultiPoly::exact_div(const MultiPoly& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (divisor.is_one()) return *this;
  std::vector<Monomial> quotient;
  MultiPoly rem = *this;
  const Monomial& lead = divisor.leading();
  while (!rem.is_zero()) {
    if (!lead.divides(rem.leading())) {
      throw Error(ErrorKind::NotInvertible, "polynomial division is not exact");
    }
    Monomial t = rem.leading() / lead;
    rem += divisor * t;
    quotient.push_back(std::move(t));
  }
  MultiPoly q;
  q.terms_ = std::move(quotient);  // produced in strictly descending order
  return q;
}

Monomial MultiPoly::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial g = terms_[0];
  for (std::size_t i = 1; i < terms_.size() && !g.is_one(); ++i) g = Monomial::gcd(g, terms_[i]);
  return g;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i > 0) out += " + ";
    out += terms_[i].to_string();
  }
  return out;
}

MultiPoly area_sum(const std::vector<int>& vars) {
  std::vector<Monomial> terms;
  terms.reserve(vars.size());
  for (int v : vars) terms.push_back(Monomial::var(v));
  return MultiPoly::from_terms(std::move(terms));
}

// -------------------------------------------------------------- RationalFn

RationalFn::RationalFn(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  normalize();
}

void RationalFn::normalize() {
  if (num_.is_zero()) {
    den_ = MultiPoly::one();
    return;
  }
  if (num_ == den_) {
    num_ = den_ = MultiPoly::one();
    return;
  }
  Monomial g = Monomial::gcd(num_.monomial_content(), den_.monomial_content());
  if (!g.is_one()) {
    std::vector<Monomial> nt;
    std::vector<Monomial> dt;
    for (const auto& t : num_.terms()) nt.push_back(t / g);
    for (const auto& t : den_.terms()) dt.push_back(t / g);
    num_ = MultiPoly::from_terms(std::move(nt));
    den_ = MultiPoly::from_terms(std::move(dt));
  }
}

RationalFn RationalFn::operator+(const RationalFn& other) const {
  if (is_zero()) return other;
  if (other.is_zero()) return *this;
  if (den_ == other.den_) return RationalFn(num_ + other.num_, den_);
  return RationalFn(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
}

RationalFn RationalFn::operator*(const RationalFn& other) const {
  if (is_zero() || other.is_zero()) return {};
  return RationalFn(num_ * other.num_, den_ * other.den_);
}

RationalFn RationalFn::inv() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  return RationalFn(den_, num_);
}

std::string RationalFn::to_string() const {
  auto wrap = [](const MultiPoly& p) {
    bool compound = p.size() > 1 || p.leading().degree() > 1;
    return compound ? "(" + p.to_string() + ")" : p.to_string();
  };
  if (den_.is_one()) return num_.to_string();
  return wrap(num_) + "/" + wrap(den_);
}

RationalFn rat_add(const RationalFn& a, const RationalFn& b) { return a + b; }
RationalFn rat_mul(const RationalFn& a, const RationalFn& b) { return a * b; }
RationalFn rat_inv(const RationalFn& a) { return a.inv(); }

// --------------------------------------------------------------- Gf2kField

namespace {

int poly_degree(std::uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

std::uint64_t poly_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m, int k) {
  std::uint64_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if ((a >> k) & 1) a ^= m;
  }
  return r;
}

std::uint64_t poly_gcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    int db = poly_degree(b);
    while (poly_degree(a) >= db) a ^= b << (poly_degree(a) - db);
    std::swap(a, b);
  }
  return a;
}

std::vector<int> prime_factors(std::uint64_t n) {
  std::vector<int> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(static_cast<int>(p));
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(static_cast<int>(n));
  return out;
}

}  // namespace

bool Gf2kField::is_irreducible(std::uint64_t poly, int degree) {
  if (poly_degree(poly) != degree || (poly & 1) == 0) return degree == 1;
  // x^(2^i) mod poly by repeated squaring.
  auto frobenius = [&](int i) {
    std::uint64_t x = 2;
    for (int s = 0; s < i; ++s) x = poly_mulmod(x, x, poly, degree);
    return x;
  };
  if (frobenius(degree) != 2) return false;
  for (int p : prime_factors(static_cast<std::uint64_t>(degree))) {
    if (poly_gcd(poly, frobenius(degree / p) ^ 2) != 1) return false;
  }
  return true;
}

std::uint64_t Gf2kField::default_modulus(int k) {
  const std::uint64_t top = (std::uint64_t{1} << k) | 1;
  for (int a = 1; a < k; ++a) {
    std::uint64_t p = top | (std::uint64_t{1} << a);
    if (is_irreducible(p, k)) return p;
  }
  for (int a = 3; a < k; ++a) {
    for (int b = 2; b < a; ++b) {
      for (int c = 1; c < b; ++c) {
        std::uint64_t p = top | (std::uint64_t{1} << a) | (std::uint64_t{1} << b) | (std::uint64_t{1} << c);
        if (is_irreducible(p, k)) return p;
      }
    }
  }
  throw Error(ErrorKind::TooLarge, "no irreducible modulus found");
}

Gf2kField::Gf2kField(int k) : Gf2kField(k, default_modulus(k)) {}

Gf2kField::Gf2kField(int k, std::uint64_t modulus)
    : k_(k),
      modulus_(modulus),
      mask_(static_cast<std::uint32_t>((std::uint64_t{1} << k) - 1)),
      order_(mask_) {
  if (k < 2 || k > 31) throw Error(ErrorKind::TooLarge, "field bits must be in [2, 31]");
  if (!is_irreducible(modulus, k)) throw Error(ErrorKind::NotInvertible, "modulus is reducible");
  if (k <= 20) build_tables();
}

std::uint32_t Gf2kField::slow_mul(std::uint32_t a, std::uint32_t b) const {
  return static_cast<std::uint32_t>(poly_mulmod(a, b, modulus_, k_));
}

void Gf2kField::build_tables() {
  const auto factors = prime_factors(order_);
  auto slow_pow = [&](std::uint32_t g, std::uint64_t e) {
    std::uint32_t r = 1;
    while (e) {
      if (e & 1) r = slow_mul(r, g);
      g = slow_mul(g, g);
      e >>= 1;
    }
    return r;
  };
  std::uint32_t gen = 2;
  for (;; ++gen) {
    bool primitive = true;
    for (int p : factors) {
      if (slow_pow(gen, order_ / p) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) break;
  }
  log_.assign(std::size_t{order_} + 1, 0);
  exp_.assign(order_, 0);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < order_; ++i) {
    exp_[i] = x;
    log_[x] = i;
    x = slow_mul(x, gen);
  }
}

std::uint32_t Gf2kField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint32_t Gf2kField::inv(std::uint32_t a) const {
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero in GF(2^k)");
  if (!log_.empty()) return exp_[(order_ - log_[a]) % order_];
  return pow(a, order_ - 1);
}

const Gf2kField& gf2k_field(int k) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Gf2kField>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[k];
  if (!slot) slot = std::make_unique<Gf2kField>(k);
  return *slot;
}

// ------------------------------------------------------------- evaluation

EvaluationPoint random_point(std::uint64_t seed, int k, int nvars) {
  if (k < 2 || k > 31) throw Error(ErrorKind::TooLarge, "field bits must be in [2, 31]");
  EvaluationPoint pt;
  pt.seed = seed;
  pt.k = k;
  std::mt19937_64 rng(seed);
  const std::uint64_t mask = (std::uint64_t{1} << k) - 1;
  pt.values.reserve(nvars);
  while (static_cast<int>(pt.values.size()) < nvars) {
    std::uint64_t v = rng() & mask;
    if (v != 0) pt.values.push_back(static_cast<std::uint32_t>(v));
  }
  return pt;
}

std::uint32_t evaluate(const MultiPoly& p, const Gf2kField& f, const EvaluationPoint& pt) {
  if (p.max_var() > static_cast<int>(pt.values.size())) {
    throw Error(ErrorKind::MalformedToken, "evaluation point misses a variable");
  }
  std::uint32_t sum = 0;
  for (const auto& t : p.terms()) {
    std::uint32_t prod = 1;
    for (int v = 1; v <= t.n_vars() && prod != 0; ++v) {
      int e = t.exponent(v);
      if (e > 0) prod = f.mul(prod, f.pow(pt[v], e));
    }
    sum ^= prod;
  }
  return sum;
}

std::uint32_t evaluate(const RationalFn& r, const Gf2kField& f, const EvaluationPoint& pt) {
  std::uint32_t den = evaluate(r.den(), f, pt);
  if (den == 0) throw Error(ErrorKind::ZeroDenominator, "denominator vanishes at sample point");
  return f.mul(evaluate(r.num(), f, pt), f.inv(den));
}

}  // namespace ttkh
