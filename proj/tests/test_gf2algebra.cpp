#include <doctest.h>

#include "ttkh/errors.hpp"
#include "ttkh/gf2algebra.hpp"

using namespace ttkh;

namespace {

MultiPoly x(int v) { return MultiPoly::var(v); }

}  // namespace

TEST_CASE("characteristic two") {
  CHECK((x(1) + x(1)).is_zero());
  CHECK((x(1) + x(2)) * (x(1) + x(2)) == x(1) * x(1) + x(2) * x(2));
  CHECK(area_sum({3, 4, 3}) == x(4));
}

TEST_CASE("monomial order and divisibility") {
  Monomial a = Monomial::var(1, 2) * Monomial::var(3);
  Monomial b = Monomial::var(1);
  CHECK(b.divides(a));
  CHECK_FALSE(a.divides(b));
  CHECK(a / b == Monomial::var(1) * Monomial::var(3));
  CHECK(Monomial::gcd(a, Monomial::var(3, 4)) == Monomial::var(3));
  CHECK(Monomial::var(1) > Monomial::var(2));
  CHECK(a.degree() == 3);
}

TEST_CASE("exact division") {
  MultiPoly p = (x(1) + x(2)) * (x(2) + x(3) + MultiPoly::one());
  CHECK(p.exact_div(x(1) + x(2)) == x(2) + x(3) + MultiPoly::one());
  CHECK_THROWS_AS((x(1) + MultiPoly::one()).exact_div(x(2)), Error);
  CHECK((x(1) * x(2) + x(1) * x(3)).monomial_content() == Monomial::var(1));
}

TEST_CASE("rational functions") {
  RationalFn a(MultiPoly::one(), x(3));
  RationalFn b(MultiPoly::one(), x(4));
  RationalFn s = a + b;
  CHECK(s == RationalFn(x(3) + x(4), x(3) * x(4)));
  CHECK(s.to_string() == "(x3 + x4)/(x3*x4)");
  CHECK((s + s).is_zero());
  CHECK(s * s.inv() == RationalFn::one());
  CHECK_THROWS_AS(RationalFn::zero().inv(), Error);
  try {
    (void)RationalFn::zero().inv();
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivisionByZero);
  }
}

TEST_CASE("field moduli are irreducible") {
  for (int k = 2; k <= 20; ++k) {
    CHECK(Gf2kField::is_irreducible(Gf2kField::default_modulus(k), k));
  }
  CHECK(Gf2kField::default_modulus(8) == 0x11b);
  // x^4 + x^2 + 1 = (x^2 + x + 1)^2
  CHECK_FALSE(Gf2kField::is_irreducible(0x15, 4));
}

TEST_CASE("every nonzero element of GF(2^8) is invertible") {
  const Gf2kField& f = gf2k_field(8);
  for (std::uint32_t a = 1; a < 256; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK(f.pow(3, 255) == 1);
  CHECK_THROWS_AS(f.inv(0), Error);
}

TEST_CASE("table and shift-and-add multiplication agree") {
  const Gf2kField& small = gf2k_field(16);
  Gf2kField wide(24);
  for (std::uint32_t a = 1; a < 2000; a += 37) {
    for (std::uint32_t b = 1; b < 2000; b += 53) {
      CHECK(small.mul(a, b) == small.mul(b, a));
      CHECK(wide.mul(a, wide.inv(a)) == 1);
    }
  }
}

TEST_CASE("evaluation") {
  const Gf2kField& f = gf2k_field(16);
  EvaluationPoint pt = random_point(7, 16, 4);
  CHECK(pt.values.size() == 4);
  for (auto v : pt.values) CHECK(v != 0);
  CHECK(random_point(7, 16, 4).values == pt.values);
  CHECK(evaluate(x(1) + x(2), f, pt) == (pt[1] ^ pt[2]));
  CHECK(evaluate(x(1) * x(3), f, pt) == f.mul(pt[1], pt[3]));
  RationalFn r(x(1), x(2));
  CHECK(evaluate(r, f, pt) == f.mul(pt[1], f.inv(pt[2])));
  EvaluationPoint same = pt;
  same.values[1] = same.values[0];
  try {
    evaluate(RationalFn(MultiPoly::one(), x(1) + x(2)), f, same);
    FAIL("expected ZeroDenominator");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroDenominator);
  }
}
