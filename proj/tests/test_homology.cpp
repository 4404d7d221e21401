#include <doctest.h>

#include "ttkh/homology.hpp"

using namespace ttkh;

namespace {

// Two generators in delta 0 and one in delta 2 with d a = c, d b = c.
GradedComplex<Gf2Ops> small_complex() {
  GradedComplex<Gf2Ops> c;
  int a = c.add_generator(0);
  int b = c.add_generator(0);
  int t = c.add_generator(2);
  c.add_entry(a, t, 1);
  c.add_entry(b, t, 1);
  return c;
}

}  // namespace

TEST_CASE("homology of a small complex") {
  auto c = small_complex();
  CHECK_FALSE(verify_d_squared(c).has_value());
  CHECK(betti(c) == Poincare{{0, 1}});
}

TEST_CASE("entries of the wrong degree are refused") {
  GradedComplex<Gf2Ops> c;
  int a = c.add_generator(0);
  int b = c.add_generator(4);
  CHECK_THROWS_AS(c.add_entry(a, b, 1), Error);
}

TEST_CASE("d^2 violation is reported") {
  GradedComplex<Gf2Ops> c;
  int a = c.add_generator(0);
  int b = c.add_generator(2);
  int t = c.add_generator(4);
  c.add_entry(a, b, 1);
  c.add_entry(b, t, 1);
  auto v = verify_d_squared(c);
  REQUIRE(v.has_value());
  CHECK(v->source == a);
  CHECK(v->target == t);
}

TEST_CASE("cancellation preserves homology") {
  auto c = small_complex();
  auto r = cancel(c, 0, 2);
  CHECK(r.size() == 1);
  CHECK(betti(r) == betti(c));
  CHECK_THROWS_AS(cancel(c, 0, 1), Error);
}

TEST_CASE("rank over GF(2^k)") {
  Gf2kOps ops{&gf2k_field(16)};
  SparseMatrix<std::uint32_t> m;
  m.n_rows = 3;
  m.columns = {{{0, 2}, {1, 3}}, {{0, 4}, {1, 6}}, {{2, 5}}};  // second column is 2 * first
  CHECK(matrix_rank(ops, m) == 2);
}

TEST_CASE("rank over the fraction field") {
  RationalOps ops;
  RationalFn x1(MultiPoly::var(1)), x2(MultiPoly::var(2));
  SparseMatrix<RationalFn> m;
  m.n_rows = 2;
  m.columns = {{{0, x1}, {1, x2}}, {{0, x1 * x1}, {1, x1 * x2}}};
  CHECK(matrix_rank(ops, m) == 1);
  m.columns[1] = {{0, x2}, {1, x1}};
  CHECK(matrix_rank(ops, m) == 2);
}

TEST_CASE("secondary grading splits blocks") {
  GradedComplex<Gf2Ops> c;
  int a = c.add_generator(0, 0);
  c.add_generator(2, 1);
  CHECK(c.block_dims().size() == 2);
  CHECK(betti(c) == Poincare{{0, 1}, {2, 1}});
  (void)a;
}

TEST_CASE("ranks pinned by d^2 = 0") {
  std::map<BlockKey, int> dims{{{0, 0}, 2}, {{2, 0}, 3}, {{4, 0}, 1}};
  // rank d_0 >= 2 forces rank d_2 <= 1, which meets the lower bound 1.
  auto pinned = pinned_ranks(dims, {{{0, 0}, 2}, {{2, 0}, 1}});
  CHECK(pinned.at({0, 0}) == 2);
  CHECK(pinned.at({2, 0}) == 1);
  auto loose = pinned_ranks(dims, {{{0, 0}, 1}, {{2, 0}, 0}});
  CHECK(loose.count({2, 0}) == 0);
}

TEST_CASE("Poincaré polynomial helpers") {
  Poincare p{{-8, 4}, {-6, 3}};
  CHECK(poincare_text(p) == "4d^-8 + 3d^-6");
  CHECK(poincare_text({}) == "0");
  CHECK(poincare_text({{0, 1}}) == "d^0");
  CHECK(reflect(p) == Poincare{{6, 3}, {8, 4}});
  CHECK(product(Poincare{{-2, 3}}, Poincare{{0, 5}}) == Poincare{{-2, 15}});
  CHECK(total_rank(p) == 7);
  CHECK(poincare_json(p) == "{\"-6\":3,\"-8\":4}");  // keys sort as strings
}

TEST_CASE("parallel_for covers every index once") {
  std::vector<int> hits(100, 0);
  parallel_for(100, 4, [&](int i) { ++hits[i]; });
  for (int h : hits) CHECK(h == 1);
}
