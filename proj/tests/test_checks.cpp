#include <doctest.h>

#include "support/fixtures.hpp"
#include "ttkh/checks.hpp"

using namespace ttkh;

TEST_CASE("every property holds on small fixtures") {
  for (const char* name : {"3_1", "4_1", "6_2", "8_19", "L6n1{0,0}"}) {
    for (const auto& r : check_diagram(fixtures::entry(name).diagram())) {
      CHECK_MESSAGE(r.ok, name << " " << r.property << ": " << r.detail);
    }
  }
}

TEST_CASE("alternating check is skipped on non-alternating diagrams") {
  LinkDiagram d = fixtures::entry("8_19").diagram();
  CheckResult r = check_alternating(d, spanning_tree_homology(d));
  CHECK(r.ok);
  CHECK(r.skipped);
}

TEST_CASE("wrong homology is caught") {
  LinkDiagram d = fixtures::entry("5_2").diagram();
  HomologyReport fake = spanning_tree_homology(d);
  fake.poincare = {{0, 6}};
  CHECK_FALSE(check_euler(d, fake).ok);
  CHECK_FALSE(check_mirror(d, fake, {}).ok);
  CHECK_FALSE(check_alternating(d, fake).ok);
  CHECK_FALSE(check_cube_vs_tree(d, fake, {}).ok);
  HomologyReport huge;
  huge.poincare = {{0, 70}};
  CHECK_FALSE(check_spectral(d, huge, {}).ok);
  fake.chain_ranks[100] = 1;
  CHECK_FALSE(check_chain_polynomial(d, fake).ok);
}

TEST_CASE("grading comparisons") {
  Poincare kh{{-2, 1}, {0, 5}};
  Poincare ht{{0, 4}};
  CHECK(dominance_failures(kh, ht).empty());
  CHECK(dominance_failures(ht, kh) == std::vector<int>{-2, 0});
  CHECK(differing_gradings(kh, ht) == std::vector<int>{-2, 0});
}
