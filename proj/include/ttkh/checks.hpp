#pragma once

#include <string>
#include <vector>

#include "ttkh/pdcode.hpp"
#include "ttkh/spantree.hpp"
#include "ttkh/twisted.hpp"

namespace ttkh {

// Structural properties every diagram must satisfy; shared by `ttkh verify`
// and the acceptance run.
struct CheckOptions {
  HomologyOptions homology;
  int symbolic_limit = 8;  // d^2 = 0 over the function field / polynomial ring
  int marked_limit = 8;    // every marked edge is tried up to this size
  int cube_limit = 10;     // full twisted cube is compared up to this size
  int khovanov_limit = 15;
};

struct CheckResult {
  std::string property;
  bool ok = true;
  bool skipped = false;
  std::string detail;  // counterexample or reason for skipping
};

std::vector<CheckResult> check_diagram(const LinkDiagram& d, const CheckOptions& opt = {});

// Individual properties.  `ht` is the spanning-tree homology of d.
CheckResult check_d_squared_tree(const PreparedDiagram& p, const CheckOptions& opt);
CheckResult check_d_squared_cube(const LinkDiagram& d, const CheckOptions& opt);
CheckResult check_chain_polynomial(const LinkDiagram& d, const HomologyReport& ht);
CheckResult check_euler(const LinkDiagram& d, const HomologyReport& ht);
CheckResult check_mirror(const LinkDiagram& d, const HomologyReport& ht, const CheckOptions& opt);
CheckResult check_marked_point(const LinkDiagram& d, const HomologyReport& ht, const CheckOptions& opt);
CheckResult check_cube_vs_tree(const LinkDiagram& d, const HomologyReport& ht, const CheckOptions& opt);
CheckResult check_spectral(const LinkDiagram& d, const HomologyReport& ht, const CheckOptions& opt);
CheckResult check_seed_stability(const LinkDiagram& d, const HomologyReport& ht, const CheckOptions& opt);
CheckResult check_alternating(const LinkDiagram& d, const HomologyReport& ht);

// Grading-by-grading rk a >= rk b; lists the gradings where it fails.
std::vector<int> dominance_failures(const Poincare& a, const Poincare& b);
std::vector<int> differing_gradings(const Poincare& a, const Poincare& b);

}  // namespace ttkh
