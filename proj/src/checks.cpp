#include "ttkh/checks.hpp"

#include <set>

#include "ttkh/classical.hpp"
#include "ttkh/errors.hpp"

namespace ttkh {

namespace {

int rank_at(const Poincare& p, int k) {
  auto it = p.find(k);
  return it == p.end() ? 0 : it->second;
}

std::set<int> gradings(const Poincare& a, const Poincare& b) {
  std::set<int> out;
  for (const auto& [k, v] : a) out.insert(k);
  for (const auto& [k, v] : b) out.insert(k);
  return out;
}

CheckResult passed(std::string property) {
  CheckResult r;
  r.property = std::move(property);
  return r;
}

CheckResult skipped(std::string property, std::string why) {
  return {std::move(property), true, true, std::move(why)};
}

CheckResult compare(std::string property, const Poincare& expected, const Poincare& got, std::string what) {
  CheckResult r = passed(std::move(property));
  if (expected != got) {
    r.ok = false;
    r.detail = what + ": expected " + poincare_text(expected) + ", got " + poincare_text(got);
  }
  return r;
}

}  // namespace

std::vector<int> dominance_failures(const Poincare& a, const Poincare& b) {
  std::vector<int> out;
  for (int k : gradings(a, b)) {
    if (rank_at(a, k) < rank_at(b, k)) out.push_back(k);
  }
  return out;
}

std::vector<int> differing_gradings(const Poincare& a, const Poincare& b) {
  std::vector<int> out;
  for (int k : gradings(a, b)) {
    if (rank_at(a, k) != rank_at(b, k)) out.push_back(k);
  }
  return out;
}

CheckResult check_d_squared_tree(const PreparedDiagram& p, const CheckOptions& opt) {
  CheckResult r = passed("d_squared_tree");
  if (p.diagram.is_split()) return skipped(r.property, "split diagram has no spanning trees");
  std::optional<Violation> v;
  if (p.n_crossings() <= opt.symbolic_limit) {
    v = verify_d_squared(build_complex_exact(p));
  } else {
    const Gf2kField& f = gf2k_field(opt.homology.field_bits);
    for (std::uint64_t s : trial_seeds(opt.homology.seed, 1)) {
      try {
        v = verify_d_squared(build_complex_evaluated(p, f, random_point(s, f.bits(), p.faces.n_faces())));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::ZeroDenominator) throw;
        return skipped(r.property, "sample point hit a vanishing area");
      }
    }
    r.detail = "evaluated";
  }
  if (v) {
    r.ok = false;
    r.detail = "d^2 nonzero from generator " + std::to_string(v->source) + " to " + std::to_string(v->target);
  }
  return r;
}

CheckResult check_d_squared_cube(const LinkDiagram& d, const CheckOptions& opt) {
  CheckResult r = passed("d_squared_cube");
  if (d.n_crossings() > opt.symbolic_limit) return skipped(r.property, "above the symbolic limit");
  CubeOptions co;
  co.threshold = opt.symbolic_limit;
  co.jobs = opt.homology.jobs;
  if (auto v = verify_d_squared(build_twisted_complex_symbolic(d, co))) {
    r.ok = false;
    r.detail = "d^2 nonzero from cube state " + std::to_string(v->source) + " to " + std::to_string(v->target);
  }
  return r;
}

CheckResult check_chain_polynomial(const LinkDiagram& d, const HomologyReport& ht) {
  CheckResult r = passed("chain_polynomial");
  if (d.is_split()) return skipped(r.property, "split diagram");
  TreePolynomials tp = tree_polynomial(d);
  IntPoly chain;
  for (const auto& [k, v] : ht.chain_ranks) chain[k] = v;
  BigInt det = determinant(d);
  if (tp.r != chain) {
    r.ok = false;
    r.detail = "R(d) = " + poly_text(tp.r) + " but chain groups give " + poly_text(chain);
  } else if (evaluate(tp.q, 1) != ht.generators) {
    r.ok = false;
    r.detail = "Q(1) = " + evaluate(tp.q, 1).str() + " but there are " + std::to_string(ht.generators) + " trees";
  } else if (abs(evaluate(tp.q, -1)) != det) {
    r.ok = false;
    r.detail = "|Q(-1)| = " + BigInt(abs(evaluate(tp.q, -1))).str() + " but det = " + det.str();
  }
  return r;
}

CheckResult check_euler(const LinkDiagram& d, const HomologyReport& ht) {
  CheckResult r = passed("euler");
  if (d.is_split()) return skipped(r.property, "split diagram");
  EulerCheck e = euler_check(d, ht.poincare);
  if (!e.ok) {
    r.ok = false;
    r.detail = "|P(i)|^2 = " + e.modulus_squared.str() + " but det = " + e.det.str();
  }
  return r;
}

CheckResult check_mirror(const LinkDiagram& d, const HomologyReport& ht, const CheckOptions& opt) {
  HomologyReport m = spanning_tree_homology(mirror(d), opt.homology);
  return compare("mirror", reflect(ht.poincare), m.poincare, "mirror");
}

CheckResult check_marked_point(const LinkDiagram& d, const HomologyReport& ht, const CheckOptions& opt) {
  CheckResult r = passed("marked_point");
  if (d.n_crossings() > opt.marked_limit) return skipped(r.property, "above the marked-edge limit");
  for (int e = 0; e < d.n_edges(); ++e) {
    if (e == d.marked_edge()) continue;
    HomologyReport h = spanning_tree_homology(d.with_marked_edge(e), opt.homology);
    if (h.poincare != ht.poincare) {
      r.ok = false;
      r.detail = "marked edge " + std::to_string(e + 1) + " gives " + poincare_text(h.poincare) + ", edge " +
                 std::to_string(d.marked_edge() + 1) + " gives " + poincare_text(ht.poincare);
      return r;
    }
  }
  return r;
}

CheckResult check_cube_vs_tree(const LinkDiagram& d, const HomologyReport& ht, const CheckOptions& opt) {
  if (d.n_crossings() > opt.cube_limit) return skipped("cube_vs_tree", "above the cube limit");
  if (d.is_split()) return skipped("cube_vs_tree", "split diagram");
  TwistedOptions to;
  to.cube.threshold = opt.cube_limit;
  to.cube.jobs = opt.homology.jobs;
  to.field_bits = opt.homology.field_bits;
  to.trials = opt.homology.trials;
  to.seed = opt.homology.seed;
  return compare("cube_vs_tree", ht.poincare, twisted_homology(d, to), "twisted cube");
}

CheckResult check_spectral(const LinkDiagram& d, const HomologyReport& ht, const CheckOptions& opt) {
  CheckResult r = passed("spectral");
  if (d.n_crossings() > opt.khovanov_limit) return skipped(r.property, "above the Khovanov limit");
  CubeOptions co;
  co.threshold = opt.khovanov_limit;
  co.jobs = opt.homology.jobs;
  Poincare kh = reduced_khovanov_delta(d, co);
  auto bad = dominance_failures(kh, ht.poincare);
  if (!bad.empty()) {
    r.ok = false;
    r.detail = "rk KH < rk HT at delta " + std::to_string(bad.front()) + ": KH " + poincare_text(kh) + ", HT " +
               poincare_text(ht.poincare);
  }
  return r;
}

CheckResult check_seed_stability(const LinkDiagram& d, const HomologyReport& ht, const CheckOptions& opt) {
  HomologyOptions other = opt.homology;
  other.seed = opt.homology.seed + 1;
  other.mode = Mode::Evaluated;
  return compare("seed_stability", ht.poincare, spanning_tree_homology(d, other).poincare,
                 "seed " + std::to_string(other.seed));
}

CheckResult check_alternating(const LinkDiagram& d, const HomologyReport& ht) {
  if (!is_alternating(d)) return skipped("alternating", "diagram is not alternating");
  if (d.is_split()) return skipped("alternating", "split diagram");
  BigInt det = determinant(d);
  Poincare expected;
  if (det != 0) expected[signature(d)] = static_cast<int>(det);
  return compare("alternating", expected, ht.poincare, "det d^signature");
}

std::vector<CheckResult> check_diagram(const LinkDiagram& d, const CheckOptions& opt) {
  PreparedDiagram p(d);
  HomologyReport ht = spanning_tree_homology(p, opt.homology);
  std::vector<CheckResult> out;
  out.push_back(check_d_squared_tree(p, opt));
  out.push_back(check_d_squared_cube(d, opt));
  out.push_back(check_chain_polynomial(d, ht));
  out.push_back(check_euler(d, ht));
  out.push_back(check_mirror(d, ht, opt));
  out.push_back(check_marked_point(d, ht, opt));
  out.push_back(check_cube_vs_tree(d, ht, opt));
  out.push_back(check_spectral(d, ht, opt));
  out.push_back(check_seed_stability(d, ht, opt));
  out.push_back(check_alternating(d, ht));
  return out;
}

}  // namespace ttkh
