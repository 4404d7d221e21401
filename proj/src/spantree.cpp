#include "ttkh/spantree.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <random>
#include <unordered_map>

#include "ttkh/errors.hpp"
#include "ttkh/twisted.hpp"

namespace ttkh {

namespace {

// Union-find with undo, for the contraction-deletion recursion.
class RollbackSets {
 public:
  explicit RollbackSets(int n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
    return true;
  }
  void undo() {
    int b = history_.back();
    history_.pop_back();
    int a = parent_[b];
    size_[a] -= size_[b];
    parent_[b] = b;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> history_;
};

std::uint32_t evaluate_area(std::uint64_t mask, const EvaluationPoint& pt) {
  std::uint32_t sum = 0;
  for (std::uint64_t m = mask; m; m &= m - 1) sum ^= pt[std::countr_zero(m) + 1];
  return sum;
}

}  // namespace

PreparedDiagram::PreparedDiagram(LinkDiagram d)
    : diagram(std::move(d)), faces(colored_faces(diagram)), tait(tait_graphs(diagram, faces)) {
  q0_black.resize(diagram.n_crossings());
  for (int c = 0; c < diagram.n_crossings(); ++c) q0_black[c] = quadrant0_black(faces, c);
  SignCount s = crossing_signs(diagram);
  n_plus = s.n_plus;
  n_minus = s.n_minus;
}

std::vector<CrossingSet> black_spanning_trees(const PreparedDiagram& p) {
  if (p.diagram.is_split()) return {};
  const auto& g = p.tait.black;
  const int nf = p.faces.n_faces();
  const int n_edges = static_cast<int>(g.edges.size());
  const int need = static_cast<int>(g.vertices.size()) - 1;
  std::vector<CrossingSet> out;
  RollbackSets sets(nf);

  // Would the current contraction plus edges [from, end) still span?
  auto spans_with_rest = [&](int from, int have) {
    RollbackSets probe = sets;
    for (int j = from; j < n_edges && have < need; ++j) {
      if (probe.unite(g.edges[j].u, g.edges[j].v)) ++have;
    }
    return have == need;
  };

  std::function<void(int, int, CrossingSet)> rec = [&](int i, int have, CrossingSet chosen) {
    if (have == need) {
      out.push_back(chosen);
      return;
    }
    if (i == n_edges) return;
    const auto& e = g.edges[i];
    if (sets.find(e.u) == sets.find(e.v)) {
      rec(i + 1, have, chosen);  // loop in the contracted graph
      return;
    }
    sets.unite(e.u, e.v);
    rec(i + 1, have + 1, chosen.with(e.crossing));
    sets.undo();
    if (spans_with_rest(i + 1, have)) rec(i + 1, have, chosen);  // not a bridge
  };
  rec(0, 0, CrossingSet());
  return out;
}

CrossingSet subset_of_tree(const PreparedDiagram& p, CrossingSet black_tree) {
  CrossingSet s;
  for (int c = 0; c < p.n_crossings(); ++c) {
    if (black_tree.contains(c) == static_cast<bool>(p.q0_black[c])) s = s.with(c);
  }
  return s;
}

std::vector<int> circle_visits(const LinkDiagram& d, CrossingSet s) {
  std::vector<int> visits;
  const int start = d.marked_edge();
  EdgeEnd to = d.head(start);
  for (int guard = 0; guard <= 2 * d.n_edges(); ++guard) {
    visits.push_back(to.crossing);
    EdgeEnd from{to.crossing, smoothing_partner(to.pos, s.contains(to.crossing))};
    if (d.edge_at(from.crossing, from.pos) == start) return visits;
    to = d.partner(from);
  }
  throw Error(ErrorKind::NonSpherical, "resolution walk did not close");
}

std::vector<TreeGenerator> enumerate_generators(const PreparedDiagram& p) {
  std::vector<TreeGenerator> out;
  for (CrossingSet tree : black_spanning_trees(p)) {
    TreeGenerator t;
    t.black_tree = tree;
    t.subset = subset_of_tree(p, tree);
    t.delta_unshifted = t.subset.size();
    t.visits = circle_visits(p.diagram, t.subset);
    if (static_cast<int>(t.visits.size()) != p.diagram.n_edges()) {
      throw Error(ErrorKind::NonSpherical, "spanning tree did not give a single circle");
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<AdmissiblePair> admissible_pairs(const PreparedDiagram& p, const TreeGenerator& t) {
  const int n = p.n_crossings();
  std::vector<int> first(n, -1);
  std::vector<int> second(n, -1);
  for (int i = 0; i < static_cast<int>(t.visits.size()); ++i) {
    int c = t.visits[i];
    (first[c] < 0 ? first[c] : second[c]) = i;
  }
  std::vector<AdmissiblePair> out;
  for (int a = 0; a < n; ++a) {
    if (t.subset.contains(a)) continue;
    for (int b = a + 1; b < n; ++b) {
      if (t.subset.contains(b)) continue;
      bool inside_first = first[a] < first[b] && first[b] < second[a];
      bool inside_second = first[a] < second[b] && second[b] < second[a];
      if (inside_first == inside_second) continue;
      bool a_black = t.black_tree.contains(a);
      if (a_black == t.black_tree.contains(b)) {
        throw Error(ErrorKind::NonSpherical, "interleaving arcs on the same side of the circle");
      }
      int c1 = a_black ? a : b;
      int c2 = a_black ? b : a;
      out.push_back({t.subset.with(a).with(b), c1, c2});
    }
  }
  return out;
}

MultiPoly CleavedAreas::area_black() const { return area_of(black); }
MultiPoly CleavedAreas::area_white() const { return area_of(white); }

CleavedAreas cleaved_areas(const PreparedDiagram& p, const TreeGenerator& t, const AdmissiblePair& pair) {
  // Faces of `color` cut off from the root by removing `cut` from the tree.
  auto cut_off = [&](const TaitGraph& g, bool in_black_tree, int cut) {
    const int nf = p.faces.n_faces();
    std::vector<std::vector<int>> adj(nf);
    for (const auto& e : g.edges) {
      if (e.crossing == cut || t.black_tree.contains(e.crossing) != in_black_tree) continue;
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    std::uint64_t reached = std::uint64_t{1} << g.root;
    std::vector<int> stack{g.root};
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      for (int h : adj[f]) {
        if (!((reached >> h) & 1)) {
          reached |= std::uint64_t{1} << h;
          stack.push_back(h);
        }
      }
    }
    std::uint64_t all = 0;
    for (int f : g.vertices) all |= std::uint64_t{1} << f;
    return all & ~reached;
  };
  CleavedAreas a;
  a.black = cut_off(p.tait.black, true, pair.c1);
  a.white = cut_off(p.tait.white, false, pair.c2);
  return a;
}

RationalFn differential_coefficient(const PreparedDiagram& p, const TreeGenerator& t,
                                    const AdmissiblePair& pair) {
  CleavedAreas a = cleaved_areas(p, t, pair);
  return RationalFn(MultiPoly::one(), a.area_black()) + RationalFn(MultiPoly::one(), a.area_white());
}

namespace {

template <class Ops, class Coeff>
GradedComplex<Ops> build_tree_complex(const PreparedDiagram& p, const std::vector<TreeGenerator>& gens,
                                      Ops ops, Coeff coeff) {
  GradedComplex<Ops> cx(ops);
  std::unordered_map<std::uint64_t, int> index;
  for (const auto& t : gens) {
    index.emplace(t.subset.bits(), cx.add_generator(t.delta_unshifted - p.n_plus));
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const auto& pair : admissible_pairs(p, gens[i])) {
      auto it = index.find(pair.target.bits());
      if (it == index.end()) throw Error(ErrorKind::NonSpherical, "admissible target is not a generator");
      cx.add_entry(static_cast<int>(i), it->second, coeff(gens[i], pair));
    }
  }
  return cx;
}

}  // namespace

GradedComplex<RationalOps> build_complex_exact(const PreparedDiagram& p) {
  auto gens = enumerate_generators(p);
  return build_tree_complex(p, gens, RationalOps{}, [&](const TreeGenerator& t, const AdmissiblePair& pair) {
    return differential_coefficient(p, t, pair);
  });
}

GradedComplex<Gf2kOps> build_complex_evaluated(const PreparedDiagram& p, const Gf2kField& f,
                                               const EvaluationPoint& pt) {
  auto gens = enumerate_generators(p);
  return build_tree_complex(p, gens, Gf2kOps{&f}, [&](const TreeGenerator& t, const AdmissiblePair& pair) {
    CleavedAreas a = cleaved_areas(p, t, pair);
    std::uint32_t b = evaluate_area(a.black, pt);
    std::uint32_t w = evaluate_area(a.white, pt);
    if (b == 0 || w == 0) throw Error(ErrorKind::ZeroDenominator, "cleaved area vanishes at sample point");
    return f.inv(b) ^ f.inv(w);
  });
}

const char* to_string(Mode m) {
  switch (m) {
    case Mode::Auto: return "auto";
    case Mode::Exact: return "exact";
    case Mode::Evaluated: return "evaluated";
  }
  return "unknown";
}

std::vector<std::uint64_t> trial_seeds(std::uint64_t seed, int trials) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> out;
  for (int t = 0; t < std::max(1, trials); ++t) out.push_back(rng());
  return out;
}

namespace {

// Evaluated complex at the trial's point, resampling while some area vanishes.
GradedComplex<Gf2kOps> evaluated_trial(const PreparedDiagram& p, const Gf2kField& f, int bits,
                                       std::uint64_t trial_seed) {
  std::mt19937_64 resample(trial_seed);
  std::uint64_t s = trial_seed;
  for (int attempt = 0; attempt < 64; ++attempt) {
    try {
      return build_complex_evaluated(p, f, random_point(s, bits, p.faces.n_faces()));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ZeroDenominator) throw;
      s = resample();
    }
  }
  throw Error(ErrorKind::ZeroDenominator, "no usable evaluation point found");
}

}  // namespace

HomologyReport spanning_tree_homology(const PreparedDiagram& p, const HomologyOptions& opt) {
  HomologyReport rep;
  if (p.diagram.is_split()) {
    rep.split = true;
    rep.mode = opt.mode == Mode::Exact ? Mode::Exact : Mode::Evaluated;
    return rep;
  }
  // Evaluated ranks are lower bounds for the ranks over the fraction field.
  const Gf2kField& f = gf2k_field(opt.field_bits);
  std::map<BlockKey, int> lower;
  std::map<BlockKey, int> dims;
  bool first = true;
  for (std::uint64_t s : trial_seeds(opt.seed, opt.trials)) {
    auto cx = evaluated_trial(p, f, opt.field_bits, s);
    if (first) {
      dims = cx.block_dims();
      rep.generators = cx.size();
      for (int g = 0; g < cx.size(); ++g) ++rep.chain_ranks[cx.delta(g)];
      first = false;
    }
    for (const auto& [k, r] : differential_ranks(cx, opt.jobs)) lower[k] = std::max(lower[k], r);
  }
  rep.mode = Mode::Evaluated;
  const bool want_exact = opt.mode == Mode::Exact ||
                          (opt.mode == Mode::Auto && p.n_crossings() <= opt.exact_threshold);
  if (!want_exact) {
    rep.poincare = collapse(block_betti(dims, lower));
    return rep;
  }
  // Exact: ranks pinned by d^2 = 0 need no symbolic work; the rest are
  // eliminated over the polynomial ring, which Auto mode does not attempt.
  auto ranks = pinned_ranks(dims, lower);
  std::vector<BlockKey> open;
  for (const auto& [k, r] : lower) {
    if (!ranks.count(k)) open.push_back(k);
  }
  if (!open.empty() && opt.mode != Mode::Exact) {
    rep.poincare = collapse(block_betti(dims, lower));
    return rep;
  }
  if (!open.empty()) {
    auto cx = build_complex_exact(p);
    std::vector<int> r(open.size());
    parallel_for(static_cast<int>(open.size()), opt.jobs, [&](int i) {
      r[i] = matrix_rank(RationalOps{}, block_matrix(cx, open[i]));
    });
    for (std::size_t i = 0; i < open.size(); ++i) ranks[open[i]] = r[i];
  }
  rep.mode = Mode::Exact;
  rep.poincare = collapse(block_betti(dims, ranks));
  return rep;
}

HomologyReport spanning_tree_homology(const LinkDiagram& d, const HomologyOptions& opt) {
  return spanning_tree_homology(PreparedDiagram(d), opt);
}

// ---------------------------------------------------------------- LES

LinkDiagram resolve_crossing(const LinkDiagram& d, int c, bool one) {
  const int n = d.n_crossings();
  const int m = d.n_edges();
  if (n < 2) throw Error(ErrorKind::DegenerateCrossing, "resolution would leave no crossings");
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int pos : {0, 2}) parent[find(d.edge_at(c, pos))] = find(d.edge_at(c, smoothing_partner(pos, one)));

  // Walk the new components, recording which old edges run backwards.
  std::vector<int> flip(m, -1);
  for (int e0 = 0; e0 < m; ++e0) {
    if (flip[e0] >= 0) continue;
    int cur = e0;
    EdgeEnd from = d.tail(e0);
    EdgeEnd to = d.head(e0);
    for (int guard = 0; guard <= 2 * m; ++guard) {
      flip[cur] = from == d.tail(cur) ? 0 : 1;
      int next_pos = to.crossing == c ? smoothing_partner(to.pos, one) : (to.pos + 2) % 4;
      EdgeEnd next_from{to.crossing, next_pos};
      int next = d.edge_at(to.crossing, next_pos);
      if (flip[next] >= 0) break;
      cur = next;
      from = next_from;
      to = d.partner(next_from);
    }
  }

  std::vector<std::array<int, 4>> tuples;
  std::vector<int> new_index(n, -1);
  std::vector<char> rotated(n, 0);
  for (int x = 0; x < n; ++x) {
    if (x == c) continue;
    new_index[x] = static_cast<int>(tuples.size());
    std::array<int, 4> t{};
    rotated[x] = flip[d.edge_at(x, 0)] == 1;
    for (int pos = 0; pos < 4; ++pos) {
      int src = rotated[x] ? (pos + 2) % 4 : pos;
      t[pos] = find(d.edge_at(x, src)) + 1;
    }
    tuples.push_back(t);
  }
  std::vector<LinkDiagram::OrientationHint> hints;
  for (int e = 0; e < m; ++e) {
    EdgeEnd tail = flip[e] ? d.head(e) : d.tail(e);
    if (tail.crossing == c) continue;
    int pos = rotated[tail.crossing] ? (tail.pos + 2) % 4 : tail.pos;
    hints.push_back({find(e) + 1, {new_index[tail.crossing], pos}});
  }
  return LinkDiagram::from_tuples(tuples, find(d.marked_edge()) + 1, hints);
}

bool both_resolutions_connected(const PreparedDiagram& p, int c) {
  std::array<int, 4> f{};
  for (int q = 0; q < 4; ++q) f[q] = p.faces.face_at(c, q);
  std::sort(f.begin(), f.end());
  return std::adjacent_find(f.begin(), f.end()) == f.end();
}

namespace {

using Dense = std::vector<std::vector<std::uint32_t>>;  // row-major

int dense_rank(const Gf2kField& f, Dense a) {
  int rank = 0;
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    std::uint32_t inv = f.inv(a[rank][c]);
    for (int j = c; j < cols; ++j) a[rank][j] = f.mul(a[rank][j], inv);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      std::uint32_t k = a[r][c];
      for (int j = c; j < cols; ++j) a[r][j] ^= f.mul(k, a[rank][j]);
    }
    ++rank;
  }
  return rank;
}

// Basis of {x : a x = 0}; a has `cols` columns.
Dense nullspace(const Gf2kField& f, Dense a, int cols) {
  const int rows = static_cast<int>(a.size());
  std::vector<int> pivot_col;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    std::uint32_t inv = f.inv(a[rank][c]);
    for (int j = 0; j < cols; ++j) a[rank][j] = f.mul(a[rank][j], inv);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      std::uint32_t k = a[r][c];
      for (int j = 0; j < cols; ++j) a[r][j] ^= f.mul(k, a[rank][j]);
    }
    pivot_col.push_back(c);
    ++rank;
  }
  std::vector<char> is_pivot(cols, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  Dense basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint32_t> v(cols, 0);
    v[free] = 1;
    for (int r = 0; r < rank; ++r) v[pivot_col[r]] = a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

LesReport decompose_at_crossing(const PreparedDiagram& p, int c, const HomologyOptions& opt) {
  if (p.diagram.is_split()) throw Error(ErrorKind::SplitInput, "diagram is split");
  if (!both_resolutions_connected(p, c)) {
    throw Error(ErrorKind::DegenerateCrossing, "a resolution at crossing " + std::to_string(c + 1) +
                                                   " disconnects the diagram");
  }
  LesReport rep;
  rep.crossing = c;
  rep.sign = p.diagram.crossing(c).sign;
  PreparedDiagram l0(resolve_crossing(p.diagram, c, false));
  PreparedDiagram l1(resolve_crossing(p.diagram, c, true));
  rep.f = p.n_plus - l0.n_plus;
  rep.e = p.n_plus - l1.n_plus;
  HomologyOptions sub = opt;
  sub.mode = Mode::Evaluated;
  rep.h_l0 = spanning_tree_homology(l0, sub).poincare;
  rep.h_l1 = spanning_tree_homology(l1, sub).poincare;

  const Gf2kField& f = gf2k_field(opt.field_bits);
  auto gens = enumerate_generators(p);
  auto cx = evaluated_trial(p, f, opt.field_bits, trial_seeds(opt.seed, 1).front());

  // Split by membership of c; the c in S part is a subcomplex.
  std::vector<int> part(cx.size());
  for (int g = 0; g < cx.size(); ++g) part[g] = gens[g].subset.contains(c) ? 1 : 0;
  std::map<int, std::vector<int>> by_grading[2];
  for (int g = 0; g < cx.size(); ++g) by_grading[part[g]][cx.delta(g)].push_back(g);
  for (int g = 0; g < cx.size(); ++g) {
    for (const auto& [t, v] : cx.column(g)) {
      if (part[g] == 1 && part[t] == 0) throw Error(ErrorKind::DegenerateCrossing, "subcomplex not closed");
    }
  }

  auto block = [&](const std::vector<int>& src, const std::vector<int>& dst) {
    std::map<int, int> row;
    for (int g : dst) row.emplace(g, static_cast<int>(row.size()));
    Dense a(dst.size(), std::vector<std::uint32_t>(src.size(), 0));
    for (std::size_t j = 0; j < src.size(); ++j) {
      for (const auto& [t, v] : cx.column(src[j])) {
        auto it = row.find(t);
        if (it != row.end()) a[it->second][j] = v;
      }
    }
    return a;
  };
  auto list = [&](int which, int delta) -> const std::vector<int>& {
    static const std::vector<int> empty;
    auto it = by_grading[which].find(delta);
    return it == by_grading[which].end() ? empty : it->second;
  };
  auto sub_homology = [&](int which) {
    Poincare h;
    for (const auto& [delta, gs] : by_grading[which]) {
      int out_rank = dense_rank(f, block(gs, list(which, delta + 2)));
      int in_rank = dense_rank(f, block(list(which, delta - 2), gs));
      int r = static_cast<int>(gs.size()) - out_rank - in_rank;
      if (r) h[delta] = r;
    }
    return h;
  };
  rep.h_c0 = sub_homology(0);
  rep.h_c1 = sub_homology(1);

  std::vector<int> all_gens(cx.size());
  std::iota(all_gens.begin(), all_gens.end(), 0);
  std::map<int, std::vector<int>> whole;
  for (int g = 0; g < cx.size(); ++g) whole[cx.delta(g)].push_back(g);
  for (const auto& [delta, gs] : whole) {
    auto nxt = whole.find(delta + 2);
    auto prv = whole.find(delta - 2);
    int out_rank = nxt == whole.end() ? 0 : dense_rank(f, block(gs, nxt->second));
    int in_rank = prv == whole.end() ? 0 : dense_rank(f, block(prv->second, gs));
    int r = static_cast<int>(gs.size()) - out_rank - in_rank;
    if (r) rep.h_l[delta] = r;
  }

  for (const auto& [delta, c0] : by_grading[0]) {
    const auto& c1_next = list(1, delta + 2);
    if (c1_next.empty()) continue;
    Dense d0 = block(c0, list(0, delta + 2));
    Dense cycles = d0.empty() ? Dense() : nullspace(f, d0, static_cast<int>(c0.size()));
    if (d0.empty()) {
      for (std::size_t j = 0; j < c0.size(); ++j) {
        std::vector<std::uint32_t> v(c0.size(), 0);
        v[j] = 1;
        cycles.push_back(std::move(v));
      }
    }
    Dense tau = block(c0, c1_next);
    Dense boundary = block(list(1, delta), c1_next);
    // Columns: boundaries of C1, then images of cycles.
    Dense joint(c1_next.size());
    for (std::size_t r = 0; r < c1_next.size(); ++r) {
      joint[r] = boundary[r];
      for (const auto& z : cycles) {
        std::uint32_t s = 0;
        for (std::size_t j = 0; j < c0.size(); ++j) s ^= f.mul(tau[r][j], z[j]);
        joint[r].push_back(s);
      }
    }
    int rk = dense_rank(f, joint) - dense_rank(f, boundary);
    if (rk) rep.tau_rank[delta] = rk;
  }

  auto at = [](const std::map<int, int>& m, int k) {
    auto it = m.find(k);
    return it == m.end() ? 0 : it->second;
  };
  std::vector<int> gradings;
  for (const auto* m : {&rep.h_l, &rep.h_c0, &rep.h_c1}) {
    for (const auto& [k, v] : *m) gradings.push_back(k);
  }
  for (const auto& [k, v] : rep.h_l0) gradings.push_back(k - rep.f);
  for (const auto& [k, v] : rep.h_l1) gradings.push_back(k + 1 - rep.e);
  rep.exact = rep.c0_matches = rep.c1_matches = true;
  for (int i : gradings) {
    int lhs = at(rep.h_l, i);
    int rhs = at(rep.h_c0, i) - at(rep.tau_rank, i) + at(rep.h_c1, i) - at(rep.tau_rank, i - 2);
    if (lhs != rhs) rep.exact = false;
    if (at(rep.h_c0, i) != at(rep.h_l0, i + rep.f)) rep.c0_matches = false;
    if (at(rep.h_c1, i) != at(rep.h_l1, i - 1 + rep.e)) rep.c1_matches = false;
  }
  return rep;
}

}  // namespace ttkh
