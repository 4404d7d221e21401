#include "ttkh/twisted.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

#include "ttkh/errors.hpp"

namespace ttkh {

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

MultiPoly area_of(std::uint64_t face_mask) {
  std::vector<int> vars;
  for (std::uint64_t m = face_mask; m; m &= m - 1) vars.push_back(std::countr_zero(m) + 1);
  return area_sum(vars);
}

Resolution resolve(const LinkDiagram& d, const FaceSet& fs, CrossingSet s) {
  const int n = d.n_crossings();
  const int m = d.n_edges();
  DisjointSets edges(m);
  DisjointSets regions(fs.n_faces());
  for (int c = 0; c < n; ++c) {
    const bool in_s = s.contains(c);
    edges.unite(d.edge_at(c, 0), d.edge_at(c, smoothing_partner(0, in_s)));
    edges.unite(d.edge_at(c, 2), d.edge_at(c, smoothing_partner(2, in_s)));
    if (in_s) {
      regions.unite(fs.face_at(c, 0), fs.face_at(c, 2));
    } else {
      regions.unite(fs.face_at(c, 1), fs.face_at(c, 3));
    }
  }

  Resolution r;
  r.subset = s;
  // Edges are scanned in increasing order, so circles appear by least edge.
  std::vector<int> circle_of_root(m, -1);
  std::vector<int> provisional(m);
  std::vector<std::vector<int>> groups;
  for (int e = 0; e < m; ++e) {
    int root = edges.find(e);
    if (circle_of_root[root] < 0) {
      circle_of_root[root] = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    provisional[e] = circle_of_root[root];
    groups[provisional[e]].push_back(e);
  }
  const int marked = provisional[d.marked_edge()];
  std::vector<int> order(groups.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_partition(order.begin(), order.end(), [&](int g) { return g == marked; });
  std::vector<int> final_index(groups.size());
  for (std::size_t i = 0; i < order.size(); ++i) final_index[order[i]] = static_cast<int>(i);

  r.circles.resize(groups.size());
  r.circle_of_edge.resize(m);
  for (int e = 0; e < m; ++e) r.circle_of_edge[e] = final_index[provisional[e]];
  for (std::size_t g = 0; g < groups.size(); ++g) {
    r.circles[final_index[g]].edges = std::move(groups[g]);
  }
  r.circles[0].marked = true;

  // Regions and circles form a tree; root it at the region left of the
  // marked edge.  A circle's interior is everything below it.
  const int nf = fs.n_faces();
  std::vector<int> region_index(nf, -1);
  std::vector<std::uint64_t> region_faces;
  for (int f = 0; f < nf; ++f) {
    int root = regions.find(f);
    if (region_index[root] < 0) {
      region_index[root] = static_cast<int>(region_faces.size());
      region_faces.push_back(0);
    }
    region_faces[region_index[root]] |= std::uint64_t{1} << f;
  }
  auto region_of_face = [&](int f) { return region_index[regions.find(f)]; };
  const int nc = r.n_circles();
  std::vector<std::array<int, 2>> sides(nc);
  std::vector<std::vector<int>> circles_at(region_faces.size());
  for (int i = 0; i < nc; ++i) {
    int e = r.circles[i].edges.front();
    sides[i] = {region_of_face(left_face(d, fs, e)), region_of_face(right_face(d, fs, e))};
    circles_at[sides[i][0]].push_back(i);
    circles_at[sides[i][1]].push_back(i);
  }
  const int root = region_of_face(left_face(d, fs, d.marked_edge()));
  std::vector<int> child_region(nc, -1);
  std::vector<char> seen(region_faces.size(), 0);
  std::vector<int> bfs{root};
  std::vector<int> parent_circle(region_faces.size(), -1);
  seen[root] = 1;
  for (std::size_t k = 0; k < bfs.size(); ++k) {
    int reg = bfs[k];
    for (int i : circles_at[reg]) {
      if (i == parent_circle[reg]) continue;
      int other = sides[i][0] == reg ? sides[i][1] : sides[i][0];
      if (seen[other]) continue;
      seen[other] = 1;
      child_region[i] = other;
      parent_circle[other] = i;
      bfs.push_back(other);
    }
  }
  std::vector<std::uint64_t> below(region_faces);
  for (std::size_t k = bfs.size(); k-- > 1;) {
    int reg = bfs[k];
    int i = parent_circle[reg];
    int up = sides[i][0] == reg ? sides[i][1] : sides[i][0];
    below[up] |= below[reg];
  }
  for (int i = 1; i < nc; ++i) r.circles[i].interior = below[child_region[i]];
  return r;
}

int q_grading(const Resolution& r, std::uint64_t plus) {
  int unmarked = r.n_circles() - 1;
  int np = std::popcount(plus);
  return np - (unmarked - np) + r.subset.size();
}

int delta_unshifted(const Resolution& r, std::uint64_t plus) {
  return 2 * r.subset.size() - q_grading(r, plus);
}

namespace {

// How the circles of S map to those of S + c.
struct Transition {
  bool merge = false;
  int a = -1;  // circles of the source touching c (a, b on a merge)
  int b = -1;
  int x = -1;  // circles of the target touching c (x, y on a split)
  int y = -1;
  std::vector<int> image;  // source circle -> target circle, for untouched circles
};

Transition transition(const LinkDiagram& d, const Resolution& from, const Resolution& to, int c) {
  Transition t;
  std::vector<int> src;
  std::vector<int> dst;
  for (int p = 0; p < 4; ++p) {
    int e = d.edge_at(c, p);
    int i = from.circle_of_edge[e];
    int j = to.circle_of_edge[e];
    if (std::find(src.begin(), src.end(), i) == src.end()) src.push_back(i);
    if (std::find(dst.begin(), dst.end(), j) == dst.end()) dst.push_back(j);
  }
  t.merge = src.size() == 2;
  t.a = src[0];
  t.b = src.size() > 1 ? src[1] : -1;
  t.x = dst[0];
  t.y = dst.size() > 1 ? dst[1] : -1;
  if (src.size() + dst.size() != 3) throw Error(ErrorKind::NonSpherical, "crossing change is not a merge or split");
  t.image.assign(from.n_circles(), -1);
  for (int i = 0; i < from.n_circles(); ++i) {
    if (i == t.a || i == t.b) continue;
    t.image[i] = to.circle_of_edge[from.circles[i].edges.front()];
  }
  return t;
}

inline bool has_plus(std::uint64_t plus, int circle) { return circle > 0 && ((plus >> (circle - 1)) & 1); }
inline std::uint64_t bit_of(int circle) { return circle > 0 ? std::uint64_t{1} << (circle - 1) : 0; }

// Appends target sign masks of d_KH applied to `plus`.
void apply_khovanov(const Transition& t, std::uint64_t plus, std::vector<std::uint64_t>& out) {
  std::uint64_t base = 0;
  for (std::size_t i = 1; i < t.image.size(); ++i) {
    if (t.image[i] >= 0 && has_plus(plus, static_cast<int>(i))) base |= bit_of(t.image[i]);
  }
  if (t.merge) {
    const int c = t.x;
    if (t.a == 0 || t.b == 0) {
      int other = t.a == 0 ? t.b : t.a;
      if (has_plus(plus, other)) out.push_back(base);  // v+ (x) v0 -> v0
      return;
    }
    bool pa = has_plus(plus, t.a);
    bool pb = has_plus(plus, t.b);
    if (pa && pb) {
      out.push_back(base | bit_of(c));
    } else if (pa || pb) {
      out.push_back(base);
    }
    return;
  }
  if (t.a == 0) {
    out.push_back(base);  // v0 -> v0 (x) v-
    return;
  }
  if (has_plus(plus, t.a)) {
    out.push_back(base | bit_of(t.x));
    out.push_back(base | bit_of(t.y));
  } else {
    out.push_back(base);
  }
}

template <class Ops, class AreaFn>
GradedComplex<Ops> build_cube(const LinkDiagram& d, const FaceSet& fs, Ops ops, bool with_koszul,
                              bool quantum_blocks, AreaFn area, const CubeOptions& opt) {
  const int n = d.n_crossings();
  if (n > opt.threshold) {
    throw Error(ErrorKind::TooLarge, std::to_string(n) + " crossings exceeds the cube threshold of " +
                                         std::to_string(opt.threshold));
  }
  const int n_plus = crossing_signs(d).n_plus;
  const std::uint64_t n_subsets = std::uint64_t{1} << n;
  std::vector<Resolution> res(n_subsets);
  parallel_for(static_cast<int>(n_subsets), opt.jobs,
               [&](int s) { res[s] = resolve(d, fs, CrossingSet(static_cast<std::uint64_t>(s))); });
  std::vector<std::int64_t> offset(n_subsets + 1, 0);
  for (std::uint64_t s = 0; s < n_subsets; ++s) {
    offset[s + 1] = offset[s] + (std::int64_t{1} << (res[s].n_circles() - 1));
  }
  if (offset[n_subsets] > (std::int64_t{1} << 30)) throw Error(ErrorKind::TooLarge, "cube has too many states");

  GradedComplex<Ops> cx(ops);
  for (std::uint64_t s = 0; s < n_subsets; ++s) {
    const auto& r = res[s];
    const std::uint64_t states = std::uint64_t{1} << (r.n_circles() - 1);
    for (std::uint64_t plus = 0; plus < states; ++plus) {
      cx.add_generator(delta_unshifted(r, plus) - n_plus, quantum_blocks ? q_grading(r, plus) : 0);
    }
  }

  std::vector<std::uint64_t> targets;
  for (std::uint64_t s = 0; s < n_subsets; ++s) {
    const auto& r = res[s];
    const std::uint64_t states = std::uint64_t{1} << (r.n_circles() - 1);
    for (int c = 0; c < n; ++c) {
      if ((s >> c) & 1) continue;
      const std::uint64_t s2 = s | (std::uint64_t{1} << c);
      Transition t = transition(d, r, res[s2], c);
      for (std::uint64_t plus = 0; plus < states; ++plus) {
        targets.clear();
        apply_khovanov(t, plus, targets);
        for (auto tp : targets) {
          cx.add_entry(static_cast<int>(offset[s] + plus), static_cast<int>(offset[s2] + tp), ops.one());
        }
      }
    }
    if (!with_koszul) continue;
    for (int i = 1; i < r.n_circles(); ++i) {
      auto coeff = area(r.circles[i].interior);
      for (std::uint64_t plus = 0; plus < states; ++plus) {
        if (!has_plus(plus, i)) continue;
        cx.add_entry(static_cast<int>(offset[s] + plus), static_cast<int>(offset[s] + (plus ^ bit_of(i))), coeff);
      }
    }
  }
  return cx;
}

}  // namespace

std::vector<CubeTerm> khovanov_component(const LinkDiagram& d, const FaceSet& fs, const CubeState& state,
                                         int c) {
  if (state.subset.contains(c)) throw Error(ErrorKind::MalformedToken, "crossing already resolved by 1");
  Resolution from = resolve(d, fs, state.subset);
  Resolution to = resolve(d, fs, state.subset.with(c));
  std::vector<std::uint64_t> masks;
  apply_khovanov(transition(d, from, to, c), state.plus, masks);
  std::vector<CubeTerm> out;
  for (auto m : masks) out.push_back({{to.subset, m}, MultiPoly::one()});
  return out;
}

std::vector<CubeTerm> koszul_component(const LinkDiagram& d, const FaceSet& fs, const CubeState& state) {
  Resolution r = resolve(d, fs, state.subset);
  std::vector<CubeTerm> out;
  for (int i = 1; i < r.n_circles(); ++i) {
    if (has_plus(state.plus, i)) {
      out.push_back({{state.subset, state.plus ^ bit_of(i)}, area_of(r.circles[i].interior)});
    }
  }
  return out;
}

GradedComplex<PolyOps> build_twisted_complex_symbolic(const LinkDiagram& d, const CubeOptions& opt) {
  FaceSet fs = colored_faces(d);
  return build_cube(d, fs, PolyOps{}, true, false, [](std::uint64_t mask) { return area_of(mask); }, opt);
}

GradedComplex<Gf2kOps> build_twisted_complex_evaluated(const LinkDiagram& d, const Gf2kField& f,
                                                       const EvaluationPoint& pt, const CubeOptions& opt) {
  FaceSet fs = colored_faces(d);
  auto area = [&](std::uint64_t mask) {
    std::uint32_t sum = 0;
    for (std::uint64_t m = mask; m; m &= m - 1) sum ^= pt[std::countr_zero(m) + 1];
    return sum;
  };
  return build_cube(d, fs, Gf2kOps{&f}, true, false, area, opt);
}

Poincare twisted_homology(const LinkDiagram& d, const TwistedOptions& opt) {
  if (d.is_split()) return {};
  const Gf2kField& f = gf2k_field(opt.field_bits);
  const int nvars = colored_faces(d).n_faces();
  std::mt19937_64 seeds(opt.seed);
  std::map<BlockKey, int> best;
  std::map<BlockKey, int> dims;
  for (int t = 0; t < std::max(1, opt.trials); ++t) {
    EvaluationPoint pt = random_point(seeds(), opt.field_bits, nvars);
    auto cx = build_twisted_complex_evaluated(d, f, pt, opt.cube);
    if (t == 0) dims = cx.block_dims();
    for (const auto& [k, r] : differential_ranks(cx, opt.cube.jobs)) best[k] = std::max(best[k], r);
  }
  return collapse(block_betti(dims, best));
}

Poincare reduced_khovanov_delta(const LinkDiagram& d, const CubeOptions& opt) {
  FaceSet fs = colored_faces(d);
  auto cx = build_cube(d, fs, Gf2Ops{}, false, true, [](std::uint64_t) { return std::uint8_t{0}; }, opt);
  return betti(cx, opt.jobs);
}

}  // namespace ttkh
