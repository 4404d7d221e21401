#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "ttkh/errors.hpp"
#include "ttkh/gf2algebra.hpp"

namespace ttkh {

// Coefficient fields.  Every field here has characteristic 2, so subtraction
// is addition.

struct Gf2Ops {
  using Elem = std::uint8_t;
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  Elem add(Elem a, Elem b) const { return a ^ b; }
  Elem mul(Elem a, Elem b) const { return a & b; }
  Elem inv(Elem a) const {
    if (a == 0) throw Error(ErrorKind::NotInvertible, "zero in GF(2)");
    return 1;
  }
};

struct Gf2kOps {
  using Elem = std::uint32_t;
  const Gf2kField* field = nullptr;
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  Elem add(Elem a, Elem b) const { return a ^ b; }
  Elem mul(Elem a, Elem b) const { return field->mul(a, b); }
  Elem inv(Elem a) const {
    if (a == 0) throw Error(ErrorKind::NotInvertible, "zero in GF(2^k)");
    return field->inv(a);
  }
};

struct RationalOps {
  using Elem = RationalFn;
  Elem zero() const { return RationalFn::zero(); }
  Elem one() const { return RationalFn::one(); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (a.is_zero()) throw Error(ErrorKind::NotInvertible, "zero rational function");
    return a.inv();
  }
};

// Polynomial ring; enough for checking that a differential squares to zero.
struct PolyOps {
  using Elem = MultiPoly;
  Elem zero() const { return MultiPoly::zero(); }
  Elem one() const { return MultiPoly::one(); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
};

// Generators carry a delta grading and an optional secondary grading that
// the differential also preserves (e.g. the quantum grading); blocks are
// keyed by both.
struct BlockKey {
  int delta = 0;
  int secondary = 0;
  friend auto operator<=>(const BlockKey&, const BlockKey&) = default;
};

// delta -> rank
using Poincare = std::map<int, int>;

std::string poincare_text(const Poincare& p);
std::string poincare_json(const Poincare& p);
// Reflects delta -> -delta.
Poincare reflect(const Poincare& p);
Poincare product(const Poincare& a, const Poincare& b);
int total_rank(const Poincare& p);

template <class Ops>
class GradedComplex {
 public:
  using Elem = typename Ops::Elem;
  using Column = std::vector<std::pair<int, Elem>>;

  explicit GradedComplex(Ops ops = {}, int degree = 2) : ops_(std::move(ops)), degree_(degree) {}

  const Ops& ops() const { return ops_; }
  int degree() const { return degree_; }
  int size() const { return static_cast<int>(delta_.size()); }
  int delta(int g) const { return delta_[g]; }
  int secondary(int g) const { return secondary_[g]; }
  BlockKey block(int g) const { return {delta_[g], secondary_[g]}; }
  const std::string& label(int g) const { return label_[g]; }
  // Entries <d g, target>.
  const Column& column(int g) const { return columns_[g]; }

  int add_generator(int delta, int secondary = 0, std::string label = {}) {
    delta_.push_back(delta);
    secondary_.push_back(secondary);
    label_.push_back(std::move(label));
    columns_.emplace_back();
    return size() - 1;
  }

  // Accumulates coeff into <d src, dst>.
  void add_entry(int src, int dst, const Elem& coeff) {
    if (ops_.is_zero(coeff)) return;
    if (delta_[dst] != delta_[src] + degree_ || secondary_[dst] != secondary_[src]) {
      throw Error(ErrorKind::MalformedToken, "differential entry has the wrong degree");
    }
    auto& col = columns_[src];
    for (std::size_t i = 0; i < col.size(); ++i) {
      if (col[i].first == dst) {
        col[i].second = ops_.add(col[i].second, coeff);
        if (ops_.is_zero(col[i].second)) col.erase(col.begin() + static_cast<std::ptrdiff_t>(i));
        return;
      }
    }
    col.emplace_back(dst, coeff);
  }

  // Entry lookup; zero when absent.
  Elem entry(int src, int dst) const {
    for (const auto& [t, c] : columns_[src]) {
      if (t == dst) return c;
    }
    return ops_.zero();
  }

  std::map<BlockKey, int> block_dims() const {
    std::map<BlockKey, int> dims;
    for (int g = 0; g < size(); ++g) ++dims[block(g)];
    return dims;
  }

 private:
  Ops ops_;
  int degree_;
  std::vector<int> delta_;
  std::vector<int> secondary_;
  std::vector<std::string> label_;
  std::vector<Column> columns_;
};

struct Violation {
  int source = 0;
  int target = 0;
};

// Every entry of d o d must vanish.
template <class Ops>
std::optional<Violation> verify_d_squared(const GradedComplex<Ops>& c) {
  const auto& ops = c.ops();
  for (int g = 0; g < c.size(); ++g) {
    std::map<int, typename Ops::Elem> acc;
    for (const auto& [mid, a] : c.column(g)) {
      for (const auto& [dst, b] : c.column(mid)) {
        auto it = acc.find(dst);
        auto term = ops.mul(b, a);
        if (it == acc.end()) {
          acc.emplace(dst, term);
        } else {
          it->second = ops.add(it->second, term);
        }
      }
    }
    for (const auto& [dst, v] : acc) {
      if (!ops.is_zero(v)) return Violation{g, dst};
    }
  }
  return std::nullopt;
}

// Sparse matrix as columns of (row, value), rows in [0, n_rows).
template <class Elem>
struct SparseMatrix {
  int n_rows = 0;
  std::vector<std::vector<std::pair<int, Elem>>> columns;
};

// Rank by sparse column elimination.  Columns are taken sparsest first; the
// pivot row of each column is the one with the fewest structural nonzeros,
// and reduction applies stored pivots in insertion order, which terminates
// because each stored column vanishes on all earlier pivot rows.
template <class Ops>
int matrix_rank(const Ops& ops, const SparseMatrix<typename Ops::Elem>& m) {
  using Elem = typename Ops::Elem;
  const int n_rows = m.n_rows;
  if (n_rows == 0) return 0;
  std::vector<int> row_count(n_rows, 0);
  for (const auto& col : m.columns) {
    for (const auto& [r, v] : col) ++row_count[r];
  }
  std::vector<int> order(m.columns.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return m.columns[a].size() < m.columns[b].size(); });

  std::vector<int> pivot_of_row(n_rows, -1);
  std::vector<std::vector<std::pair<int, Elem>>> pivots;
  std::vector<Elem> dense(n_rows, ops.zero());
  std::vector<char> present(n_rows, 0);
  std::vector<int> touched;

  for (int ci : order) {
    touched.clear();
    std::priority_queue<int, std::vector<int>, std::greater<>> heap;
    auto touch = [&](int r, const Elem& v) {
      if (!present[r]) {
        present[r] = 1;
        dense[r] = v;
        touched.push_back(r);
        if (pivot_of_row[r] >= 0) heap.push(pivot_of_row[r]);
      } else {
        dense[r] = ops.add(dense[r], v);
      }
    };
    for (const auto& [r, v] : m.columns[ci]) touch(r, v);
    while (!heap.empty()) {
      int p = heap.top();
      heap.pop();
      while (!heap.empty() && heap.top() == p) heap.pop();
      const auto& pcol = pivots[p];
      int prow = pcol.front().first;  // stored with the pivot entry first, normalised to 1
      Elem f = dense[prow];
      if (ops.is_zero(f)) continue;
      for (const auto& [r, v] : pcol) touch(r, ops.mul(f, v));
    }
    int best = -1;
    for (int r : touched) {
      if (ops.is_zero(dense[r]) || pivot_of_row[r] >= 0) continue;
      if (best < 0 || row_count[r] < row_count[best]) best = r;
    }
    if (best >= 0) {
      Elem s = ops.inv(dense[best]);
      std::vector<std::pair<int, Elem>> col;
      col.emplace_back(best, ops.one());
      for (int r : touched) {
        if (r != best && !ops.is_zero(dense[r])) col.emplace_back(r, ops.mul(s, dense[r]));
      }
      pivot_of_row[best] = static_cast<int>(pivots.size());
      pivots.push_back(std::move(col));
    }
    for (int r : touched) {
      present[r] = 0;
      dense[r] = ops.zero();
    }
  }
  return static_cast<int>(pivots.size());
}

// Exact rank over the fraction field: rows are cleared of denominators and
// reduced by fraction-free (Bareiss) elimination over the polynomial ring.
// TooLarge once an intermediate minor outgrows a fixed term budget.
int matrix_rank(const RationalOps& ops, const SparseMatrix<RationalFn>& m);

// The block of d leaving `key`, as a matrix into block {delta + degree, secondary}.
template <class Ops>
SparseMatrix<typename Ops::Elem> block_matrix(const GradedComplex<Ops>& c, BlockKey key) {
  SparseMatrix<typename Ops::Elem> m;
  std::map<int, int> row_index;
  BlockKey target{key.delta + c.degree(), key.secondary};
  for (int g = 0; g < c.size(); ++g) {
    if (c.block(g) == target) row_index.emplace(g, static_cast<int>(row_index.size()));
  }
  m.n_rows = static_cast<int>(row_index.size());
  for (int g = 0; g < c.size(); ++g) {
    if (c.block(g) != key) continue;
    std::vector<std::pair<int, typename Ops::Elem>> col;
    for (const auto& [dst, v] : c.column(g)) col.emplace_back(row_index.at(dst), v);
    m.columns.push_back(std::move(col));
  }
  return m;
}

// Runs f(i) for i in [0, n) on up to `jobs` threads.
void parallel_for(int n, int jobs, const std::function<void(int)>& f);

// Rank of the differential leaving each block.
template <class Ops>
std::map<BlockKey, int> differential_ranks(const GradedComplex<Ops>& c, int jobs = 1) {
  auto dims = c.block_dims();
  std::vector<BlockKey> keys;
  for (const auto& [k, n] : dims) {
    if (dims.count({k.delta + c.degree(), k.secondary})) keys.push_back(k);
  }
  // One pass to bucket generators keeps block extraction linear.
  std::map<BlockKey, std::vector<int>> members;
  for (int g = 0; g < c.size(); ++g) members[c.block(g)].push_back(g);
  std::vector<int> ranks(keys.size(), 0);
  parallel_for(static_cast<int>(keys.size()), jobs, [&](int i) {
    const BlockKey key = keys[i];
    const auto& src = members.at(key);
    const auto& dst = members.at({key.delta + c.degree(), key.secondary});
    std::map<int, int> row_index;
    for (int g : dst) row_index.emplace(g, static_cast<int>(row_index.size()));
    SparseMatrix<typename Ops::Elem> m;
    m.n_rows = static_cast<int>(dst.size());
    for (int g : src) {
      std::vector<std::pair<int, typename Ops::Elem>> col;
      for (const auto& [t, v] : c.column(g)) col.emplace_back(row_index.at(t), v);
      m.columns.push_back(std::move(col));
    }
    ranks[i] = matrix_rank(c.ops(), m);
  });
  std::map<BlockKey, int> out;
  for (std::size_t i = 0; i < keys.size(); ++i) out[keys[i]] = ranks[i];
  return out;
}

// Homology ranks per block from block dimensions and outgoing ranks.
std::map<BlockKey, int> block_betti(const std::map<BlockKey, int>& dims,
                                    const std::map<BlockKey, int>& ranks, int degree = 2);
// Ranks forced by d^2 = 0: given lower bounds (from any specialisation),
// rank d_k <= dim C_{k+1} - rank d_{k+1} and rank d_k <= dim C_k - rank d_{k-1}.
// Returns the blocks whose lower bound meets that upper bound.
std::map<BlockKey, int> pinned_ranks(const std::map<BlockKey, int>& dims,
                                     const std::map<BlockKey, int>& lower, int degree = 2);
// Collapses blocks to their delta grading, dropping zeros.
Poincare collapse(const std::map<BlockKey, int>& betti);

template <class Ops>
Poincare betti(const GradedComplex<Ops>& c, int jobs = 1) {
  return collapse(block_betti(c.block_dims(), differential_ranks(c, jobs), c.degree()));
}

// Deformation retract after cancelling the invertible entry <d src, dst>:
// the two generators are removed and every x -> y picks up
// <d x, dst> <d src, dst>^-1 <d src, y>.  Labels and gradings are kept.
template <class Ops>
GradedComplex<Ops> cancel(const GradedComplex<Ops>& c, int src, int dst) {
  const auto& ops = c.ops();
  auto a = c.entry(src, dst);
  if (ops.is_zero(a)) throw Error(ErrorKind::NotInvertible, "cancelled entry is zero");
  auto a_inv = ops.inv(a);
  std::vector<int> new_index(c.size(), -1);
  GradedComplex<Ops> out(ops, c.degree());
  for (int g = 0; g < c.size(); ++g) {
    if (g == src || g == dst) continue;
    new_index[g] = out.add_generator(c.delta(g), c.secondary(g), c.label(g));
  }
  for (int x = 0; x < c.size(); ++x) {
    if (new_index[x] < 0) continue;
    typename Ops::Elem b = ops.zero();
    for (const auto& [t, v] : c.column(x)) {
      if (t == dst) b = v;
      else if (new_index[t] >= 0) out.add_entry(new_index[x], new_index[t], v);
    }
    if (ops.is_zero(b)) continue;
    auto f = ops.mul(b, a_inv);
    for (const auto& [y, e] : c.column(src)) {
      if (new_index[y] >= 0) out.add_entry(new_index[x], new_index[y], ops.mul(f, e));
    }
  }
  return out;
}

}  // namespace ttkh
