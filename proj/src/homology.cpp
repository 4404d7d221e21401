#include "ttkh/homology.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <json.hpp>
#include <mutex>
#include <sstream>

namespace ttkh {

std::string poincare_text(const Poincare& p) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [delta, rank] : p) {
    if (rank == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (rank != 1) out << rank;
    out << "d^" << delta;
  }
  return first ? "0" : out.str();
}

std::string poincare_json(const Poincare& p) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [delta, rank] : p) {
    if (rank != 0) j[std::to_string(delta)] = rank;
  }
  return j.dump();
}

Poincare reflect(const Poincare& p) {
  Poincare out;
  for (const auto& [delta, rank] : p) out[-delta] = rank;
  return out;
}

Poincare product(const Poincare& a, const Poincare& b) {
  Poincare out;
  for (const auto& [da, ra] : a) {
    for (const auto& [db, rb] : b) out[da + db] += ra * rb;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

int total_rank(const Poincare& p) {
  int t = 0;
  for (const auto& [delta, rank] : p) t += rank;
  return t;
}

void parallel_for(int n, int jobs, const std::function<void(int)>& f) {
  if (jobs <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mu;
  for (int t = 0; t < std::min(jobs, n); ++t) {
    pool.emplace_back([&] {
      for (int i = next++; i < n; i = next++) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard lock(failure_mu);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

std::map<BlockKey, int> block_betti(const std::map<BlockKey, int>& dims,
                                    const std::map<BlockKey, int>& ranks, int degree) {
  std::map<BlockKey, int> out;
  auto rank_of = [&](BlockKey k) {
    auto it = ranks.find(k);
    return it == ranks.end() ? 0 : it->second;
  };
  for (const auto& [key, dim] : dims) {
    int h = dim - rank_of(key) - rank_of({key.delta - degree, key.secondary});
    if (h != 0) out[key] = h;
  }
  return out;
}

std::map<BlockKey, int> pinned_ranks(const std::map<BlockKey, int>& dims,
                                     const std::map<BlockKey, int>& lower, int degree) {
  auto get = [](const std::map<BlockKey, int>& m, BlockKey k) {
    auto it = m.find(k);
    return it == m.end() ? 0 : it->second;
  };
  std::map<BlockKey, int> out;
  for (const auto& [key, dim] : dims) {
    BlockKey up{key.delta + degree, key.secondary};
    BlockKey down{key.delta - degree, key.secondary};
    int ub = std::min(dim - get(lower, down), get(dims, up) - get(lower, up));
    int lb = get(lower, key);
    if (lb == ub) out[key] = lb;
  }
  return out;
}

Poincare collapse(const std::map<BlockKey, int>& betti) {
  Poincare out;
  for (const auto& [key, rank] : betti) out[key.delta] += rank;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// Bareiss entries are minors of the cleared matrix; past this size the
// elimination does not finish in reasonable time or memory.
constexpr std::size_t kMaxBareissTerms = 2000;

int matrix_rank(const RationalOps&, const SparseMatrix<RationalFn>& m) {
  const int rows = m.n_rows;
  const int cols = static_cast<int>(m.columns.size());
  if (rows == 0 || cols == 0) return 0;
  // a[r][c], each column scaled by the product of its distinct denominators.
  std::vector<std::vector<MultiPoly>> a(rows, std::vector<MultiPoly>(cols));
  for (int c = 0; c < cols; ++c) {
    std::vector<MultiPoly> dens;
    for (const auto& [r, v] : m.columns[c]) {
      if (std::find(dens.begin(), dens.end(), v.den()) == dens.end()) dens.push_back(v.den());
    }
    for (const auto& [r, v] : m.columns[c]) {
      MultiPoly x = v.num();
      bool used_own = false;
      for (const auto& d : dens) {
        if (!used_own && d == v.den()) {
          used_own = true;
          continue;
        }
        x *= d;
      }
      a[r][c] = a[r][c] + x;
    }
  }
  MultiPoly prev = MultiPoly::one();
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r) {
      if (a[r][c].is_zero()) continue;
      if (piv < 0 || a[r][c].size() < a[piv][c].size()) piv = r;
    }
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    const MultiPoly& p = a[rank][c];
    for (int r = rank + 1; r < rows; ++r) {
      const MultiPoly f = a[r][c];
      for (int j = c + 1; j < cols; ++j) {
        MultiPoly num = p * a[r][j] + f * a[rank][j];
        a[r][j] = num.is_zero() ? num : num.exact_div(prev);
        if (a[r][j].size() > kMaxBareissTerms) {
          throw Error(ErrorKind::TooLarge, "exact rank of a " + std::to_string(rows) + "x" + std::to_string(cols) +
                                               " block exceeds " + std::to_string(kMaxBareissTerms) +
                                               " terms per entry; use evaluated mode");
        }
      }
      a[r][c] = MultiPoly::zero();
    }
    // Entries left of the pivot column in lower rows are zero already.
    prev = p;
    ++rank;
  }
  return rank;
}

}  // namespace ttkh
