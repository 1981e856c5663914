#include "ehrkit/rank.hpp"

#include "ehrkit/lattice.hpp"

#include <algorithm>
#include <unordered_map>

namespace ehrkit {

namespace {

void gcd_reduce(SparseCol& c) {
  Int g = 0;
  for (const auto& e : c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.val.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& e : c) e.val /= g;
}

// piv_val * dst - dst_val * pivot, both sorted by row; result sorted,
// zeros dropped, gcd-reduced. Fraction-free: stays over Z throughout.
SparseCol eliminate(const SparseCol& dst, const Int& dst_val, const SparseCol& pivot,
                    const Int& piv_val) {
  SparseCol out;
  out.reserve(dst.size() + pivot.size());
  size_t i = 0, j = 0;
  while (i < dst.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < dst.size() && dst[i].row < pivot[j].row)) {
      out.push_back({dst[i].row, piv_val * dst[i].val});
      ++i;
    } else if (i == dst.size() || pivot[j].row < dst[i].row) {
      out.push_back({pivot[j].row, -dst_val * pivot[j].val});
      ++j;
    } else {
      Int v = piv_val * dst[i].val - dst_val * pivot[j].val;
      if (v != 0) out.push_back({dst[i].row, std::move(v)});
      ++i;
      ++j;
    }
  }
  gcd_reduce(out);
  return out;
}

struct Pivot {
  SparseCol col;  // sorted by row, fully reduced against earlier pivots
  size_t row;
  Int val;  // entry of col at the pivot row
};

}  // namespace

size_t sparse_rank(const std::vector<SparseCol>& cols) {
  // process sparsest columns first; pivot on small entries to limit swell
  std::vector<size_t> order(cols.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return cols[a].size() < cols[b].size(); });

  // A pivot column created at step k is reduced against pivots 0..k-1, so
  // eliminating against the oldest pivot present in the column only ever
  // introduces rows of strictly younger pivots; each pivot fires at most
  // once per column.
  std::vector<Pivot> pivots;
  std::unordered_map<size_t, size_t> pivot_of_row;  // row -> index into pivots
  size_t rank = 0;
  for (size_t idx : order) {
    SparseCol c = cols[idx];
    gcd_reduce(c);
    for (;;) {
      size_t oldest = pivots.size();
      const Int* val = nullptr;
      for (const SparseEntry& e : c) {
        auto it = pivot_of_row.find(e.row);
        if (it != pivot_of_row.end() && it->second < oldest) {
          oldest = it->second;
          val = &e.val;
        }
      }
      if (!val) break;
      const Pivot& p = pivots[oldest];
      c = eliminate(c, *val, p.col, p.val);
    }
    if (c.empty()) continue;
    size_t best = 0;
    Int best_abs;
    mpz_abs(best_abs.get_mpz_t(), c[0].val.get_mpz_t());
    for (size_t k = 1; k < c.size() && best_abs != 1; ++k) {
      Int a;
      mpz_abs(a.get_mpz_t(), c[k].val.get_mpz_t());
      if (a < best_abs) {
        best_abs = a;
        best = k;
      }
    }
    size_t prow = c[best].row;
    Int pval = c[best].val;
    pivot_of_row.emplace(prow, pivots.size());
    pivots.push_back(Pivot{std::move(c), prow, std::move(pval)});
    ++rank;
  }
  return rank;
}

size_t dense_rank(const IntMatrix& m) {
  std::vector<SparseCol> cols;
  cols.reserve(m.cols());
  for (size_t j = 0; j < m.cols(); ++j) {
    SparseCol c;
    for (size_t i = 0; i < m.rows(); ++i)
      if (m.at(i, j) != 0) c.push_back({i, m.at(i, j)});
    cols.push_back(std::move(c));
  }
  return sparse_rank(cols);
}

std::optional<std::vector<Rat>> solve_rational(const IntMatrix& a, const std::vector<Rat>& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve_rational: shape mismatch");
  const size_t m = a.rows(), n = a.cols();
  std::vector<std::vector<Rat>> w(m, std::vector<Rat>(n + 1));
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) w[i][j] = Rat(a.at(i, j));
    w[i][n] = b[i];
    for (auto& q : w[i]) q.canonicalize();
  }
  std::vector<size_t> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < n && r < m; ++c) {
    size_t p = r;
    while (p < m && w[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(w[p], w[r]);
    Rat inv = w[r][c];
    for (size_t j = c; j <= n; ++j) w[r][j] /= inv;
    for (size_t i = 0; i < m; ++i) {
      if (i == r || w[i][c] == 0) continue;
      Rat f = w[i][c];
      for (size_t j = c; j <= n; ++j) w[i][j] -= f * w[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (size_t i = r; i < m; ++i)
    if (w[i][n] != 0) return std::nullopt;
  std::vector<Rat> x(n, Rat(0));
  for (size_t k = 0; k < pivot_col.size(); ++k) x[pivot_col[k]] = w[k][n];
  return x;
}

}  // namespace ehrkit
