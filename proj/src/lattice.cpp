#include "ehrkit/lattice.hpp"

#include <sstream>

namespace ehrkit {

IntMatrix::IntMatrix(size_t rows, size_t cols, std::vector<long> entries)
    : rows_(rows), cols_(cols), e_(rows * cols) {
  if (entries.size() != rows * cols)
    throw std::invalid_argument("IntMatrix: entry count mismatch");
  for (size_t i = 0; i < entries.size(); ++i) e_[i] = entries[i];
}

IntMatrix IntMatrix::identity(size_t n) {
  IntMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows) {
  if (rows.empty()) return IntMatrix(0, 0);
  IntMatrix m(rows.size(), rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_)
      throw std::invalid_argument("from_rows: ragged rows");
    for (size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntVec IntMatrix::row(size_t i) const {
  IntVec r(cols_);
  for (size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

IntVec IntMatrix::col(size_t j) const {
  IntVec c(rows_);
  for (size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::mul(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("mul: shape mismatch");
  IntMatrix r(rows_, other.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (size_t j = 0; j < other.cols_; ++j) r.at(i, j) += a * other.at(k, j);
    }
  return r;
}

IntVec IntMatrix::mul_vec(const IntVec& x) const {
  if (cols_ != x.size()) throw std::invalid_argument("mul_vec: shape mismatch");
  IntVec r(rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * x[j];
  return r;
}

void IntMatrix::swap_rows(size_t i, size_t j) {
  if (i == j) return;
  for (size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(size_t i, size_t j) {
  if (i == j) return;
  for (size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::negate_row(size_t i) {
  for (size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::negate_col(size_t j) {
  for (size_t r = 0; r < rows_; ++r) at(r, j) = -at(r, j);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
  }
  os << "]";
  return os.str();
}

namespace {

// Unimodular column combination sending (a[row][ci], a[row][cj]) to (g, 0).
// When the pivot already divides the other entry this is a plain
// elimination step, so the pivot strictly shrinks in every other case and
// the normal-form loops terminate.
void gcd_combine_cols(IntMatrix& a, IntMatrix& u, size_t row, size_t ci, size_t cj) {
  Int x = a.at(row, ci), y = a.at(row, cj);
  if (y % x == 0) {
    Int q = y / x;
    for (IntMatrix* m : {&a, &u})
      for (size_t r = 0; r < m->rows(); ++r) m->at(r, cj) -= q * m->at(r, ci);
    return;
  }
  Int g, p, q;
  mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  Int xg = x / g, yg = y / g;
  for (IntMatrix* m : {&a, &u}) {
    for (size_t r = 0; r < m->rows(); ++r) {
      Int vi = m->at(r, ci), vj = m->at(r, cj);
      m->at(r, ci) = p * vi + q * vj;
      m->at(r, cj) = xg * vj - yg * vi;
    }
  }
}

void gcd_combine_rows(IntMatrix& a, IntMatrix& u, size_t col, size_t ri, size_t rj) {
  Int x = a.at(ri, col), y = a.at(rj, col);
  if (y % x == 0) {
    Int q = y / x;
    for (IntMatrix* m : {&a, &u})
      for (size_t c = 0; c < m->cols(); ++c) m->at(rj, c) -= q * m->at(ri, c);
    return;
  }
  Int g, p, q;
  mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  Int xg = x / g, yg = y / g;
  for (IntMatrix* m : {&a, &u}) {
    for (size_t c = 0; c < m->cols(); ++c) {
      Int vi = m->at(ri, c), vj = m->at(rj, c);
      m->at(ri, c) = p * vi + q * vj;
      m->at(rj, c) = xg * vj - yg * vi;
    }
  }
}

void add_col_multiple(IntMatrix& a, IntMatrix& u, size_t dst, size_t src, const Int& k) {
  for (IntMatrix* m : {&a, &u})
    for (size_t r = 0; r < m->rows(); ++r) m->at(r, dst) += k * m->at(r, src);
}

}  // namespace

HnfResult hermite_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(m.cols());
  size_t col = 0;
  for (size_t r = 0; r < a.rows() && col < a.cols(); ++r) {
    // pick a pivot column for row r among columns >= col
    size_t pc = col;
    while (pc < a.cols() && a.at(r, pc) == 0) ++pc;
    if (pc == a.cols()) continue;
    a.swap_cols(col, pc);
    u.swap_cols(col, pc);
    for (size_t j = col + 1; j < a.cols(); ++j)
      if (a.at(r, j) != 0) gcd_combine_cols(a, u, r, col, j);
    if (a.at(r, col) < 0) {
      a.negate_col(col);
      u.negate_col(col);
    }
    for (size_t j = 0; j < col; ++j) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), a.at(r, j).get_mpz_t(), a.at(r, col).get_mpz_t());
      if (q != 0) add_col_multiple(a, u, j, col, -q);
    }
    ++col;
  }
  return {a, u};
}

SnfResult smith_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix left = IntMatrix::identity(m.rows());
  IntMatrix right = IntMatrix::identity(m.cols());
  size_t n = std::min(m.rows(), m.cols());

  for (size_t t = 0; t < n; ++t) {
    // locate a pivot of smallest magnitude in the trailing submatrix
    size_t pi = t, pj = t;
    bool found = false;
    Int best;
    for (size_t i = t; i < a.rows(); ++i)
      for (size_t j = t; j < a.cols(); ++j) {
        if (a.at(i, j) == 0) continue;
        Int v;
        mpz_abs(v.get_mpz_t(), a.at(i, j).get_mpz_t());
        if (!found || v < best) {
          best = v;
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    a.swap_rows(t, pi);
    left.swap_rows(t, pi);
    a.swap_cols(t, pj);
    right.swap_cols(t, pj);

    for (;;) {
      for (size_t i = t + 1; i < a.rows(); ++i)
        if (a.at(i, t) != 0) gcd_combine_rows(a, left, t, t, i);
      bool row_clear = true;
      for (size_t j = t + 1; j < a.cols(); ++j)
        if (a.at(t, j) != 0) {
          gcd_combine_cols(a, right, t, t, j);
          row_clear = false;
        }
      // column elimination may have reintroduced entries below the pivot
      bool col_clear = true;
      for (size_t i = t + 1; i < a.rows(); ++i)
        if (a.at(i, t) != 0) col_clear = false;
      if (row_clear && col_clear) {
        // pivot must divide the rest of the submatrix
        bool divides = true;
        for (size_t i = t + 1; i < a.rows() && divides; ++i)
          for (size_t j = t + 1; j < a.cols() && divides; ++j)
            if (a.at(i, j) % a.at(t, t) != 0) {
              add_col_multiple(a, right, t, j, Int(1));
              divides = false;
            }
        if (divides) break;
      }
    }
    if (a.at(t, t) < 0) {
      a.negate_row(t);
      left.negate_row(t);
    }
  }

  SnfResult res;
  res.diagonal.resize(n);
  for (size_t t = 0; t < n; ++t) {
    res.diagonal[t] = a.at(t, t);
    if (res.diagonal[t] != 0) ++res.rank;
  }
  res.left = left;
  res.right = right;
  return res;
}

IntMatrix kernel_basis(const IntMatrix& m) {
  if (m.rows() == 0) return IntMatrix::identity(m.cols());
  HnfResult hr = hermite_normal_form(m);
  size_t nz = 0;  // count nonzero columns of h
  for (size_t j = 0; j < hr.h.cols(); ++j) {
    bool zero = true;
    for (size_t i = 0; i < hr.h.rows(); ++i)
      if (hr.h.at(i, j) != 0) {
        zero = false;
        break;
      }
    if (!zero) ++nz;
  }
  IntMatrix k(m.cols(), m.cols() - nz);
  for (size_t j = nz; j < m.cols(); ++j)
    for (size_t i = 0; i < m.cols(); ++i) k.at(i, j - nz) = hr.u.at(i, j);
  return k;
}

size_t integer_rank(const IntMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  HnfResult hr = hermite_normal_form(m);
  size_t nz = 0;
  for (size_t j = 0; j < hr.h.cols(); ++j)
    for (size_t i = 0; i < hr.h.rows(); ++i)
      if (hr.h.at(i, j) != 0) {
        ++nz;
        break;
      }
  return nz;
}

std::optional<Int> sublattice_index(const IntMatrix& generators, size_t ambient_rank) {
  if (generators.cols() != ambient_rank)
    throw std::invalid_argument("sublattice_index: column count != ambient rank");
  SnfResult s = smith_normal_form(generators);
  if (s.rank < ambient_rank) return std::nullopt;
  Int idx = 1;
  for (const Int& d : s.diagonal)
    if (d != 0) idx *= d;
  return idx;
}

IntMatrix lattice_basis(const IntMatrix& generators) {
  // row-style HNF via the column algorithm on the transpose
  HnfResult hr = hermite_normal_form(generators.transposed());
  IntMatrix ht = hr.h.transposed();
  size_t r = 0;
  for (size_t i = 0; i < ht.rows(); ++i)
    if (!is_zero_vec(ht.row(i))) ++r;
  IntMatrix basis(r, ht.cols());
  size_t k = 0;
  for (size_t i = 0; i < ht.rows(); ++i) {
    IntVec row = ht.row(i);
    if (is_zero_vec(row)) continue;
    for (size_t j = 0; j < ht.cols(); ++j) basis.at(k, j) = row[j];
    ++k;
  }
  return basis;
}

std::optional<IntVec> coordinates_in_basis(const IntMatrix& basis, const IntVec& point) {
  if (basis.cols() != point.size())
    throw std::invalid_argument("coordinates_in_basis: dimension mismatch");
  const size_t k = basis.rows();
  IntMatrix bt = basis.transposed();  // n x k
  HnfResult hr = hermite_normal_form(bt);
  // h has k pivot columns (rows of basis are independent); solve h*y = point
  IntVec y(k);
  std::vector<size_t> pivot_row(k);
  {
    size_t r = 0;
    for (size_t j = 0; j < k; ++j) {
      while (r < hr.h.rows() && hr.h.at(r, j) == 0) ++r;
      if (r == hr.h.rows()) throw std::invalid_argument("coordinates_in_basis: dependent rows");
      pivot_row[j] = r;
    }
  }
  IntVec residual = point;
  for (size_t j = 0; j < k; ++j) {
    const Int& piv = hr.h.at(pivot_row[j], j);
    Int q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), residual[pivot_row[j]].get_mpz_t(),
                piv.get_mpz_t());
    if (rem != 0) return std::nullopt;
    y[j] = q;
    for (size_t i = 0; i < residual.size(); ++i) residual[i] -= q * hr.h.at(i, j);
  }
  if (!is_zero_vec(residual)) return std::nullopt;
  // x = u * (y, 0...) using the first k columns of u
  IntVec x(k);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) x[i] += hr.u.at(i, j) * y[j];
  return x;
}

Int bareiss_determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
  const size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        Int v = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

}  // namespace ehrkit
