#pragma once

// Arbitrary-precision integer linear algebra: Hermite and Smith normal
// forms, integer kernels, lattice bases, membership and sublattice indices.
// Everything here is deterministic; no randomized or modular shortcuts.

#include "ehrkit/inttypes.hpp"

#include <optional>

namespace ehrkit {

class IntMatrix {
public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
  IntMatrix(size_t rows, size_t cols, std::vector<long> entries);

  static IntMatrix identity(size_t n);
  static IntMatrix from_rows(const std::vector<IntVec>& rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Int& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
  const Int& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

  IntVec row(size_t i) const;
  IntVec col(size_t j) const;

  IntMatrix transposed() const;
  IntMatrix mul(const IntMatrix& other) const;
  IntVec mul_vec(const IntVec& x) const;  // this * x (x as column)

  void swap_rows(size_t i, size_t j);
  void swap_cols(size_t i, size_t j);
  void negate_row(size_t i);
  void negate_col(size_t j);

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }

  std::string to_string() const;

private:
  size_t rows_, cols_;
  std::vector<Int> e_;
};

struct HnfResult {
  IntMatrix h;  // column-style HNF, m * u == h
  IntMatrix u;  // unimodular
};

struct SnfResult {
  std::vector<Int> diagonal;  // d1 | d2 | ..., nonnegative, length min(r,c)
  size_t rank = 0;
  IntMatrix left;   // unimodular, rows x rows
  IntMatrix right;  // unimodular, cols x cols;  left * m * right == diag
};

// Column-style Hermite normal form: h = m*u with u unimodular. Pivots are
// the first nonzero entry of each column, at strictly increasing row
// indices, positive; entries left of a pivot in its row are reduced into
// [0, pivot). Zero columns are moved to the end. For a square nonsingular
// input h is lower triangular.
HnfResult hermite_normal_form(const IntMatrix& m);

SnfResult smith_normal_form(const IntMatrix& m);

// Basis of {x : m*x = 0} as matrix columns; the kernel lattice of an
// integer matrix is saturated, so this is also a basis over Q.
IntMatrix kernel_basis(const IntMatrix& m);

size_t integer_rank(const IntMatrix& m);

// Index of the lattice generated by the rows of `generators` inside
// Z^ambient_rank; nullopt when the generated lattice has lower rank.
std::optional<Int> sublattice_index(const IntMatrix& generators, size_t ambient_rank);

// Z-basis (as rows) of the lattice generated by the input rows.
IntMatrix lattice_basis(const IntMatrix& generators);

// Integer coordinates of `point` in the given row basis (rows linearly
// independent), i.e. x with basis^T * x = point; nullopt if no integer
// solution exists.
std::optional<IntVec> coordinates_in_basis(const IntMatrix& basis, const IntVec& point);

// Determinant by fraction-free (Bareiss) elimination.
Int bareiss_determinant(const IntMatrix& m);

}  // namespace ehrkit
