#pragma once

// Exact rank and solve routines. The sparse path does fraction-free
// elimination on integer entries (cross-multiplication with gcd row
// reduction); the dense paths use Bareiss / rational Gaussian elimination.

#include "ehrkit/inttypes.hpp"

#include <optional>

namespace ehrkit {

class IntMatrix;

struct SparseEntry {
  size_t row;
  Int val;
};
using SparseCol = std::vector<SparseEntry>;  // sorted by row, vals nonzero

// Rank over Q of the integer matrix whose columns are `cols`.
size_t sparse_rank(const std::vector<SparseCol>& cols);

size_t dense_rank(const IntMatrix& m);

// Solve a*x = b exactly over Q; nullopt if inconsistent. `a` need not be
// square; when underdetermined the free variables are set to zero.
std::optional<std::vector<Rat>> solve_rational(const IntMatrix& a, const std::vector<Rat>& b);

}  // namespace ehrkit
