#pragma once

// Graded linear algebra over exact rationals for the Ehrhart ring R and
// its degree-1 subalgebra: graded dimensions, toric-ideal minimal
// generator counts, and Koszul-homology Betti numbers beta_{p,j}.

#include "ehrkit/monoid.hpp"

#include <map>

namespace ehrkit {

struct GradedDims {
  std::vector<Int> dim_r;    // dim R_j = L_P(j), j = 0..max_j
  std::vector<Int> dim_a;    // dim A_j = #(j-fold sumset of degree-1 points)
  std::vector<Int> dim_sym;  // C(N+j-1, j), N = #(P cap Z^n)
};

struct GradedBettiCell {
  size_t p;
  size_t j;
  Int value;
};

struct KoszulOptions {
  // Abort with CapExceeded when a strand needs more nonzeros than this.
  Int max_strand_nonzeros = Int(2000000);
};

GradedDims graded_dims(const Polytope& P, size_t max_j);

// Minimal-generator counts beta_{0,j}(I) of the toric ideal, j = 2..max_j.
// Requires an IDP polytope. dim I_j = C(N+j-1, j) - L_P(j); the rank of
// S_1 * I_{j-1} is an exact sparse rank over the explicit spanning set.
std::map<size_t, Int> toric_generator_counts(const Polytope& P, size_t max_j);

// beta_{p,j} = dim Tor_p(k, R)_j via the Koszul strand
//   Lambda^{p+1} V (x) R_{j-p-1} -> Lambda^p V (x) R_{j-p} -> Lambda^{p-1} V (x) R_{j-p+1}
// with V = R_1; exact sparse ranks of the two differentials.
Int koszul_betti(const Polytope& P, size_t p, size_t j, const KoszulOptions& opt = {});

}  // namespace ehrkit
