#pragma once

// Monoid-level predicates for the Ehrhart ring of a lattice polytope:
// integer decomposition property, module-generator degrees of the
// integral closure over the degree-1 monoid, the sublattice polytope
// with its index, and levelness of the canonical module.

#include "ehrkit/ehrhart.hpp"

#include <map>
#include <optional>

namespace ehrkit {

struct IdpResult {
  bool idp = true;
  // smallest degree with an undecomposable point, lex-smallest such point
  // (ambient coordinates)
  std::optional<std::pair<size_t, IntVec>> witness;
};

struct GeneratorProfile {
  // per-degree counts of minimal module generators of the closure over the
  // degree-1 monoid, for degrees 2 .. min(deg P, dim P - 1)
  std::map<size_t, Int> counts;
  bool idp = true;  // all counts zero
  size_t max_generator_degree = 1;  // 1 when the monoid is generated in degree 1
};

struct SublatticeReport {
  Int q;                       // index of the lattice spanned by P's points
  bool is_spanning = false;    // q == 1 (full rank is automatic)
  bool affine_relative = false;  // input was not full-dimensional; data is
                                 // relative to the affine lattice
  IntMatrix lattice_basis_rows;  // basis of L in Z^{n+1}, rows
  Polytope p_tilde;              // P in coordinates of the spanned lattice
  HStarVector h_tilde;
};

struct LevelReport {
  bool is_level = true;
  std::vector<size_t> canonical_generator_degrees;  // sorted multiset
};

// Each predicate has a convenience form and a form taking the already
// computed h*-vector (the harness reuses one h* across all of them).
IdpResult is_idp(const Polytope& P);
IdpResult is_idp(const Polytope& P, const HStarVector& h);

GeneratorProfile generator_profile(const Polytope& P);
GeneratorProfile generator_profile(const Polytope& P, const HStarVector& h);

SublatticeReport spanning_report(const Polytope& P);
SublatticeReport spanning_report(const Polytope& P, const HStarVector& h);

LevelReport is_level(const Polytope& P);
LevelReport is_level(const Polytope& P, const HStarVector& h);

// The h*-inequality h*_1 + h*_d >= sum_{i=2}^{d-1} h*_i. The implication
// to spanning is checked by the harness, not here.
bool spanning_criterion(const HStarVector& h, size_t dim);

// Brute-force IDP oracle: searches all compositions p_1 + ... + p_k for
// every point of every relevant dilate. Exponential; for small inputs.
IdpResult is_idp_bruteforce(const Polytope& P);

// Number of degrees the IDP/generator computations must inspect:
// min(deg P, dim P - 1); degrees <= 1 need no checking.
size_t idp_check_bound(const Polytope& P, const HStarVector& h);

}  // namespace ehrkit
