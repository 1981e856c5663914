#pragma once

// Lattice-point enumeration in dilates and the derived Ehrhart data:
// counts, h*-vector, degree, codegree, normalized volume.

#include "ehrkit/polytope.hpp"

namespace ehrkit {

struct HStarVector {
  std::vector<Int> entries;  // h*_0 .. h*_d, d = dim P
  size_t degree = 0;         // last nonzero index
  size_t codegree = 0;       // min dilate with an interior lattice point
  Int normalized_volume;     // sum of entries

  const Int& operator[](size_t i) const {
    static const Int zero = 0;
    return i < entries.size() ? entries[i] : zero;
  }
};

// Points of kP (ambient coordinates, lex-sorted); k = 0 gives the origin.
std::vector<IntVec> lattice_points(const Polytope& P, const Int& k);

// Same set in model coordinates; the workhorse for the monoid layer.
// Dispatches to a plain box scan for dim <= 3 and to recursive fiber
// enumeration for dim >= 4.
std::vector<IntVec> model_lattice_points(const Polytope& P, const Int& k);

// The fiber-enumeration path regardless of dimension, for overlap tests
// against the box-scan path.
std::vector<IntVec> model_lattice_points_fiber(const Polytope& P, const Int& k);

std::vector<IntVec> model_interior_points(const Polytope& P, const Int& k);

Int count_lattice_points(const Polytope& P, const Int& k);

// (L_P(0), ..., L_P(d)) with d the affine dimension.
std::vector<Int> ehrhart_counts(const Polytope& P);

// h* from the counts by the finite-difference transform; validates
// h*_0 = 1 and nonnegativity, and the codegree identity s + c = d + 1.
HStarVector h_star(const Polytope& P);

// (degree, codegree); the codegree comes from a direct interior scan.
std::pair<size_t, size_t> degree_and_codegree(const Polytope& P);

// L_P(t) for any integer t (also negative) from the h* expansion:
// L_P(t) = sum_i h*_i * C(t + d - i, d).
Int ehrhart_eval(const HStarVector& h, size_t dim, const Int& t);

// Independent slow path: plain ambient bounding-box scan testing
// Polytope::contains pointwise, no pruning and no model mapping. Throws
// CapExceeded when a box exceeds `max_box_points`. Used by the oracle
// command and the test suites.
std::vector<Int> ehrhart_counts_boxscan(const Polytope& P, const Int& max_box_points);

// The finite-difference transform from counts (L(0)..L(d)) to h*;
// validates h*_0 = 1 and nonnegativity.
std::vector<Int> h_star_transform(const std::vector<Int>& counts, size_t dim);

}  // namespace ehrkit
