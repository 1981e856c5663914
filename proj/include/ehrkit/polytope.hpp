#pragma once

// Vertex-representation lattice polytopes with exact facet description.
// A Polytope carries an internal full-dimensional model: integer
// coordinates with respect to a basis of the affine lattice
// (affine hull intersected with Z^n), so enumeration and interior tests
// are relative to the affine hull throughout.

#include "ehrkit/inttypes.hpp"
#include "ehrkit/lattice.hpp"

#include <vector>

namespace ehrkit {

struct Facet {
  IntVec normal;  // primitive
  Int offset;     // normal . x <= offset on P
};

struct HullEquation {
  IntVec normal;  // primitive
  Int offset;     // normal . x == offset on aff(P)
};

struct FacetSystem {
  std::vector<Facet> facets;
  std::vector<HullEquation> equations;  // empty iff P is full-dimensional
};

class Polytope {
public:
  // Builds the convex hull of `points`: drops non-vertices, sorts the
  // vertex list lexicographically, computes the affine hull, the facet
  // system and the full-dimensional model. Rejects empty input.
  static Polytope make(const std::vector<IntVec>& points);

  size_t ambient_dim() const { return ambient_dim_; }
  size_t affine_dim() const { return affine_dim_; }
  const std::vector<IntVec>& vertices() const { return vertices_; }
  const IntVec& base_vertex() const { return base_vertex_; }
  const FacetSystem& facet_system() const { return facets_; }
  bool full_dimensional() const { return affine_dim_ == ambient_dim_; }
  bool is_simplex() const { return vertices_.size() == affine_dim_ + 1; }

  // Membership of x in the dilate kP (k >= 1), respecting the affine hull.
  bool contains(const IntVec& x, const Int& k) const;
  // Membership in the relative interior of kP.
  bool contains_interior(const IntVec& x, const Int& k) const;

  // Model data: vertex i of the model corresponds to vertices()[i] via
  // ambient = base_vertex + model_basis^T * model, and the model polytope
  // is full-dimensional in Z^affine_dim.
  const std::vector<IntVec>& model_vertices() const { return model_vertices_; }
  const IntMatrix& model_basis() const { return model_basis_; }  // affine_dim x n
  const std::vector<Facet>& model_facets() const { return model_facets_; }

  IntVec model_to_ambient(const IntVec& y, const Int& dilate) const;
  // Inverse of the above for points of k*aff(P) whose model image is
  // integral; nullopt otherwise.
  std::optional<IntVec> ambient_to_model(const IntVec& x, const Int& dilate) const;

private:
  size_t ambient_dim_ = 0;
  size_t affine_dim_ = 0;
  std::vector<IntVec> vertices_;
  IntVec base_vertex_;
  FacetSystem facets_;
  std::vector<IntVec> model_vertices_;
  IntMatrix model_basis_;
  std::vector<Facet> model_facets_;
};

// Complete irredundant H-description of conv(points) inside its affine
// hull; `points` must be full-dimensional in dimension d (model space).
std::vector<Facet> facet_enumeration(const std::vector<IntVec>& points, size_t d);

bool lex_less(const IntVec& a, const IntVec& b);
void sort_points(std::vector<IntVec>& pts);

}  // namespace ehrkit
