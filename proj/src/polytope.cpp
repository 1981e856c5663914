#include "ehrkit/polytope.hpp"

#include "ehrkit/rank.hpp"

#include <algorithm>
#include <set>

namespace ehrkit {

bool lex_less(const IntVec& a, const IntVec& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

void sort_points(std::vector<IntVec>& pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

namespace {

// Primitive normal of the hyperplane through d affinely independent points
// in R^d (model space); empty vector if the points span less than d-1.
IntVec hyperplane_normal(const std::vector<IntVec>& pts, const std::vector<size_t>& idx) {
  const size_t d = pts[idx[0]].size();
  IntMatrix diffs(idx.size() - 1, d);
  for (size_t i = 1; i < idx.size(); ++i)
    for (size_t j = 0; j < d; ++j)
      diffs.at(i - 1, j) = pts[idx[i]][j] - pts[idx[0]][j];
  IntMatrix ker = kernel_basis(diffs);
  if (ker.cols() != 1) return {};  // not spanning a hyperplane
  return make_primitive(ker.col(0));
}

}  // namespace

std::vector<Facet> facet_enumeration(const std::vector<IntVec>& points, size_t d) {
  if (d < 1) throw std::invalid_argument("facet_enumeration: dimension must be >= 1");
  const size_t m = points.size();
  std::vector<Facet> facets;
  std::set<std::pair<IntVec, Int>> seen;

  // Walk all d-subsets; skip subsets already inside a found facet.
  std::vector<size_t> idx(d);
  for (size_t i = 0; i < d; ++i) idx[i] = i;
  auto advance = [&]() -> bool {
    size_t i = d;
    while (i-- > 0) {
      if (idx[i] + (d - i) <= m - 1 + 0u) {
        ++idx[i];
        for (size_t j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  if (m < d) return facets;

  do {
    bool inside_known = false;
    for (const Facet& f : facets) {
      bool all_tight = true;
      for (size_t k : idx)
        if (dot(f.normal, points[k]) != f.offset) {
          all_tight = false;
          break;
        }
      if (all_tight) {
        inside_known = true;
        break;
      }
    }
    if (inside_known) continue;

    IntVec normal = hyperplane_normal(points, idx);
    if (normal.empty()) continue;
    Int offset = dot(normal, points[idx[0]]);

    bool below = true, above = true;
    for (const IntVec& p : points) {
      Int v = dot(normal, p);
      if (v > offset) below = false;
      if (v < offset) above = false;
      if (!below && !above) break;
    }
    if (!below && !above) continue;
    if (!below) {
      for (Int& x : normal) x = -x;
      offset = -offset;
    }
    if (seen.insert({normal, offset}).second)
      facets.push_back({std::move(normal), std::move(offset)});
  } while (advance());

  return facets;
}

Polytope Polytope::make(const std::vector<IntVec>& points) {
  if (points.empty()) throw std::invalid_argument("Polytope: empty point set");
  const size_t n = points[0].size();
  for (const IntVec& p : points)
    if (p.size() != n) throw std::invalid_argument("Polytope: mixed ambient dimensions");

  std::vector<IntVec> pts = points;
  sort_points(pts);

  Polytope P;
  P.ambient_dim_ = n;
  P.base_vertex_ = pts[0];  // lexicographic minimum is always a vertex

  // Affine hull: equations from the integer kernel of the difference rows,
  // then the affine-lattice basis as the kernel of the equations.
  IntMatrix diffs(pts.size() - 1, n);
  for (size_t i = 1; i < pts.size(); ++i)
    for (size_t j = 0; j < n; ++j) diffs.at(i - 1, j) = pts[i][j] - pts[0][j];
  IntMatrix eq = kernel_basis(diffs).transposed();  // rows: normals of aff(P)
  IntMatrix basis = kernel_basis(eq).transposed();  // rows: affine-lattice basis
  const size_t d = basis.rows();
  P.affine_dim_ = d;
  P.model_basis_ = basis;
  for (size_t i = 0; i < eq.rows(); ++i) {
    IntVec normal = eq.row(i);
    P.facets_.equations.push_back({normal, dot(normal, P.base_vertex_)});
  }

  // Model coordinates of every input point.
  std::vector<IntVec> model;
  model.reserve(pts.size());
  for (const IntVec& p : pts) {
    auto c = coordinates_in_basis(basis, vec_sub(p, P.base_vertex_));
    if (!c) throw std::logic_error("Polytope: point outside its own affine lattice");
    model.push_back(*c);
  }

  if (d == 0) {
    P.vertices_ = {pts[0]};
    P.model_vertices_ = {IntVec{}};
    return P;
  }

  P.model_facets_ = facet_enumeration(model, d);

  // A point is a vertex iff its tight facet normals span the model space.
  std::vector<IntVec> verts, mverts;
  for (size_t i = 0; i < pts.size(); ++i) {
    std::vector<IntVec> tight;
    for (const Facet& f : P.model_facets_)
      if (dot(f.normal, model[i]) == f.offset) tight.push_back(f.normal);
    if (tight.size() >= d && integer_rank(IntMatrix::from_rows(tight)) == d) {
      verts.push_back(pts[i]);
      mverts.push_back(model[i]);
    }
  }
  P.vertices_ = std::move(verts);
  P.model_vertices_ = std::move(mverts);

  // Pull each model facet back to ambient coordinates: solve B a = a' over
  // Q with minimum-norm solution a = B^T (B B^T)^{-1} a', clear
  // denominators, reduce primitive.
  IntMatrix bbt = basis.mul(basis.transposed());  // d x d, nonsingular
  for (const Facet& mf : P.model_facets_) {
    std::vector<Rat> rhs(d);
    for (size_t i = 0; i < d; ++i) rhs[i] = Rat(mf.normal[i]);
    auto w = solve_rational(bbt, rhs);
    if (!w) throw std::logic_error("Polytope: facet pull-back failed");
    std::vector<Rat> a_rat(n, Rat(0));
    for (size_t j = 0; j < n; ++j) {
      for (size_t i = 0; i < d; ++i) a_rat[j] += Rat(basis.at(i, j)) * (*w)[i];
      a_rat[j].canonicalize();
    }
    Int denom = 1;
    for (const Rat& q : a_rat) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), q.get_den().get_mpz_t());
    IntVec a(n);
    for (size_t j = 0; j < n; ++j) {
      Rat scaled = a_rat[j] * Rat(denom);
      scaled.canonicalize();
      a[j] = scaled.get_num();
    }
    Int b = dot(a, P.base_vertex_) + denom * mf.offset;
    Int g = content(a);
    if (g > 1) {
      for (Int& x : a) x /= g;
      b /= g;  // exact: the facet contains lattice points
    }
    P.facets_.facets.push_back({std::move(a), std::move(b)});
  }

  return P;
}

bool Polytope::contains(const IntVec& x, const Int& k) const {
  if (x.size() != ambient_dim_) throw std::invalid_argument("contains: dimension mismatch");
  if (k < 1) throw std::invalid_argument("contains: dilate must be >= 1");
  for (const HullEquation& e : facets_.equations)
    if (dot(e.normal, x) != k * e.offset) return false;
  if (affine_dim_ == 0) {
    for (size_t i = 0; i < ambient_dim_; ++i)
      if (x[i] != k * base_vertex_[i]) return false;
    return true;
  }
  for (const Facet& f : facets_.facets)
    if (dot(f.normal, x) > k * f.offset) return false;
  return true;
}

bool Polytope::contains_interior(const IntVec& x, const Int& k) const {
  if (x.size() != ambient_dim_) throw std::invalid_argument("contains_interior: dimension mismatch");
  if (k < 1) throw std::invalid_argument("contains_interior: dilate must be >= 1");
  for (const HullEquation& e : facets_.equations)
    if (dot(e.normal, x) != k * e.offset) return false;
  if (affine_dim_ == 0) {
    for (size_t i = 0; i < ambient_dim_; ++i)
      if (x[i] != k * base_vertex_[i]) return false;
    return true;  // a point is its own relative interior
  }
  for (const Facet& f : facets_.facets)
    if (dot(f.normal, x) >= k * f.offset) return false;
  return true;
}

IntVec Polytope::model_to_ambient(const IntVec& y, const Int& dilate) const {
  if (y.size() != affine_dim_) throw std::invalid_argument("model_to_ambient: dimension mismatch");
  IntVec x(ambient_dim_);
  for (size_t j = 0; j < ambient_dim_; ++j) {
    x[j] = dilate * base_vertex_[j];
    for (size_t i = 0; i < affine_dim_; ++i) x[j] += model_basis_.at(i, j) * y[i];
  }
  return x;
}

std::optional<IntVec> Polytope::ambient_to_model(const IntVec& x, const Int& dilate) const {
  if (x.size() != ambient_dim_) throw std::invalid_argument("ambient_to_model: dimension mismatch");
  IntVec shifted(ambient_dim_);
  for (size_t j = 0; j < ambient_dim_; ++j) shifted[j] = x[j] - dilate * base_vertex_[j];
  return coordinates_in_basis(model_basis_, shifted);
}

}  // namespace ehrkit
