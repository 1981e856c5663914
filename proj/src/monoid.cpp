#include "ehrkit/monoid.hpp"

#include <algorithm>
#include <functional>

namespace ehrkit {

namespace {

bool set_contains(const std::vector<IntVec>& sorted, const IntVec& x) {
  return std::binary_search(sorted.begin(), sorted.end(), x, lex_less);
}

std::vector<IntVec> sumset(const std::vector<IntVec>& a, const std::vector<IntVec>& b) {
  std::vector<IntVec> out;
  out.reserve(a.size() * b.size());
  for (const IntVec& x : a)
    for (const IntVec& y : b) out.push_back(vec_add(x, y));
  sort_points(out);
  return out;
}

}  // namespace

size_t idp_check_bound(const Polytope& P, const HStarVector& h) {
  if (P.affine_dim() < 2) return 1;
  return std::min(h.degree, P.affine_dim() - 1);
}

IdpResult is_idp(const Polytope& P, const HStarVector& h) {
  IdpResult res;
  const size_t bound = idp_check_bound(P, h);
  if (bound < 2) return res;
  std::vector<IntVec> deg1 = model_lattice_points(P, 1);
  std::vector<IntVec> reach = deg1;
  for (size_t k = 2; k <= bound; ++k) {
    reach = sumset(reach, deg1);
    std::vector<IntVec> full = model_lattice_points(P, Int(static_cast<long>(k)));
    for (const IntVec& z : full) {
      if (!set_contains(reach, z)) {
        res.idp = false;
        res.witness = {k, P.model_to_ambient(z, Int(static_cast<long>(k)))};
        return res;
      }
    }
  }
  return res;
}

GeneratorProfile generator_profile(const Polytope& P, const HStarVector& h) {
  GeneratorProfile prof;
  const size_t bound = idp_check_bound(P, h);
  if (bound < 2) return prof;
  std::vector<IntVec> deg1 = model_lattice_points(P, 1);
  std::vector<IntVec> prev = deg1;  // full degree-(k-1) piece of the closure
  for (size_t k = 2; k <= bound; ++k) {
    std::vector<IntVec> reachable = sumset(deg1, prev);
    std::vector<IntVec> full = model_lattice_points(P, Int(static_cast<long>(k)));
    Int g = 0;
    for (const IntVec& z : full)
      if (!set_contains(reachable, z)) ++g;
    if (g != 0) {
      prof.idp = false;
      prof.max_generator_degree = k;
    }
    prof.counts[k] = g;
    prev = std::move(full);
  }
  return prof;
}

IdpResult is_idp_bruteforce(const Polytope& P) {
  IdpResult res;
  const HStarVector h = h_star(P);
  const size_t bound = idp_check_bound(P, h);
  if (bound < 2) return res;
  std::vector<IntVec> deg1 = model_lattice_points(P, 1);

  // decompose(z, k): can z be written as a sum of k degree-1 points with
  // non-decreasing indices?
  std::function<bool(const IntVec&, size_t, size_t)> decompose =
      [&](const IntVec& z, size_t k, size_t min_idx) -> bool {
    if (k == 1) return set_contains(deg1, z);
    for (size_t i = min_idx; i < deg1.size(); ++i) {
      IntVec rest = vec_sub(z, deg1[i]);
      // quick reject: rest must lie in (k-1)P
      if (!P.contains(P.model_to_ambient(rest, Int(static_cast<long>(k - 1))),
                      Int(static_cast<long>(k - 1))))
        continue;
      if (decompose(rest, k - 1, i)) return true;
    }
    return false;
  };

  for (size_t k = 2; k <= bound; ++k) {
    for (const IntVec& z : model_lattice_points(P, Int(static_cast<long>(k)))) {
      if (!decompose(z, k, 0)) {
        res.idp = false;
        res.witness = {k, P.model_to_ambient(z, Int(static_cast<long>(k)))};
        return res;
      }
    }
  }
  return res;
}

SublatticeReport spanning_report(const Polytope& P, const HStarVector& h) {
  SublatticeReport rep;
  rep.affine_relative = !P.full_dimensional();
  const size_t d = P.affine_dim();
  const size_t n = P.ambient_dim();

  std::vector<IntVec> pts = model_lattice_points(P, 1);
  if (pts.empty()) throw std::logic_error("spanning_report: no lattice points");
  const IntVec& p0 = pts[0];

  IntMatrix diffs(pts.size() - 1, d);
  for (size_t i = 1; i < pts.size(); ++i)
    for (size_t j = 0; j < d; ++j) diffs.at(i - 1, j) = pts[i][j] - p0[j];
  IntMatrix basis = lattice_basis(diffs);
  if (basis.rows() != d)
    throw std::logic_error("spanning_report: lattice points do not span the direction space");

  auto idx = sublattice_index(basis, d);
  rep.q = *idx;
  rep.is_spanning = (rep.q == 1);

  // P in coordinates of the spanned lattice
  std::vector<IntVec> tv;
  for (const IntVec& mv : P.model_vertices()) {
    auto c = coordinates_in_basis(basis, vec_sub(mv, p0));
    if (!c) throw std::logic_error("spanning_report: vertex outside spanned lattice");
    tv.push_back(*c);
  }
  rep.p_tilde = Polytope::make(tv);
  rep.h_tilde = h_star(rep.p_tilde);

  // basis of L inside Z^{n+1}: direction vectors at height 0 plus one
  // degree-1 point, all in ambient coordinates
  IntMatrix lrows(d + 1, n + 1);
  for (size_t i = 0; i < d; ++i) {
    IntVec dir(n, Int(0));  // ambient image of basis row i
    for (size_t j = 0; j < n; ++j)
      for (size_t t = 0; t < d; ++t) dir[j] += P.model_basis().at(t, j) * basis.at(i, t);
    for (size_t j = 0; j < n; ++j) lrows.at(i, j) = dir[j];
  }
  IntVec p0_amb = P.model_to_ambient(p0, 1);
  for (size_t j = 0; j < n; ++j) lrows.at(d, j) = p0_amb[j];
  lrows.at(d, n) = 1;
  rep.lattice_basis_rows = lrows;

  // Vol(P) = q * Vol(P~) must hold exactly
  if (h.normalized_volume != rep.q * rep.h_tilde.normalized_volume)
    throw std::logic_error("spanning_report: volume identity Vol(P) = q Vol(P~) failed");
  return rep;
}

LevelReport is_level(const Polytope& P, const HStarVector& h) {
  LevelReport rep;
  const size_t d = P.affine_dim();
  const size_t c = h.codegree;

  // lattice and interior points per degree up to dim + 1
  std::vector<std::vector<IntVec>> pts(d + 2), interior(d + 2);
  for (size_t k = 1; k <= d + 1; ++k) {
    pts[k] = model_lattice_points(P, Int(static_cast<long>(k)));
    interior[k] = model_interior_points(P, Int(static_cast<long>(k)));
  }

  for (size_t k = c; k <= d + 1; ++k) {
    for (const IntVec& alpha : interior[k]) {
      bool decomposable = false;
      for (size_t m = c; m < k && !decomposable; ++m) {
        for (const IntVec& beta : interior[m]) {
          if (set_contains(pts[k - m], vec_sub(alpha, beta))) {
            decomposable = true;
            break;
          }
        }
      }
      if (!decomposable) rep.canonical_generator_degrees.push_back(k);
    }
  }
  std::sort(rep.canonical_generator_degrees.begin(), rep.canonical_generator_degrees.end());
  for (size_t deg : rep.canonical_generator_degrees)
    if (deg != c) {
      rep.is_level = false;
      break;
    }
  return rep;
}

IdpResult is_idp(const Polytope& P) { return is_idp(P, h_star(P)); }
GeneratorProfile generator_profile(const Polytope& P) {
  return generator_profile(P, h_star(P));
}
SublatticeReport spanning_report(const Polytope& P) {
  return spanning_report(P, h_star(P));
}
LevelReport is_level(const Polytope& P) { return is_level(P, h_star(P)); }

bool spanning_criterion(const HStarVector& h, size_t dim) {
  Int mid = 0;
  for (size_t i = 2; i + 1 <= dim && i < h.entries.size(); ++i) mid += h.entries[i];
  return h[1] + h[dim] >= mid;
}

}  // namespace ehrkit
