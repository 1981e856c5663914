#include "ehrkit/ehrhart.hpp"

#include <algorithm>

namespace ehrkit {

namespace {

// Recursive fiber enumeration over the model facets: coordinates are fixed
// from the last one down, each level bounding the next coordinate from the
// facet residuals (interval relaxation over the remaining box). The leaf
// check makes the result exact independently of pruning quality.
class FiberEnumerator {
public:
  FiberEnumerator(const Polytope& P, const Int& k) : P_(P), d_(P.affine_dim()) {
    const auto& mv = P.model_vertices();
    lo_.assign(d_, Int(0));
    hi_.assign(d_, Int(0));
    for (size_t j = 0; j < d_; ++j) {
      lo_[j] = hi_[j] = mv[0][j];
      for (const IntVec& v : mv) {
        if (v[j] < lo_[j]) lo_[j] = v[j];
        if (v[j] > hi_[j]) hi_[j] = v[j];
      }
      lo_[j] *= k;
      hi_[j] *= k;
    }
    const auto& facets = P.model_facets();
    residual_.reserve(facets.size());
    for (const Facet& f : facets) residual_.push_back(k * f.offset);
    // smin_[f][j]: lower interval bound of sum_{i<j} a_i y_i over the box
    smin_.assign(facets.size(), std::vector<Int>(d_ + 1, Int(0)));
    for (size_t fi = 0; fi < facets.size(); ++fi)
      for (size_t j = 0; j < d_; ++j) {
        const Int& a = facets[fi].normal[j];
        Int m = a >= 0 ? a * lo_[j] : a * hi_[j];
        smin_[fi][j + 1] = smin_[fi][j] + m;
      }
    point_.assign(d_, Int(0));
  }

  std::vector<IntVec> run() {
    out_.clear();
    if (d_ == 0) {
      out_.push_back({});
      return out_;
    }
    descend(d_);
    return out_;
  }

private:
  void descend(size_t level) {
    const auto& facets = P_.model_facets();
    if (level == 0) {
      for (const Int& r : residual_)
        if (r < 0) return;
      out_.push_back(point_);
      return;
    }
    const size_t j = level - 1;
    Int lo = lo_[j], hi = hi_[j];
    for (size_t fi = 0; fi < facets.size() && lo <= hi; ++fi) {
      const Int& a = facets[fi].normal[j];
      if (a == 0) continue;
      Int room = residual_[fi] - smin_[fi][j];
      Int bound;
      if (a > 0) {
        mpz_fdiv_q(bound.get_mpz_t(), room.get_mpz_t(), a.get_mpz_t());
        if (bound < hi) hi = bound;
      } else {
        mpz_cdiv_q(bound.get_mpz_t(), room.get_mpz_t(), a.get_mpz_t());
        if (bound > lo) lo = bound;
      }
    }
    for (Int y = lo; y <= hi; ++y) {
      point_[j] = y;
      for (size_t fi = 0; fi < facets.size(); ++fi)
        residual_[fi] -= facets[fi].normal[j] * y;
      descend(j);
      for (size_t fi = 0; fi < facets.size(); ++fi)
        residual_[fi] += facets[fi].normal[j] * y;
    }
    point_[j] = 0;
  }

  const Polytope& P_;
  size_t d_;
  std::vector<Int> lo_, hi_;
  std::vector<Int> residual_;
  std::vector<std::vector<Int>> smin_;
  IntVec point_;
  std::vector<IntVec> out_;
};

// Plain model-space box scan, the simple path for low dimensions.
std::vector<IntVec> model_box_scan(const Polytope& P, const Int& k) {
  const size_t d = P.affine_dim();
  const auto& mv = P.model_vertices();
  IntVec lo(d), hi(d);
  for (size_t j = 0; j < d; ++j) {
    lo[j] = hi[j] = mv[0][j];
    for (const IntVec& v : mv) {
      if (v[j] < lo[j]) lo[j] = v[j];
      if (v[j] > hi[j]) hi[j] = v[j];
    }
    lo[j] *= k;
    hi[j] *= k;
  }
  std::vector<IntVec> out;
  IntVec y = lo;
  for (;;) {
    bool ok = true;
    for (const Facet& f : P.model_facets())
      if (dot(f.normal, y) > k * f.offset) {
        ok = false;
        break;
      }
    if (ok) out.push_back(y);
    size_t j = 0;
    while (j < d) {
      ++y[j];
      if (y[j] <= hi[j]) break;
      y[j] = lo[j];
      ++j;
    }
    if (j == d) break;
  }
  return out;
}

}  // namespace

std::vector<IntVec> model_lattice_points(const Polytope& P, const Int& k) {
  if (k < 0) throw std::invalid_argument("lattice_points: negative dilate");
  const size_t d = P.affine_dim();
  if (k == 0 || d == 0) return {IntVec(d, Int(0))};
  std::vector<IntVec> pts =
      d <= 3 ? model_box_scan(P, k) : FiberEnumerator(P, k).run();
  sort_points(pts);
  return pts;
}

std::vector<IntVec> model_lattice_points_fiber(const Polytope& P, const Int& k) {
  if (k < 0) throw std::invalid_argument("lattice_points: negative dilate");
  const size_t d = P.affine_dim();
  if (k == 0 || d == 0) return {IntVec(d, Int(0))};
  std::vector<IntVec> pts = FiberEnumerator(P, k).run();
  sort_points(pts);
  return pts;
}

std::vector<IntVec> model_interior_points(const Polytope& P, const Int& k) {
  if (k < 1) throw std::invalid_argument("interior_points: dilate must be >= 1");
  if (P.affine_dim() == 0) return {IntVec{}};
  std::vector<IntVec> pts = model_lattice_points(P, k);
  std::vector<IntVec> out;
  for (IntVec& y : pts) {
    bool strict = true;
    for (const Facet& f : P.model_facets())
      if (dot(f.normal, y) >= k * f.offset) {
        strict = false;
        break;
      }
    if (strict) out.push_back(std::move(y));
  }
  return out;
}

std::vector<IntVec> lattice_points(const Polytope& P, const Int& k) {
  if (k == 0) return {IntVec(P.ambient_dim(), Int(0))};
  std::vector<IntVec> out;
  for (const IntVec& y : model_lattice_points(P, k)) out.push_back(P.model_to_ambient(y, k));
  sort_points(out);
  return out;
}

Int count_lattice_points(const Polytope& P, const Int& k) {
  return Int(model_lattice_points(P, k).size());
}

std::vector<Int> ehrhart_counts(const Polytope& P) {
  std::vector<Int> counts;
  for (size_t k = 0; k <= P.affine_dim(); ++k)
    counts.push_back(count_lattice_points(P, Int(static_cast<long>(k))));
  return counts;
}

std::vector<Int> h_star_transform(const std::vector<Int>& counts, size_t dim) {
  if (counts.size() != dim + 1)
    throw std::invalid_argument("h_star_transform: need counts L(0..d)");
  std::vector<Int> h(dim + 1);
  for (size_t j = 0; j <= dim; ++j) {
    Int s = 0;
    for (size_t i = 0; i <= j; ++i) {
      Int term = binomial_uu(dim + 1, i) * counts[j - i];
      if (i % 2)
        s -= term;
      else
        s += term;
    }
    h[j] = s;
  }
  if (h[0] != 1) throw std::logic_error("h*: h_0 != 1, enumeration is broken");
  for (size_t j = 0; j <= dim; ++j)
    if (h[j] < 0)
      throw std::logic_error("h*: negative entry h_" + std::to_string(j) +
                             ", enumeration is broken");
  return h;
}

HStarVector h_star(const Polytope& P) {
  const size_t d = P.affine_dim();
  HStarVector hs;
  hs.entries = h_star_transform(ehrhart_counts(P), d);
  hs.degree = 0;
  for (size_t j = 0; j <= d; ++j)
    if (hs.entries[j] != 0) hs.degree = j;
  hs.codegree = 0;
  for (size_t c = 1; c <= d + 1; ++c)
    if (!model_interior_points(P, Int(static_cast<long>(c))).empty()) {
      hs.codegree = c;
      break;
    }
  if (hs.degree + hs.codegree != d + 1)
    throw std::logic_error("h*: degree/codegree identity failed");
  hs.normalized_volume = 0;
  for (const Int& e : hs.entries) hs.normalized_volume += e;
  return hs;
}

std::pair<size_t, size_t> degree_and_codegree(const Polytope& P) {
  HStarVector hs = h_star(P);
  return {hs.degree, hs.codegree};
}

Int ehrhart_eval(const HStarVector& h, size_t dim, const Int& t) {
  Int s = 0;
  for (size_t i = 0; i < h.entries.size(); ++i)
    s += h.entries[i] * binomial(t + static_cast<long>(dim) - static_cast<long>(i), dim);
  return s;
}

std::vector<Int> ehrhart_counts_boxscan(const Polytope& P, const Int& max_box_points) {
  const size_t n = P.ambient_dim();
  std::vector<Int> counts{Int(1)};
  for (size_t kk = 1; kk <= P.affine_dim(); ++kk) {
    Int k(static_cast<long>(kk));
    IntVec lo(n), hi(n);
    for (size_t j = 0; j < n; ++j) {
      lo[j] = hi[j] = P.vertices()[0][j];
      for (const IntVec& v : P.vertices()) {
        if (v[j] < lo[j]) lo[j] = v[j];
        if (v[j] > hi[j]) hi[j] = v[j];
      }
      lo[j] *= k;
      hi[j] *= k;
    }
    Int box = 1;
    for (size_t j = 0; j < n; ++j) box *= hi[j] - lo[j] + 1;
    if (box > max_box_points)
      throw CapExceeded("box scan of " + box.get_str() + " points exceeds cap " +
                        max_box_points.get_str());
    Int count = 0;
    IntVec x = lo;
    for (;;) {
      if (P.contains(x, k)) ++count;
      size_t j = 0;
      while (j < n) {
        ++x[j];
        if (x[j] <= hi[j]) break;
        x[j] = lo[j];
        ++j;
      }
      if (j == n) break;
    }
    counts.push_back(count);
  }
  return counts;
}

}  // namespace ehrkit
