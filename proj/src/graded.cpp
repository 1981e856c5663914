#include "ehrkit/graded.hpp"

#include "ehrkit/rank.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>

namespace ehrkit {

namespace {

size_t point_index(const std::vector<IntVec>& sorted, const IntVec& x) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), x, lex_less);
  if (it == sorted.end() || *it != x)
    throw std::logic_error("point_index: point not in basis");
  return static_cast<size_t>(it - sorted.begin());
}

// j-fold sumsets of the degree-1 point set, degrees 1..max_j.
std::vector<std::vector<IntVec>> sumset_chain(const std::vector<IntVec>& deg1, size_t max_j) {
  std::vector<std::vector<IntVec>> chain{deg1};
  for (size_t j = 2; j <= max_j; ++j) {
    std::vector<IntVec> next;
    next.reserve(chain.back().size() * deg1.size());
    for (const IntVec& a : chain.back())
      for (const IntVec& b : deg1) next.push_back(vec_add(a, b));
    sort_points(next);
    chain.push_back(std::move(next));
  }
  return chain;
}

// Multisets of size j over [n] in lexicographic order (monomials of S_j).
void for_each_multiset(size_t n, size_t j, const std::function<void(const std::vector<size_t>&)>& fn) {
  std::vector<size_t> m(j, 0);
  if (j == 0) {
    fn(m);
    return;
  }
  for (;;) {
    fn(m);
    size_t i = j;
    while (i-- > 0) {
      if (m[i] + 1 < n) {
        ++m[i];
        for (size_t t = i + 1; t < j; ++t) m[t] = m[i];
        break;
      }
      if (i == 0) return;
    }
  }
}

struct VecKeyHash {
  size_t operator()(const std::vector<size_t>& v) const {
    size_t h = 1469598103934665603ull;
    for (size_t x : v) {
      h ^= x + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

GradedDims graded_dims(const Polytope& P, size_t max_j) {
  if (max_j < 1) throw std::invalid_argument("graded_dims: max_j must be >= 1");
  GradedDims g;
  std::vector<IntVec> deg1 = model_lattice_points(P, 1);
  const unsigned long n_pts = deg1.size();
  auto chain = sumset_chain(deg1, max_j);
  g.dim_r.push_back(1);
  g.dim_a.push_back(1);
  g.dim_sym.push_back(1);
  for (size_t j = 1; j <= max_j; ++j) {
    g.dim_r.push_back(count_lattice_points(P, Int(static_cast<long>(j))));
    g.dim_a.push_back(Int(static_cast<long>(chain[j - 1].size())));
    g.dim_sym.push_back(binomial_uu(n_pts + j - 1, j));
  }
  return g;
}

std::map<size_t, Int> toric_generator_counts(const Polytope& P, size_t max_j) {
  IdpResult idp = is_idp(P);
  if (!idp.idp)
    throw std::invalid_argument(
        "toric_generator_counts: polytope is not IDP; its standard-graded toric "
        "presentation is undefined here");

  std::vector<IntVec> deg1 = model_lattice_points(P, 1);
  const size_t n = deg1.size();
  std::map<size_t, Int> out;

  for (size_t j = 2; j <= max_j; ++j) {
    Int dim_sj = binomial_uu(n + j - 1, j);
    if (dim_sj > 5000000)
      throw CapExceeded("toric_generator_counts: S_" + std::to_string(j) + " has dimension " +
                        dim_sj.get_str());
    Int dim_ij = dim_sj - count_lattice_points(P, Int(static_cast<long>(j)));

    // Spanning set of S_1 * I_{j-1}: for each fiber of the degree-(j-1)
    // evaluation with representative mu0, and each monomial mu in the
    // fiber, the products x_q*(mu - mu0) over all variables q. Each is a
    // two-entry +-1 column in S_j.
    std::unordered_map<std::vector<size_t>, size_t, VecKeyHash> sj_index;
    std::vector<std::vector<size_t>> monomials;  // degree j-1, as multisets
    std::vector<IntVec> values;
    for_each_multiset(n, j - 1, [&](const std::vector<size_t>& m) {
      IntVec v(P.affine_dim(), Int(0));
      for (size_t q : m) v = vec_add(v, deg1[q]);
      monomials.push_back(m);
      values.push_back(std::move(v));
    });
    // group monomials by value: key on the string form of the point
    std::map<IntVec, std::vector<size_t>> fibers;
    for (size_t i = 0; i < monomials.size(); ++i) fibers[values[i]].push_back(i);

    auto sj_id = [&](std::vector<size_t> mono) {
      std::sort(mono.begin(), mono.end());
      auto it = sj_index.find(mono);
      if (it != sj_index.end()) return it->second;
      size_t id = sj_index.size();
      sj_index.emplace(std::move(mono), id);
      return id;
    };

    std::vector<SparseCol> cols;
    for (const auto& [val, fib] : fibers) {
      if (fib.size() < 2) continue;
      const std::vector<size_t>& rep = monomials[fib[0]];
      for (size_t t = 1; t < fib.size(); ++t) {
        const std::vector<size_t>& mu = monomials[fib[t]];
        for (size_t q = 0; q < n; ++q) {
          std::vector<size_t> a = mu, b = rep;
          a.push_back(q);
          b.push_back(q);
          size_t ra = sj_id(std::move(a));
          size_t rb = sj_id(std::move(b));
          if (ra == rb) continue;
          SparseCol c;
          if (ra < rb)
            c = {{ra, Int(1)}, {rb, Int(-1)}};
          else
            c = {{rb, Int(-1)}, {ra, Int(1)}};
          cols.push_back(std::move(c));
        }
      }
    }
    Int rank_s1i(static_cast<long>(sparse_rank(cols)));
    out[j] = dim_ij - rank_s1i;
    if (out[j] < 0)
      throw std::logic_error("toric_generator_counts: negative generator count");
  }
  return out;
}

namespace {

// Colex rank of a sorted subset: sum_t C(c_t, t+1), a bijection onto
// [0, C(n, |T|)).
size_t subset_rank(const std::vector<size_t>& t) {
  Int r = 0;
  for (size_t i = 0; i < t.size(); ++i) r += binomial_uu(t[i], i + 1);
  return static_cast<size_t>(r.get_ui());
}

void for_each_subset(size_t n, size_t p, const std::function<void(const std::vector<size_t>&)>& fn) {
  if (p > n) return;
  std::vector<size_t> idx(p);
  for (size_t i = 0; i < p; ++i) idx[i] = i;
  if (p == 0) {
    fn(idx);
    return;
  }
  for (;;) {
    fn(idx);
    size_t i = p;
    bool moved = false;
    while (i-- > 0) {
      if (idx[i] + (p - i) <= n - 1) {
        ++idx[i];
        for (size_t t = i + 1; t < p; ++t) idx[t] = idx[t - 1] + 1;
        moved = true;
        break;
      }
    }
    if (!moved) return;
  }
}

// Columns of the Koszul differential
//   Lambda^p V (x) R_m  ->  Lambda^{p-1} V (x) R_{m+1},
// rows indexed by subset_rank * |R_{m+1}| + point index.
std::vector<SparseCol> koszul_differential(const std::vector<IntVec>& deg1, size_t p,
                                           const std::vector<IntVec>& src_pts,
                                           const std::vector<IntVec>& dst_pts) {
  std::vector<SparseCol> cols;
  if (p == 0 || src_pts.empty()) return cols;
  const size_t n = deg1.size();
  cols.reserve(src_pts.size());
  for_each_subset(n, p, [&](const std::vector<size_t>& T) {
    std::vector<size_t> sub(T.size() - 1);
    for (const IntVec& z : src_pts) {
      SparseCol c;
      c.reserve(p);
      for (size_t t = 0; t < p; ++t) {
        for (size_t i = 0, k = 0; i < p; ++i)
          if (i != t) sub[k++] = T[i];
        size_t row = subset_rank(sub) * dst_pts.size() +
                     point_index(dst_pts, vec_add(deg1[T[t]], z));
        c.push_back({row, (t % 2 == 0) ? Int(1) : Int(-1)});
      }
      std::sort(c.begin(), c.end(),
                [](const SparseEntry& a, const SparseEntry& b) { return a.row < b.row; });
      cols.push_back(std::move(c));
    }
  });
  return cols;
}

}  // namespace

Int koszul_betti(const Polytope& P, size_t p, size_t j, const KoszulOptions& opt) {
  if (j < p) return 0;
  std::vector<IntVec> deg1 = model_lattice_points(P, 1);
  const size_t n = deg1.size();
  if (p > n) return 0;

  auto pts_at = [&](long m) -> std::vector<IntVec> {
    if (m < 0) return {};
    return model_lattice_points(P, Int(m));
  };
  std::vector<IntVec> mid = pts_at(static_cast<long>(j - p));
  std::vector<IntVec> out_pts = pts_at(static_cast<long>(j - p) + 1);
  std::vector<IntVec> in_pts = pts_at(static_cast<long>(j - p) - 1);

  Int nnz = binomial_uu(n, p) * Int(static_cast<long>(mid.size())) * Int(static_cast<long>(p));
  if (p + 1 <= n)
    nnz += binomial_uu(n, p + 1) * Int(static_cast<long>(in_pts.size())) *
           Int(static_cast<long>(p + 1));
  if (nnz > opt.max_strand_nonzeros)
    throw CapExceeded("koszul_betti: strand needs " + nnz.get_str() + " nonzeros, cap " +
                      opt.max_strand_nonzeros.get_str());

  Int middle_dim = binomial_uu(n, p) * Int(static_cast<long>(mid.size()));
  size_t rank_out = 0, rank_in = 0;
  if (p >= 1 && !mid.empty() && !out_pts.empty())
    rank_out = sparse_rank(koszul_differential(deg1, p, mid, out_pts));
  if (p + 1 <= n && !in_pts.empty() && !mid.empty())
    rank_in = sparse_rank(koszul_differential(deg1, p + 1, in_pts, mid));

  Int beta = middle_dim - Int(static_cast<long>(rank_out)) - Int(static_cast<long>(rank_in));
  if (beta < 0) throw std::logic_error("koszul_betti: negative Betti number");
  return beta;
}

}  // namespace ehrkit
