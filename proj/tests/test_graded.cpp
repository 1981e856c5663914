#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ehrkit/graded.hpp"
#include "ehrkit/harness.hpp"

#include <algorithm>
#include <functional>
#include <map>

using namespace ehrkit;

namespace {

IntVec iv(std::vector<long> v) {
  IntVec r;
  for (long x : v) r.emplace_back(x);
  return r;
}

Polytope square_side2() {
  return Polytope::make({iv({0, 0}), iv({2, 0}), iv({0, 2}), iv({2, 2})});
}

Polytope onion_triangle() {  // h* = (1,1,1): one interior point, no other boundary points
  return Polytope::make({iv({1, 0}), iv({0, 1}), iv({-1, -1})});
}

// Independent oracle for beta_{0,j} of the toric ideal: per evaluation
// fiber, monomials of degree j are adjacent when they share a variable;
// the count of minimal generators in degree j is sum over fibers of
// (#connected components - 1). Pure combinatorics, no linear algebra.
Int toric_generators_fiber_graph(const Polytope& P, size_t j) {
  std::vector<IntVec> deg1 = model_lattice_points(P, 1);
  const size_t n = deg1.size();
  std::vector<std::vector<size_t>> monos;
  std::vector<size_t> cur(j, 0);
  std::function<void(size_t, size_t)> gen = [&](size_t pos, size_t lo) {
    if (pos == j) {
      monos.push_back(cur);
      return;
    }
    for (size_t i = lo; i < n; ++i) {
      cur[pos] = i;
      gen(pos + 1, i);
    }
  };
  gen(0, 0);
  std::map<IntVec, std::vector<size_t>> fibers;
  for (size_t m = 0; m < monos.size(); ++m) {
    IntVec val(P.affine_dim(), Int(0));
    for (size_t q : monos[m]) val = vec_add(val, deg1[q]);
    fibers[val].push_back(m);
  }
  Int total = 0;
  for (const auto& [val, fib] : fibers) {
    if (fib.size() < 2) continue;
    std::vector<size_t> parent(fib.size());
    for (size_t i = 0; i < fib.size(); ++i) parent[i] = i;
    std::function<size_t(size_t)> find = [&](size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (size_t a = 0; a < fib.size(); ++a)
      for (size_t b = a + 1; b < fib.size(); ++b) {
        const auto& ma = monos[fib[a]];
        const auto& mb = monos[fib[b]];
        bool share = false;
        for (size_t q : ma) {
          if (std::find(mb.begin(), mb.end(), q) != mb.end()) {
            share = true;
            break;
          }
        }
        if (share) {
          size_t ra = find(a), rb = find(b);
          if (ra != rb) parent[ra] = rb;
        }
      }
    size_t comps = 0;
    for (size_t i = 0; i < fib.size(); ++i)
      if (find(i) == i) ++comps;
    total += static_cast<long>(comps) - 1;
  }
  return total;
}

}  // namespace

TEST_CASE("graded dims: unit square, reeve, (1,5,6) simplex") {
  GradedDims g = graded_dims(unit_cube(2), 2);
  CHECK(g.dim_r[2] == 9);
  CHECK(g.dim_a[2] == 9);  // IDP: equality

  GradedDims r = graded_dims(reeve_simplex(), 2);
  CHECK(r.dim_r[2] == 11);
  CHECK(r.dim_a[2] == 10);  // gap of one, matching g_2 = 1

  GradedDims e = graded_dims(example_simplex_156(), 2);
  CHECK(e.dim_a[2] == e.dim_r[2]);
  CHECK(e.dim_r[2] == count_lattice_points(example_simplex_156(), 2));
}

TEST_CASE("graded dims invariants on a small corpus") {
  Rng rng(88);
  for (int i = 0; i < 25; ++i) {
    Polytope P = random_simplex(2 + rng.below(2), 3, rng);
    GradedDims g = graded_dims(P, 3);
    for (size_t j = 1; j <= 3; ++j) {
      CHECK(g.dim_a[j] <= g.dim_r[j]);
      CHECK(g.dim_a[j] <= g.dim_sym[j]);
    }
    if (is_idp(P).idp)
      for (size_t j = 1; j <= 3; ++j) CHECK(g.dim_a[j] == g.dim_r[j]);
  }
}

TEST_CASE("toric generators: unimodular triangle is a polynomial ring") {
  auto counts = toric_generator_counts(unit_simplex(2), 4);
  for (const auto& [j, c] : counts) CHECK(c == 0);
}

TEST_CASE("toric generators: [0,2]^2 is generated by quadrics") {
  Polytope P = square_side2();
  HStarVector h = h_star(P);
  CHECK(h.entries == std::vector<Int>{Int(1), Int(6), Int(1)});
  CHECK(h[2] < h[1]);
  auto counts = toric_generator_counts(P, 3);
  CHECK(counts.at(2) == binomial_uu(10, 2) - 25);  // dim I_2, no lower syzygies
  CHECK(counts.at(3) == 0);
}

TEST_CASE("toric generators: polygon with h2 = h1 needs a cubic") {
  Polytope P = onion_triangle();
  HStarVector h = h_star(P);
  CHECK(h.entries == std::vector<Int>{Int(1), Int(1), Int(1)});
  auto counts = toric_generator_counts(P, 3);
  CHECK(counts.at(2) == 0);
  CHECK(counts.at(3) == 1);  // x1 x2 x3 - x0^3
}

TEST_CASE("toric generator counts match the fiber-graph oracle") {
  Rng rng(141);
  int done = 0;
  while (done < 25) {
    Polytope P = random_polytope(2, 3, rng);
    if (!P.full_dimensional()) continue;
    if (count_lattice_points(P, 1) > 10) continue;
    ++done;
    auto counts = toric_generator_counts(P, 3);
    for (size_t j = 2; j <= 3; ++j) CHECK(counts.at(j) == toric_generators_fiber_graph(P, j));
  }
}

TEST_CASE("toric rejects non-IDP input") {
  CHECK_THROWS_AS(toric_generator_counts(reeve_simplex(), 3), std::invalid_argument);
}

TEST_CASE("koszul betti: base cases") {
  CHECK(koszul_betti(unit_simplex(2), 0, 0) == 1);
  CHECK(koszul_betti(reeve_simplex(), 0, 0) == 1);
  // polynomial ring: no higher Betti numbers
  for (size_t p = 0; p <= 2; ++p)
    for (size_t j = std::max<size_t>(p, 1); j <= p + 2; ++j)
      CHECK(koszul_betti(unit_simplex(3), p, j) == 0);
}

TEST_CASE("koszul betti: reeve has beta_{0,2} = 1") {
  CHECK(koszul_betti(reeve_simplex(), 0, 2) == 1);
  CHECK(koszul_betti(reeve_simplex(), 0, 3) == 0);
}

TEST_CASE("koszul betti: unit square resolves as one quadric") {
  Polytope Sq = unit_cube(2);
  CHECK(koszul_betti(Sq, 0, 1) == 0);
  CHECK(koszul_betti(Sq, 1, 2) == 1);
  CHECK(koszul_betti(Sq, 1, 3) == 0);
  CHECK(koszul_betti(Sq, 2, 3) == 0);
  CHECK(koszul_betti(Sq, 2, 4) == 0);
}

TEST_CASE("koszul differential squares to zero") {
  Polytope P = reeve_simplex();
  // build d_p and d_{p+1} strand matrices explicitly through the public
  // surface: rank(d_p) + rank(d_{p+1}) <= dim middle is implied by
  // beta >= 0, which koszul_betti asserts internally; spot-check strand
  // dimensions via the rank-nullity identity on a known case instead.
  // dim(Lambda^1 V (x) R_1) = 4 * 4; beta_{1,2} = 16 - rank d1 - rank d2.
  Int beta = koszul_betti(P, 1, 2);
  CHECK(beta >= 0);
}

TEST_CASE("theorem 2.1 vanishing strand on IDP examples with h_s <= h_1") {
  // [0,2]^2: s = 2, h_1 - h_s = 5, so beta_{p,p+2} = 0 for p <= 5
  Polytope Sq = square_side2();
  for (size_t p = 0; p <= 5; ++p) CHECK(koszul_betti(Sq, p, p + 2) == 0);

  // unit cube in R^3: h* = (1,4,1,0), s = 2, p <= 3
  Polytope C = unit_cube(3);
  HStarVector h = h_star(C);
  REQUIRE(h.entries == std::vector<Int>{Int(1), Int(4), Int(1), Int(0)});
  for (size_t p = 0; p <= 3; ++p) CHECK(koszul_betti(C, p, p + 2) == 0);
}

TEST_CASE("koszul beta_{0,j} equals the generator profile across a corpus") {
  Rng rng(2718);
  int done = 0;
  while (done < 30) {
    size_t dim = 2 + rng.below(2);
    Polytope P = random_simplex(dim, 3, rng);
    if (count_lattice_points(P, 1) > 10) continue;
    ++done;
    GeneratorProfile prof = generator_profile(P);
    for (const auto& [k, g] : prof.counts) CHECK(koszul_betti(P, 0, k) == g);
  }
}

TEST_CASE("beta_{1,j} of the ring equals the toric generator count in degree j") {
  // for IDP polytopes the first syzygies of R = S/I in degree j are the
  // minimal generators of I; the Koszul-strand path and the evaluation-
  // fiber path must agree
  Polytope sq2 = square_side2();
  auto counts = toric_generator_counts(sq2, 3);
  CHECK(koszul_betti(sq2, 1, 2) == counts.at(2));
  CHECK(koszul_betti(sq2, 1, 3) == counts.at(3));

  Polytope tri = onion_triangle();
  auto tcounts = toric_generator_counts(tri, 3);
  CHECK(koszul_betti(tri, 1, 2) == tcounts.at(2));  // 0
  CHECK(koszul_betti(tri, 1, 3) == tcounts.at(3));  // 1

  Rng rng(808);
  int done = 0;
  while (done < 12) {
    Polytope P = random_polytope(2, 3, rng);
    if (!P.full_dimensional()) continue;
    if (count_lattice_points(P, 1) > 9) continue;
    ++done;
    auto c = toric_generator_counts(P, 3);
    for (size_t j = 2; j <= 3; ++j) CHECK(koszul_betti(P, 1, j) == c.at(j));
  }
}

TEST_CASE("strand cap triggers cap-exceeded") {
  KoszulOptions opt;
  opt.max_strand_nonzeros = 10;
  CHECK_THROWS_AS(koszul_betti(square_side2(), 2, 4, opt), CapExceeded);
}
