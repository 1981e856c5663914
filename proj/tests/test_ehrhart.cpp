#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ehrkit/ehrhart.hpp"
#include "ehrkit/harness.hpp"

using namespace ehrkit;

namespace {

IntVec iv(std::vector<long> v) {
  IntVec r;
  for (long x : v) r.emplace_back(x);
  return r;
}

std::vector<Int> ints(std::vector<long> v) {
  std::vector<Int> r;
  for (long x : v) r.emplace_back(x);
  return r;
}

}  // namespace

TEST_CASE("lattice point counts on small shapes") {
  // unit triangle, k = 2: C(4,2) = 6 points
  Polytope T = unit_simplex(2);
  CHECK(lattice_points(T, 2).size() == 6);

  // Reeve simplex at k = 1: exactly the 4 vertices
  Polytope R = reeve_simplex();
  auto pts = lattice_points(R, 1);
  REQUIRE(pts.size() == 4);
  CHECK(pts == R.vertices());  // both canonically sorted

  // k = 0 is the origin
  auto zero = lattice_points(R, 0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0] == iv({0, 0, 0}));

  // the (1,5,6) simplex has 9 lattice points (h*_1 = 5 plus d + 1)
  CHECK(lattice_points(example_simplex_156(), 1).size() == 9);
}

TEST_CASE("ehrhart counts: unit square, reeve, point") {
  Polytope Sq = unit_cube(2);
  CHECK(ehrhart_counts(Sq) == ints({1, 4, 9}));

  // box-scan oracle first, then the golden values it produced
  Polytope R = reeve_simplex();
  auto slow = ehrhart_counts_boxscan(R, Int(1000000));
  auto fast = ehrhart_counts(R);
  CHECK(slow == fast);
  CHECK(fast == ints({1, 4, 11, 24}));

  Polytope pt = Polytope::make({iv({5, 7})});
  CHECK(ehrhart_counts(pt) == ints({1}));
}

TEST_CASE("h* golden values from the four example polytopes") {
  CHECK(h_star(reeve_simplex()).entries == ints({1, 0, 1, 0}));
  CHECK(h_star(example_parity_4polytope()).entries == ints({1, 2, 5, 0, 0}));
  CHECK(h_star(example_simplex_156()).entries == ints({1, 5, 6, 0}));
  CHECK(h_star(example_simplex_169()).entries == ints({1, 6, 9, 0}));
  for (size_t d = 1; d <= 5; ++d) {
    std::vector<Int> expect(d + 1, Int(0));
    expect[0] = 1;
    CHECK(h_star(unit_simplex(d)).entries == expect);
  }
}

TEST_CASE("degree and codegree") {
  auto [s, c] = degree_and_codegree(reeve_simplex());
  CHECK(s == 2);
  CHECK(c == 2);

  for (size_t d = 1; d <= 4; ++d) {
    auto [sd, cd] = degree_and_codegree(unit_simplex(d));
    CHECK(sd == 0);
    CHECK(cd == d + 1);
  }

  auto [se, ce] = degree_and_codegree(example_parity_4polytope());
  CHECK(se == 2);
  CHECK(ce == 3);
}

TEST_CASE("h* invariants on a random corpus") {
  Rng rng(2025);
  int done = 0;
  while (done < 120) {
    size_t dim = 1 + rng.below(4);
    Polytope P = (rng.below(3) == 0) ? random_polytope(dim, 3, rng)
                                     : random_simplex(dim, 4, rng);
    if (!P.full_dimensional()) continue;
    ++done;
    HStarVector h = h_star(P);
    const size_t d = P.affine_dim();

    CHECK(h.entries[0] == 1);
    CHECK(h[1] == count_lattice_points(P, 1) - static_cast<long>(d) - 1);
    CHECK(h[d] == Int(static_cast<long>(model_interior_points(P, 1).size())));
    CHECK(h[d] <= h[1]);
    Int sum = 0;
    for (const Int& e : h.entries) sum += e;
    CHECK(sum == h.normalized_volume);
    CHECK(h.normalized_volume >= 1);
    CHECK(h.degree + h.codegree == d + 1);

    // Ehrhart reciprocity: #(kP° cap Z^n) = (-1)^d L(-k)
    for (long k = 1; k <= 3; ++k) {
      Int interior(static_cast<long>(model_interior_points(P, Int(k)).size()));
      Int rec = ehrhart_eval(h, d, Int(-k));
      if (d % 2) rec = -rec;
      CHECK(interior == rec);
    }

    // simplices: normalized volume = |det| of edge matrix
    if (P.is_simplex() && d >= 1) {
      IntMatrix edges(d, d);
      for (size_t i = 1; i <= d; ++i)
        for (size_t j = 0; j < d; ++j)
          edges.at(i - 1, j) = P.model_vertices()[i][j] - P.model_vertices()[0][j];
      Int det = bareiss_determinant(edges);
      if (det < 0) det = -det;
      CHECK(det == h.normalized_volume);
    }
  }
}

TEST_CASE("fiber path and box-scan path agree (overlap set, dims 2-4)") {
  Rng rng(31);
  int done = 0;
  while (done < 40) {
    size_t dim = 2 + rng.below(3);
    long bound = dim == 4 ? 2 : 3;
    Polytope P = (done % 3 == 0) ? random_polytope(dim, bound, rng)
                                 : random_simplex(dim, bound, rng);
    if (!P.full_dimensional()) continue;
    ++done;
    CHECK(ehrhart_counts(P) == ehrhart_counts_boxscan(P, Int(50000000L)));
    // run the fiber enumerator on low dimensions too, where the dispatch
    // would otherwise always use the box scan
    for (long k = 1; k <= 3; ++k)
      CHECK(model_lattice_points_fiber(P, Int(k)) == model_lattice_points(P, Int(k)));
  }
}

TEST_CASE("fiber path agrees with the box scan in dimension 5") {
  Rng rng(59);
  for (int i = 0; i < 6; ++i) {
    Polytope P = random_simplex(5, 2, rng);
    CHECK(ehrhart_counts(P) == ehrhart_counts_boxscan(P, Int(50000000L)));
  }
}

TEST_CASE("huge coordinates: a far-translated simplex keeps its h*") {
  // translation by ~1e15 exercises the arbitrary-precision paths in the
  // facet system and the model mapping without changing any invariant
  Int big("1000000000000007");
  Polytope R = reeve_simplex();
  std::vector<IntVec> moved;
  for (const IntVec& v : R.vertices()) {
    IntVec w = v;
    w[0] += big;
    w[1] -= big;
    w[2] += big * 3;
    moved.push_back(w);
  }
  Polytope M = Polytope::make(moved);
  HStarVector h = h_star(M);
  CHECK(h.entries == ints({1, 0, 1, 0}));
  CHECK(h.codegree == 2);
  CHECK(!is_idp(M).idp);
  SublatticeReport rep = spanning_report(M, h);
  CHECK(rep.q == 2);
  CHECK(rep.h_tilde.degree == 0);
}

TEST_CASE("dim >= 4 uses the fiber enumerator; spot check against expansion") {
  // from h* = (1,2,5): L(k) = C(k+4,4) + 2 C(k+3,4) + 5 C(k+2,4)
  Polytope P = example_parity_4polytope();
  HStarVector h = h_star(P);
  for (long k = 1; k <= 5; ++k) {
    Int expect = ehrhart_eval(h, 4, Int(k));
    CHECK(count_lattice_points(P, Int(k)) == expect);
  }
  CHECK(count_lattice_points(P, 1) == 7);
  CHECK(count_lattice_points(P, 2) == 30);
}

TEST_CASE("non-full-dimensional polytopes count in the affine lattice") {
  // segment (0,0)-(2,2): affine lattice steps by (1,1), so L = (1, 3, 5, ...)
  Polytope seg = Polytope::make({iv({0, 0}), iv({2, 2})});
  CHECK(ehrhart_counts(seg) == ints({1, 3}));
  HStarVector h = h_star(seg);
  CHECK(h.entries == ints({1, 1}));
  CHECK(h.normalized_volume == 2);

  // triangle in the plane x+y+z = 1 with normalized volume 1
  Polytope T = Polytope::make({iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})});
  CHECK(T.affine_dim() == 2);
  CHECK(h_star(T).entries == ints({1, 0, 0}));
}

TEST_CASE("h_star_transform rejects impossible counts") {
  // counts implying a negative h* entry signal an enumeration bug
  CHECK_THROWS_AS(h_star_transform(ints({1, 10, 11}), 2), std::logic_error);
  CHECK_THROWS_AS(h_star_transform(ints({2, 4, 9}), 2), std::logic_error);
  CHECK_THROWS_AS(h_star_transform(ints({1, 4}), 2), std::invalid_argument);
}

TEST_CASE("ehrhart_eval reproduces counts and reciprocity for the reeve simplex") {
  Polytope R = reeve_simplex();
  HStarVector h = h_star(R);
  CHECK(ehrhart_eval(h, 3, Int(0)) == 1);
  CHECK(ehrhart_eval(h, 3, Int(1)) == 4);
  CHECK(ehrhart_eval(h, 3, Int(2)) == 11);
  CHECK(ehrhart_eval(h, 3, Int(3)) == 24);
  // interior of 2P has exactly one point, matching h*_2 = 1
  CHECK(model_interior_points(R, 2).size() == 1);
  CHECK(ehrhart_eval(h, 3, Int(-2)) == -1);
}
