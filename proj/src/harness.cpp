#include "ehrkit/harness.hpp"

#include <algorithm>
#include <sstream>

namespace ehrkit {

Polytope reeve_simplex() {
  return Polytope::make({{Int(0), Int(0), Int(0)},
                         {Int(1), Int(0), Int(0)},
                         {Int(0), Int(1), Int(0)},
                         {Int(1), Int(1), Int(2)}});
}

Polytope example_parity_4polytope() {
  auto v = [](long a, long b, long c, long d) { return IntVec{Int(a), Int(b), Int(c), Int(d)}; };
  return Polytope::make({v(0, 0, 0, 0), v(1, 1, 0, 0), v(1, 0, 1, 0), v(1, 0, 0, 1),
                         v(0, 1, 1, 0), v(0, 1, 0, 1), v(0, 0, 1, 1)});
}

Polytope example_simplex_156() {
  return Polytope::make({{Int(0), Int(0), Int(0)},
                         {Int(1), Int(0), Int(0)},
                         {Int(0), Int(4), Int(0)},
                         {Int(1), Int(0), Int(3)}});
}

Polytope example_simplex_169() {
  return Polytope::make({{Int(0), Int(0), Int(0)},
                         {Int(1), Int(0), Int(0)},
                         {Int(0), Int(4), Int(0)},
                         {Int(1), Int(0), Int(4)}});
}

Polytope unit_cube(size_t dim) {
  std::vector<IntVec> pts;
  for (size_t mask = 0; mask < (size_t{1} << dim); ++mask) {
    IntVec v(dim);
    for (size_t i = 0; i < dim; ++i) v[i] = (mask >> i) & 1;
    pts.push_back(std::move(v));
  }
  return Polytope::make(pts);
}

Polytope unit_simplex(size_t dim) {
  std::vector<IntVec> pts{IntVec(dim, Int(0))};
  for (size_t i = 0; i < dim; ++i) {
    IntVec v(dim, Int(0));
    v[i] = 1;
    pts.push_back(std::move(v));
  }
  return Polytope::make(pts);
}

std::vector<NamedPolytope> paper_examples() {
  return {{"reeve", reeve_simplex()},
          {"parity-4polytope", example_parity_4polytope()},
          {"simplex-156", example_simplex_156()},
          {"reeve-revisited", reeve_simplex()},
          {"simplex-169", example_simplex_169()}};
}

Polytope random_simplex(size_t dim, long entry_bound, Rng& rng) {
  if (dim < 1 || entry_bound < 1)
    throw std::invalid_argument("random_simplex: dim and entry_bound must be >= 1");
  // rows of a lower-triangular HNF-style edge matrix: positive diagonal,
  // entries below a diagonal reduced into [0, diagonal)
  std::vector<IntVec> edges(dim, IntVec(dim, Int(0)));
  for (size_t j = 0; j < dim; ++j) edges[j][j] = rng.range(1, entry_bound);
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = 0; j < i; ++j) {
      long diag = static_cast<long>(edges[j][j].get_si());
      edges[i][j] = rng.range(0, diag - 1);
    }
  std::vector<IntVec> pts{IntVec(dim, Int(0))};
  for (auto& e : edges) pts.push_back(std::move(e));
  return Polytope::make(pts);
}

Polytope random_polytope(size_t dim, long entry_bound, Rng& rng) {
  Polytope S = random_simplex(dim, entry_bound, rng);
  std::vector<IntVec> pts = lattice_points(S, 2);
  if (pts.size() <= dim + 1) return S;
  std::vector<IntVec> subset;
  for (const IntVec& p : pts)
    if (rng.below(2) == 0) subset.push_back(p);
  // always keep the dilated vertices' worth of spread: add random points
  // until the subset has enough to be full-dimensional
  while (subset.size() < dim + 1) subset.push_back(pts[rng.below(pts.size())]);
  Polytope Q = Polytope::make(subset);
  if (Q.affine_dim() != dim) return S;
  return Q;
}

ImplicationReport implication_report(const PolytopeRecord& rec) {
  ImplicationReport r;
  const HStarVector& h = rec.h;
  r.degree_two = (h.degree == 2);
  r.a_h1_ge_h2 = h[1] >= h[2];
  Int div = h[1] + 1;
  r.b_h1p1_ndiv_h2 = (h[2] % div != 0);
  r.c_idp = rec.idp.idp;
  r.d_spanning = rec.sublattice.is_spanning;
  r.e_deg_tilde_ne_1 = (rec.sublattice.h_tilde.degree != 1);
  r.f_level = rec.level.is_level;
  if (!r.degree_two) return r;

  auto arrow = [&](bool from, bool to, const char* name) {
    if (from && !to) r.violated_arrows.push_back(name);
  };
  arrow(r.a_h1_ge_h2, r.b_h1p1_ndiv_h2, "h1>=h2 => h1+1 ndiv h2");
  arrow(r.a_h1_ge_h2, r.c_idp, "h1>=h2 => IDP");
  arrow(r.b_h1p1_ndiv_h2, r.e_deg_tilde_ne_1, "h1+1 ndiv h2 => deg(P~) != 1");
  arrow(r.c_idp, r.d_spanning, "IDP => spanning");
  arrow(r.d_spanning, r.e_deg_tilde_ne_1, "spanning => deg(P~) != 1");
  arrow(r.e_deg_tilde_ne_1, r.f_level, "deg(P~) != 1 => level");
  arrow(r.f_level, r.e_deg_tilde_ne_1, "level => deg(P~) != 1");
  return r;
}

PolytopeRecord analyze_polytope(const std::string& name, const Polytope& P) {
  PolytopeRecord rec;
  rec.name = name;
  rec.polytope = P;
  rec.h = h_star(P);
  rec.idp = is_idp(P, rec.h);
  rec.profile = generator_profile(P, rec.h);
  rec.sublattice = spanning_report(P, rec.h);
  rec.level = is_level(P, rec.h);
  rec.implications = implication_report(rec);
  return rec;
}

namespace {

std::string serialize_vertices(const Polytope& P) {
  std::ostringstream os;
  for (const IntVec& v : P.vertices()) os << vec_to_string(v) << " ";
  return os.str();
}

void check_hstar_invariants(PolytopeRecord& rec) {
  const Polytope& P = rec.polytope;
  const HStarVector& h = rec.h;
  const size_t d = P.affine_dim();
  auto fail = [&](const std::string& what) { rec.violations.push_back(what); };

  Int n_points = count_lattice_points(P, 1);
  Int n_interior(static_cast<long>(model_interior_points(P, 1).size()));
  if (h[1] != n_points - static_cast<long>(d) - 1) fail("h*_1 != #(P cap Z^n) - d - 1");
  if (h[d] != n_interior) fail("h*_d != #(interior P cap Z^n)");
  if (h[d] > h[1]) fail("h*_d > h*_1");
  if (h.normalized_volume < 1) fail("normalized volume < 1");

  // simplices: normalized volume equals |det| of the model edge matrix
  if (P.is_simplex() && d >= 1) {
    IntMatrix edges(d, d);
    const auto& mv = P.model_vertices();
    for (size_t i = 1; i <= d; ++i)
      for (size_t j = 0; j < d; ++j) edges.at(i - 1, j) = mv[i][j] - mv[0][j];
    Int det = bareiss_determinant(edges);
    if (det < 0) det = -det;
    if (det != h.normalized_volume) fail("simplex volume != |det(edge matrix)|");
  }

  // Ehrhart reciprocity spot-check on small dimensions
  if (d <= 3) {
    for (long k = 1; k <= 3; ++k) {
      Int lhs(static_cast<long>(model_interior_points(P, Int(k)).size()));
      Int rhs = ehrhart_eval(h, d, Int(-k));
      if (d % 2) rhs = -rhs;
      if (lhs != rhs) fail("Ehrhart reciprocity failed at k=" + std::to_string(k));
    }
  }
}

void check_corpus_suites(PolytopeRecord& rec, const CorpusConfig& cfg) {
  const Polytope& P = rec.polytope;
  const HStarVector& h = rec.h;
  const size_t d = P.affine_dim();
  const size_t s = h.degree;
  auto fail = [&](const std::string& what) { rec.violations.push_back(what); };

  check_hstar_invariants(rec);

  // Corollary 3.1: if h*_s <= h*_1, generators live in degrees <= s-1.
  if (h[s] <= h[1]) {
    for (const auto& [k, g] : rec.profile.counts)
      if (k >= s && g != 0) fail("Cor 3.1: generator in degree " + std::to_string(k));
  }

  // Corollary 1.2: degree-2 with h*_2 <= h*_1 must be IDP.
  if (s == 2 && h[2] <= h[1] && !rec.idp.idp) fail("Cor 1.2: not IDP");

  if (rec.idp.idp && !rec.sublattice.is_spanning) fail("IDP => spanning failed");

  // Sublattice comparison: h~_1 = h_1, h~_d = h_d, h~_i <= h_i.
  const HStarVector& ht = rec.sublattice.h_tilde;
  if (ht[1] != h[1]) fail("sublattice: h~_1 != h*_1");
  if (ht[d] != h[d]) fail("sublattice: h~_d != h*_d");
  for (size_t i = 0; i <= d; ++i)
    if (ht[i] > h[i]) fail("sublattice: h~_i > h*_i at i=" + std::to_string(i));

  // Proposition 3.4: the h*-criterion implies spanning.
  if (spanning_criterion(h, d) && !rec.sublattice.is_spanning)
    fail("Prop 3.4: criterion holds but not spanning");

  // Proposition 3.6: d >= 5, deg >= 3 forces the criterion to fail.
  if (d >= 5 && s >= 3 && spanning_criterion(h, d))
    fail("Prop 3.6: h*_1 + h*_d >= middle sum");

  // Corollary 3.5(3).
  if (d == 4 && s >= 3 && h[1] + h[4] >= h[2] + h[3]) {
    if (!(h[1] == h[2] && h[2] == h[3] && h[3] == h[4]))
      fail("Cor 3.5(3): equalities h*_1=h*_2=h*_3=h*_4 failed");
  }

  // Lemma 3.8: level implies deg(P~) != deg(P) - 1.
  if (rec.level.is_level && s >= 1 && rec.sublattice.h_tilde.degree == s - 1)
    fail("Lemma 3.8: level but deg(P~) = deg(P) - 1");

  // Theorem 3.7 arrows (degree-2 members only).
  for (const std::string& a : rec.implications.violated_arrows)
    fail("Thm 3.7 arrow violated: " + a);

  // External-theorem sanity: spanning forces h*_1 <= h*_i for 1 <= i < s.
  if (rec.sublattice.is_spanning)
    for (size_t i = 1; i < s; ++i)
      if (h[1] > h[i])
        rec.external_violations.push_back("external-theorem violation (spanning profile): h*_1 > h*_" +
                                          std::to_string(i));

  const size_t n_points = model_lattice_points(P, 1).size();

  // Theorem 2.1 Betti suite on small members.
  if (n_points <= cfg.betti_max_points && h[s] <= h[1]) {
    Int pmax = h[1] - h[s];
    for (Int p = 0; p <= pmax; ++p) {
      size_t pp = static_cast<size_t>(p.get_ui());
      try {
        Int beta = koszul_betti(P, pp, pp + s);
        if (beta != 0)
          fail("Thm 2.1: beta_{" + std::to_string(pp) + "," + std::to_string(pp + s) +
               "} = " + beta.get_str() + " != 0");
      } catch (const CapExceeded&) {
        break;  // strand too large; the suite is explicitly size-gated
      }
    }
  }

  // Cross-check beta_{0,j} (Koszul) against g_j (sumsets) on small members.
  if (n_points <= cfg.betti_max_points) {
    for (const auto& [k, g] : rec.profile.counts) {
      try {
        Int beta = koszul_betti(P, 0, k);
        if (beta != g)
          fail("beta_{0," + std::to_string(k) + "} = " + beta.get_str() +
               " but generator profile gives " + g.get_str());
      } catch (const CapExceeded&) {
        break;
      }
    }
  }

  // Corollary 3.2 via toric generator degrees on small IDP members.
  if (rec.idp.idp && n_points <= cfg.toric_max_points) {
    try {
      auto counts = toric_generator_counts(P, cfg.toric_max_degree);
      if (h[s] <= h[1] - 1) {
        for (const auto& [j, c] : counts)
          if (j > s && c != 0)
            fail("Cor 3.2(1): toric generator in degree " + std::to_string(j));
      }
      Int boundary = count_lattice_points(P, 1) -
                     Int(static_cast<long>(model_interior_points(P, 1).size()));
      bool clean_simplex = P.is_simplex() && boundary == static_cast<long>(d) + 1;
      if (!clean_simplex) {
        auto it = counts.find(d + 1);
        if (it != counts.end() && it->second != 0)
          fail("Cor 3.2(2): non-clean-simplex with toric generator in degree dim+1");
      }
    } catch (const CapExceeded&) {
      // size-gated, skip silently
    }
  }
}

void tally_non_implications(const PolytopeRecord& rec, CorpusSummary& sum) {
  const ImplicationReport& im = rec.implications;
  if (!im.degree_two) return;
  auto tally = [&](bool from, bool to, const char* key) {
    if (from && !to) ++sum.non_implication_witnesses[key];
  };
  tally(im.b_h1p1_ndiv_h2, im.a_h1_ge_h2, "B!=>A");
  tally(im.b_h1p1_ndiv_h2, im.c_idp, "B!=>C");
  tally(im.b_h1p1_ndiv_h2, im.d_spanning, "B!=>D");
  tally(im.c_idp, im.a_h1_ge_h2, "C!=>A");
  tally(im.c_idp, im.b_h1p1_ndiv_h2, "C!=>B");
  tally(im.d_spanning, im.a_h1_ge_h2, "D!=>A");
  tally(im.d_spanning, im.b_h1p1_ndiv_h2, "D!=>B");
  tally(im.d_spanning, im.c_idp, "D!=>C");
  tally(im.e_deg_tilde_ne_1, im.b_h1p1_ndiv_h2, "E!=>B");
  tally(im.e_deg_tilde_ne_1, im.d_spanning, "E!=>D");
  tally(im.b_h1p1_ndiv_h2 && im.c_idp, im.a_h1_ge_h2, "B&C!=>A");
}

}  // namespace

CorpusSummary corpus_verify(const CorpusConfig& cfg) {
  CorpusSummary sum;
  Rng rng(cfg.seed);

  std::vector<std::pair<std::string, Polytope>> inputs;
  if (cfg.inject_paper_examples)
    for (const NamedPolytope& np : paper_examples()) inputs.push_back({np.name, np.polytope});

  const size_t budget = cfg.count * cfg.budget_factor + 100;
  size_t attempts = 0;
  size_t accepted_random = 0;
  while (accepted_random < cfg.count && attempts < budget) {
    ++attempts;
    size_t dim = cfg.dim_min + rng.below(cfg.dim_max - cfg.dim_min + 1);
    bool simplex = rng.below(100) >= cfg.nonsimplex_percent;
    Polytope P = simplex ? random_simplex(dim, cfg.entry_bound, rng)
                         : random_polytope(dim, cfg.entry_bound, rng);
    if (!P.full_dimensional()) continue;
    if (cfg.degree_filter) {
      HStarVector h = h_star(P);
      if (h.degree != *cfg.degree_filter) continue;
    }
    std::ostringstream name;
    name << "corpus-" << cfg.seed << "-" << attempts;
    inputs.push_back({name.str(), P});
    ++accepted_random;
  }
  sum.generated_attempts = attempts;
  sum.accepted = inputs.size();

  for (const auto& [name, P] : inputs) {
    PolytopeRecord rec = analyze_polytope(name, P);
    check_corpus_suites(rec, cfg);
    tally_non_implications(rec, sum);
    sum.violation_count += rec.violations.size();
    sum.external_violation_count += rec.external_violations.size();
    sum.records.push_back(std::move(rec));
  }

  std::stable_sort(sum.records.begin(), sum.records.end(),
                   [](const PolytopeRecord& a, const PolytopeRecord& b) {
                     return serialize_vertices(a.polytope) < serialize_vertices(b.polytope);
                   });
  return sum;
}

}  // namespace ehrkit
