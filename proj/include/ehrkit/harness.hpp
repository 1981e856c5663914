#pragma once

// Random-corpus generation and systematic verification: the degree-2
// implication web, the propositions and corollaries on h*-vectors, the
// generator-degree bounds, and the Betti vanishing suite.

#include "ehrkit/graded.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace ehrkit {

// splitmix64: tiny, seedable, identical output on every platform.
class Rng {
public:
  explicit Rng(uint64_t seed) : state_(seed) {}
  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // uniform in [0, n), n >= 1, by rejection
  uint64_t below(uint64_t n) {
    uint64_t limit = ~0ull - ~0ull % n;
    uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % n;
  }
  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

private:
  uint64_t state_;
};

struct CorpusConfig {
  uint64_t seed = 1;
  size_t count = 100;
  size_t dim_min = 2;
  size_t dim_max = 3;
  long entry_bound = 4;           // diagonal bound for random HNF simplices
  size_t nonsimplex_percent = 25; // share of re-hulled point-subset polytopes
  std::optional<size_t> degree_filter;  // keep only this h*-degree
  size_t budget_factor = 200;     // generation attempts per accepted polytope
  bool inject_paper_examples = false;
  // expensive suites only run on members with few lattice points
  size_t betti_max_points = 12;
  size_t toric_max_points = 12;
  size_t toric_max_degree = 5;
};

// Predicates of the degree-2 implication web for one polytope.
struct ImplicationReport {
  bool degree_two = false;  // arrows are only evaluated when true
  bool a_h1_ge_h2 = false;
  bool b_h1p1_ndiv_h2 = false;
  bool c_idp = false;
  bool d_spanning = false;
  bool e_deg_tilde_ne_1 = false;
  bool f_level = false;
  std::vector<std::string> violated_arrows;  // empty on pass
};

// Everything computed for one corpus member.
struct PolytopeRecord {
  std::string name;
  Polytope polytope;
  HStarVector h;
  IdpResult idp;
  GeneratorProfile profile;
  SublatticeReport sublattice;
  LevelReport level;
  ImplicationReport implications;
  std::vector<std::string> violations;          // hard failures
  std::vector<std::string> external_violations; // cited-theorem sanity failures
};

struct CorpusSummary {
  size_t generated_attempts = 0;
  size_t accepted = 0;
  std::vector<PolytopeRecord> records;
  size_t violation_count = 0;
  size_t external_violation_count = 0;
  // counts of corpus witnesses for each non-implication, keyed like "B!=>D"
  std::map<std::string, size_t> non_implication_witnesses;
};

Polytope random_simplex(size_t dim, long entry_bound, Rng& rng);

// Non-simplex generation: re-hulled random subset of the lattice points of
// a simplex dilate; falls back to the simplex itself when the subset
// degenerates.
Polytope random_polytope(size_t dim, long entry_bound, Rng& rng);

ImplicationReport implication_report(const PolytopeRecord& rec);

// Full per-polytope analysis (h*, IDP, profile, sublattice, level,
// implications) without the corpus-level checks.
PolytopeRecord analyze_polytope(const std::string& name, const Polytope& P);

// Runs the whole verification battery over a random corpus (plus the
// paper examples if configured). Never throws on a mathematical violation:
// violations are recorded in the summary.
CorpusSummary corpus_verify(const CorpusConfig& config);

// The named example polytopes used for golden tests and witness injection.
struct NamedPolytope {
  std::string name;
  Polytope polytope;
};
std::vector<NamedPolytope> paper_examples();

Polytope reeve_simplex();
Polytope example_parity_4polytope();  // 7 vertices, h* = (1,2,5), parity obstruction
Polytope example_simplex_156();       // the 3-simplex with h* = (1,5,6)
Polytope example_simplex_169();       // the 3-simplex with h* = (1,6,9)
Polytope unit_cube(size_t dim);
Polytope unit_simplex(size_t dim);

}  // namespace ehrkit
