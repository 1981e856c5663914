// ehrkit command-line interface.
//
// Subcommands:
//   invariants <file> --hstar --idp --spanning --level --betti P J
//                     --toric J --implications --all
//   corpus     --seed N --count N --dim D | --dim-min/--dim-max --bound B
//              --degree-filter S --paper-examples --out FILE --summary FILE
//   oracle     <file> --mode hstar|idp
//
// Exit codes: 0 success, 1 verification failure, 2 input error,
//             3 resource cap exceeded.

#include "ehrkit/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace ehrkit;
using nlohmann::json;

namespace {

int run_invariants(const std::string& path, ReportOptions opt) {
  LoadedPolytope lp = load_polytope_file(path);
  if (!opt.any()) opt.set_all();
  json rep = invariants_report(lp.polytope, lp.name, opt);
  auto errs = validate_report(rep);
  if (!errs.empty()) {
    for (const auto& e : errs) std::cerr << "schema violation: " << e << "\n";
    return 1;
  }
  std::cout << rep.dump(2) << "\n";
  return 0;
}

int run_corpus(const CorpusConfig& cfg, const std::string& out_path,
               const std::string& summary_path) {
  CorpusSummary sum = corpus_verify(cfg);

  std::ostream* out = &std::cout;
  std::ofstream out_file;
  if (!out_path.empty()) {
    out_file.open(out_path);
    if (!out_file) {
      std::cerr << "cannot write " << out_path << "\n";
      return 2;
    }
    out = &out_file;
  }
  for (const PolytopeRecord& rec : sum.records) {
    json j = record_to_json(rec);
    auto errs = validate_report(j);
    if (!errs.empty()) {
      for (const auto& e : errs) std::cerr << "schema violation: " << e << "\n";
      return 1;
    }
    *out << j.dump() << "\n";
  }
  json sj = summary_to_json(sum);
  if (!summary_path.empty()) {
    std::ofstream sf(summary_path);
    if (!sf) {
      std::cerr << "cannot write " << summary_path << "\n";
      return 2;
    }
    sf << sj.dump(2) << "\n";
  } else {
    std::cerr << sj.dump(2) << "\n";
  }
  if (sum.violation_count > 0 || sum.external_violation_count > 0) {
    std::cerr << "FAIL: " << sum.violation_count << " violations, "
              << sum.external_violation_count << " external-theorem violations\n";
    for (const PolytopeRecord& rec : sum.records) {
      if (rec.violations.empty() && rec.external_violations.empty()) continue;
      std::cerr << "  offending polytope (" << rec.name << "):\n"
                << serialize_polytope_text(rec.polytope);
      for (const auto& v : rec.violations) std::cerr << "    " << v << "\n";
      for (const auto& v : rec.external_violations) std::cerr << "    " << v << "\n";
    }
    return 1;
  }
  return 0;
}

int run_oracle(const std::string& path, const std::string& mode) {
  LoadedPolytope lp = load_polytope_file(path);
  const Polytope& P = lp.polytope;
  if (mode == "hstar") {
    std::vector<Int> slow = ehrhart_counts_boxscan(P, Int(50000000L));
    std::vector<Int> slow_h = h_star_transform(slow, P.affine_dim());
    HStarVector fast = h_star(P);
    bool ok = (slow_h == fast.entries);
    std::cout << "mode hstar: fast=[";
    for (size_t i = 0; i < fast.entries.size(); ++i)
      std::cout << (i ? "," : "") << fast.entries[i];
    std::cout << "] boxscan=[";
    for (size_t i = 0; i < slow_h.size(); ++i) std::cout << (i ? "," : "") << slow_h[i];
    std::cout << "] -> " << (ok ? "match" : "MISMATCH") << "\n";
    return ok ? 0 : 1;
  }
  if (mode == "idp") {
    Int vol = h_star(P).normalized_volume;
    if (P.affine_dim() > 4 || vol > 200)
      throw CapExceeded("oracle idp: refusing dim > 4 or volume > 200 input");
    IdpResult fast = is_idp(P);
    IdpResult slow = is_idp_bruteforce(P);
    bool ok = fast.idp == slow.idp;
    std::cout << "mode idp: inductive=" << (fast.idp ? "true" : "false")
              << " bruteforce=" << (slow.idp ? "true" : "false") << " -> "
              << (ok ? "match" : "MISMATCH") << "\n";
    return ok ? 0 : 1;
  }
  std::cerr << "unknown oracle mode \"" << mode << "\"\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ehrhart-theoretic invariants of lattice polytopes"};
  app.require_subcommand(1);

  auto* inv = app.add_subcommand("invariants", "compute invariants of one polytope");
  std::string inv_path;
  ReportOptions opt;
  bool all = false;
  std::vector<size_t> betti_args;
  size_t toric_j = 0;
  inv->add_option("file", inv_path, "polytope file")->required();
  inv->add_flag("--hstar", opt.hstar, "h*-vector, degree, codegree, volume");
  inv->add_flag("--idp", opt.idp, "IDP check with witness and generator profile");
  inv->add_flag("--spanning", opt.spanning, "sublattice index q and P~ data");
  inv->add_flag("--level", opt.level, "levelness of the canonical module");
  inv->add_flag("--implications", opt.implications, "degree-2 implication predicates");
  inv->add_option("--betti", betti_args, "Koszul Betti numbers up to P_MAX J_MAX")
      ->expected(2);
  inv->add_option("--toric", toric_j, "toric generator counts up to J_MAX");
  inv->add_flag("--all", all, "everything except betti/toric");

  auto* cor = app.add_subcommand("corpus", "random-corpus theorem verification");
  CorpusConfig cfg;
  cfg.count = 100;
  size_t dim_single = 0;
  long degree_filter = -1;
  std::string out_path, summary_path;
  cor->add_option("--seed", cfg.seed, "PRNG seed");
  cor->add_option("--count", cfg.count, "number of random polytopes");
  cor->add_option("--dim", dim_single, "fixed dimension");
  cor->add_option("--dim-min", cfg.dim_min, "minimum dimension");
  cor->add_option("--dim-max", cfg.dim_max, "maximum dimension");
  cor->add_option("--bound", cfg.entry_bound, "entry bound for random simplices");
  cor->add_option("--degree-filter", degree_filter, "keep only this h*-degree");
  cor->add_option("--nonsimplex-percent", cfg.nonsimplex_percent,
                  "share of non-simplex members");
  cor->add_flag("--paper-examples", cfg.inject_paper_examples,
                "inject the named example polytopes");
  cor->add_option("--out", out_path, "JSONL output file (default stdout)");
  cor->add_option("--summary", summary_path, "summary JSON file (default stderr)");

  auto* ora = app.add_subcommand("oracle", "cross-check fast paths against brute force");
  std::string ora_path, ora_mode;
  ora->add_option("file", ora_path, "polytope file")->required();
  ora->add_option("--mode", ora_mode, "hstar or idp")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (inv->parsed()) {
      if (all) opt.set_all();
      if (!betti_args.empty()) opt.betti = {betti_args[0], betti_args[1]};
      if (toric_j > 0) opt.toric = toric_j;
      return run_invariants(inv_path, opt);
    }
    if (cor->parsed()) {
      if (dim_single > 0) cfg.dim_min = cfg.dim_max = dim_single;
      if (degree_filter >= 0) cfg.degree_filter = static_cast<size_t>(degree_filter);
      return run_corpus(cfg, out_path, summary_path);
    }
    if (ora->parsed()) return run_oracle(ora_path, ora_mode);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
