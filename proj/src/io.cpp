#include "ehrkit/io.hpp"

#include <fstream>
#include <sstream>

namespace ehrkit {

using nlohmann::json;

namespace {

const long long kJsonSafeMax = 9007199254740991LL;  // 2^53 - 1

Int int_from_json(const json& v, const char* what) {
  if (v.is_number_integer()) return Int(static_cast<long>(v.get<long long>()));
  if (v.is_string()) return Int(v.get<std::string>());
  throw ParseError(std::string(what) + ": expected integer", 0, 0);
}

std::string file_stem(const std::string& path) {
  size_t slash = path.find_last_of("/\\");
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  size_t dot = base.find_last_of('.');
  return dot == std::string::npos ? base : base.substr(0, dot);
}

LoadedPolytope parse_polytope_json(const std::string& content, const std::string& fallback) {
  json j;
  try {
    j = json::parse(content);
  } catch (const json::parse_error& e) {
    throw ParseError("invalid JSON: " + std::string(e.what()), 1, e.byte);
  }
  if (!j.contains("ambient") || !j.contains("vertices"))
    throw ParseError("polytope JSON needs \"ambient\" and \"vertices\"", 1, 1);
  size_t n = j["ambient"].get<size_t>();
  std::vector<IntVec> pts;
  for (const json& row : j["vertices"]) {
    IntVec v;
    for (const json& x : row) v.push_back(int_from_json(x, "vertex entry"));
    if (v.size() != n)
      throw ParseError("vertex has " + std::to_string(v.size()) + " entries, ambient is " +
                           std::to_string(n),
                       1, 1);
    pts.push_back(std::move(v));
  }
  if (pts.empty()) throw ParseError("no vertices", 1, 1);
  LoadedPolytope lp{Polytope::make(pts), fallback};
  if (j.contains("name")) lp.name = j["name"].get<std::string>();
  return lp;
}

}  // namespace

LoadedPolytope parse_polytope(const std::string& content, const std::string& fallback_name) {
  size_t first = content.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ParseError("empty input", 1, 1);
  if (content[first] == '{') return parse_polytope_json(content, fallback_name);

  std::istringstream in(content);
  std::string line;
  size_t lineno = 0;
  size_t ambient = 0;
  bool have_header = false;
  std::vector<IntVec> pts;
  while (std::getline(in, line)) {
    ++lineno;
    size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream ls(line);
    if (!have_header) {
      std::string kw;
      ls >> kw;
      if (kw != "ambient")
        throw ParseError("expected \"ambient <n>\" header, got \"" + kw + "\"", lineno, pos + 1);
      if (!(ls >> ambient) || ambient == 0)
        throw ParseError("bad ambient dimension", lineno, pos + 1);
      have_header = true;
      continue;
    }
    IntVec v;
    std::string tok;
    while (ls >> tok) {
      try {
        v.emplace_back(tok);
      } catch (const std::invalid_argument&) {
        size_t col = line.find(tok);
        throw ParseError("bad integer \"" + tok + "\"",
                         lineno, col == std::string::npos ? 1 : col + 1);
      }
    }
    if (v.size() != ambient)
      throw ParseError("vertex has " + std::to_string(v.size()) + " entries, ambient is " +
                           std::to_string(ambient),
                       lineno, pos + 1);
    pts.push_back(std::move(v));
  }
  if (!have_header) throw ParseError("missing \"ambient <n>\" header", lineno ? lineno : 1, 1);
  if (pts.empty()) throw ParseError("no vertices", lineno, 1);
  return {Polytope::make(pts), fallback_name};
}

LoadedPolytope load_polytope_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_polytope(buf.str(), file_stem(path));
}

std::string serialize_polytope_text(const Polytope& P) {
  std::ostringstream os;
  os << "ambient " << P.ambient_dim() << "\n";
  for (const IntVec& v : P.vertices()) {
    for (size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    os << "\n";
  }
  return os.str();
}

json json_int(const Int& v) {
  if (v.fits_slong_p()) {
    long x = v.get_si();
    if (x <= kJsonSafeMax && x >= -kJsonSafeMax) return json(static_cast<long long>(x));
  }
  return json(v.get_str());
}

json serialize_polytope_json(const Polytope& P, const std::string& name) {
  json j;
  j["ambient"] = P.ambient_dim();
  if (!name.empty()) j["name"] = name;
  json verts = json::array();
  for (const IntVec& v : P.vertices()) {
    json row = json::array();
    for (const Int& x : v) row.push_back(json_int(x));
    verts.push_back(row);
  }
  j["vertices"] = verts;
  return j;
}

namespace {

json hstar_to_json(const HStarVector& h) {
  json a = json::array();
  for (const Int& e : h.entries) a.push_back(json_int(e));
  return a;
}

json idp_to_json(const IdpResult& r) {
  json j;
  j["value"] = r.idp;
  if (r.witness) {
    json w;
    w["degree"] = r.witness->first;
    json pt = json::array();
    for (const Int& x : r.witness->second) pt.push_back(json_int(x));
    w["point"] = pt;
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

json profile_to_json(const GeneratorProfile& p) {
  json j = json::object();
  for (const auto& [k, g] : p.counts) j[std::to_string(k)] = json_int(g);
  return j;
}

json spanning_to_json(const SublatticeReport& s) {
  json j;
  j["value"] = s.is_spanning;
  j["q"] = json_int(s.q);
  j["h_tilde"] = hstar_to_json(s.h_tilde);
  j["deg_tilde"] = s.h_tilde.degree;
  j["affine_relative"] = s.affine_relative;
  return j;
}

json level_to_json(const LevelReport& l) {
  json j;
  j["value"] = l.is_level;
  j["generator_degrees"] = l.canonical_generator_degrees;
  return j;
}

json implications_to_json(const ImplicationReport& im) {
  json j;
  j["degree_two"] = im.degree_two;
  j["h1_ge_h2"] = im.a_h1_ge_h2;
  j["h1p1_ndiv_h2"] = im.b_h1p1_ndiv_h2;
  j["idp"] = im.c_idp;
  j["spanning"] = im.d_spanning;
  j["deg_tilde_ne_1"] = im.e_deg_tilde_ne_1;
  j["level"] = im.f_level;
  j["violated_arrows"] = im.violated_arrows;
  return j;
}

json report_skeleton(const Polytope& P, const std::string& name, const HStarVector& h) {
  json j;
  j["schema_version"] = 1;
  j["name"] = name;
  j["ambient"] = P.ambient_dim();
  j["dim"] = P.affine_dim();
  j["hstar"] = hstar_to_json(h);
  j["degree"] = h.degree;
  j["codegree"] = h.codegree;
  j["volume"] = json_int(h.normalized_volume);
  return j;
}

}  // namespace

json invariants_report(const Polytope& P, const std::string& name, const ReportOptions& opt) {
  HStarVector h = h_star(P);
  json j = report_skeleton(P, name, h);
  PolytopeRecord rec;
  rec.polytope = P;
  rec.h = h;
  const bool monoid_data = opt.idp || opt.spanning || opt.level || opt.implications;
  if (monoid_data) {
    rec.idp = is_idp(P, h);
    rec.profile = generator_profile(P, h);
    rec.sublattice = spanning_report(P, h);
    rec.level = is_level(P, h);
  }
  if (opt.idp || opt.implications) j["idp"] = idp_to_json(rec.idp);
  if (opt.idp) j["generators_by_degree"] = profile_to_json(rec.profile);
  if (opt.spanning || opt.implications) j["spanning"] = spanning_to_json(rec.sublattice);
  if (opt.level || opt.implications) j["level"] = level_to_json(rec.level);
  if (opt.implications) j["implications"] = implications_to_json(implication_report(rec));
  if (opt.betti) {
    json cells = json::array();
    for (size_t p = 0; p <= opt.betti->first; ++p)
      for (size_t jj = p; jj <= opt.betti->second; ++jj) {
        json cell;
        cell["p"] = p;
        cell["j"] = jj;
        cell["value"] = json_int(koszul_betti(P, p, jj));
        cells.push_back(cell);
      }
    j["betti"] = cells;
  }
  if (opt.toric) {
    json t = json::object();
    for (const auto& [jj, c] : toric_generator_counts(P, *opt.toric))
      t[std::to_string(jj)] = json_int(c);
    j["toric_generator_degrees"] = t;
  }
  return j;
}

json record_to_json(const PolytopeRecord& rec) {
  json j = report_skeleton(rec.polytope, rec.name, rec.h);
  j["idp"] = idp_to_json(rec.idp);
  j["generators_by_degree"] = profile_to_json(rec.profile);
  j["spanning"] = spanning_to_json(rec.sublattice);
  j["level"] = level_to_json(rec.level);
  j["implications"] = implications_to_json(rec.implications);
  j["vertices"] = serialize_polytope_json(rec.polytope, rec.name)["vertices"];
  j["violations"] = rec.violations;
  j["external_violations"] = rec.external_violations;
  return j;
}

json summary_to_json(const CorpusSummary& sum) {
  json j;
  j["schema_version"] = 1;
  j["generated_attempts"] = sum.generated_attempts;
  j["accepted"] = sum.accepted;
  j["violation_count"] = sum.violation_count;
  j["external_violation_count"] = sum.external_violation_count;
  json wit = json::object();
  for (const auto& [k, v] : sum.non_implication_witnesses) wit[k] = v;
  j["non_implication_witnesses"] = wit;
  size_t deg2 = 0, idp = 0, spanning = 0, level = 0;
  for (const PolytopeRecord& r : sum.records) {
    if (r.implications.degree_two) ++deg2;
    if (r.idp.idp) ++idp;
    if (r.sublattice.is_spanning) ++spanning;
    if (r.level.is_level) ++level;
  }
  j["predicate_counts"] = {{"degree_two", deg2}, {"idp", idp}, {"spanning", spanning},
                           {"level", level}, {"total", sum.records.size()}};
  return j;
}

namespace {

void need(const json& j, const char* key, const char* type, std::vector<std::string>& errs) {
  if (!j.contains(key)) {
    errs.push_back(std::string("missing required field \"") + key + "\"");
    return;
  }
  const json& v = j.at(key);
  std::string t = type;
  bool ok = (t == "string" && v.is_string()) || (t == "bool" && v.is_boolean()) ||
            (t == "uint" && v.is_number_integer() && v.get<long long>() >= 0) ||
            (t == "object" && v.is_object()) || (t == "array" && v.is_array()) ||
            (t == "int_or_string" && (v.is_number_integer() || v.is_string()));
  if (!ok) errs.push_back(std::string("field \"") + key + "\" is not of type " + type);
}

bool is_encoded_int(const json& v) { return v.is_number_integer() || v.is_string(); }

}  // namespace

std::vector<std::string> validate_report(const json& j) {
  std::vector<std::string> errs;
  need(j, "schema_version", "uint", errs);
  need(j, "name", "string", errs);
  need(j, "ambient", "uint", errs);
  need(j, "dim", "uint", errs);
  need(j, "hstar", "array", errs);
  need(j, "degree", "uint", errs);
  need(j, "codegree", "uint", errs);
  need(j, "volume", "int_or_string", errs);
  if (j.contains("hstar"))
    for (const json& e : j["hstar"])
      if (!is_encoded_int(e)) errs.push_back("hstar entries must be integers");
  if (j.contains("idp")) {
    need(j["idp"], "value", "bool", errs);
    if (!j["idp"].contains("witness")) errs.push_back("idp.witness missing (may be null)");
  }
  if (j.contains("spanning")) {
    const json& s = j["spanning"];
    need(s, "value", "bool", errs);
    need(s, "q", "int_or_string", errs);
    need(s, "h_tilde", "array", errs);
    need(s, "deg_tilde", "uint", errs);
  }
  if (j.contains("level")) {
    need(j["level"], "value", "bool", errs);
    need(j["level"], "generator_degrees", "array", errs);
  }
  if (j.contains("betti")) {
    for (const json& cell : j["betti"]) {
      need(cell, "p", "uint", errs);
      need(cell, "j", "uint", errs);
      need(cell, "value", "int_or_string", errs);
    }
  }
  if (j.contains("implications")) {
    const json& im = j["implications"];
    need(im, "degree_two", "bool", errs);
    need(im, "violated_arrows", "array", errs);
  }
  if (j.contains("generators_by_degree") && !j["generators_by_degree"].is_object())
    errs.push_back("generators_by_degree must be an object");
  if (j.contains("toric_generator_degrees") && !j["toric_generator_degrees"].is_object())
    errs.push_back("toric_generator_degrees must be an object");
  return errs;
}

}  // namespace ehrkit
