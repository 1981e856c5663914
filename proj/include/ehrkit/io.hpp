#pragma once

// Polytope file formats (plain text and JSON), the JSON report schema,
// and the serialization helpers shared by the CLI and the harness.

#include "ehrkit/harness.hpp"

#include <json.hpp>

#include <string>

namespace ehrkit {

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, size_t line, size_t column)
      : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"),
        line(line),
        column(column) {}
  size_t line;
  size_t column;
};

struct LoadedPolytope {
  Polytope polytope;
  std::string name;  // from the JSON "name" field or the file stem
};

// Text format: first line "ambient <n>", then one vertex per line as n
// space-separated integers. A leading '{' switches to the JSON format
// {"ambient": n, "vertices": [[...], ...], "name": "..."}.
LoadedPolytope parse_polytope(const std::string& content, const std::string& fallback_name);
LoadedPolytope load_polytope_file(const std::string& path);

std::string serialize_polytope_text(const Polytope& P);
nlohmann::json serialize_polytope_json(const Polytope& P, const std::string& name);

struct ReportOptions {
  bool hstar = false;
  bool idp = false;
  bool spanning = false;
  bool level = false;
  bool implications = false;
  std::optional<std::pair<size_t, size_t>> betti;  // (p_max, j_max)
  std::optional<size_t> toric;                     // j_max
  void set_all() {
    hstar = idp = spanning = level = implications = true;
  }
  bool any() const {
    return hstar || idp || spanning || level || implications || betti || toric;
  }
};

// Integers above 2^53-1 in magnitude are serialized as decimal strings.
nlohmann::json json_int(const Int& v);

nlohmann::json invariants_report(const Polytope& P, const std::string& name,
                                 const ReportOptions& opt);

// Full report for a corpus record (everything the harness computed, plus
// the violation lists).
nlohmann::json record_to_json(const PolytopeRecord& rec);

nlohmann::json summary_to_json(const CorpusSummary& sum);

// Structural validation against the shipped report schema
// (schemas/report.schema.json); returns human-readable problems, empty on
// success.
std::vector<std::string> validate_report(const nlohmann::json& report);

}  // namespace ehrkit
