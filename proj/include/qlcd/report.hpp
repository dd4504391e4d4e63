#pragma once

// JSON and text renderings of command results. Every JSON document carries a
// "kind" field; docs/report.schema.json describes all of them. Text output
// never contains timings, so it is byte-identical across runs.

#include <string>
#include <vector>

#include <json.hpp>

#include "qlcd/bounds.hpp"
#include "qlcd/classify.hpp"
#include "qlcd/verify.hpp"

namespace qlcd {

struct ResidueTable {
  int k = 2;
  bool near_optimal = false;
  std::vector<ResidueRow> rows;
};

/// All residue rows t = 0 .. (4^k - 1)/3 - 1.
ResidueTable residue_table(int k, bool near_optimal);

struct EquivalenceResult {
  int k = 0;
  int n = 0;
  std::string backend;
  bool equivalent = false;
  std::string key_a;
  std::string key_b;
};

nlohmann::json to_json(const ClassificationReport& r);
nlohmann::json to_json(const TableVerification& v);
nlohmann::json to_json(const VectorBlocksVerification& v);
nlohmann::json to_json(const ResidueTable& t);
nlohmann::json to_json(const EquivalenceResult& e);

std::string render_text(const ClassificationReport& r);
std::string render_text(const TableVerification& v);
std::string render_text(const VectorBlocksVerification& v);
std::string render_text(const ResidueTable& t);
std::string render_text(const EquivalenceResult& e, bool verbose);

}  // namespace qlcd
