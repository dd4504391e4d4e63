#include "qlcd/report.hpp"

#include <sstream>

#include "qlcd/simplex.hpp"

namespace qlcd {

namespace {

nlohmann::json params_json(const ParameterTriple& p) { return {{"n", p.n}, {"k", p.k}, {"d", p.d}}; }

std::string vector_line(const MultiplicityVector& mv) {
  std::string s;
  for (std::size_t i = 0; i < mv.size(); ++i) s += (i ? " " : "") + std::to_string(mv[i]);
  return s;
}

}  // namespace

ResidueTable residue_table(int k, bool near_optimal) {
  ResidueTable t;
  t.k = k;
  t.near_optimal = near_optimal;
  for (int r = 0; r < static_cast<int>(projective_points(k)); ++r) t.rows.push_back(residue_row(k, r, near_optimal));
  return t;
}

nlohmann::json to_json(const ClassificationReport& r) {
  nlohmann::json j = params_json(r.params);
  j["kind"] = "classification";
  j["count"] = r.count();
  j["method"] = to_string(r.method);
  j["wlog"] = r.wlog;
  j["complete"] = r.complete;
  j["base"] = r.base ? params_json(*r.base) : nlohmann::json(nullptr);
  j["note"] = r.note;
  auto& reps = j["representatives"] = nlohmann::json::array();
  for (const auto& mv : r.representatives) reps.push_back(std::vector<int>(mv.values().begin(), mv.values().end()));
  j["stats"] = {{"nodes", r.stats.nodes},
                {"candidates", r.stats.candidates},
                {"subtrees", r.stats.subtrees},
                {"seconds", r.stats.seconds}};
  return j;
}

nlohmann::json to_json(const TableVerification& v) {
  nlohmann::json j;
  j["kind"] = "table-verification";
  j["table"] = to_string(v.table);
  j["all_match"] = v.all_match();
  auto& cells = j["cells"] = nlohmann::json::array();
  for (const auto& c : v.cells) {
    nlohmann::json cell = params_json(c.params);
    cell["expected"] = c.expected;
    cell["computed"] = c.computed();
    cell["match"] = c.match();
    cell["seconds"] = c.report.stats.seconds;
    cells.push_back(cell);
  }
  auto& skipped = j["skipped"] = nlohmann::json::array();
  for (const auto& p : v.skipped) skipped.push_back(params_json(p));
  return j;
}

nlohmann::json to_json(const VectorBlocksVerification& v) {
  nlohmann::json j;
  j["kind"] = "vector-blocks";
  j["ok"] = v.ok();
  auto& blocks = j["blocks"] = nlohmann::json::array();
  for (const auto& b : v.blocks)
    blocks.push_back({{"n", b.n}, {"d", b.d}, {"listed", b.listed}, {"expected", b.expected}, {"ok", b.ok()}, {"problems", b.problems}});
  return j;
}

nlohmann::json to_json(const ResidueTable& t) {
  nlohmann::json j;
  j["kind"] = "residue-table";
  j["k"] = t.k;
  j["near_optimal"] = t.near_optimal;
  auto& rows = j["rows"] = nlohmann::json::array();
  for (const auto& r : t.rows)
    rows.push_back({{"t", r.t}, {"n", r.length_formula()}, {"d", r.weight_formula()}, {"s_prime", r.s_prime}, {"r", r.r}});
  return j;
}

nlohmann::json to_json(const EquivalenceResult& e) {
  return {{"kind", "equivalence"}, {"k", e.k},         {"n", e.n},        {"backend", e.backend},
          {"equivalent", e.equivalent}, {"key_a", e.key_a}, {"key_b", e.key_b}};
}

std::string render_text(const ClassificationReport& r) {
  std::ostringstream os;
  os << to_string(r.params) << " count " << r.count() << " method " << to_string(r.method) << " wlog "
     << (r.wlog ? "on" : "off");
  if (r.base) os << " base " << to_string(*r.base);
  os << '\n';
  if (!r.note.empty()) os << "# " << r.note << '\n';
  for (const auto& mv : r.representatives) {
    if (mv.length() != r.params.n) os << "[+" << r.params.n - mv.length() << " zero] ";
    os << vector_line(mv) << '\n';
  }
  return os.str();
}

std::string render_text(const TableVerification& v) {
  std::ostringstream os;
  os << to_string(v.table) << ": " << v.matches() << "/" << v.cells.size() << " cells match";
  if (!v.skipped.empty()) os << ", " << v.skipped.size() << " skipped (size cap)";
  os << '\n';
  for (const auto& c : v.cells)
    os << "  " << to_string(c.params) << " expected " << c.expected << " computed " << c.computed() << ' '
       << (c.match() ? "ok" : "MISMATCH") << '\n';
  return os.str();
}

std::string render_text(const VectorBlocksVerification& v) {
  std::ostringstream os;
  for (const auto& b : v.blocks) {
    os << "(" << b.n << "," << b.d << ") listed " << b.listed << " expected " << b.expected << ' '
       << (b.ok() ? "ok" : "FAIL") << '\n';
    for (const auto& p : b.problems) os << "  " << p << '\n';
  }
  os << (v.ok() ? "all blocks valid" : "invalid blocks found") << '\n';
  return os.str();
}

std::string render_text(const ResidueTable& t) {
  std::ostringstream os;
  os << "k " << t.k << (t.near_optimal ? " near-optimal" : " optimal") << '\n';
  os << "n\td\ts'\tr\n";
  for (const auto& r : t.rows) os << r.length_formula() << '\t' << r.weight_formula() << '\t' << r.s_prime << '\t' << r.r << '\n';
  return os.str();
}

std::string render_text(const EquivalenceResult& e, bool verbose) {
  std::string s = e.equivalent ? "equivalent\n" : "inequivalent\n";
  if (verbose) s += "backend " + e.backend + "\nkey a " + e.key_a + "\nkey b " + e.key_b + "\n";
  return s;
}

}  // namespace qlcd
