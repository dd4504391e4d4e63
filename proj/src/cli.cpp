#include "qlcd/cli.hpp"

#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qlcd/classify.hpp"
#include "qlcd/equivalence.hpp"
#include "qlcd/errors.hpp"
#include "qlcd/report.hpp"
#include "qlcd/simplex.hpp"
#include "qlcd/vector_file.hpp"
#include "qlcd/verify.hpp"

namespace qlcd {

namespace {

/// Bad command-line input detected after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::optional<int> n, k, d;
  bool near_optimal = false;
  bool no_wlog = false;
  bool all_classes = false;
  unsigned threads = 1;
  bool json = false;
  std::string out_path;
  bool long_run = false;
  std::string checkpoint_dir;
  // verify
  std::string table;
  bool table5 = false;
  bool shift = false;
  int max_n = -1;
  // equiv / import
  std::string backend = "auto";
  bool verbose = false;
  std::vector<std::string> operands;
};

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out, std::ostream& err) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out_path);
  if (!f) throw UsageError("cannot write " + cfg.out_path);
  f << text;
  err << "wrote " << cfg.out_path << '\n';
}

template <class T>
std::string render(const RunConfig& cfg, const T& value) {
  return cfg.json ? to_json(value).dump(2) + "\n" : render_text(value);
}

ParameterTriple resolve_parameters(const RunConfig& cfg) {
  if (!cfg.n || !cfg.k) throw UsageError("--n and --k are required");
  const int n = *cfg.n, k = *cfg.k;
  if (k != 2 && k != 3) throw UsageError("--k must be 2 or 3");
  if (n < 1) throw UsageError("--n must be positive");
  if (cfg.near_optimal && k != 2) throw UsageError("--near-optimal is only defined for k = 2");
  if (cfg.d) {
    if (cfg.near_optimal) throw UsageError("give either --d or --near-optimal");
    if (*cfg.d < 1 || *cfg.d > n) throw UsageError("--d must lie in 1..n");
    return {n, k, *cfg.d};
  }
  try {
    return {n, k, target_weight(n, k, cfg.near_optimal)};
  } catch (const DomainError& e) {
    throw UsageError(std::string("cannot derive d: ") + e.what());
  }
}

/// Length the search actually runs at for classify / export.
int search_length(const ParameterTriple& p, bool all_classes) {
  if (all_classes) return p.n;
  const ReductionData rd = reduction_data(p);
  return rd.applicable ? rd.base.n : p.n;
}

void guard_long_run(const RunConfig& cfg, int k, int length) {
  if (k == 3 && length > kDeskMaxLength && !cfg.long_run)
    throw UsageError("dimension-3 searches above length " + std::to_string(kDeskMaxLength) +
                     " can take hours; pass --long-run");
}

ClassifyOptions classify_options(const RunConfig& cfg, const ParameterTriple& p, std::ostream& err) {
  ClassifyOptions o;
  o.wlog = !cfg.no_wlog;
  o.threads = std::max(1u, cfg.threads);
  o.stop = &interrupt_flag();
  if (!cfg.checkpoint_dir.empty()) {
    std::ostringstream name;
    name << "classify-k" << p.k << "-n" << p.n << "-d" << p.d << (o.wlog ? "" : "-nowlog") << ".json";
    o.checkpoint = std::filesystem::path(cfg.checkpoint_dir) / name.str();
  }
  if (cfg.long_run)
    o.progress = [&err](const SearchStats& s) {
      err << "progress: " << s.subtrees << " subtrees, " << s.nodes << " nodes, " << s.seconds << " s\n";
    };
  return o;
}

ClassificationReport run_classification(const RunConfig& cfg, const ParameterTriple& p, std::ostream& err) {
  guard_long_run(cfg, p.k, search_length(p, cfg.all_classes));
  ClassifyOptions o = classify_options(cfg, p, err);
  if (cfg.all_classes) {
    o.dual_min_2 = false;
    o.checkpoint.reset();
    return classify_direct(p, o);
  }
  return classify_via_reduction(p, o);
}

int cmd_classify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const ParameterTriple p = resolve_parameters(cfg);
  const ClassificationReport r = run_classification(cfg, p, err);
  emit(cfg, render(cfg, r), out, err);
  if (!r.complete) {
    err << "interrupted; progress saved" << (cfg.checkpoint_dir.empty() ? " nowhere (no --checkpoint-dir)" : "") << '\n';
    return kExitInterrupted;
  }
  if (const std::string why = validate_report(r); !why.empty()) {
    err << "validation failed: " << why << '\n';
    return kExitInvalid;
  }
  return kExitOk;
}

int cmd_tables(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const int k = cfg.k.value_or(2);
  if (k != 2 && k != 3) throw UsageError("--k must be 2 or 3");
  if (cfg.near_optimal && k != 2) throw UsageError("--near-optimal is only defined for k = 2");
  emit(cfg, render(cfg, residue_table(k, cfg.near_optimal)), out, err);
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.table.empty() && !cfg.table5 && !cfg.shift) throw UsageError("verify needs --table, --table5 or --shift");
  bool ok = true;
  std::string text;
  nlohmann::json docs = nlohmann::json::array();
  ClassifyOptions o;
  o.threads = std::max(1u, cfg.threads);
  o.wlog = !cfg.no_wlog;
  o.stop = &interrupt_flag();

  if (!cfg.table.empty()) {
    TableId id;
    try {
      id = parse_table_id(cfg.table);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
    int max_n = cfg.max_n;
    if (id == TableId::Dim3Optimal && !cfg.long_run) {
      if (max_n < 0) max_n = kDeskMaxLength;
      guard_long_run(cfg, 3, max_n);
    }
    const TableVerification v = verify_table(id, max_n, o);
    for (const auto& c : v.cells)
      if (!c.match())
        err << "mismatch at " << to_string(c.params) << ": expected " << c.expected << ", computed " << c.computed()
            << (c.report.complete ? "" : " (interrupted)") << '\n';
    ok = ok && v.all_match();
    text += render_text(v);
    docs.push_back(to_json(v));
  }
  if (cfg.table5) {
    const VectorBlocksVerification v = verify_table5_vectors();
    for (const auto& b : v.blocks)
      for (const auto& p : b.problems) err << "(" << b.n << "," << b.d << "): " << p << '\n';
    ok = ok && v.ok();
    text += render_text(v);
    docs.push_back(to_json(v));
  }
  if (cfg.shift) {
    const ParameterTriple small = resolve_parameters(cfg);
    const int block = static_cast<int>(projective_points(small.k));
    const ParameterTriple large{small.n + block, small.k, small.d + static_cast<int>(pow4(small.k - 1))};
    guard_long_run(cfg, small.k, large.n);
    const ClassificationReport rs = classify_direct(small, o);
    const ClassificationReport rl = classify_direct(large, o);
    const bool holds = rs.complete && rl.complete && verify_shift_property(rs, rl);
    if (!holds) err << "shift property fails between " << to_string(small) << " and " << to_string(large) << '\n';
    ok = ok && holds;
    text += "shift " + to_string(small) + " -> " + to_string(large) + ": " + (holds ? "holds" : "FAILS") + "\n";
    docs.push_back({{"kind", "shift-check"},
                    {"smaller", {{"n", small.n}, {"k", small.k}, {"d", small.d}, {"count", rs.count()}}},
                    {"larger", {{"n", large.n}, {"k", large.k}, {"d", large.d}, {"count", rl.count()}}},
                    {"holds", holds}});
  }
  if (cfg.json) emit(cfg, (docs.size() == 1 ? docs[0] : nlohmann::json{{"kind", "verification"}, {"results", docs}}).dump(2) + "\n", out, err);
  else emit(cfg, text, out, err);
  return ok ? kExitOk : kExitMismatch;
}

MultiplicityVector parse_operand(const std::string& operand, std::optional<int> k) {
  if (std::filesystem::is_regular_file(operand)) {
    const VectorFile f = read_vector_file(operand);
    if (f.vectors.size() != 1) throw UsageError(operand + ": expected a file with exactly one vector");
    return f.vectors.front();
  }
  std::vector<int> values;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw UsageError("'" + token + "' is not an integer");
    if (v < 0) throw UsageError("negative entry in " + operand);
    values.push_back(static_cast<int>(v));
    token.clear();
  };
  for (char c : operand) {
    if (c == ',' || c == ' ' || c == '(' || c == ')' || c == '\t') flush();
    else token += c;
  }
  flush();
  int dim = k.value_or(0);
  if (dim == 0)
    for (int cand = 1; cand <= 6; ++cand)
      if (projective_points(cand) == values.size()) dim = cand;
  if (dim < 1 || projective_points(dim) != values.size())
    throw UsageError("'" + operand + "' has " + std::to_string(values.size()) + " entries, not a simplex length");
  return {dim, std::move(values)};
}

int cmd_equiv(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.operands.size() != 2) throw UsageError("equiv takes two vectors or vector files");
  const MultiplicityVector a = parse_operand(cfg.operands[0], cfg.k);
  const MultiplicityVector b = parse_operand(cfg.operands[1], cfg.k);
  if (a.dimension() != b.dimension()) throw UsageError("operands have different k");
  if (a.length() != b.length()) throw UsageError("operands have different n");
  Code ca = build_code(a);
  Code cb = build_code(b);

  EquivalenceBackend be = EquivalenceBackend::Auto;
  if (cfg.backend == "pgl") be = EquivalenceBackend::Pgl;
  else if (cfg.backend == "digraph") be = EquivalenceBackend::Digraph;
  else if (cfg.backend == "both") be = EquivalenceBackend::Both;
  const bool pgl_ok = a.dimension() == 2 || a.dimension() == 3;
  if (be == EquivalenceBackend::Pgl && !pgl_ok) throw UsageError("the pgl backend supports k = 2, 3 only");

  EquivalenceResult res;
  res.k = a.dimension();
  res.n = a.length();
  res.backend = cfg.backend;
  res.equivalent = codes_equivalent(ca, cb, be);
  const Backend key_backend = (be == EquivalenceBackend::Digraph || !pgl_ok) ? Backend::Digraph : Backend::Pgl;
  res.key_a = to_string(canonical_key(ca, key_backend));
  res.key_b = to_string(canonical_key(cb, key_backend));
  emit(cfg, cfg.json ? to_json(res).dump(2) + "\n" : render_text(res, cfg.verbose), out, err);
  return res.equivalent ? kExitOk : kExitMismatch;
}

int cmd_export(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.all_classes) throw UsageError("export writes classes without zero coordinates only");
  const ParameterTriple p = resolve_parameters(cfg);
  const ClassificationReport r = run_classification(cfg, p, err);
  if (!r.complete) {
    err << "interrupted; nothing exported\n";
    return kExitInterrupted;
  }
  if (const std::string why = validate_report(r); !why.empty()) {
    err << "validation failed: " << why << '\n';
    return kExitInvalid;
  }
  RunConfig text_cfg = cfg;
  text_cfg.json = false;
  emit(text_cfg, format_vector_file(to_vector_file(r)), out, err);
  return kExitOk;
}

int cmd_import(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.operands.size() != 1) throw UsageError("import takes one vector file");
  VectorFile f;
  try {
    f = read_vector_file(cfg.operands[0]);
  } catch (const ParseError& e) {
    err << cfg.operands[0] << ": " << e.what() << '\n';
    return kExitUsage;
  }
  if (f.params.k != 2 && f.params.k != 3) {
    err << cfg.operands[0] << ": only k = 2, 3 files can be validated\n";
    return kExitUsage;
  }
  if (const std::string why = validate_representatives(f.params, f.vectors, false); !why.empty()) {
    err << cfg.operands[0] << ": invalid vector " << why << '\n';
    return kExitInvalid;
  }
  if (cfg.json) {
    nlohmann::json j{{"kind", "import"}, {"n", f.params.n}, {"k", f.params.k}, {"d", f.params.d},
                     {"count", f.vectors.size()}, {"valid", true}};
    auto& canon = j["canonical"] = nlohmann::json::array();
    std::vector<MultiplicityVector> forms;
    for (const auto& mv : f.vectors) forms.push_back(canonical_vector(mv));
    std::sort(forms.begin(), forms.end());
    for (const auto& mv : forms) canon.push_back(std::vector<int>(mv.values().begin(), mv.values().end()));
    emit(cfg, j.dump(2) + "\n", out, err);
  } else {
    emit(cfg, to_string(f.params) + " count " + std::to_string(f.vectors.size()) + " valid\n", out, err);
  }
  return kExitOk;
}

void add_parameters(CLI::App* app, RunConfig& cfg) {
  app->add_option("--n", cfg.n, "code length")->check(CLI::PositiveNumber);
  app->add_option("--k", cfg.k, "dimension (2 or 3)");
  app->add_option("--d", cfg.d, "minimum weight (default: the largest LCD value)");
  app->add_flag("--near-optimal", cfg.near_optimal, "use d = d4(n,2) - 1 (d4(n,2) - 2 when n = 3 mod 5)");
}

void add_search(CLI::App* app, RunConfig& cfg) {
  app->add_flag("--no-wlog", cfg.no_wlog, "search without the normal-form constraints");
  app->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
  app->add_flag("--long-run", cfg.long_run, "allow dimension-3 searches above length 30");
}

}  // namespace

std::atomic<bool>& interrupt_flag() {
  static std::atomic<bool> flag{false};
  return flag;
}

namespace {
void on_interrupt(int) { interrupt_flag().store(true); }
}  // namespace

void install_interrupt_handler() {
  static_assert(std::atomic<bool>::is_always_lock_free);
  std::signal(SIGINT, on_interrupt);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Classification of quaternary Hermitian LCD codes of dimension 2 and 3", "qlcd"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto* classify = app.add_subcommand("classify", "classify [n,k,d] codes up to equivalence");
  add_parameters(classify, cfg);
  add_search(classify, cfg);
  classify->add_flag("--all-classes", cfg.all_classes, "also count classes with zero coordinates");
  classify->add_flag("--json", cfg.json, "JSON output");
  classify->add_option("--out", cfg.out_path, "write output to this file");
  classify->add_option("--checkpoint-dir", cfg.checkpoint_dir, "directory for resumable checkpoints");

  auto* tables = app.add_subcommand("tables", "print d, s' and r for every residue class of n");
  tables->add_option("--k", cfg.k, "dimension (2 or 3)");
  tables->add_flag("--near-optimal", cfg.near_optimal, "rows for the near-optimal weights");
  tables->add_flag("--json", cfg.json, "JSON output");
  tables->add_option("--out", cfg.out_path, "write output to this file");

  auto* verify = app.add_subcommand("verify", "re-run reference class counts");
  verify->add_option("--table", cfg.table, "dim2-optimal, dim2-near-optimal or dim3-optimal");
  verify->add_option("--max-n", cfg.max_n, "skip cells with larger n");
  verify->add_flag("--table5", cfg.table5, "check the listed near-optimal [n,2] representatives");
  verify->add_flag("--shift", cfg.shift, "check the subtract-one relation between n and n + (4^k-1)/3");
  add_parameters(verify, cfg);
  add_search(verify, cfg);
  verify->add_flag("--json", cfg.json, "JSON output");
  verify->add_option("--out", cfg.out_path, "write output to this file");

  auto* equiv = app.add_subcommand("equiv", "decide whether two codes C_k(m) are equivalent");
  equiv->add_option("operands", cfg.operands, "two vectors (e.g. 2,1,1,1,1) or one-vector files")->expected(2);
  equiv->add_option("--k", cfg.k, "dimension (inferred from the vector length by default)");
  equiv->add_option("--backend", cfg.backend, "pgl, digraph, both or auto")
      ->check(CLI::IsMember({"auto", "pgl", "digraph", "both"}));
  equiv->add_flag("--verbose,-v", cfg.verbose, "print canonical keys");
  equiv->add_flag("--json", cfg.json, "JSON output");

  auto* exp = app.add_subcommand("export", "classify and write the representatives as a vector file");
  add_parameters(exp, cfg);
  add_search(exp, cfg);
  exp->add_option("--out", cfg.out_path, "output file (default: standard output)");
  exp->add_option("--checkpoint-dir", cfg.checkpoint_dir, "directory for resumable checkpoints");

  auto* imp = app.add_subcommand("import", "read and re-validate a vector file");
  imp->add_option("file", cfg.operands, "vector file")->expected(1)->required();
  imp->add_flag("--json", cfg.json, "JSON output");

  std::vector<std::string> argv_store{"qlcd"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (classify->parsed()) return cmd_classify(cfg, out, err);
    if (tables->parsed()) return cmd_tables(cfg, out, err);
    if (verify->parsed()) return cmd_verify(cfg, out, err);
    if (equiv->parsed()) return cmd_equiv(cfg, out, err);
    if (exp->parsed()) return cmd_export(cfg, out, err);
    if (imp->parsed()) return cmd_import(cfg, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const ConstructionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    // Unreadable or unwritable files.
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qlcd
