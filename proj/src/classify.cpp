#include "qlcd/classify.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "qlcd/equivalence.hpp"
#include "qlcd/errors.hpp"
#include "qlcd/simplex.hpp"

namespace qlcd {

namespace {

constexpr std::size_t kMaxPoints = 21;

__extension__ using Wide = unsigned __int128;

void require_classifiable(int k) {
  if (k != 2 && k != 3) throw DomainError("classification is implemented for k = 2, 3 only");
}

// ---------------------------------------------------------------------------
// Parity Gram matrices. Column h contributes h h^H to G G^H; entry (a,b) is
// stored in bits 2(a k + b). XOR of packed matrices is entrywise addition.

struct GramTables {
  std::vector<std::uint32_t> contribution;  // per point
  std::vector<std::uint8_t> nonsingular;    // per packed k x k matrix
};

GramTables build_gram_tables(int k) {
  const SimplexMatrix& sk = simplex(k);
  const auto kk = static_cast<std::size_t>(k);
  GramTables t;
  for (std::size_t i = 0; i < sk.num_points(); ++i) {
    const auto h = sk.column(i);
    std::uint32_t packed = 0;
    for (std::size_t a = 0; a < kk; ++a)
      for (std::size_t b = 0; b < kk; ++b)
        packed |= static_cast<std::uint32_t>((h[a] * conj(h[b])).bits()) << (2 * (a * kk + b));
    t.contribution.push_back(packed);
  }
  const std::size_t count = std::size_t{1} << (2 * kk * kk);
  t.nonsingular.resize(count);
  F4Matrix m(kk, kk);
  for (std::size_t code = 0; code < count; ++code) {
    for (std::size_t a = 0; a < kk; ++a)
      for (std::size_t b = 0; b < kk; ++b)
        m(a, b) = F4::from_bits(static_cast<std::uint8_t>((code >> (2 * (a * kk + b))) & 3));
    t.nonsingular[code] = is_nonsingular(m) ? 1 : 0;
  }
  return t;
}

const GramTables& gram_tables(int k) {
  static std::once_flag once2, once3;
  static GramTables t2, t3;
  if (k == 2) {
    std::call_once(once2, [] { t2 = build_gram_tables(2); });
    return t2;
  }
  std::call_once(once3, [] { t3 = build_gram_tables(3); });
  return t3;
}

// ---------------------------------------------------------------------------
// Depth-first search over multiplicity vectors.

struct SearchState {
  std::array<int, kMaxPoints> m{};
  std::array<int, kMaxPoints> plane_sum{};  // sum of m over each hyperplane so far
  int remaining = 0;
  int support_sum = 0;  // over the first-row support
  int other_sum = 0;
  std::uint64_t nodes = 0;
};

class Engine {
 public:
  explicit Engine(const SearchConstraints& c);

  [[nodiscard]] std::size_t points() const { return points_; }
  [[nodiscard]] SearchState initial_state() const {
    SearchState s;
    s.remaining = n_;
    return s;
  }

  /// Assigns m_p = v if the partial vector stays completable.
  bool assign(SearchState& s, std::size_t p, int v) const;
  void unassign(SearchState& s, std::size_t p) const;

  /// Visits every completion of s from position p up to (excluding) stop.
  /// visit(s) returns false to abort; tick() is polled every 2^16 nodes and
  /// returns false to abort. Returns false when aborted.
  template <class Visit, class Tick>
  bool dfs(SearchState& s, std::size_t p, std::size_t stop, Visit& visit, Tick& tick) const {
    ++s.nodes;
    if ((s.nodes & 0xFFFF) == 0 && !tick()) return false;
    if (p == stop) return visit(s);
    const int v_hi = std::min(hi_[p], s.remaining - suffix_lo_[p + 1]);
    const int v_lo = std::max(lo_[p], s.remaining - suffix_hi_[p + 1]);
    for (int v = v_hi; v >= v_lo; --v) {
      if (!assign(s, p, v)) continue;
      const bool go_on = dfs(s, p + 1, stop, visit, tick);
      unassign(s, p);
      if (!go_on) return false;
    }
    return true;
  }

  /// Minimum weight n - max hyperplane sum of a complete vector.
  [[nodiscard]] int minimum_weight(const SearchState& s) const {
    int worst = 0;
    for (std::size_t u = 0; u < points_; ++u) worst = std::max(worst, s.plane_sum[u]);
    return n_ - worst;
  }

 private:
  std::size_t points_;
  int n_, d_;
  bool wlog_, prune_;
  std::array<int, kMaxPoints> lo_{}, hi_{};
  std::array<bool, kMaxPoints> in_support_{};
  std::array<std::uint32_t, kMaxPoints> planes_of_{};  // bit u set iff point in hyperplane u
  // Suffix sums from position p (index points_ holds zeros).
  std::array<int, kMaxPoints + 1> suffix_lo_{}, suffix_hi_{};
  std::array<int, kMaxPoints + 1> support_lo_{}, support_hi_{}, other_lo_{}, other_hi_{};
  std::array<std::array<int, kMaxPoints>, kMaxPoints + 1> in_lo_{}, out_hi_{};
};

Engine::Engine(const SearchConstraints& c)
    : points_(projective_points(c.params.k)),
      n_(c.params.n),
      d_(c.params.d),
      wlog_(c.wlog),
      prune_(c.weight_pruning) {
  require_classifiable(c.params.k);
  const SimplexMatrix& sk = simplex(c.params.k);
  for (std::size_t i = 0; i < points_; ++i) {
    lo_[i] = c.bounds.lo;
    hi_[i] = c.bounds.hi;
  }
  if (wlog_) {
    for (std::size_t i : c.required_positive) lo_[i] = std::max(lo_[i], 1);
    for (std::size_t i : c.first_row_support) in_support_[i] = true;
  }
  const auto& planes = sk.hyperplanes();
  for (std::size_t u = 0; u < points_; ++u)
    for (std::size_t i : planes[u]) planes_of_[i] |= std::uint32_t{1} << u;

  for (std::size_t p = points_; p-- > 0;) {
    suffix_lo_[p] = suffix_lo_[p + 1] + lo_[p];
    suffix_hi_[p] = suffix_hi_[p + 1] + hi_[p];
    support_lo_[p] = support_lo_[p + 1] + (in_support_[p] ? lo_[p] : 0);
    support_hi_[p] = support_hi_[p + 1] + (in_support_[p] ? hi_[p] : 0);
    other_lo_[p] = other_lo_[p + 1] + (in_support_[p] ? 0 : lo_[p]);
    other_hi_[p] = other_hi_[p + 1] + (in_support_[p] ? 0 : hi_[p]);
    for (std::size_t u = 0; u < points_; ++u) {
      const bool inside = (planes_of_[p] >> u) & 1u;
      in_lo_[p][u] = in_lo_[p + 1][u] + (inside ? lo_[p] : 0);
      out_hi_[p][u] = out_hi_[p + 1][u] + (inside ? 0 : hi_[p]);
    }
  }
}

bool Engine::assign(SearchState& s, std::size_t p, int v) const {
  const int rem = s.remaining - v;
  if (rem < suffix_lo_[p + 1] || rem > suffix_hi_[p + 1]) return false;
  if (wlog_) {
    if (in_support_[p]) {
      const int left = d_ - (s.support_sum + v);
      if (left < support_lo_[p + 1] || left > support_hi_[p + 1]) return false;
    } else {
      const int left = (n_ - d_) - (s.other_sum + v);
      if (left < other_lo_[p + 1] || left > other_hi_[p + 1]) return false;
    }
  }
  if (prune_) {
    const std::uint32_t mask = planes_of_[p];
    const int cap = n_ - d_;
    const auto& in_lo = in_lo_[p + 1];
    const auto& out_hi = out_hi_[p + 1];
    for (std::size_t u = 0; u < points_; ++u) {
      const int sum = s.plane_sum[u] + (((mask >> u) & 1u) ? v : 0);
      if (sum + std::max(in_lo[u], rem - out_hi[u]) > cap) return false;
    }
  }
  s.m[p] = v;
  s.remaining = rem;
  if (in_support_[p]) s.support_sum += v;
  else s.other_sum += v;
  for (std::uint32_t mask = planes_of_[p]; mask; mask &= mask - 1) s.plane_sum[static_cast<std::size_t>(std::countr_zero(mask))] += v;
  return true;
}

void Engine::unassign(SearchState& s, std::size_t p) const {
  const int v = s.m[p];
  s.remaining += v;
  if (in_support_[p]) s.support_sum -= v;
  else s.other_sum -= v;
  for (std::uint32_t mask = planes_of_[p]; mask; mask &= mask - 1) s.plane_sum[static_cast<std::size_t>(std::countr_zero(mask))] -= v;
  s.m[p] = 0;
}

// ---------------------------------------------------------------------------
// Orbit deduplication. A new class triggers one sweep of the PGL table: the
// sweep yields the canonical form and every orbit image that the search can
// reach; those images go into an open-addressing set, so later leaves of the
// same class cost one lookup.

template <class Key>
class KeySet {
 public:
  KeySet() : slots_(1024, kEmpty) {}

  [[nodiscard]] bool contains(Key key) const {
    for (std::size_t i = slot(key);; i = (i + 1) & (slots_.size() - 1)) {
      if (slots_[i] == key) return true;
      if (slots_[i] == kEmpty) return false;
    }
  }

  void insert(Key key) {
    if (2 * (size_ + 1) > slots_.size()) grow();
    place(key);
  }

  [[nodiscard]] std::size_t size() const { return size_; }

 private:
  static constexpr Key kEmpty = ~Key{0};

  [[nodiscard]] std::size_t slot(Key key) const {
    std::uint64_t x = static_cast<std::uint64_t>(key);
    if constexpr (sizeof(Key) > 8) x ^= std::rotl(static_cast<std::uint64_t>(key >> 64), 29);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebull;
    x ^= x >> 31;
    return static_cast<std::size_t>(x) & (slots_.size() - 1);
  }

  void place(Key key) {
    for (std::size_t i = slot(key);; i = (i + 1) & (slots_.size() - 1)) {
      if (slots_[i] == key) return;
      if (slots_[i] == kEmpty) {
        slots_[i] = key;
        ++size_;
        return;
      }
    }
  }

  void grow() {
    std::vector<Key> old(slots_.size() * 2, kEmpty);
    old.swap(slots_);
    size_ = 0;
    for (Key k : old)
      if (k != kEmpty) place(k);
  }

  std::vector<Key> slots_;
  std::size_t size_ = 0;
};

struct LeafFilter {
  bool wlog = false;
  int d = 0;
  std::vector<std::size_t> required;
  std::vector<std::size_t> support;

  [[nodiscard]] bool reachable(const int* m) const {
    if (!wlog) return true;
    for (std::size_t i : required)
      if (m[i] < 1) return false;
    int sum = 0;
    for (std::size_t i : support) sum += m[i];
    return sum == d;
  }
};

template <class Key>
class Deduper {
 public:
  Deduper(const PglActionTable& table, LeafFilter filter, int bits)
      : table_(table), filter_(std::move(filter)), bits_(bits) {}

  [[nodiscard]] Key pack(const int* m) const {
    Key key = 0;
    for (std::size_t i = 0; i < table_.num_points(); ++i) key |= static_cast<Key>(m[i]) << (bits_ * i);
    return key;
  }

  /// Returns the canonical form when m starts a class not seen before.
  std::optional<std::vector<int>> offer(const int* m) {
    if (seen_.contains(pack(m))) return std::nullopt;
    const std::size_t np = table_.num_points();
    std::array<int, kMaxPoints> image{};
    std::vector<int> best(m, m + np);
    for (std::size_t g = 0; g < table_.size(); ++g) {
      const auto p = table_.perm(g);
      for (std::size_t j = 0; j < np; ++j) image[j] = m[p[j]];
      if (std::lexicographical_compare(image.begin(), image.begin() + static_cast<std::ptrdiff_t>(np), best.begin(), best.end()))
        best.assign(image.begin(), image.begin() + static_cast<std::ptrdiff_t>(np));
      if (filter_.reachable(image.data())) seen_.insert(pack(image.data()));
    }
    return best;
  }

 private:
  const PglActionTable& table_;
  LeafFilter filter_;
  int bits_;
  KeySet<Key> seen_;
};

using Prefix = std::vector<int>;

struct TaskResult {
  bool done = false;
  std::uint64_t nodes = 0;
  std::uint64_t candidates = 0;
};

// ---------------------------------------------------------------------------
// Checkpoint files.

struct Checkpoint {
  std::map<Prefix, TaskResult> completed;
  std::set<std::vector<int>> classes;
};

nlohmann::json checkpoint_json(const ParameterTriple& p, bool wlog, const Checkpoint& c) {
  nlohmann::json j;
  j["format"] = "qlcd-checkpoint";
  j["version"] = 1;
  j["n"] = p.n;
  j["k"] = p.k;
  j["d"] = p.d;
  j["wlog"] = wlog;
  auto& done = j["completed"] = nlohmann::json::array();
  for (const auto& [prefix, r] : c.completed)
    done.push_back({{"prefix", prefix}, {"nodes", r.nodes}, {"candidates", r.candidates}});
  j["classes"] = c.classes;
  return j;
}

void write_checkpoint(const std::filesystem::path& path, const nlohmann::json& j) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write checkpoint " + tmp.string());
    out << j.dump(1) << '\n';
  }
  std::filesystem::rename(tmp, path);
}

Checkpoint read_checkpoint(const std::filesystem::path& path, const ParameterTriple& p, bool wlog) {
  Checkpoint c;
  std::ifstream in(path);
  if (!in) return c;
  const auto j = nlohmann::json::parse(in);
  if (j.at("format") != "qlcd-checkpoint" || j.at("version") != 1)
    throw DomainError("not a checkpoint file: " + path.string());
  if (j.at("n") != p.n || j.at("k") != p.k || j.at("d") != p.d || j.at("wlog") != wlog)
    throw DomainError("checkpoint " + path.string() + " belongs to a different search");
  for (const auto& e : j.at("completed"))
    c.completed[e.at("prefix").get<Prefix>()] = {true, e.at("nodes").get<std::uint64_t>(), e.at("candidates").get<std::uint64_t>()};
  for (const auto& v : j.at("classes")) c.classes.insert(v.get<std::vector<int>>());
  return c;
}

// ---------------------------------------------------------------------------

int key_bits(int hi) { return std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned>(std::max(hi, 1))))); }

template <class Key>
ClassificationReport run_direct(const SearchConstraints& c, const ClassifyOptions& opts, int bits) {
  const auto start = std::chrono::steady_clock::now();
  const ParameterTriple& p = c.params;
  const Engine engine(c);
  const GramTables& gram = gram_tables(p.k);
  const PglActionTable& table = pgl_table(p.k);
  const LeafFilter filter{c.wlog, p.d, c.required_positive, c.first_row_support};

  // Subtrees keyed by the first two coordinates, in search order.
  std::vector<Prefix> tasks;
  {
    SearchState s = engine.initial_state();
    auto collect = [&](const SearchState& st) {
      tasks.emplace_back(st.m.begin(), st.m.begin() + 2);
      return true;
    };
    auto never = [] { return true; };
    engine.dfs(s, 0, 2, collect, never);
  }

  Checkpoint state;
  if (opts.checkpoint) state = read_checkpoint(*opts.checkpoint, p, c.wlog);
  std::vector<TaskResult> results(tasks.size());
  for (std::size_t t = 0; t < tasks.size(); ++t)
    if (auto it = state.completed.find(tasks[t]); it != state.completed.end()) results[t] = it->second;

  std::mutex mu;  // guards state, results and checkpoint writes
  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> global_nodes{0};
  std::atomic<bool> aborted{false};
  std::uint64_t next_checkpoint = opts.checkpoint_period;

  auto snapshot_locked = [&] {
    if (opts.checkpoint) write_checkpoint(*opts.checkpoint, checkpoint_json(p, c.wlog, state));
  };
  auto current_stats_locked = [&] {
    SearchStats st;
    for (const auto& r : results)
      if (r.done) {
        st.nodes += r.nodes;
        st.candidates += r.candidates;
        ++st.subtrees;
      }
    st.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return st;
  };

  auto worker = [&] {
    Deduper<Key> dedupe(table, filter, bits);
    for (;;) {
      if (opts.stop && opts.stop->load()) aborted = true;
      const std::size_t t = next.fetch_add(1);
      if (t >= tasks.size() || aborted.load()) return;
      {
        std::lock_guard lock(mu);
        if (results[t].done) continue;
      }
      SearchState s = engine.initial_state();
      bool ok = true;
      for (std::size_t i = 0; i < tasks[t].size() && ok; ++i) ok = engine.assign(s, i, tasks[t][i]);
      if (!ok) throw ConsistencyError("search prefix is not reproducible");

      std::uint64_t candidates = 0;
      auto leaf = [&](const SearchState& st) {
        if (engine.minimum_weight(st) != p.d) return true;
        std::uint32_t g = 0;
        for (std::size_t i = 0; i < engine.points(); ++i)
          if (st.m[i] & 1) g ^= gram.contribution[i];
        if (!gram.nonsingular[g]) return true;
        ++candidates;
        if (auto canon = dedupe.offer(st.m.data())) {
          std::lock_guard lock(mu);
          state.classes.insert(std::move(*canon));
        }
        return true;
      };
      std::uint64_t reported = 0;
      auto tick = [&] {
        const std::uint64_t total = global_nodes.fetch_add(s.nodes - reported) + (s.nodes - reported);
        reported = s.nodes;
        if (opts.stop && opts.stop->load()) {
          aborted = true;
          return false;
        }
        if (opts.checkpoint && opts.checkpoint_period > 0) {
          std::lock_guard lock(mu);
          if (total >= next_checkpoint) {
            snapshot_locked();
            while (next_checkpoint <= total) next_checkpoint += opts.checkpoint_period;
          }
        }
        return !aborted.load();
      };
      if (!engine.dfs(s, 2, engine.points(), leaf, tick)) return;
      global_nodes += s.nodes - reported;

      std::lock_guard lock(mu);
      // The prefix nodes (depths 0 and 1) are counted once, by the root pass below.
      results[t] = {true, s.nodes - 1, candidates};
      state.completed[tasks[t]] = results[t];
      snapshot_locked();
      if (opts.progress) opts.progress(current_stats_locked());
    }
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1))));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i)
      pool.emplace_back([&, i] {
        try {
          worker();
        } catch (...) {
          errors[i] = std::current_exception();
          aborted = true;
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  ClassificationReport report;
  report.params = p;
  report.method = Method::Direct;
  report.wlog = c.wlog;
  {
    std::lock_guard lock(mu);
    report.complete = std::all_of(results.begin(), results.end(), [](const TaskResult& r) { return r.done; });
    if (!report.complete) snapshot_locked();
    report.stats = current_stats_locked();
    for (const auto& v : state.classes) report.representatives.emplace_back(p.k, v);
  }
  // Root pass: nodes at depths 0..2 that lead to the subtrees.
  {
    SearchState s = engine.initial_state();
    auto stop_here = [](const SearchState&) { return true; };
    auto never = [] { return true; };
    engine.dfs(s, 0, 2, stop_here, never);
    report.stats.nodes += s.nodes;
  }
  if (!report.complete) report.note = "interrupted; resume from the checkpoint";
  return report;
}

void digraph_recheck(const ClassificationReport& r, int cap) {
  if (cap < 0 || r.params.n > cap) return;
  std::set<CanonicalKey> keys;
  for (const auto& mv : r.representatives)
    if (!keys.insert(canonical_key(build_code(mv), Backend::Digraph)).second)
      throw ConsistencyError("digraph backend finds two equivalent representatives at " + to_string(r.params) + ": " +
                             to_string(mv));
}

}  // namespace

SearchConstraints SearchConstraints::make(const ParameterTriple& p, bool wlog, bool weight_pruning) {
  require_classifiable(p.k);
  SearchConstraints c;
  c.params = p;
  c.bounds = lemma3_bounds(p);
  c.wlog = wlog;
  c.weight_pruning = weight_pruning;
  const SimplexMatrix& sk = simplex(p.k);
  std::vector<F4> unit(static_cast<std::size_t>(p.k));
  for (std::size_t a = 0; a < unit.size(); ++a) {
    std::fill(unit.begin(), unit.end(), kZero);
    unit[a] = kOne;
    c.required_positive.push_back(sk.point_index(unit));
  }
  c.first_row_support = sk.first_row_support();
  return c;
}

std::uint64_t enumerate_candidates(const SearchConstraints& c, const std::function<bool(std::span<const int>)>& visit) {
  const Engine engine(c);
  SearchState s = engine.initial_state();
  auto leaf = [&](const SearchState& st) { return visit(std::span<const int>(st.m.data(), engine.points())); };
  auto never = [] { return true; };
  engine.dfs(s, 0, engine.points(), leaf, never);
  return s.nodes;
}

std::string to_string(Method m) {
  switch (m) {
    case Method::Direct: return "direct";
    case Method::ReductionLift: return "reduction-lift";
    case Method::HatUnion: return "hat-union";
  }
  return "unknown";
}

ClassificationReport classify_direct(const ParameterTriple& p, const ClassifyOptions& opts) {
  require_classifiable(p.k);
  if (!opts.dual_min_2) {
    const auto start = std::chrono::steady_clock::now();
    ClassificationReport total;
    total.params = p;
    total.method = Method::HatUnion;
    total.wlog = opts.wlog;
    ClassifyOptions inner = opts;
    inner.dual_min_2 = true;
    inner.checkpoint.reset();
    for (int len = p.n; len >= std::max(p.k, p.d + p.k - 1) && len >= 1; --len) {
      const ClassificationReport part = classify_direct({len, p.k, p.d}, inner);
      total.complete = total.complete && part.complete;
      total.stats.nodes += part.stats.nodes;
      total.stats.candidates += part.stats.candidates;
      total.stats.subtrees += part.stats.subtrees;
      total.representatives.insert(total.representatives.end(), part.representatives.begin(), part.representatives.end());
    }
    total.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return total;
  }

  const SearchConstraints c = SearchConstraints::make(p, opts.wlog, true);
  ClassificationReport report;
  const std::size_t np = projective_points(p.k);
  if (p.n < 1 || p.d < 1 || c.bounds.empty() || static_cast<long long>(np) * c.bounds.lo > p.n) {
    report.params = p;
    report.wlog = opts.wlog;
    return report;
  }
  const int bits = key_bits(c.bounds.hi);
  if (static_cast<std::size_t>(bits) * np <= 63) report = run_direct<std::uint64_t>(c, opts, bits);
  else if (static_cast<std::size_t>(bits) * np <= 127) report = run_direct<Wide>(c, opts, bits);
  else throw DomainError("multiplicities too large for the search at " + to_string(p));
  if (report.complete) digraph_recheck(report, opts.digraph_check_max_n);
  return report;
}

ClassificationReport classify_via_reduction(const ParameterTriple& p, const ClassifyOptions& opts) {
  require_classifiable(p.k);
  const ReductionData rd = reduction_data(p);
  if (!rd.applicable) {
    ClassificationReport r = classify_direct(p, opts);
    std::ostringstream os;
    os << "reduction not applicable (4d-3n = " << 4 * p.d - 3 * p.n << ", 4r = " << 4 * rd.r << "); direct search";
    r.note = r.note.empty() ? os.str() : os.str() + "; " + r.note;
    return r;
  }
  ClassifyOptions base_opts = opts;
  base_opts.dual_min_2 = true;
  ClassificationReport base = classify_direct(rd.base, base_opts);
  ClassificationReport r;
  r.params = p;
  r.method = Method::ReductionLift;
  r.wlog = base.wlog;
  r.complete = base.complete;
  r.base = rd.base;
  r.stats = base.stats;
  r.note = base.note;
  // Adding a constant to every coordinate commutes with taking the lexicographic minimum over the orbit.
  for (const auto& m0 : base.representatives) r.representatives.push_back(append_simplex(m0, rd.lift_blocks));
  std::sort(r.representatives.begin(), r.representatives.end());
  return r;
}

std::size_t count_all_classes(const ParameterTriple& p, const ClassifyOptions& opts) {
  ClassifyOptions o = opts;
  o.dual_min_2 = false;
  return classify_direct(p, o).count();
}

bool verify_shift_property(const ClassificationReport& smaller, const ClassificationReport& larger) {
  const int k = smaller.params.k;
  if (larger.params.k != k) throw DomainError("shift property: dimensions differ");
  require_classifiable(k);
  std::set<MultiplicityVector> lhs;
  for (const auto& mv : smaller.representatives) lhs.insert(canonical_vector(mv));
  if (smaller.params == larger.params) {
    std::set<MultiplicityVector> rhs;
    for (const auto& mv : larger.representatives) rhs.insert(canonical_vector(mv));
    return lhs == rhs;
  }
  const auto block = static_cast<int>(projective_points(k));
  if (larger.params.n != smaller.params.n + block || larger.params.d != smaller.params.d + static_cast<int>(pow4(k - 1)))
    throw DomainError("shift property: reports " + to_string(smaller.params) + " and " + to_string(larger.params) +
                      " are not one simplex block apart");
  std::set<MultiplicityVector> rhs;
  for (const auto& mv : larger.representatives) {
    const auto v = mv.values();
    if (*std::min_element(v.begin(), v.end()) < 1) continue;
    std::vector<int> w(v.begin(), v.end());
    for (int& x : w) --x;
    rhs.insert(canonical_vector(MultiplicityVector(k, std::move(w))));
  }
  return lhs == rhs;
}

std::string validate_representatives(const ParameterTriple& p, std::span<const MultiplicityVector> vectors,
                                     bool require_canonical, bool allow_shorter) {
  std::set<MultiplicityVector> classes;
  for (const auto& mv : vectors) {
    const std::string tag = to_string(mv) + ": ";
    if (mv.dimension() != p.k) return tag + "wrong dimension";
    const int len = mv.length();
    if (allow_shorter ? len > p.n : len != p.n) return tag + "length is not " + std::to_string(p.n);
    if (!has_full_rank(mv)) return tag + "rank below k";
    if (minimum_weight(mv) != p.d) return tag + "minimum weight is not " + std::to_string(p.d);
    if (!is_nonsingular(gram_matrix(mv))) return tag + "not Hermitian LCD";
    const MultiplicityBounds b = lemma3_bounds({len, p.k, p.d});
    for (int x : mv.values())
      if (x < b.lo || x > b.hi) return tag + "entry outside the multiplicity bounds";
    const MultiplicityVector canon = canonical_vector(mv);
    if (require_canonical && canon != mv) return tag + "not in canonical form";
    if (!classes.insert(canon).second) return tag + "equivalent to an earlier vector";
  }
  return {};
}

std::string validate_report(const ClassificationReport& r) {
  return validate_representatives(r.params, r.representatives, true, r.method == Method::HatUnion);
}

}  // namespace qlcd
