#include "qlcd/canonical_labeling.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <numeric>

#include "qlcd/errors.hpp"

namespace qlcd {

std::size_t ColoredDigraph::num_arcs() const {
  std::size_t total = 0;
  for (const auto& heads : out) total += heads.size();
  return total;
}

ColoredDigraph ColoredDigraph::relabeled(const std::vector<std::uint32_t>& perm) const {
  ColoredDigraph g;
  g.out.resize(out.size());
  g.color.resize(out.size());
  for (std::size_t v = 0; v < out.size(); ++v) {
    auto& heads = g.out[perm[v]];
    for (std::uint32_t u : out[v]) heads.push_back(perm[u]);
    g.color[perm[v]] = color[v];
  }
  return g;
}

namespace {

using Trace = std::vector<std::int64_t>;

struct Partition {
  std::vector<std::uint32_t> lab;    // position -> vertex
  std::vector<std::uint32_t> pos;    // vertex -> position
  std::vector<std::uint32_t> start;  // position -> first position of its cell
  std::vector<std::uint32_t> len;    // cell start -> cell length
  std::size_t cells = 0;

  [[nodiscard]] bool discrete() const { return cells == lab.size(); }
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::uint32_t> parent_;
};

class Refiner {
 public:
  explicit Refiner(const ColoredDigraph& g) : out_(g.out), in_(g.out.size()) {
    const std::size_t n = g.out.size();
    for (std::size_t v = 0; v < n; ++v)
      for (std::uint32_t u : g.out[v]) in_[u].push_back(static_cast<std::uint32_t>(v));
    count_out_.assign(n, 0);
    count_in_.assign(n, 0);
    touched_mark_.assign(n, 0);
    queued_.assign(n, 0);
  }

  /// Refines p to the coarsest equitable partition finer than it, starting
  /// from the given splitter cells. Records a label-invariant trace.
  void refine(Partition& p, std::vector<std::uint32_t> queue, Trace& trace) {
    for (std::uint32_t c : queue) queued_[c] = 1;
    std::size_t head = 0;
    while (head < queue.size() && !p.discrete()) {
      const std::uint32_t w_start = queue[head++];
      queued_[w_start] = 0;
      const std::uint32_t w_len = p.len[w_start];

      touched_.clear();
      for (std::uint32_t i = w_start; i < w_start + w_len; ++i) {
        const std::uint32_t w = p.lab[i];
        for (std::uint32_t u : in_[w]) {
          ++count_out_[u];
          mark(u);
        }
        for (std::uint32_t u : out_[w]) {
          ++count_in_[u];
          mark(u);
        }
      }

      touched_cells_.clear();
      for (std::uint32_t v : touched_) touched_cells_.push_back(p.start[p.pos[v]]);
      std::sort(touched_cells_.begin(), touched_cells_.end());
      touched_cells_.erase(std::unique(touched_cells_.begin(), touched_cells_.end()), touched_cells_.end());

      for (std::uint32_t c : touched_cells_) split_cell(p, c, queue, trace);

      for (std::uint32_t v : touched_) {
        count_out_[v] = 0;
        count_in_[v] = 0;
        touched_mark_[v] = 0;
      }
    }
    for (std::size_t i = head; i < queue.size(); ++i) queued_[queue[i]] = 0;
    trace.push_back(static_cast<std::int64_t>(p.cells));
  }

 private:
  void mark(std::uint32_t v) {
    if (!touched_mark_[v]) {
      touched_mark_[v] = 1;
      touched_.push_back(v);
    }
  }

  void split_cell(Partition& p, std::uint32_t c, std::vector<std::uint32_t>& queue, Trace& trace) {
    const std::uint32_t len = p.len[c];
    if (len == 1) return;
    keyed_.clear();
    for (std::uint32_t i = c; i < c + len; ++i) {
      const std::uint32_t v = p.lab[i];
      keyed_.emplace_back((static_cast<std::uint64_t>(count_out_[v]) << 32) | count_in_[v], v);
    }
    std::sort(keyed_.begin(), keyed_.end());
    if (keyed_.front().first == keyed_.back().first) return;

    trace.push_back(c);
    const bool was_queued = queued_[c] != 0;
    std::uint32_t largest_start = c;
    std::uint32_t largest_len = 0;
    std::vector<std::uint32_t> fragments;
    std::size_t i = 0;
    while (i < keyed_.size()) {
      std::size_t j = i;
      while (j < keyed_.size() && keyed_[j].first == keyed_[i].first) ++j;
      const auto frag_start = static_cast<std::uint32_t>(c + i);
      const auto frag_len = static_cast<std::uint32_t>(j - i);
      for (std::size_t t = i; t < j; ++t) {
        const auto position = static_cast<std::uint32_t>(c + t);
        p.lab[position] = keyed_[t].second;
        p.pos[keyed_[t].second] = position;
        p.start[position] = frag_start;
      }
      p.len[frag_start] = frag_len;
      trace.push_back(frag_len);
      trace.push_back(static_cast<std::int64_t>(keyed_[i].first));
      fragments.push_back(frag_start);
      if (frag_len > largest_len) {
        largest_len = frag_len;
        largest_start = frag_start;
      }
      i = j;
    }
    p.cells += fragments.size() - 1;
    for (std::uint32_t f : fragments) {
      if (queued_[f]) continue;
      if (!was_queued && f == largest_start) continue;
      queued_[f] = 1;
      queue.push_back(f);
    }
  }

  const std::vector<std::vector<std::uint32_t>>& out_;
  std::vector<std::vector<std::uint32_t>> in_;
  std::vector<std::uint32_t> count_out_;
  std::vector<std::uint32_t> count_in_;
  std::vector<char> touched_mark_;
  std::vector<char> queued_;
  std::vector<std::uint32_t> touched_;
  std::vector<std::uint32_t> touched_cells_;
  std::vector<std::pair<std::uint64_t, std::uint32_t>> keyed_;
};

class Searcher {
 public:
  explicit Searcher(const ColoredDigraph& g) : g_(g), refiner_(g) {}

  CanonicalLabeling run() {
    const std::size_t n = g_.num_vertices();
    Partition p;
    p.lab.resize(n);
    p.pos.resize(n);
    p.start.resize(n);
    p.len.assign(n, 0);
    std::iota(p.lab.begin(), p.lab.end(), 0u);
    std::stable_sort(p.lab.begin(), p.lab.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return g_.color[a] < g_.color[b]; });
    std::vector<std::uint32_t> queue;
    for (std::size_t i = 0; i < n;) {
      std::size_t j = i;
      while (j < n && g_.color[p.lab[j]] == g_.color[p.lab[i]]) ++j;
      for (std::size_t t = i; t < j; ++t) p.start[t] = static_cast<std::uint32_t>(i);
      p.len[i] = static_cast<std::uint32_t>(j - i);
      queue.push_back(static_cast<std::uint32_t>(i));
      color_sizes_.emplace_back(g_.color[p.lab[i]], j - i);
      ++p.cells;
      i = j;
    }
    for (std::size_t i = 0; i < n; ++i) p.pos[p.lab[i]] = static_cast<std::uint32_t>(i);

    CanonicalLabeling result;
    if (n == 0) {
      result.certificate.push_back(0);
      return result;
    }

    Trace trace;
    refiner_.refine(p, std::move(queue), trace);
    best_trace_.push_back(trace);
    visit(p, 0);

    result.labeling = best_lab_;
    result.certificate = best_cert_;
    result.automorphisms = std::move(generators_);
    result.nodes = nodes_;
    return result;
  }

 private:
  static constexpr int kNoJump = INT_MAX;

  std::vector<std::uint32_t> certificate(const std::vector<std::uint32_t>& lab) const {
    const std::size_t n = lab.size();
    std::vector<std::uint32_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[lab[i]] = static_cast<std::uint32_t>(i);
    std::vector<std::uint32_t> cert;
    cert.reserve(2 + 2 * color_sizes_.size() + n + g_.num_arcs());
    cert.push_back(static_cast<std::uint32_t>(n));
    cert.push_back(static_cast<std::uint32_t>(color_sizes_.size()));
    for (const auto& [color, size] : color_sizes_) {
      cert.push_back(static_cast<std::uint32_t>(color));
      cert.push_back(static_cast<std::uint32_t>(size));
    }
    std::vector<std::uint32_t> heads;
    for (std::size_t i = 0; i < n; ++i) {
      heads.clear();
      for (std::uint32_t u : g_.out[lab[i]]) heads.push_back(pos[u]);
      std::sort(heads.begin(), heads.end());
      cert.push_back(static_cast<std::uint32_t>(heads.size()));
      cert.insert(cert.end(), heads.begin(), heads.end());
    }
    return cert;
  }

  static std::size_t common_prefix(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
    return i;
  }

  void record_automorphism(const std::vector<std::uint32_t>& from, const std::vector<std::uint32_t>& to) {
    std::vector<std::uint32_t> gamma(from.size());
    bool identity = true;
    for (std::size_t i = 0; i < from.size(); ++i) {
      gamma[from[i]] = to[i];
      identity = identity && from[i] == to[i];
    }
    if (!identity) generators_.push_back(std::move(gamma));
  }

  int leaf(const Partition& p) {
    auto cert = certificate(p.lab);
    if (!have_first_) {
      have_first_ = true;
      first_lab_ = p.lab;
      first_cert_ = cert;
      first_path_ = path_;
    } else if (cert == first_cert_) {
      record_automorphism(first_lab_, p.lab);
      return static_cast<int>(common_prefix(path_, first_path_));
    }
    if (!have_best_) {
      have_best_ = true;
      best_lab_ = p.lab;
      best_cert_ = std::move(cert);
      best_path_ = path_;
      return kNoJump;
    }
    if (cert < best_cert_) {
      best_lab_ = p.lab;
      best_cert_ = std::move(cert);
      best_path_ = path_;
      return kNoJump;
    }
    if (cert == best_cert_) {
      record_automorphism(best_lab_, p.lab);
      return static_cast<int>(common_prefix(path_, best_path_));
    }
    return kNoJump;
  }

  int visit(const Partition& p, int depth) {
    ++nodes_;
    if (p.discrete()) return leaf(p);

    // First smallest non-singleton cell.
    std::uint32_t target = 0;
    std::uint32_t target_len = UINT32_MAX;
    for (std::uint32_t i = 0; i < p.lab.size(); i += p.len[i])
      if (p.len[i] > 1 && p.len[i] < target_len) {
        target = i;
        target_len = p.len[i];
      }
    const std::vector<std::uint32_t> candidates(p.lab.begin() + target, p.lab.begin() + target + target_len);

    std::vector<std::uint32_t> explored;
    std::size_t gens_seen = 0;
    UnionFind orbits(p.lab.size());
    for (std::uint32_t v : candidates) {
      // Orbits of the automorphisms found so far that fix the current path pointwise.
      for (; gens_seen < generators_.size(); ++gens_seen) {
        const auto& gamma = generators_[gens_seen];
        const bool fixes_path =
            std::all_of(path_.begin(), path_.end(), [&](std::uint32_t x) { return gamma[x] == x; });
        if (!fixes_path) continue;
        for (std::uint32_t x = 0; x < gamma.size(); ++x) orbits.unite(x, gamma[x]);
      }
      const std::uint32_t root = orbits.find(v);
      if (std::any_of(explored.begin(), explored.end(), [&](std::uint32_t w) { return orbits.find(w) == root; }))
        continue;
      explored.push_back(v);

      Partition child = p;
      individualize(child, v);
      Trace trace;
      refiner_.refine(child, {child.start[child.pos[v]]}, trace);

      const auto level = static_cast<std::size_t>(depth + 1);
      if (have_best_ && best_trace_.size() > level) {
        if (trace > best_trace_[level]) continue;
        if (trace < best_trace_[level]) {
          have_best_ = false;
          best_trace_.resize(level);
          best_trace_.push_back(std::move(trace));
        }
      } else {
        best_trace_.resize(level);
        best_trace_.push_back(std::move(trace));
      }

      path_.push_back(v);
      const int back = visit(child, depth + 1);
      path_.pop_back();
      if (back < depth) return back;
    }
    return kNoJump;
  }

  static void individualize(Partition& p, std::uint32_t v) {
    const std::uint32_t c = p.start[p.pos[v]];
    const std::uint32_t len = p.len[c];
    const std::uint32_t pv = p.pos[v];
    const std::uint32_t other = p.lab[c];
    p.lab[c] = v;
    p.lab[pv] = other;
    p.pos[v] = c;
    p.pos[other] = pv;
    p.len[c] = 1;
    for (std::uint32_t i = c + 1; i < c + len; ++i) p.start[i] = c + 1;
    p.len[c + 1] = len - 1;
    ++p.cells;
  }

  const ColoredDigraph& g_;
  Refiner refiner_;
  std::vector<std::pair<int, std::size_t>> color_sizes_;

  std::vector<std::uint32_t> path_;
  bool have_first_ = false;
  std::vector<std::uint32_t> first_lab_, first_cert_, first_path_;
  bool have_best_ = false;
  std::vector<std::uint32_t> best_lab_, best_cert_, best_path_;
  std::vector<Trace> best_trace_;
  std::vector<std::vector<std::uint32_t>> generators_;
  std::size_t nodes_ = 0;
};

}  // namespace

CanonicalLabeling canonical_labeling(const ColoredDigraph& g) {
  if (g.color.size() != g.out.size()) throw DimensionError("canonical_labeling: one color per vertex required");
  for (const auto& heads : g.out)
    for (std::uint32_t u : heads)
      if (u >= g.out.size()) throw DimensionError("canonical_labeling: arc head out of range");
  return Searcher(g).run();
}

}  // namespace qlcd
