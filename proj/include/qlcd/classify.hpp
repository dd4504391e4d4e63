#pragma once

// Classification of quaternary Hermitian LCD [n,k,d] codes, k in {2,3}, with
// dual distance >= 2, up to monomial equivalence.
//
// Every such code is C_k(m) for a multiplicity vector m. The search walks all
// m with sum n inside the per-coordinate bounds, optionally restricted to the
// normal form m_1, m_2 (and m_6 for k = 3) >= 1 with the first-row support
// summing to d, prunes with hyperplane sums (every codeword weight must stay
// >= d), keeps the LCD vectors of minimum weight exactly d, and deduplicates
// them by PGL(k,4)-orbit canonical form.

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qlcd/bounds.hpp"
#include "qlcd/codes.hpp"

namespace qlcd {

struct SearchConstraints {
  ParameterTriple params;
  MultiplicityBounds bounds;
  bool wlog = true;
  /// Columns forced to multiplicity >= 1 under wlog (the unit vectors), 0-based.
  std::vector<std::size_t> required_positive;
  /// Columns whose multiplicities must sum to d under wlog, 0-based.
  std::vector<std::size_t> first_row_support;
  /// Also cut branches where some codeword weight is forced below d.
  bool weight_pruning = false;

  /// Bounds from lemma3_bounds; k in {2,3} else DomainError.
  static SearchConstraints make(const ParameterTriple& p, bool wlog = true, bool weight_pruning = false);
};

/// Calls visit(m) for every candidate in depth-first order (indices
/// ascending, each m_i descending from hi). visit returns false to stop.
/// Returns the number of search nodes.
std::uint64_t enumerate_candidates(const SearchConstraints& c, const std::function<bool(std::span<const int>)>& visit);

enum class Method { Direct, ReductionLift, HatUnion };
std::string to_string(Method m);

struct SearchStats {
  std::uint64_t nodes = 0;       ///< search-tree nodes
  std::uint64_t candidates = 0;  ///< LCD vectors of minimum weight exactly d
  std::uint64_t subtrees = 0;    ///< (m_1, m_2) subtrees searched
  double seconds = 0.0;
};

struct ClassificationReport {
  ParameterTriple params;
  /// Canonical (lexicographically least in the PGL orbit) vectors, sorted.
  /// Under the hat-union method a vector of length n - z stands for the class
  /// padded with z zero coordinates; those are listed after the full-length ones.
  std::vector<MultiplicityVector> representatives;
  Method method = Method::Direct;
  bool wlog = true;
  bool complete = true;
  std::optional<ParameterTriple> base;
  std::string note;
  SearchStats stats;

  [[nodiscard]] std::size_t count() const { return representatives.size(); }
};

struct ClassifyOptions {
  bool wlog = true;
  /// false: include classes with zero coordinates (hat union over shorter lengths).
  bool dual_min_2 = true;
  unsigned threads = 1;
  /// Resume from / write to this JSON file when set.
  std::optional<std::filesystem::path> checkpoint;
  std::uint64_t checkpoint_period = 10'000'000;
  /// Polled during the search; when it becomes true the search stops, writes
  /// the checkpoint (if any) and returns an incomplete report.
  const std::atomic<bool>* stop = nullptr;
  std::function<void(const SearchStats&)> progress;
  /// Re-check pairwise inequivalence of the results with the digraph backend
  /// when n <= this cap (ConsistencyError on a repeated key). Negative disables.
  int digraph_check_max_n = 24;
};

ClassificationReport classify_direct(const ParameterTriple& p, const ClassifyOptions& opts = {});

/// When 4d - 3n >= 1 and 4r >= k >= 2: classifies the base [4r, k, 3r] and
/// appends 4d - 3n simplex blocks to each representative. Otherwise runs
/// classify_direct and says so in the report note.
ClassificationReport classify_via_reduction(const ParameterTriple& p, const ClassifyOptions& opts = {});

/// Number of classes without the dual-distance restriction:
/// sum over j >= 0 of the dual-distance->=2 counts at length n - j.
std::size_t count_all_classes(const ParameterTriple& p, const ClassifyOptions& opts = {});

/// True iff the smaller report's canonical set equals {canonical(m - 1) :
/// m in larger, all m_i >= 1}. The reports must be one simplex block apart
/// (DomainError otherwise); a report compared with itself is trivially true.
bool verify_shift_property(const ClassificationReport& smaller, const ClassificationReport& larger);

/// Checks what every listed class representative must satisfy: length n
/// (at most n when shorter lengths are allowed), minimum weight exactly d,
/// Hermitian LCD, rank k, the per-coordinate bounds, pairwise inequivalence,
/// and optionally canonical form. Returns an empty string when all hold,
/// otherwise a message naming the first offending vector.
std::string validate_representatives(const ParameterTriple& p, std::span<const MultiplicityVector> vectors,
                                     bool require_canonical, bool allow_shorter = false);

/// validate_representatives on a report's own vectors, canonical form required.
std::string validate_report(const ClassificationReport& r);

}  // namespace qlcd
