#pragma once

// Closed-form parameter arithmetic: the Griesmer bound, the largest minimum
// weights d4(n,2) and d4(n,3) of Hermitian LCD codes, per-coordinate
// multiplicity bounds, and the reduction invariants r and s'.

#include <compare>
#include <string>

namespace qlcd {

struct ParameterTriple {
  int n = 0;
  int k = 0;
  int d = 0;
  friend bool operator==(const ParameterTriple&, const ParameterTriple&) = default;
  friend auto operator<=>(const ParameterTriple&, const ParameterTriple&) = default;
};

std::string to_string(const ParameterTriple& p);

/// Largest d >= 0 with n >= sum_{i<k} ceil(d / 4^i).
int griesmer_g4(int n, int k);

/// floor(4n/5) if n = 1,2,3 (mod 5), else floor(4n/5) - 1. DomainError for n < 3.
int d4_dim2(int n);

/// floor(16n/21) if n = 5,9,13,17,18 (mod 21), else one less. DomainError for n < 6.
int d4_dim3(int n);

/// d4(n,k) for k in {2,3}. Below the closed forms' domain the residue-class
/// form 4^{k-1} s + alpha(t) is extended down to s = 0 (e.g. n = 2 for k = 2,
/// n = 3..5 for k = 3). With near_optimal (k = 2 only) the result is the
/// near-optimal family: d4(n,2) - 1, except [5s+3, 2, 4s] for n = 3 (mod 5),
/// where the classified near-optimal row sits two below d4.
int target_weight(int n, int k, bool near_optimal = false);

/// Inclusive per-coordinate range lo <= m_i <= hi for any C_k(m) of length n
/// and minimum weight >= d. hi < lo means no such code.
struct MultiplicityBounds {
  int lo = 0;
  int hi = 0;
  [[nodiscard]] bool empty() const { return hi < lo; }
  friend bool operator==(const MultiplicityBounds&, const MultiplicityBounds&) = default;
};

/// lo = max(0, 4d - 3n), hi = floor(n - (4^{k-1} - 1) d / (3 * 4^{k-2})). DomainError for k < 2.
MultiplicityBounds lemma3_bounds(const ParameterTriple& p);

/// r = 4^{k-1} n - ((4^k - 1)/3) d.
long long reduction_invariant(const ParameterTriple& p);

struct ReductionData {
  long long r = 0;
  long long s_prime = 0;
  int s = 0;      ///< n div (4^k - 1)/3
  int t = 0;      ///< n mod (4^k - 1)/3
  int alpha = 0;  ///< d - 4^{k-1} s
  ParameterTriple base;  ///< [4r, k, 3r]; meaningful only when r >= 0
  /// 4d - 3n >= 1 and 4r >= k >= 2: the classes at (n,k,d) with dual distance
  /// >= 2 are in bijection with those at the base.
  bool applicable = false;
  /// Number of simplex blocks separating (n,k,d) from the base: 4d - 3n.
  int lift_blocks = 0;
};

/// DomainError for k < 2. Throws ConsistencyError if (4r - t) is not a
/// multiple of (4^k - 1)/3, which cannot happen for integer inputs.
ReductionData reduction_data(const ParameterTriple& p);

/// One residue row of the d / s' / r tables: n = N s + t, d = 4^{k-1} s + alpha.
struct ResidueRow {
  int k = 0;
  int t = 0;
  int alpha = 0;
  long long s_prime = 0;
  long long r = 0;
  bool near_optimal = false;
  /// e.g. "5s+4", "4s+2", "16s-1".
  [[nodiscard]] std::string length_formula() const;
  [[nodiscard]] std::string weight_formula() const;
};

/// alpha(t) derived from the closed forms, asserting independence of s
/// (ConsistencyError otherwise). near_optimal is only defined for k = 2 and
/// lowers alpha by near_optimal_drop(t).
ResidueRow residue_row(int k, int t, bool near_optimal = false);

/// Gap between d4(5s+t, 2) and the near-optimal family: 2 for t = 3, else 1.
int near_optimal_drop(int t);

}  // namespace qlcd
