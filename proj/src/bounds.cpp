#include "qlcd/bounds.hpp"

#include <algorithm>

#include "qlcd/errors.hpp"
#include "qlcd/simplex.hpp"

namespace qlcd {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

std::string signed_term(long long c) {
  if (c == 0) return "";
  return (c > 0 ? "+" : "") + std::to_string(c);
}

}  // namespace

std::string to_string(const ParameterTriple& p) {
  return "[" + std::to_string(p.n) + "," + std::to_string(p.k) + "," + std::to_string(p.d) + "]";
}

int griesmer_g4(int n, int k) {
  if (k < 1 || n < k) throw DomainError("griesmer_g4 needs n >= k >= 1");
  auto needed = [k](long long d) {
    long long sum = 0;
    for (int i = 0; i < k; ++i) sum += ceil_div(d, pow4(i));
    return sum;
  };
  // The needed length is strictly increasing in d, and d = n is always too
  // large once k >= 2; for k = 1 the answer is n itself.
  int d = 0;
  while (needed(d + 1) <= n) ++d;
  return d;
}

int d4_dim2(int n) {
  if (n < 3) throw DomainError("d4(n,2) is defined for n >= 3");
  const int base = (4 * n) / 5;
  const int t = n % 5;
  return (t == 1 || t == 2 || t == 3) ? base : base - 1;
}

int d4_dim3(int n) {
  if (n < 6) throw DomainError("d4(n,3) is defined for n >= 6");
  const int base = (16 * n) / 21;
  const int t = n % 21;
  return (t == 5 || t == 9 || t == 13 || t == 17 || t == 18) ? base : base - 1;
}

int near_optimal_drop(int t) { return t == 3 ? 2 : 1; }

ResidueRow residue_row(int k, int t, bool near_optimal) {
  if (k != 2 && k != 3) throw DomainError("residue rows exist for k = 2, 3 only");
  if (near_optimal && k != 2) throw DomainError("near-optimal rows are defined for k = 2 only");
  const int points = static_cast<int>(projective_points(k));
  if (t < 0 || t >= points) throw DomainError("residue t out of range");
  const int lift = static_cast<int>(pow4(k - 1));
  auto closed = [k](int n) { return k == 2 ? d4_dim2(n) : d4_dim3(n); };
  // Smallest s at which N s + t lies in the closed form's domain, then one more.
  const int min_n = k == 2 ? 3 : 6;
  int s = 0;
  while (points * s + t < min_n) ++s;
  const int alpha = closed(points * s + t) - lift * s;
  const int alpha_next = closed(points * (s + 1) + t) - lift * (s + 1);
  if (alpha != alpha_next)
    throw ConsistencyError("d4 is not of the form 4^{k-1} s + alpha(t) at t = " + std::to_string(t));

  ResidueRow row;
  row.k = k;
  row.t = t;
  row.near_optimal = near_optimal;
  row.alpha = alpha - (near_optimal ? near_optimal_drop(t) : 0);
  const ReductionData rd = reduction_data({points * s + t, k, lift * s + row.alpha});
  row.r = rd.r;
  row.s_prime = rd.s_prime;
  return row;
}

std::string ResidueRow::length_formula() const {
  return std::to_string(projective_points(k)) + "s" + signed_term(t);
}

std::string ResidueRow::weight_formula() const { return std::to_string(pow4(k - 1)) + "s" + signed_term(alpha); }

int target_weight(int n, int k, bool near_optimal) {
  if (k != 2 && k != 3) throw DomainError("target_weight supports k = 2, 3");
  if (near_optimal && k != 2) throw DomainError("near-optimal targets are defined for k = 2 only");
  if (n < k) throw DomainError("target_weight needs n >= k");
  const int points = static_cast<int>(projective_points(k));
  const ResidueRow row = residue_row(k, n % points, near_optimal);
  const int d = static_cast<int>(pow4(k - 1)) * (n / points) + row.alpha;
  if (d < 1) throw DomainError("no positive target weight at n = " + std::to_string(n));
  return d;
}

MultiplicityBounds lemma3_bounds(const ParameterTriple& p) {
  if (p.k < 2) throw DomainError("lemma3_bounds needs k >= 2");
  const long long denom = 3 * pow4(p.k - 2);
  const long long numer = pow4(p.k - 1) - 1;
  MultiplicityBounds b;
  b.lo = std::max(0, 4 * p.d - 3 * p.n);
  b.hi = static_cast<int>(floor_div(denom * p.n - numer * p.d, denom));
  return b;
}

long long reduction_invariant(const ParameterTriple& p) {
  return pow4(p.k - 1) * p.n - static_cast<long long>(projective_points(p.k)) * p.d;
}

ReductionData reduction_data(const ParameterTriple& p) {
  if (p.k < 2) throw DomainError("reduction_data needs k >= 2");
  const auto points = static_cast<long long>(projective_points(p.k));
  ReductionData rd;
  rd.r = reduction_invariant(p);
  rd.s = static_cast<int>(p.n / points);
  rd.t = static_cast<int>(p.n % points);
  rd.alpha = static_cast<int>(p.d - pow4(p.k - 1) * rd.s);
  const long long numer = 4 * rd.r - rd.t;
  if (numer % points != 0) throw ConsistencyError("4r - t is not a multiple of (4^k - 1)/3");
  rd.s_prime = numer / points + 1;
  rd.base = {static_cast<int>(4 * rd.r), p.k, static_cast<int>(3 * rd.r)};
  rd.lift_blocks = 4 * p.d - 3 * p.n;
  rd.applicable = rd.lift_blocks >= 1 && 4 * rd.r >= p.k;
  return rd;
}

}  // namespace qlcd
