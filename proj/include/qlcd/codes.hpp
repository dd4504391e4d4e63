#pragma once

// Quaternary linear codes, either as an explicit generator matrix or as a
// multiplicity vector m over the simplex columns (the code C_k(m) whose
// generator repeats column h_{k,i} exactly m_i times).

#include <atomic>
#include <compare>
#include <span>
#include <string>
#include <vector>

#include "qlcd/gf4.hpp"

namespace qlcd {

class MultiplicityVector {
 public:
  /// Throws DimensionError unless values.size() == (4^k - 1)/3, DomainError on
  /// a negative entry or k < 1.
  MultiplicityVector(int k, std::vector<int> values);

  [[nodiscard]] int dimension() const { return k_; }
  [[nodiscard]] std::size_t size() const { return values_.size(); }
  /// Code length n = sum of entries.
  [[nodiscard]] int length() const { return length_; }
  [[nodiscard]] std::span<const int> values() const { return values_; }
  int operator[](std::size_t i) const { return values_[i]; }

  friend bool operator==(const MultiplicityVector&, const MultiplicityVector&) = default;
  friend auto operator<=>(const MultiplicityVector& a, const MultiplicityVector& b) {
    if (auto c = a.k_ <=> b.k_; c != 0) return c;
    return a.values_ <=> b.values_;
  }

 private:
  int k_;
  std::vector<int> values_;
  int length_ = 0;
};

std::string to_string(const MultiplicityVector& mv);

/// m + s * (1, ..., 1): the code (S_k^(s) | G_k(m)). Throws DomainError for
/// k < 2 or s < 1.
MultiplicityVector append_simplex(const MultiplicityVector& mv, int s);

/// G_k(m): columns grouped by index in ascending order.
F4Matrix generator_matrix(const MultiplicityVector& mv);

/// Minimum weight of C_k(m), from hyperplane sums: min_j (n - sum_{i in H_j} m_i).
int minimum_weight(const MultiplicityVector& mv);

/// Gram matrix of G_k(m). Only the parities of the m_i matter.
F4Matrix gram_matrix(const MultiplicityVector& mv);

/// True iff the columns with m_i >= 1 span GF(4)^k.
bool has_full_rank(const MultiplicityVector& mv);

/// A quaternary [n,k] code given by a full-rank k x n generator matrix.
class Code {
 public:
  /// Throws ConstructionError when the generator is rank deficient or empty.
  explicit Code(F4Matrix generator);

  Code(const Code& other);
  Code& operator=(const Code& other);

  [[nodiscard]] const F4Matrix& generator() const { return generator_; }
  [[nodiscard]] int dimension() const { return static_cast<int>(generator_.rows()); }
  [[nodiscard]] int length() const { return static_cast<int>(generator_.cols()); }

  /// Codewords u * G for every u in GF(4)^k, u enumerated in base-4 order.
  [[nodiscard]] std::vector<std::vector<F4>> codewords() const;

  [[nodiscard]] int minimum_weight() const;
  [[nodiscard]] bool is_hermitian_lcd() const;
  [[nodiscard]] bool is_hermitian_self_orthogonal() const;
  [[nodiscard]] bool is_even() const;
  /// True iff no coordinate is identically zero on the code.
  [[nodiscard]] bool dual_distance_at_least_2() const;

 private:
  /// Weights of one codeword per projective class (u = h_{k,i}).
  [[nodiscard]] std::vector<int> projective_weights() const;

  F4Matrix generator_;
  mutable std::atomic<int> min_weight_{-1};
  mutable std::atomic<int> lcd_{-1};
};

/// build_code: C_k(m). Throws ConstructionError if the columns do not span.
Code build_code(const MultiplicityVector& mv);

/// Appends one identically zero coordinate.
Code hat_extend(const Code& c);

/// Inverse of build_code up to column order: counts columns per projective
/// point. Throws DomainError if some column is zero.
MultiplicityVector to_multiplicities(const Code& c);

}  // namespace qlcd
