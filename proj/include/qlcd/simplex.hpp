#pragma once

// Recursive simplex generator matrices S_k. Their columns h_{k,1..N},
// N = (4^k - 1)/3, are one representative per point of PG(k-1, 4); the column
// order produced by the recursion indexes every multiplicity vector in the
// library and in exported files.
//
// Indices in this API are 0-based: column i here is h_{k,i+1}.

#include <cstddef>
#include <span>
#include <vector>

#include "qlcd/gf4.hpp"

namespace qlcd {

/// Number of points of PG(k-1, 4), i.e. (4^k - 1)/3.
constexpr std::size_t projective_points(int k) {
  std::size_t p = 1;
  for (int i = 0; i < k; ++i) p *= 4;
  return (p - 1) / 3;
}

/// 4^e for small e.
constexpr long long pow4(int e) {
  long long p = 1;
  for (int i = 0; i < e; ++i) p *= 4;
  return p;
}

/// Ordinary (bilinear) dot product u . v, used for codeword coordinates u * G.
F4 dot(std::span<const F4> u, std::span<const F4> v);

class SimplexMatrix {
 public:
  /// Builds S_k. Throws DomainError for k < 1.
  explicit SimplexMatrix(int k);

  [[nodiscard]] int dimension() const { return k_; }
  [[nodiscard]] std::size_t num_points() const { return columns_.size(); }
  [[nodiscard]] const F4Matrix& matrix() const { return matrix_; }
  [[nodiscard]] std::span<const F4> column(std::size_t i) const { return columns_.at(i); }
  [[nodiscard]] const std::vector<std::vector<F4>>& columns() const { return columns_; }

  /// Index i with v = lambda * h_i. Throws DomainError for the zero vector,
  /// DimensionError for a length other than k.
  [[nodiscard]] std::size_t point_index(std::span<const F4> v) const;

  /// Columns whose first coordinate is nonzero (support of the first row).
  [[nodiscard]] std::vector<std::size_t> first_row_support() const;

  /// Hyperplane j is {i : h_j . h_i = 0}. The codeword h_j^T * G_k(m) has
  /// weight n - sum_{i in hyperplane j} m_i, so these sets drive every
  /// weight computation on multiplicity vectors.
  [[nodiscard]] const std::vector<std::vector<std::size_t>>& hyperplanes() const { return hyperplanes_; }

 private:
  [[nodiscard]] std::size_t pack(std::span<const F4> v) const;

  int k_;
  F4Matrix matrix_;
  std::vector<std::vector<F4>> columns_;
  std::vector<int> lookup_;  // packed normalized vector -> column index, -1 if none
  std::vector<std::vector<std::size_t>> hyperplanes_;
};

/// Shared, lazily built S_k for 1 <= k <= 6.
const SimplexMatrix& simplex(int k);

}  // namespace qlcd
