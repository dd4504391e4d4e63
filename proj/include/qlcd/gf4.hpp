#pragma once

// Arithmetic in GF(4) = {0, 1, w, w^2} with w^2 = w + 1, and the small amount
// of dense linear algebra needed for Gram matrices and rank tests.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qlcd {

/// An element of GF(4). Encoding: 0 -> 00, 1 -> 01, w -> 10, w^2 -> 11.
class F4 {
 public:
  constexpr F4() = default;

  static constexpr F4 from_bits(std::uint8_t bits) { return F4(static_cast<std::uint8_t>(bits & 3u)); }

  [[nodiscard]] constexpr std::uint8_t bits() const { return bits_; }
  [[nodiscard]] constexpr bool is_zero() const { return bits_ == 0; }

  friend constexpr F4 operator+(F4 a, F4 b) { return F4(static_cast<std::uint8_t>(a.bits_ ^ b.bits_)); }
  friend constexpr F4 operator-(F4 a, F4 b) { return a + b; }
  friend constexpr F4 operator*(F4 a, F4 b) { return F4(kMulTable[(a.bits_ << 2) | b.bits_]); }
  constexpr F4& operator+=(F4 o) { return *this = *this + o; }
  constexpr F4& operator*=(F4 o) { return *this = *this * o; }
  friend constexpr bool operator==(F4, F4) = default;

 private:
  constexpr explicit F4(std::uint8_t bits) : bits_(bits) {}

  // Row index = left operand, column index = right operand.
  static constexpr std::array<std::uint8_t, 16> kMulTable{
      0, 0, 0, 0,  //
      0, 1, 2, 3,  //
      0, 2, 3, 1,  //
      0, 3, 1, 2,  //
  };

  std::uint8_t bits_ = 0;
};

inline constexpr F4 kZero = F4::from_bits(0);
inline constexpr F4 kOne = F4::from_bits(1);
inline constexpr F4 kOmega = F4::from_bits(2);
inline constexpr F4 kOmega2 = F4::from_bits(3);

/// All four field elements in encoding order.
inline constexpr std::array<F4, 4> kF4Elements{kZero, kOne, kOmega, kOmega2};
/// The nonzero elements 1, w, w^2.
inline constexpr std::array<F4, 3> kF4Units{kOne, kOmega, kOmega2};

constexpr F4 add(F4 x, F4 y) { return x + y; }
constexpr F4 mul(F4 x, F4 y) { return x * y; }

/// Conjugation x -> x^2 (the Frobenius map): swaps w and w^2, fixes 0 and 1.
constexpr F4 conj(F4 x) { return x * x; }

/// Multiplicative inverse; inverse(0) is defined as 0.
constexpr F4 inverse(F4 x) { return x * x; }

/// "0", "1", "w", "w2".
std::string to_string(F4 x);

/// Parses the symbols produced by to_string (also accepts "W" for w^2).
F4 parse_f4(std::string_view text);

/// sum_i x_i * conj(y_i). Throws DimensionError on length mismatch.
F4 hermitian_inner_product(std::span<const F4> x, std::span<const F4> y);

/// Dense row-major matrix over GF(4).
class F4Matrix {
 public:
  F4Matrix() = default;
  F4Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  /// Throws DimensionError when the row lengths differ.
  F4Matrix(std::initializer_list<std::initializer_list<F4>> rows);

  static F4Matrix identity(std::size_t k);
  static F4Matrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  F4& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  F4 operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  [[nodiscard]] std::span<const F4> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
  [[nodiscard]] std::span<F4> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  [[nodiscard]] std::vector<F4> column(std::size_t c) const;
  [[nodiscard]] std::span<const F4> entries() const { return entries_; }

  [[nodiscard]] F4Matrix transpose() const;
  [[nodiscard]] F4Matrix conjugate() const;
  [[nodiscard]] bool is_zero() const;

  /// Horizontal concatenation (A | B). Throws DimensionError on row mismatch.
  [[nodiscard]] F4Matrix hstack(const F4Matrix& right) const;
  /// A^(s): s copies of A side by side.
  [[nodiscard]] F4Matrix repeat(std::size_t copies) const;

  friend F4Matrix operator*(const F4Matrix& a, const F4Matrix& b);
  friend bool operator==(const F4Matrix&, const F4Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F4> entries_;
};

std::string to_string(const F4Matrix& m);

/// G * conj(G)^T: entry (i,j) is <row_i, row_j>_H.
F4Matrix gram_matrix(const F4Matrix& g);

/// Row rank by Gaussian elimination.
std::size_t rank(const F4Matrix& m);

/// True iff the square matrix has full rank. Throws DimensionError if not square.
bool is_nonsingular(const F4Matrix& m);

}  // namespace qlcd
