#include "qlcd/gf4.hpp"

#include <sstream>
#include <string_view>
#include <utility>

#include "qlcd/errors.hpp"

namespace qlcd {

std::string to_string(F4 x) {
  switch (x.bits()) {
    case 0: return "0";
    case 1: return "1";
    case 2: return "w";
    default: return "w2";
  }
}

F4 parse_f4(std::string_view text) {
  if (text == "0") return kZero;
  if (text == "1") return kOne;
  if (text == "w") return kOmega;
  if (text == "w2" || text == "W") return kOmega2;
  throw DomainError("not a GF(4) symbol: '" + std::string(text) + "'");
}

F4 hermitian_inner_product(std::span<const F4> x, std::span<const F4> y) {
  if (x.size() != y.size()) {
    throw DimensionError("hermitian_inner_product: lengths " + std::to_string(x.size()) + " and " +
                         std::to_string(y.size()));
  }
  F4 acc;
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * conj(y[i]);
  return acc;
}

F4Matrix::F4Matrix(std::initializer_list<std::initializer_list<F4>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("F4Matrix: ragged initializer");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

F4Matrix F4Matrix::identity(std::size_t k) {
  F4Matrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) m(i, i) = kOne;
  return m;
}

std::vector<F4> F4Matrix::column(std::size_t c) const {
  std::vector<F4> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

F4Matrix F4Matrix::transpose() const {
  F4Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

F4Matrix F4Matrix::conjugate() const {
  F4Matrix out = *this;
  for (auto& x : out.entries_) x = conj(x);
  return out;
}

bool F4Matrix::is_zero() const {
  for (F4 x : entries_)
    if (!x.is_zero()) return false;
  return true;
}

F4Matrix F4Matrix::hstack(const F4Matrix& right) const {
  if (rows_ != right.rows_) throw DimensionError("hstack: row counts differ");
  F4Matrix out(rows_, cols_ + right.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < right.cols_; ++c) out(r, cols_ + c) = right(r, c);
  }
  return out;
}

F4Matrix F4Matrix::repeat(std::size_t copies) const {
  F4Matrix out(rows_, cols_ * copies);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t s = 0; s < copies; ++s)
      for (std::size_t c = 0; c < cols_; ++c) out(r, s * cols_ + c) = (*this)(r, c);
  return out;
}

F4Matrix operator*(const F4Matrix& a, const F4Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product: inner dimensions differ");
  F4Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const F4 x = a(i, l);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(l, j);
    }
  return out;
}

std::string to_string(const F4Matrix& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << to_string(m(r, c));
    os << '\n';
  }
  return os.str();
}

F4Matrix gram_matrix(const F4Matrix& g) {
  F4Matrix out(g.rows(), g.rows());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.rows(); ++j) out(i, j) = hermitian_inner_product(g.row(i), g.row(j));
  return out;
}

std::size_t rank(const F4Matrix& m) {
  F4Matrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < a.rows() && a(pivot, c).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(r, j));
    const F4 inv = inverse(a(r, c));
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const F4 f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) += f * a(r, j);
    }
    ++r;
  }
  return r;
}

bool is_nonsingular(const F4Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("is_nonsingular: matrix is not square");
  return rank(m) == m.rows();
}

}  // namespace qlcd
