#include "qlcd/simplex.hpp"

#include <array>
#include <memory>
#include <mutex>
#include <string>

#include "qlcd/errors.hpp"

namespace qlcd {

F4 dot(std::span<const F4> u, std::span<const F4> v) {
  if (u.size() != v.size()) throw DimensionError("dot: lengths differ");
  F4 acc;
  for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * v[i];
  return acc;
}

namespace {

std::vector<std::vector<F4>> simplex_columns(int k) {
  if (k == 1) return {{kOne}};
  const auto prev = simplex_columns(k - 1);
  std::vector<std::vector<F4>> cols;
  cols.reserve(projective_points(k));
  auto extend = [&](const std::vector<F4>& top, F4 last) {
    std::vector<F4> c = top;
    c.push_back(last);
    cols.push_back(std::move(c));
  };
  for (const auto& c : prev) extend(c, kZero);
  extend(std::vector<F4>(static_cast<std::size_t>(k - 1), kZero), kOne);
  for (F4 last : kF4Units)
    for (const auto& c : prev) extend(c, last);
  return cols;
}

}  // namespace

SimplexMatrix::SimplexMatrix(int k) : k_(k) {
  if (k < 1) throw DomainError("simplex matrix needs k >= 1, got " + std::to_string(k));
  if (k > 10) throw DomainError("simplex matrix: k = " + std::to_string(k) + " is too large");
  columns_ = simplex_columns(k);
  matrix_ = F4Matrix(static_cast<std::size_t>(k), columns_.size());
  for (std::size_t c = 0; c < columns_.size(); ++c)
    for (std::size_t r = 0; r < static_cast<std::size_t>(k); ++r) matrix_(r, c) = columns_[c][r];

  lookup_.assign(static_cast<std::size_t>(pow4(k)), -1);
  for (std::size_t c = 0; c < columns_.size(); ++c) lookup_[pack(columns_[c])] = static_cast<int>(c);

  hyperplanes_.resize(columns_.size());
  for (std::size_t j = 0; j < columns_.size(); ++j)
    for (std::size_t i = 0; i < columns_.size(); ++i)
      if (dot(columns_[j], columns_[i]).is_zero()) hyperplanes_[j].push_back(i);
}

std::size_t SimplexMatrix::pack(std::span<const F4> v) const {
  std::size_t key = 0;
  for (F4 x : v) key = (key << 2) | x.bits();
  return key;
}

std::size_t SimplexMatrix::point_index(std::span<const F4> v) const {
  if (v.size() != static_cast<std::size_t>(k_))
    throw DimensionError("point_index: expected length " + std::to_string(k_) + ", got " + std::to_string(v.size()));
  std::size_t lead = 0;
  while (lead < v.size() && v[lead].is_zero()) ++lead;
  if (lead == v.size()) throw DomainError("point_index: zero vector has no projective point");
  // Stored representatives all have leading nonzero coordinate 1.
  const F4 scale = inverse(v[lead]);
  std::size_t key = 0;
  for (F4 x : v) key = (key << 2) | (x * scale).bits();
  const int idx = lookup_[key];
  if (idx < 0) throw ConsistencyError("point_index: normalized vector missing from simplex table");
  return static_cast<std::size_t>(idx);
}

std::vector<std::size_t> SimplexMatrix::first_row_support() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < columns_.size(); ++c)
    if (!columns_[c][0].is_zero()) out.push_back(c);
  return out;
}

const SimplexMatrix& simplex(int k) {
  constexpr int kMaxCached = 6;
  if (k < 1 || k > kMaxCached) throw DomainError("simplex(): k must be in 1.." + std::to_string(kMaxCached));
  static std::array<std::unique_ptr<SimplexMatrix>, kMaxCached + 1> cache;
  static std::array<std::once_flag, kMaxCached + 1> flags;
  std::call_once(flags[static_cast<std::size_t>(k)],
                 [k] { cache[static_cast<std::size_t>(k)] = std::make_unique<SimplexMatrix>(k); });
  return *cache[static_cast<std::size_t>(k)];
}

}  // namespace qlcd
