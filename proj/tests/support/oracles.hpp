#pragma once

// Reference computations that share no code with the library: GF(4) as
// polynomials over GF(2) modulo x^2 + x + 1, codewords and weights by full
// enumeration, nonsingularity by kernel search.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

/// Element a0 + a1 x stored as bits (a1 a0); w = x, w^2 = x + 1.
inline std::uint8_t mul(std::uint8_t a, std::uint8_t b) {
  const int a0 = a & 1, a1 = (a >> 1) & 1, b0 = b & 1, b1 = (b >> 1) & 1;
  const int c0 = (a0 & b0) ^ (a1 & b1);
  const int c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1);
  return static_cast<std::uint8_t>(c0 | (c1 << 1));
}
inline std::uint8_t add(std::uint8_t a, std::uint8_t b) { return a ^ b; }
inline std::uint8_t square(std::uint8_t a) { return mul(a, a); }

using Matrix = std::vector<std::vector<std::uint8_t>>;  // rows

/// All 4^k messages u, u_0 most significant.
inline std::vector<std::vector<std::uint8_t>> messages(int k) {
  std::vector<std::vector<std::uint8_t>> out;
  const int total = 1 << (2 * k);
  for (int code = 0; code < total; ++code) {
    std::vector<std::uint8_t> u(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) u[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((code >> (2 * (k - 1 - i))) & 3);
    out.push_back(u);
  }
  return out;
}

inline std::vector<std::uint8_t> encode(const std::vector<std::uint8_t>& u, const Matrix& g) {
  std::vector<std::uint8_t> c(g.empty() ? 0 : g[0].size(), 0);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = add(c[j], mul(u[i], g[i][j]));
  return c;
}

inline int weight(const std::vector<std::uint8_t>& c) {
  int w = 0;
  for (auto x : c) w += x != 0;
  return w;
}

/// Smallest weight of a nonzero codeword; 0 if some nonzero message encodes to 0.
inline int minimum_weight(const Matrix& g) {
  int best = 1 << 30;
  for (const auto& u : messages(static_cast<int>(g.size()))) {
    if (weight(u) == 0) continue;
    best = std::min(best, weight(encode(u, g)));
  }
  return best;
}

/// True iff u M = 0 only for u = 0 (square M).
inline bool nonsingular(const Matrix& m) {
  for (const auto& u : messages(static_cast<int>(m.size()))) {
    if (weight(u) == 0) continue;
    if (weight(encode(u, m)) == 0) return false;
  }
  return true;
}

inline Matrix hermitian_gram(const Matrix& g) {
  const std::size_t k = g.size();
  Matrix out(k, std::vector<std::uint8_t>(k, 0));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t j = 0; j < g[a].size(); ++j) out[a][b] = add(out[a][b], mul(g[a][j], square(g[b][j])));
  return out;
}

inline int rank(const Matrix& g) {
  // |row space| = 4^rank.
  std::vector<std::vector<std::uint8_t>> words;
  for (const auto& u : messages(static_cast<int>(g.size()))) words.push_back(encode(u, g));
  std::sort(words.begin(), words.end());
  const auto distinct = static_cast<std::size_t>(std::unique(words.begin(), words.end()) - words.begin());
  int r = 0;
  while ((std::size_t{1} << (2 * r)) < distinct) ++r;
  return r;
}

/// Random multiplicity vector with `points` entries summing to n.
inline std::vector<int> random_multiplicities(std::mt19937& rng, std::size_t points, int n) {
  std::vector<int> m(points, 0);
  std::uniform_int_distribution<std::size_t> pick(0, points - 1);
  for (int i = 0; i < n; ++i) ++m[pick(rng)];
  return m;
}

}  // namespace oracle
