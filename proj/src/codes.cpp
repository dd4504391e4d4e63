#include "qlcd/codes.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "qlcd/errors.hpp"
#include "qlcd/simplex.hpp"

namespace qlcd {

MultiplicityVector::MultiplicityVector(int k, std::vector<int> values) : k_(k), values_(std::move(values)) {
  if (k < 1) throw DomainError("multiplicity vector needs k >= 1");
  if (values_.size() != projective_points(k))
    throw DimensionError("multiplicity vector for k = " + std::to_string(k) + " needs " +
                         std::to_string(projective_points(k)) + " entries, got " + std::to_string(values_.size()));
  for (int v : values_) {
    if (v < 0) throw DomainError("multiplicity vector has a negative entry");
    length_ += v;
  }
}

std::string to_string(const MultiplicityVector& mv) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < mv.size(); ++i) os << (i ? "," : "") << mv[i];
  os << ')';
  return os.str();
}

MultiplicityVector append_simplex(const MultiplicityVector& mv, int s) {
  if (mv.dimension() < 2) throw DomainError("append_simplex requires k >= 2");
  if (s < 1) throw DomainError("append_simplex requires s >= 1");
  std::vector<int> v(mv.values().begin(), mv.values().end());
  for (int& x : v) x += s;
  return {mv.dimension(), std::move(v)};
}

F4Matrix generator_matrix(const MultiplicityVector& mv) {
  const SimplexMatrix& sk = simplex(mv.dimension());
  F4Matrix g(static_cast<std::size_t>(mv.dimension()), static_cast<std::size_t>(mv.length()));
  std::size_t col = 0;
  for (std::size_t i = 0; i < mv.size(); ++i)
    for (int rep = 0; rep < mv[i]; ++rep, ++col)
      for (std::size_t r = 0; r < g.rows(); ++r) g(r, col) = sk.column(i)[r];
  return g;
}

int minimum_weight(const MultiplicityVector& mv) {
  const SimplexMatrix& sk = simplex(mv.dimension());
  int best = std::numeric_limits<int>::max();
  for (const auto& hyperplane : sk.hyperplanes()) {
    int on = 0;
    for (std::size_t i : hyperplane) on += mv[i];
    best = std::min(best, mv.length() - on);
  }
  return best;
}

F4Matrix gram_matrix(const MultiplicityVector& mv) {
  const SimplexMatrix& sk = simplex(mv.dimension());
  const auto k = static_cast<std::size_t>(mv.dimension());
  F4Matrix gram(k, k);
  for (std::size_t i = 0; i < mv.size(); ++i) {
    if (mv[i] % 2 == 0) continue;
    const auto h = sk.column(i);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) gram(r, c) += h[r] * conj(h[c]);
  }
  return gram;
}

bool has_full_rank(const MultiplicityVector& mv) {
  const SimplexMatrix& sk = simplex(mv.dimension());
  std::vector<std::size_t> used;
  for (std::size_t i = 0; i < mv.size(); ++i)
    if (mv[i] > 0) used.push_back(i);
  F4Matrix m(static_cast<std::size_t>(mv.dimension()), used.size());
  for (std::size_t c = 0; c < used.size(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = sk.column(used[c])[r];
  return rank(m) == static_cast<std::size_t>(mv.dimension());
}

Code::Code(F4Matrix generator) : generator_(std::move(generator)) {
  if (generator_.rows() == 0) throw ConstructionError("code needs k >= 1");
  const std::size_t r = rank(generator_);
  if (r != generator_.rows())
    throw ConstructionError("generator matrix has rank " + std::to_string(r) + " < k = " +
                            std::to_string(generator_.rows()));
}

Code::Code(const Code& other)
    : generator_(other.generator_), min_weight_(other.min_weight_.load()), lcd_(other.lcd_.load()) {}

Code& Code::operator=(const Code& other) {
  if (this != &other) {
    generator_ = other.generator_;
    min_weight_ = other.min_weight_.load();
    lcd_ = other.lcd_.load();
  }
  return *this;
}

std::vector<std::vector<F4>> Code::codewords() const {
  const auto k = generator_.rows();
  const auto n = generator_.cols();
  std::vector<std::vector<F4>> out;
  out.reserve(static_cast<std::size_t>(pow4(static_cast<int>(k))));
  for (long long u = 0; u < pow4(static_cast<int>(k)); ++u) {
    std::vector<F4> word(n);
    for (std::size_t r = 0; r < k; ++r) {
      // Most significant digit is row 0.
      const F4 coeff = F4::from_bits(static_cast<std::uint8_t>((u >> (2 * (k - 1 - r))) & 3));
      if (coeff.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) word[j] += coeff * generator_(r, j);
    }
    out.push_back(std::move(word));
  }
  return out;
}

std::vector<int> Code::projective_weights() const {
  const SimplexMatrix& sk = simplex(dimension());
  std::vector<int> weights;
  weights.reserve(sk.num_points());
  for (std::size_t p = 0; p < sk.num_points(); ++p) {
    const auto u = sk.column(p);
    int w = 0;
    for (std::size_t j = 0; j < generator_.cols(); ++j) {
      F4 x;
      for (std::size_t r = 0; r < generator_.rows(); ++r) x += u[r] * generator_(r, j);
      if (!x.is_zero()) ++w;
    }
    weights.push_back(w);
  }
  return weights;
}

int Code::minimum_weight() const {
  int cached = min_weight_.load(std::memory_order_relaxed);
  if (cached >= 0) return cached;
  const auto w = projective_weights();
  cached = *std::min_element(w.begin(), w.end());
  min_weight_.store(cached, std::memory_order_relaxed);
  return cached;
}

bool Code::is_hermitian_lcd() const {
  int cached = lcd_.load(std::memory_order_relaxed);
  if (cached < 0) {
    cached = is_nonsingular(gram_matrix(generator_)) ? 1 : 0;
    lcd_.store(cached, std::memory_order_relaxed);
  }
  return cached == 1;
}

bool Code::is_hermitian_self_orthogonal() const { return gram_matrix(generator_).is_zero(); }

bool Code::is_even() const {
  const auto w = projective_weights();
  return std::all_of(w.begin(), w.end(), [](int x) { return x % 2 == 0; });
}

bool Code::dual_distance_at_least_2() const {
  for (std::size_t j = 0; j < generator_.cols(); ++j) {
    bool zero = true;
    for (std::size_t r = 0; r < generator_.rows() && zero; ++r) zero = generator_(r, j).is_zero();
    if (zero) return false;
  }
  return true;
}

Code build_code(const MultiplicityVector& mv) {
  if (mv.length() < mv.dimension() || !has_full_rank(mv))
    throw ConstructionError("C_k(m) for m = " + to_string(mv) + " is not a code of dimension " +
                            std::to_string(mv.dimension()));
  return Code(generator_matrix(mv));
}

Code hat_extend(const Code& c) {
  return Code(c.generator().hstack(F4Matrix::zero(c.generator().rows(), 1)));
}

MultiplicityVector to_multiplicities(const Code& c) {
  const SimplexMatrix& sk = simplex(c.dimension());
  std::vector<int> m(sk.num_points(), 0);
  for (std::size_t j = 0; j < c.generator().cols(); ++j) ++m[sk.point_index(c.generator().column(j))];
  return {c.dimension(), std::move(m)};
}

}  // namespace qlcd
