#pragma once

// Monomial equivalence of quaternary codes, decided by two independent routes:
//
//  * PGL backend: a code with no zero coordinate is C_k(m) for some m, and two
//    such codes are equivalent iff their multiplicity vectors lie in the same
//    orbit of PGL(k,4) acting on the points of PG(k-1,4). The key is the
//    lexicographically least vector of the orbit.
//  * Digraph backend: codes C, C' are equivalent iff the digraphs Gamma(C),
//    Gamma(C') are isomorphic. The key is a canonical certificate of Gamma(C).
//
// Field automorphisms are not part of the relation.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qlcd/canonical_labeling.hpp"
#include "qlcd/codes.hpp"

namespace qlcd {

enum class Backend { Pgl, Digraph };

std::string to_string(Backend b);

struct CanonicalKey {
  Backend backend = Backend::Pgl;
  std::vector<std::int64_t> payload;

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

std::string to_string(const CanonicalKey& key);

/// The faithful action of PGL(k,4) on the simplex column indices.
class PglActionTable {
 public:
  /// Enumerates GL(k,4), k in {2,3}; DomainError otherwise.
  explicit PglActionTable(int k);

  [[nodiscard]] int dimension() const { return k_; }
  [[nodiscard]] std::size_t num_points() const { return points_; }
  /// Number of distinct permutations: |GL(k,4)| / 3.
  [[nodiscard]] std::size_t size() const { return perms_.size() / points_; }

  /// perm(g)[i] is the index of the point A_g * h_i. Permutations are stored
  /// in lexicographic order; index 0 is the identity.
  [[nodiscard]] std::span<const std::uint8_t> perm(std::size_t g) const {
    return {perms_.data() + g * points_, points_};
  }

 private:
  int k_;
  std::size_t points_;
  std::vector<std::uint8_t> perms_;
};

/// Shared table for k in {2,3}, built on first use.
const PglActionTable& pgl_table(int k);

/// Lexicographically least (m_{p(1)}, ..., m_{p(N)}) over the table.
/// Works on raw values so the search can call it without allocation.
void canonical_form(const PglActionTable& table, std::span<const int> m, std::span<int> out);

/// Throws DimensionError when table.dimension() != mv.dimension().
CanonicalKey canonical_multiplicity(const PglActionTable& table, const MultiplicityVector& mv);
MultiplicityVector canonical_vector(const MultiplicityVector& mv);

/// Gamma(C): vertices are the 4^k codewords (in Code::codewords() order)
/// followed by the 3n pairs (j, y), y in {1, w, w^2}, at index
/// 4^k + 3j + (0, 1, 2). Arcs c -> (j, c_j) for every c_j != 0, and the
/// directed 3-cycles (j, y) -> (j, w y). Codeword vertices have color 0,
/// coordinate vertices color 1.
struct CodeDigraph {
  int k = 0;
  int n = 0;
  ColoredDigraph graph;

  [[nodiscard]] std::size_t num_codeword_vertices() const { return static_cast<std::size_t>(1) << (2 * k); }
  [[nodiscard]] std::size_t num_coordinate_vertices() const { return 3 * static_cast<std::size_t>(n); }
};

CodeDigraph build_code_digraph(const Code& c);

CanonicalKey canonical_digraph_key(const ColoredDigraph& g);
CanonicalKey canonical_digraph_key(const CodeDigraph& d);

enum class EquivalenceBackend { Auto, Pgl, Digraph, Both };

/// Codes of different length or dimension are never equivalent. Auto uses the
/// PGL backend when both codes have dual distance >= 2 and k in {2,3}, the
/// digraph backend otherwise. Both throws ConsistencyError if they disagree.
/// Pgl throws DomainError for codes with a zero coordinate.
bool codes_equivalent(const Code& a, const Code& b, EquivalenceBackend backend = EquivalenceBackend::Auto);

/// Key of a code under one backend.
CanonicalKey canonical_key(const Code& c, Backend backend);

}  // namespace qlcd
