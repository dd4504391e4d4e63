#pragma once

// Canonical labeling of vertex-colored digraphs by individualization and
// refinement: equitable refinement on (out-count, in-count) signatures, a
// search tree branching on the first smallest non-singleton cell, pruning by
// refinement traces and by automorphisms discovered at the leaves.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace qlcd {

struct ColoredDigraph {
  /// out[v] lists the heads of arcs leaving v. Parallel arcs are not allowed.
  std::vector<std::vector<std::uint32_t>> out;
  /// Vertex colors. Canonical labels respect the color order: every vertex of
  /// color c precedes every vertex of a larger color.
  std::vector<int> color;

  [[nodiscard]] std::size_t num_vertices() const { return out.size(); }
  [[nodiscard]] std::size_t num_arcs() const;

  /// Image under the vertex relabeling v -> perm[v].
  [[nodiscard]] ColoredDigraph relabeled(const std::vector<std::uint32_t>& perm) const;
};

struct CanonicalLabeling {
  /// labeling[i] is the vertex placed at canonical position i.
  std::vector<std::uint32_t> labeling;
  /// Color-class sizes in color order, then per canonical position the sorted
  /// canonical positions of its out-neighbors, each list prefixed by its size.
  /// Two colored digraphs are isomorphic iff their certificates are equal.
  std::vector<std::uint32_t> certificate;
  /// Generators of the automorphism group found during the search (not
  /// necessarily a complete generating set).
  std::vector<std::vector<std::uint32_t>> automorphisms;
  std::size_t nodes = 0;
};

CanonicalLabeling canonical_labeling(const ColoredDigraph& g);

}  // namespace qlcd
