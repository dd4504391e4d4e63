#pragma once

// Published class counts and representative lists used to check the engine.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace qlcd {

enum class TableId { Dim2Optimal, Dim2NearOptimal, Dim3Optimal };

/// "dim2-optimal", "dim2-near-optimal", "dim3-optimal".
std::string to_string(TableId t);
/// Inverse of to_string; DomainError for an unknown name.
TableId parse_table_id(const std::string& name);

struct ReferenceCell {
  int n = 0;
  std::size_t count = 0;
};

struct TableSpec {
  TableId id;
  int k;
  bool near_optimal;
  /// Cells in ascending n. Every cell's d is target_weight(n, k, near_optimal).
  std::span<const ReferenceCell> cells;
};

const TableSpec& reference_table(TableId t);

/// One block of listed near-optimal [n,2,d] representatives.
struct VectorBlock {
  int n = 0;
  int d = 0;
  std::vector<std::vector<int>> vectors;
};

/// The listed near-optimal dimension-2 blocks (32,24) .. (48,36).
const std::vector<VectorBlock>& reference_vector_blocks();

}  // namespace qlcd
