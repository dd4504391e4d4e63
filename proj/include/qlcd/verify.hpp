#pragma once

// Re-running the reference tables and checking the listed representatives.

#include <functional>
#include <string>
#include <vector>

#include "qlcd/classify.hpp"
#include "qlcd/reference_tables.hpp"

namespace qlcd {

struct CellCheck {
  ParameterTriple params;
  std::size_t expected = 0;
  ClassificationReport report;

  [[nodiscard]] std::size_t computed() const { return report.count(); }
  [[nodiscard]] bool match() const { return report.complete && computed() == expected; }
};

struct TableVerification {
  TableId table = TableId::Dim2Optimal;
  std::vector<CellCheck> cells;
  /// Cells above the size cap, not run.
  std::vector<ParameterTriple> skipped;

  [[nodiscard]] std::size_t matches() const;
  [[nodiscard]] bool all_match() const { return matches() == cells.size(); }
};

/// Classifies every cell of the table with n <= max_n (max_n < 0: all cells)
/// and compares counts. on_cell is called after each cell.
TableVerification verify_table(TableId table, int max_n = -1, const ClassifyOptions& opts = {},
                               const std::function<void(const CellCheck&)>& on_cell = {});

struct BlockCheck {
  int n = 0;
  int d = 0;
  std::size_t listed = 0;
  std::size_t expected = 0;  ///< class count of the near-optimal cell
  std::vector<std::string> problems;

  [[nodiscard]] bool ok() const { return problems.empty() && listed == expected; }
};

struct VectorBlocksVerification {
  std::vector<BlockCheck> blocks;
  [[nodiscard]] bool ok() const;
};

/// Every listed vector must give a near-optimal Hermitian LCD [n,2,d] code
/// with dual distance >= 2 inside the multiplicity bounds; the vectors of a
/// block must be pairwise inequivalent, and the block must be as large as
/// the near-optimal class count at (n, d).
VectorBlocksVerification verify_table5_vectors();

}  // namespace qlcd
