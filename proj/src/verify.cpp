#include "qlcd/verify.hpp"

#include <algorithm>

#include "qlcd/errors.hpp"

namespace qlcd {

std::size_t TableVerification::matches() const {
  return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [](const CellCheck& c) { return c.match(); }));
}

TableVerification verify_table(TableId table, int max_n, const ClassifyOptions& opts,
                               const std::function<void(const CellCheck&)>& on_cell) {
  const TableSpec& spec = reference_table(table);
  TableVerification out;
  out.table = table;
  for (const ReferenceCell& cell : spec.cells) {
    const ParameterTriple p{cell.n, spec.k, target_weight(cell.n, spec.k, spec.near_optimal)};
    if (max_n >= 0 && cell.n > max_n) {
      out.skipped.push_back(p);
      continue;
    }
    CellCheck check{p, cell.count, classify_direct(p, opts)};
    if (on_cell) on_cell(check);
    out.cells.push_back(std::move(check));
  }
  return out;
}

bool VectorBlocksVerification::ok() const {
  return !blocks.empty() && std::all_of(blocks.begin(), blocks.end(), [](const BlockCheck& b) { return b.ok(); });
}

VectorBlocksVerification verify_table5_vectors() {
  const TableSpec& near = reference_table(TableId::Dim2NearOptimal);
  VectorBlocksVerification out;
  for (const VectorBlock& block : reference_vector_blocks()) {
    BlockCheck check;
    check.n = block.n;
    check.d = block.d;
    check.listed = block.vectors.size();
    const auto cell = std::find_if(near.cells.begin(), near.cells.end(), [&](const ReferenceCell& c) { return c.n == block.n; });
    if (cell == near.cells.end()) check.problems.push_back("no near-optimal cell at n = " + std::to_string(block.n));
    else check.expected = cell->count;
    if (target_weight(block.n, 2, true) != block.d)
      check.problems.push_back("d = " + std::to_string(block.d) + " is not near-optimal at n = " + std::to_string(block.n));

    std::vector<MultiplicityVector> vectors;
    for (const auto& v : block.vectors) {
      try {
        vectors.emplace_back(2, v);
        if (!build_code(vectors.back()).dual_distance_at_least_2())
          check.problems.push_back(to_string(vectors.back()) + ": zero coordinate");
      } catch (const std::exception& e) {
        check.problems.push_back(e.what());
      }
    }
    if (const std::string why = validate_representatives({block.n, 2, block.d}, vectors, false); !why.empty())
      check.problems.push_back(why);
    out.blocks.push_back(std::move(check));
  }
  return out;
}

}  // namespace qlcd
