#pragma once

#include "oracles.hpp"
#include "qlcd/gf4.hpp"

inline oracle::Matrix to_oracle(const qlcd::F4Matrix& m) {
  oracle::Matrix out(m.rows(), std::vector<std::uint8_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c).bits();
  return out;
}

inline qlcd::F4Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> digit(0, 3);
  qlcd::F4Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = qlcd::F4::from_bits(static_cast<std::uint8_t>(digit(rng)));
  return m;
}
