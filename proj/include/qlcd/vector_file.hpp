#pragma once

// Plain-text lists of multiplicity vectors:
//
//   # comment lines start with '#'
//   k 3 n 21 d 15 count 5
//   1 1 0 2 ...            one vector per line, (4^k - 1)/3 entries
//
// Vectors are written in lexicographic order.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qlcd/bounds.hpp"
#include "qlcd/classify.hpp"
#include "qlcd/codes.hpp"

namespace qlcd {

struct VectorFile {
  ParameterTriple params;
  std::vector<MultiplicityVector> vectors;
  std::vector<std::string> comments;  ///< without the leading "# "
};

/// DomainError for an incomplete report or one holding vectors of other lengths.
VectorFile to_vector_file(const ClassificationReport& r);

std::string format_vector_file(const VectorFile& f);

/// Throws ParseError naming the offending line.
VectorFile parse_vector_file(std::string_view text);

void write_vector_file(const std::filesystem::path& path, const VectorFile& f);
/// std::runtime_error if the file cannot be read; ParseError on bad content.
VectorFile read_vector_file(const std::filesystem::path& path);

}  // namespace qlcd
