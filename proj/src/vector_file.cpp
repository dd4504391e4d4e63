#include "qlcd/vector_file.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "qlcd/errors.hpp"
#include "qlcd/simplex.hpp"

namespace qlcd {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

long long parse_integer(std::string_view word, std::size_t line) {
  long long value = 0;
  const auto [end, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || end != word.data() + word.size())
    throw ParseError(line, "'" + std::string(word) + "' is not an integer");
  return value;
}

}  // namespace

VectorFile to_vector_file(const ClassificationReport& r) {
  if (!r.complete) throw DomainError("cannot export an incomplete classification");
  VectorFile f;
  f.params = r.params;
  for (const auto& mv : r.representatives)
    if (mv.length() != r.params.n) throw DomainError("cannot export classes with zero coordinates");
  f.vectors = r.representatives;
  f.comments.push_back("method " + to_string(r.method));
  return f;
}

std::string format_vector_file(const VectorFile& f) {
  std::vector<MultiplicityVector> sorted = f.vectors;
  std::sort(sorted.begin(), sorted.end());
  std::ostringstream os;
  for (const auto& c : f.comments) os << "# " << c << '\n';
  os << "k " << f.params.k << " n " << f.params.n << " d " << f.params.d << " count " << sorted.size() << '\n';
  for (const auto& mv : sorted) {
    for (std::size_t i = 0; i < mv.size(); ++i) os << (i ? " " : "") << mv[i];
    os << '\n';
  }
  return os.str();
}

VectorFile parse_vector_file(std::string_view text) {
  VectorFile f;
  bool have_header = false;
  long long count = 0;
  std::size_t header_line = 0;
  std::size_t line_no = 0;
  std::size_t points = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (!line.empty() && line.front() == '#') {
      line.remove_prefix(1);
      if (!line.empty() && line.front() == ' ') line.remove_prefix(1);
      f.comments.emplace_back(line);
      continue;
    }
    const auto words = split_words(line);
    if (words.empty()) continue;

    if (!have_header) {
      if (words.size() != 8 || words[0] != "k" || words[2] != "n" || words[4] != "d" || words[6] != "count")
        throw ParseError(line_no, "expected header 'k <k> n <n> d <d> count <c>'");
      const long long k = parse_integer(words[1], line_no);
      const long long n = parse_integer(words[3], line_no);
      const long long d = parse_integer(words[5], line_no);
      count = parse_integer(words[7], line_no);
      if (k < 1 || k > 6) throw ParseError(line_no, "k must be between 1 and 6");
      if (n < 0 || d < 0 || count < 0 || n > 1'000'000 || d > 1'000'000)
        throw ParseError(line_no, "header values must be nonnegative");
      f.params = {static_cast<int>(n), static_cast<int>(k), static_cast<int>(d)};
      points = projective_points(f.params.k);
      have_header = true;
      header_line = line_no;
      continue;
    }

    if (words.size() != points)
      throw ParseError(line_no, "expected " + std::to_string(points) + " entries, found " + std::to_string(words.size()));
    std::vector<int> values;
    values.reserve(points);
    for (auto w : words) {
      const long long v = parse_integer(w, line_no);
      if (v < 0) throw ParseError(line_no, "negative entry " + std::string(w));
      if (v > 1'000'000) throw ParseError(line_no, "entry " + std::string(w) + " is too large");
      values.push_back(static_cast<int>(v));
    }
    f.vectors.emplace_back(f.params.k, std::move(values));
  }
  if (!have_header) throw ParseError(line_no + 1, "missing header line");
  if (static_cast<long long>(f.vectors.size()) != count)
    throw ParseError(header_line, "header announces " + std::to_string(count) + " vectors, file has " +
                                      std::to_string(f.vectors.size()));
  return f;
}

void write_vector_file(const std::filesystem::path& path, const VectorFile& f) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << format_vector_file(f);
  if (!out) throw std::runtime_error("error writing " + path.string());
}

VectorFile read_vector_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_vector_file(buf.str());
}

}  // namespace qlcd
