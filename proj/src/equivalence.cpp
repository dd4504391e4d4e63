#include "qlcd/equivalence.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>

#include "qlcd/errors.hpp"
#include "qlcd/simplex.hpp"

namespace qlcd {

std::string to_string(Backend b) { return b == Backend::Pgl ? "pgl" : "digraph"; }

std::string to_string(const CanonicalKey& key) {
  std::ostringstream os;
  os << to_string(key.backend) << ':';
  if (key.backend == Backend::Pgl) {
    os << '(';
    for (std::size_t i = 0; i < key.payload.size(); ++i) os << (i ? "," : "") << key.payload[i];
    os << ')';
  } else {
    // Certificates are long; print a stable digest.
    std::uint64_t h = 1469598103934665603ull;
    for (std::int64_t x : key.payload) {
      h ^= static_cast<std::uint64_t>(x);
      h *= 1099511628211ull;
    }
    os << std::hex << h << std::dec << "/len" << key.payload.size();
  }
  return os.str();
}

PglActionTable::PglActionTable(int k) : k_(k), points_(projective_points(k)) {
  if (k != 2 && k != 3) throw DomainError("PGL action tables are built for k = 2, 3 only");
  const SimplexMatrix& sk = simplex(k);
  const auto kk = static_cast<std::size_t>(k);
  const long long total = pow4(k * k);

  std::vector<std::uint8_t> perm(points_);
  std::vector<F4> image(kk);
  std::set<std::vector<std::uint8_t>> seen;
  for (long long code = 0; code < total; ++code) {
    // Entry (r,c) of A is digit r*k + c of code in base 4.
    auto entry = [&](std::size_t r, std::size_t c) {
      return F4::from_bits(static_cast<std::uint8_t>((code >> (2 * (r * kk + c))) & 3));
    };
    bool singular = false;
    for (std::size_t i = 0; i < points_ && !singular; ++i) {
      const auto h = sk.column(i);
      bool zero = true;
      for (std::size_t r = 0; r < kk; ++r) {
        F4 acc;
        for (std::size_t c = 0; c < kk; ++c) acc += entry(r, c) * h[c];
        image[r] = acc;
        zero = zero && acc.is_zero();
      }
      // A singular matrix kills some projective point.
      if (zero) singular = true;
      else perm[i] = static_cast<std::uint8_t>(sk.point_index(image));
    }
    if (!singular) seen.insert(perm);
  }
  perms_.reserve(seen.size() * points_);
  for (const auto& p : seen) perms_.insert(perms_.end(), p.begin(), p.end());
}

const PglActionTable& pgl_table(int k) {
  if (k != 2 && k != 3) throw DomainError("PGL action tables are built for k = 2, 3 only");
  static std::array<std::unique_ptr<PglActionTable>, 4> cache;
  static std::array<std::once_flag, 4> flags;
  const auto idx = static_cast<std::size_t>(k);
  std::call_once(flags[idx], [k, idx] { cache[idx] = std::make_unique<PglActionTable>(k); });
  return *cache[idx];
}

void canonical_form(const PglActionTable& table, std::span<const int> m, std::span<int> out) {
  const std::size_t n = table.num_points();
  if (m.size() != n || out.size() != n) throw DimensionError("canonical_form: length mismatch");
  std::copy(m.begin(), m.end(), out.begin());
  for (std::size_t g = 1; g < table.size(); ++g) {
    const auto p = table.perm(g);
    for (std::size_t j = 0; j < n; ++j) {
      const int v = m[p[j]];
      if (v > out[j]) break;
      if (v < out[j]) {
        for (std::size_t t = j; t < n; ++t) out[t] = m[p[t]];
        break;
      }
    }
  }
}

CanonicalKey canonical_multiplicity(const PglActionTable& table, const MultiplicityVector& mv) {
  if (table.dimension() != mv.dimension()) throw DimensionError("canonical_multiplicity: dimension mismatch");
  std::vector<int> out(mv.size());
  canonical_form(table, mv.values(), out);
  return {Backend::Pgl, std::vector<std::int64_t>(out.begin(), out.end())};
}

MultiplicityVector canonical_vector(const MultiplicityVector& mv) {
  std::vector<int> out(mv.size());
  canonical_form(pgl_table(mv.dimension()), mv.values(), out);
  return {mv.dimension(), std::move(out)};
}

CodeDigraph build_code_digraph(const Code& c) {
  CodeDigraph d;
  d.k = c.dimension();
  d.n = c.length();
  const std::size_t words = d.num_codeword_vertices();
  const std::size_t total = words + d.num_coordinate_vertices();
  auto& g = d.graph;
  g.out.resize(total);
  g.color.assign(total, 1);
  std::fill(g.color.begin(), g.color.begin() + static_cast<std::ptrdiff_t>(words), 0);

  // y in {1, w, w^2} has slot bits(y) - 1; multiplying by w advances the slot cyclically.
  auto coordinate_vertex = [words](std::size_t j, F4 y) {
    return static_cast<std::uint32_t>(words + 3 * j + (y.bits() - 1u));
  };
  const auto code_words = c.codewords();
  for (std::size_t w = 0; w < code_words.size(); ++w)
    for (std::size_t j = 0; j < code_words[w].size(); ++j)
      if (!code_words[w][j].is_zero()) g.out[w].push_back(coordinate_vertex(j, code_words[w][j]));
  for (std::size_t j = 0; j < static_cast<std::size_t>(d.n); ++j)
    for (F4 y : kF4Units) g.out[coordinate_vertex(j, y)].push_back(coordinate_vertex(j, kOmega * y));
  return d;
}

CanonicalKey canonical_digraph_key(const ColoredDigraph& g) {
  const CanonicalLabeling lab = canonical_labeling(g);
  return {Backend::Digraph, std::vector<std::int64_t>(lab.certificate.begin(), lab.certificate.end())};
}

CanonicalKey canonical_digraph_key(const CodeDigraph& d) { return canonical_digraph_key(d.graph); }

CanonicalKey canonical_key(const Code& c, Backend backend) {
  if (backend == Backend::Digraph) return canonical_digraph_key(build_code_digraph(c));
  if (!c.dual_distance_at_least_2())
    throw DomainError("PGL backend needs a code without zero coordinates");
  return canonical_multiplicity(pgl_table(c.dimension()), to_multiplicities(c));
}

bool codes_equivalent(const Code& a, const Code& b, EquivalenceBackend backend) {
  if (a.length() != b.length() || a.dimension() != b.dimension()) return false;
  const bool pgl_ok = a.dual_distance_at_least_2() && b.dual_distance_at_least_2() &&
                      (a.dimension() == 2 || a.dimension() == 3);
  auto decide = [&](Backend be) { return canonical_key(a, be) == canonical_key(b, be); };
  switch (backend) {
    case EquivalenceBackend::Pgl: return decide(Backend::Pgl);
    case EquivalenceBackend::Digraph: return decide(Backend::Digraph);
    case EquivalenceBackend::Both: {
      const bool via_digraph = decide(Backend::Digraph);
      if (!pgl_ok) {
        // Zero coordinates: both codes must have the same number of them, and the
        // remaining parts must be equivalent. The digraph route covers that directly.
        return via_digraph;
      }
      const bool via_pgl = decide(Backend::Pgl);
      if (via_pgl != via_digraph)
        throw ConsistencyError("equivalence backends disagree");
      return via_pgl;
    }
    case EquivalenceBackend::Auto:
    default: return decide(pgl_ok ? Backend::Pgl : Backend::Digraph);
  }
}

}  // namespace qlcd
