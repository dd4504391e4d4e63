#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "../support/bridge.hpp"
#include "qlcd/codes.hpp"
#include "qlcd/equivalence.hpp"
#include "qlcd/errors.hpp"
#include "qlcd/simplex.hpp"

using namespace qlcd;

namespace {

// Point permutations of PG(1,4) induced by every invertible 2x2 matrix,
// computed with the oracle arithmetic.
std::set<std::vector<std::size_t>> oracle_pgl2() {
  const SimplexMatrix& s = simplex(2);
  std::set<std::vector<std::size_t>> out;
  for (const auto& entries : oracle::messages(4)) {
    const oracle::Matrix a{{entries[0], entries[1]}, {entries[2], entries[3]}};
    if (!oracle::nonsingular(a)) continue;
    std::vector<std::size_t> perm;
    for (std::size_t i = 0; i < 5; ++i) {
      const auto h = s.column(i);
      std::vector<F4> image(2);
      for (std::size_t r = 0; r < 2; ++r)
        image[r] = F4::from_bits(oracle::add(oracle::mul(a[r][0], h[0].bits()), oracle::mul(a[r][1], h[1].bits())));
      perm.push_back(s.point_index(image));
    }
    out.insert(perm);
  }
  return out;
}

bool brute_same_orbit(const std::vector<int>& a, const std::vector<int>& b) {
  for (const auto& p : oracle_pgl2()) {
    std::vector<int> image(5);
    for (std::size_t i = 0; i < 5; ++i) image[p[i]] = a[i];
    if (image == b) return true;
  }
  return false;
}

// Random monomial image of G: row operations, column permutation, column scaling.
F4Matrix monomial_image(std::mt19937& rng, const F4Matrix& g) {
  F4Matrix a = random_matrix(rng, g.rows(), g.rows());
  while (!is_nonsingular(a)) a = random_matrix(rng, g.rows(), g.rows());
  const F4Matrix rowed = a * g;
  std::vector<std::size_t> perm(g.cols());
  std::iota(perm.begin(), perm.end(), 0u);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::uniform_int_distribution<int> unit(0, 2);
  F4Matrix out(g.rows(), g.cols());
  for (std::size_t c = 0; c < g.cols(); ++c) {
    const F4 lambda = kF4Units[static_cast<std::size_t>(unit(rng))];
    for (std::size_t r = 0; r < g.rows(); ++r) out(r, perm[c]) = lambda * rowed(r, c);
  }
  return out;
}

MultiplicityVector random_full_rank(std::mt19937& rng, int k, int n) {
  for (;;) {
    MultiplicityVector mv(k, oracle::random_multiplicities(rng, projective_points(k), n));
    if (has_full_rank(mv)) return mv;
  }
}

}  // namespace

TEST_CASE("PGL action tables") {
  const PglActionTable& t2 = pgl_table(2);
  CHECK(t2.size() == 60);
  CHECK(t2.num_points() == 5);
  const PglActionTable& t3 = pgl_table(3);
  CHECK(t3.size() == 60480);
  CHECK(t3.num_points() == 21);
  CHECK_THROWS_AS(pgl_table(4), DomainError);

  for (const PglActionTable* t : {&t2, &t3}) {
    const auto id = t->perm(0);
    for (std::size_t i = 0; i < id.size(); ++i) CHECK(id[i] == i);
  }

  std::set<std::vector<std::size_t>> table2;
  for (std::size_t g = 0; g < t2.size(); ++g) table2.insert({t2.perm(g).begin(), t2.perm(g).end()});
  CHECK(table2 == oracle_pgl2());

  // Closed under composition.
  for (std::size_t a = 0; a < t2.size(); ++a)
    for (std::size_t b = 0; b < t2.size(); ++b) {
      std::vector<std::size_t> comp(5);
      for (std::size_t i = 0; i < 5; ++i) comp[i] = t2.perm(a)[t2.perm(b)[i]];
      CHECK(table2.count(comp) == 1);
    }
  std::set<std::vector<std::uint8_t>> table3;
  for (std::size_t g = 0; g < t3.size(); ++g) table3.insert({t3.perm(g).begin(), t3.perm(g).end()});
  CHECK(table3.size() == t3.size());
  std::mt19937 rng(31);
  std::uniform_int_distribution<std::size_t> pick(0, t3.size() - 1);
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = t3.perm(pick(rng));
    const auto b = t3.perm(pick(rng));
    std::vector<std::uint8_t> comp(21);
    for (std::size_t i = 0; i < 21; ++i) comp[i] = a[b[i]];
    CHECK(table3.count(comp) == 1);
  }
}

TEST_CASE("canonical form is the least image") {
  std::mt19937 rng(37);
  const PglActionTable& t2 = pgl_table(2);
  for (int trial = 0; trial < 100; ++trial) {
    const std::vector<int> m = oracle::random_multiplicities(rng, 5, 9);
    std::vector<int> best = m;
    for (std::size_t g = 0; g < t2.size(); ++g) {
      std::vector<int> image(5);
      for (std::size_t j = 0; j < 5; ++j) image[j] = m[t2.perm(g)[j]];
      best = std::min(best, image);
    }
    std::vector<int> out(5);
    canonical_form(t2, m, out);
    CHECK(out == best);
  }
  std::vector<int> out(4);
  CHECK_THROWS_AS(canonical_form(t2, std::vector<int>{1, 1, 1, 1, 1}, out), DimensionError);
  CHECK_THROWS_AS(canonical_multiplicity(t2, MultiplicityVector(3, std::vector<int>(21, 1))), DimensionError);
}

TEST_CASE("equal multisets need not be equivalent") {
  // PGL(2,4) acts on the five points as A5, so an odd permutation of a vector
  // with distinct entries leaves its orbit.
  const std::vector<int> a{0, 1, 2, 3, 4};
  const std::vector<int> b{1, 0, 2, 3, 4};
  CHECK_FALSE(brute_same_orbit(a, b));
  const MultiplicityVector ma(2, a), mb(2, b);
  CHECK(canonical_vector(ma) != canonical_vector(mb));
  const Code ca = build_code(ma), cb = build_code(mb);
  CHECK_FALSE(codes_equivalent(ca, cb, EquivalenceBackend::Pgl));
  CHECK_FALSE(codes_equivalent(ca, cb, EquivalenceBackend::Digraph));
  CHECK_FALSE(codes_equivalent(ca, cb, EquivalenceBackend::Both));

  const std::vector<int> c{2, 1, 0, 3, 4};
  const std::vector<int> d{0, 2, 1, 3, 4};
  CHECK(brute_same_orbit(a, std::vector<int>{1, 2, 0, 3, 4}) ==
        codes_equivalent(ca, build_code(MultiplicityVector(2, {1, 2, 0, 3, 4}))));
  CHECK(brute_same_orbit(c, d) == codes_equivalent(build_code(MultiplicityVector(2, c)),
                                                   build_code(MultiplicityVector(2, d)), EquivalenceBackend::Both));
}

TEST_CASE("PGL orbits agree with brute force") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const std::vector<int> a = oracle::random_multiplicities(rng, 5, 7);
    const std::vector<int> b = oracle::random_multiplicities(rng, 5, 7);
    const bool same = canonical_vector(MultiplicityVector(2, a)) == canonical_vector(MultiplicityVector(2, b));
    CHECK(same == brute_same_orbit(a, b));
  }
}

TEST_CASE("a doubled point is equivalent wherever it sits") {
  const Code a = build_code(MultiplicityVector(2, {2, 1, 1, 1, 1}));
  const Code b = build_code(MultiplicityVector(2, {1, 2, 1, 1, 1}));
  CHECK(codes_equivalent(a, b));
  CHECK(codes_equivalent(a, b, EquivalenceBackend::Pgl));
  CHECK(codes_equivalent(a, b, EquivalenceBackend::Digraph));
  CHECK(codes_equivalent(a, b, EquivalenceBackend::Both));
  CHECK(canonical_key(a, Backend::Pgl) == canonical_key(b, Backend::Pgl));
  CHECK(to_string(canonical_key(a, Backend::Pgl)) == "pgl:(1,1,1,1,2)");
}

TEST_CASE("code digraph shape") {
  const CodeDigraph id2 = build_code_digraph(Code(F4Matrix::identity(2)));
  CHECK(id2.num_codeword_vertices() == 16);
  CHECK(id2.num_coordinate_vertices() == 6);
  CHECK(id2.graph.num_vertices() == 22);
  CHECK(id2.graph.num_arcs() == 24 + 6);

  const CodeDigraph s2 = build_code_digraph(build_code(MultiplicityVector(2, {1, 1, 1, 1, 1})));
  CHECK(s2.graph.num_arcs() == 60 + 15);
  // Coordinate vertices form directed 3-cycles (j,y) -> (j,wy).
  CHECK(s2.graph.out[16] == std::vector<std::uint32_t>{17});
  CHECK(s2.graph.out[17] == std::vector<std::uint32_t>{18});
  CHECK(s2.graph.out[18] == std::vector<std::uint32_t>{16});
  CHECK(s2.graph.color[0] == 0);
  CHECK(s2.graph.color[16] == 1);
}

TEST_CASE("digraph key is invariant under vertex shuffles") {
  std::mt19937 rng(43);
  const CodeDigraph d = build_code_digraph(build_code(MultiplicityVector(2, {3, 1, 0, 2, 1})));
  const CanonicalKey key = canonical_digraph_key(d);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::uint32_t> perm(d.graph.num_vertices());
    std::iota(perm.begin(), perm.end(), 0u);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_digraph_key(d.graph.relabeled(perm)) == key);
  }
}

TEST_CASE("random monomial transforms are recognized by both backends") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    const int k = 2 + trial % 2;
    const MultiplicityVector mv = random_full_rank(rng, k, k == 2 ? 4 + trial % 8 : 5 + trial % 6);
    const Code c = build_code(mv);
    const Code image(monomial_image(rng, c.generator()));
    CHECK(to_multiplicities(image).length() == mv.length());
    CHECK(canonical_key(c, Backend::Pgl) == canonical_key(image, Backend::Pgl));
    CHECK(canonical_key(c, Backend::Digraph) == canonical_key(image, Backend::Digraph));
    CHECK(codes_equivalent(c, image, EquivalenceBackend::Both));
  }
}

TEST_CASE("backends agree on random pairs") {
  std::mt19937 rng(53);
  int equal = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const int k = 2 + trial % 2;
    const int n = k == 2 ? 6 : 7;
    const Code a = build_code(random_full_rank(rng, k, n));
    const Code b = build_code(random_full_rank(rng, k, n));
    bool same = false;
    CHECK_NOTHROW(same = codes_equivalent(a, b, EquivalenceBackend::Both));
    equal += same;
  }
  CHECK(equal > 0);
}

TEST_CASE("codes with zero coordinates") {
  const Code a = hat_extend(build_code(MultiplicityVector(2, {2, 1, 1, 1, 1})));
  const Code b = hat_extend(build_code(MultiplicityVector(2, {1, 1, 1, 2, 1})));
  const Code c = build_code(MultiplicityVector(2, {3, 1, 1, 1, 1}));
  CHECK(codes_equivalent(a, b));
  CHECK(codes_equivalent(a, b, EquivalenceBackend::Both));
  CHECK_FALSE(codes_equivalent(a, c));
  CHECK_THROWS_AS(codes_equivalent(a, b, EquivalenceBackend::Pgl), DomainError);
  CHECK_THROWS_AS(canonical_key(a, Backend::Pgl), DomainError);
  CHECK_FALSE(codes_equivalent(a, build_code(MultiplicityVector(2, {2, 1, 1, 1, 1}))));
}
