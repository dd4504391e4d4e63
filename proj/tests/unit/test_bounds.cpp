#include <doctest.h>

#include <functional>

#include "../support/bridge.hpp"
#include "../support/residue_rows.hpp"
#include "qlcd/bounds.hpp"
#include "qlcd/codes.hpp"
#include "qlcd/errors.hpp"
#include "qlcd/simplex.hpp"

using namespace qlcd;

namespace {

// Calls f on every vector of `points` nonnegative entries summing to n.
void for_each_composition(std::size_t points, int n, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> m(points, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == points) {
      m[i] = left;
      f(m);
      return;
    }
    for (int v = left; v >= 0; --v) {
      m[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, n);
}

// Largest minimum weight of a Hermitian LCD [n,k] code, by exhaustive search
// over multiplicity vectors of every length up to n (zero coordinates pad).
int best_lcd_weight(int k, int n) {
  int best = 0;
  for (int len = k; len <= n; ++len)
    for_each_composition(projective_points(k), len, [&](const std::vector<int>& m) {
      const MultiplicityVector mv(k, m);
      const int d = minimum_weight(mv);
      if (d <= best) return;
      if (oracle::nonsingular(to_oracle(gram_matrix(mv)))) best = d;
    });
  return best;
}

}  // namespace

TEST_CASE("Griesmer bound") {
  for (int k = 1; k <= 4; ++k)
    for (int n = k; n <= 90; ++n) {
      const int g = griesmer_g4(n, k);
      auto need = [k](int d) {
        int sum = 0;
        for (int i = 0; i < k; ++i) sum += (d + static_cast<int>(pow4(i)) - 1) / static_cast<int>(pow4(i));
        return sum;
      };
      CHECK(need(g) <= n);
      CHECK(need(g + 1) > n);
    }
  CHECK(griesmer_g4(5, 2) == 4);
  CHECK(griesmer_g4(21, 3) == 16);
  CHECK(griesmer_g4(7, 1) == 7);
  CHECK_THROWS_AS(griesmer_g4(1, 2), DomainError);
}

TEST_CASE("closed forms for d4") {
  CHECK(d4_dim2(3) == 2);
  CHECK(d4_dim2(5) == 3);
  CHECK(d4_dim2(6) == 4);
  CHECK(d4_dim2(10) == 7);
  CHECK(d4_dim3(21) == 15);
  CHECK(d4_dim3(26) == 19);
  CHECK(d4_dim3(39) == 29);
  CHECK_THROWS_AS(d4_dim2(2), DomainError);
  CHECK_THROWS_AS(d4_dim3(5), DomainError);
  for (int n = 3; n <= 200; ++n) CHECK(d4_dim2(n) <= griesmer_g4(n, 2));
  for (int n = 6; n <= 200; ++n) CHECK(d4_dim3(n) <= griesmer_g4(n, 3));
}

TEST_CASE("d4(n,2) is the best weight of a Hermitian LCD [n,2] code") {
  for (int n = 3; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(best_lcd_weight(2, n) == d4_dim2(n));
  }
}

TEST_CASE("d4(n,3) is the best weight of a Hermitian LCD [n,3] code for small n") {
  for (int n = 6; n <= 7; ++n) {
    CAPTURE(n);
    CHECK(best_lcd_weight(3, n) == d4_dim3(n));
  }
}

TEST_CASE("target weights") {
  for (int n = 3; n <= 150; ++n) CHECK(target_weight(n, 2) == d4_dim2(n));
  for (int n = 4; n <= 150; ++n) CHECK(target_weight(n, 2, true) == d4_dim2(n) - (n % 5 == 3 ? 2 : 1));
  // d4 = 2 at n = 3, so the near-optimal target would be 0.
  CHECK_THROWS_AS((void)target_weight(3, 2, true), DomainError);
  for (int n = 6; n <= 150; ++n) CHECK(target_weight(n, 3) == d4_dim3(n));
  CHECK(target_weight(2, 2) == 1);
  CHECK(target_weight(4, 3) == 2);
  CHECK(target_weight(5, 3) == 3);
  CHECK(target_weight(8, 2, true) == 4);
  CHECK(target_weight(48, 2, true) == 36);
  CHECK(near_optimal_drop(3) == 2);
  CHECK(near_optimal_drop(0) == 1);
  CHECK_THROWS_AS(target_weight(10, 3, true), DomainError);
  CHECK_THROWS_AS(target_weight(10, 4), DomainError);
  CHECK_THROWS_AS(target_weight(2, 3), DomainError);
}

TEST_CASE("multiplicity bounds") {
  CHECK(lemma3_bounds({6, 2, 4}) == MultiplicityBounds{0, 2});
  CHECK(lemma3_bounds({25, 2, 19}) == MultiplicityBounds{1, 6});
  CHECK(lemma3_bounds({26, 3, 19}) == MultiplicityBounds{0, 2});
  CHECK(lemma3_bounds({2, 2, 2}).empty());
  CHECK_THROWS_AS(lemma3_bounds({3, 1, 3}), DomainError);
}

TEST_CASE("multiplicity bounds are necessary") {
  for (int k = 2; k <= 3; ++k)
    for (int n = k; n <= (k == 2 ? 11 : 6); ++n)
      for_each_composition(projective_points(k), n, [&](const std::vector<int>& m) {
        const MultiplicityVector mv(k, m);
        const int d = minimum_weight(mv);
        if (d < 1) return;
        const MultiplicityBounds b = lemma3_bounds({n, k, d});
        for (int x : m) {
          CHECK(x >= b.lo);
          CHECK(x <= b.hi);
        }
      });
}

TEST_CASE("reduction invariants") {
  const ReductionData a = reduction_data({25, 2, 19});
  CHECK(a.r == 5);
  CHECK(a.base == ParameterTriple{20, 2, 15});
  CHECK(a.lift_blocks == 1);
  CHECK(a.applicable);

  const ReductionData b = reduction_data({81, 3, 61});
  CHECK(b.r == 15);
  CHECK(b.base == ParameterTriple{60, 3, 45});
  CHECK(b.lift_blocks == 1);
  CHECK(b.applicable);

  const ReductionData c = reduction_data({26, 3, 19});
  CHECK(c.lift_blocks == -2);
  CHECK_FALSE(c.applicable);
  CHECK(reduction_invariant({26, 3, 19}) == 17);
  CHECK_THROWS_AS(reduction_data({5, 1, 5}), DomainError);

  // The base and the lift differ by lift_blocks simplex blocks.
  for (int n = 3; n <= 120; ++n) {
    const ParameterTriple p{n, 2, d4_dim2(n)};
    const ReductionData rd = reduction_data(p);
    if (!rd.applicable) continue;
    CHECK(rd.base.n + rd.lift_blocks * 5 == n);
    CHECK(rd.base.d + rd.lift_blocks * 4 == p.d);
    CHECK(reduction_invariant(rd.base) == rd.r);
  }
}

TEST_CASE("residue rows match the published tables") {
  auto check = [](int k, bool near, const auto& rows) {
    for (const PublishedRow& row : rows) {
      CAPTURE(k);
      CAPTURE(row.t);
      const ResidueRow got = residue_row(k, row.t, near);
      CHECK(got.alpha == row.alpha);
      CHECK(got.s_prime == row.s_prime);
      CHECK(got.r == row.r);
      // r = 4^{k-1} t - N alpha and s' = (4r - t)/N + 1.
      const long long points = static_cast<long long>(projective_points(k));
      CHECK(pow4(k - 1) * row.t - points * row.alpha == row.r);
      CHECK((4LL * row.r - row.t) % points == 0);
      CHECK((4LL * row.r - row.t) / points + 1 == row.s_prime);
    }
  };
  check(2, false, kDim2Optimal);
  check(2, true, kDim2NearOptimal);
  check(3, false, kDim3Optimal);

  CHECK(residue_row(2, 4).length_formula() == "5s+4");
  CHECK(residue_row(2, 0).weight_formula() == "4s-1");
  CHECK(residue_row(3, 0).length_formula() == "21s");
  CHECK(residue_row(3, 18).weight_formula() == "16s+13");
  CHECK_THROWS_AS(residue_row(4, 0), DomainError);
  CHECK_THROWS_AS(residue_row(2, 5), DomainError);
  CHECK_THROWS_AS(residue_row(3, 1, true), DomainError);
}

TEST_CASE("parameter triple formatting") { CHECK(to_string(ParameterTriple{26, 3, 19}) == "[26,3,19]"); }

TEST_CASE("worked examples") {
  CHECK(d4_dim2(7) == 5);
  CHECK(d4_dim2(20) == 15);
  CHECK(d4_dim2(24) == 18);
  CHECK(d4_dim3(22) == 15);
  CHECK(d4_dim3(60) == 45);
  CHECK(lemma3_bounds({32, 2, 24}) == MultiplicityBounds{0, 8});
  CHECK(lemma3_bounds({20, 2, 15}) == MultiplicityBounds{0, 5});
  CHECK(lemma3_bounds({22, 3, 15}) == MultiplicityBounds{0, 3});

  const ReductionData a = reduction_data({20, 2, 15});
  CHECK(a.r == 5);
  CHECK(a.s_prime == 5);
  CHECK(a.base == ParameterTriple{20, 2, 15});
  const ReductionData b = reduction_data({22, 3, 15});
  CHECK(b.r == 37);
  CHECK(b.s_prime == 8);
  CHECK(b.base == ParameterTriple{148, 3, 111});
  const ReductionData c = reduction_data({24, 2, 18});
  CHECK(c.r == 6);
  CHECK(c.s_prime == 5);
  CHECK(c.base == ParameterTriple{24, 2, 18});
}

TEST_CASE("reduction is a fixed point on its base and independent of s") {
  for (int k = 2; k <= 3; ++k) {
    const int points = static_cast<int>(projective_points(k));
    for (int t = 0; t < points; ++t) {
      const ResidueRow row = residue_row(k, t);
      for (int s = 1; s <= 8; ++s) {
        const ParameterTriple p{points * s + t, k, static_cast<int>(pow4(k - 1)) * s + row.alpha};
        const ReductionData rd = reduction_data(p);
        CHECK(rd.r == row.r);
        CHECK(rd.s_prime == row.s_prime);
        if (rd.r > 0) CHECK(reduction_data(rd.base).r == rd.r);
        CHECK(4 * rd.r == points * (rd.s_prime - 1) + t);
        CHECK(3 * rd.r == pow4(k - 1) * (rd.s_prime - 1) + row.alpha);
      }
    }
  }
  for (int n = 3; n <= 500; ++n) CHECK(d4_dim2(n) <= griesmer_g4(n, 2));
  for (int n = 6; n <= 500; ++n) CHECK(d4_dim3(n) <= griesmer_g4(n, 3));
}
