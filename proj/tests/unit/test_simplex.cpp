#include <doctest.h>

#include <set>

#include "../support/oracles.hpp"
#include "qlcd/errors.hpp"
#include "qlcd/simplex.hpp"

using namespace qlcd;

namespace {

std::vector<std::uint8_t> bits_of(std::span<const F4> v) {
  std::vector<std::uint8_t> out;
  for (F4 x : v) out.push_back(x.bits());
  return out;
}

// Representatives with leading nonzero coordinate 1, by brute force.
std::set<std::vector<std::uint8_t>> normalized_points(int k) {
  std::set<std::vector<std::uint8_t>> out;
  for (const auto& u : oracle::messages(k)) {
    std::size_t lead = 0;
    while (lead < u.size() && u[lead] == 0) ++lead;
    if (lead < u.size() && u[lead] == 1) out.insert(u);
  }
  return out;
}

}  // namespace

TEST_CASE("point counts") {
  CHECK(projective_points(1) == 1);
  CHECK(projective_points(2) == 5);
  CHECK(projective_points(3) == 21);
  CHECK(projective_points(4) == 85);
  CHECK(pow4(3) == 64);
}

TEST_CASE("columns are one normalized representative per projective point") {
  for (int k = 1; k <= 4; ++k) {
    const SimplexMatrix& s = simplex(k);
    CHECK(s.dimension() == k);
    CHECK(s.num_points() == projective_points(k));
    CHECK(s.matrix().rows() == static_cast<std::size_t>(k));
    std::set<std::vector<std::uint8_t>> cols;
    for (std::size_t i = 0; i < s.num_points(); ++i) cols.insert(bits_of(s.column(i)));
    CHECK(cols == normalized_points(k));
  }
}

TEST_CASE("column order for k = 2 and k = 3") {
  const SimplexMatrix& s2 = simplex(2);
  const std::vector<std::vector<std::uint8_t>> expected{{1, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3}};
  for (std::size_t i = 0; i < 5; ++i) CHECK(bits_of(s2.column(i)) == expected[i]);

  const SimplexMatrix& s3 = simplex(3);
  CHECK(bits_of(s3.column(0)) == std::vector<std::uint8_t>{1, 0, 0});
  CHECK(bits_of(s3.column(1)) == std::vector<std::uint8_t>{0, 1, 0});
  CHECK(bits_of(s3.column(5)) == std::vector<std::uint8_t>{0, 0, 1});
  // 1-based support {1,3,4,5,7,9,10,11,12,14,15,16,17,19,20,21}.
  const std::vector<std::size_t> support{0, 2, 3, 4, 6, 8, 9, 10, 11, 13, 14, 15, 16, 18, 19, 20};
  CHECK(s3.first_row_support() == support);
  CHECK(s2.first_row_support() == std::vector<std::size_t>{0, 2, 3, 4});
}

TEST_CASE("the simplex code is a constant-weight code") {
  for (int k = 2; k <= 3; ++k) {
    oracle::Matrix g(static_cast<std::size_t>(k));
    const SimplexMatrix& s = simplex(k);
    for (std::size_t r = 0; r < g.size(); ++r)
      for (std::size_t c = 0; c < s.num_points(); ++c) g[r].push_back(s.matrix()(r, c).bits());
    for (const auto& u : oracle::messages(k))
      if (oracle::weight(u) > 0) CHECK(oracle::weight(oracle::encode(u, g)) == pow4(k - 1));
  }
}

TEST_CASE("point_index inverts scaling") {
  for (int k = 1; k <= 3; ++k) {
    const SimplexMatrix& s = simplex(k);
    for (std::size_t i = 0; i < s.num_points(); ++i)
      for (F4 lambda : kF4Units) {
        std::vector<F4> v(s.column(i).begin(), s.column(i).end());
        for (F4& x : v) x = lambda * x;
        CHECK(s.point_index(v) == i);
      }
  }
  CHECK_THROWS_AS((void)simplex(2).point_index(std::vector<F4>{kZero, kZero}), DomainError);
  CHECK_THROWS_AS((void)simplex(2).point_index(std::vector<F4>{kOne}), DimensionError);
}

TEST_CASE("hyperplanes") {
  for (int k = 2; k <= 3; ++k) {
    const SimplexMatrix& s = simplex(k);
    const auto& planes = s.hyperplanes();
    REQUIRE(planes.size() == s.num_points());
    for (std::size_t j = 0; j < planes.size(); ++j) {
      CHECK(planes[j].size() == projective_points(k - 1));
      for (std::size_t i = 0; i < s.num_points(); ++i) {
        const bool inside = std::find(planes[j].begin(), planes[j].end(), i) != planes[j].end();
        CHECK(inside == dot(s.column(j), s.column(i)).is_zero());
      }
    }
  }
  CHECK(simplex(2).hyperplanes()[0] == std::vector<std::size_t>{1});
}

TEST_CASE("invalid dimensions") {
  CHECK_THROWS_AS(SimplexMatrix(0), DomainError);
  CHECK_THROWS_AS(simplex(0), DomainError);
  CHECK_THROWS_AS(simplex(7), DomainError);
  CHECK_THROWS_AS(dot(std::vector<F4>{kOne}, std::vector<F4>{kOne, kOne}), DimensionError);
}

TEST_CASE("worked examples") {
  CHECK(simplex(1).matrix() == F4Matrix{{kOne}});
  CHECK(simplex(1).first_row_support() == std::vector<std::size_t>{0});
  CHECK(simplex(2).point_index(std::vector<F4>{kOmega, kOmega}) == 2);
  CHECK(simplex(2).point_index(std::vector<F4>{kZero, kOmega2}) == 1);
  const std::vector<F4> v{kOne, kOmega, kOmega2};
  const std::vector<F4> w{kOmega, kOmega2, kOne};
  CHECK(simplex(3).point_index(v) == simplex(3).point_index(w));
  CHECK(simplex(3).first_row_support().size() == 16);
  CHECK(gram_matrix(simplex(2).matrix()).is_zero());
  CHECK(rank(simplex(2).matrix()) == 2);
}
