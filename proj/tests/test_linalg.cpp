#include <random>

#include "doctest.h"
#include "gorelab/linalg.hpp"
#include "gorelab/polynomial.hpp"

using namespace gorelab;

namespace {

Mat random_mat(std::mt19937_64& rng, std::size_t r, std::size_t c, FieldSpec k, int zero_bias = 0) {
  Mat m(r, c, k);
  std::uniform_int_distribution<std::uint32_t> d(0, k.p() - 1);
  std::uniform_int_distribution<int> z(0, 9);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = z(rng) < zero_bias ? 0 : d(rng);
  return m;
}

}  // namespace

TEST_CASE("field construction rejects composites") {
  CHECK_THROWS(FieldSpec(4));
  CHECK_THROWS(FieldSpec(1));
  CHECK_THROWS(FieldSpec(std::uint64_t{1} << 31));
  FieldSpec f3(3);
  CHECK(f3.inv(2) == 2);
  CHECK(f3.reduce(-1) == 2);
  FieldSpec big(2147483647);
  CHECK(big.mul(big.inv(123456), 123456) == 1);
}

TEST_CASE("rref examples over F3") {
  FieldSpec k(3);
  auto id = Mat::identity(2, k);
  auto r = rref(id);
  CHECK(r.rank == 2);
  CHECK(r.reduced == id);

  auto m = Mat::from_rows({{1, 2}, {2, 1}}, 2, k);
  auto r2 = rref(m);
  CHECK(r2.rank == 1);
  CHECK(r2.reduced == Mat::from_rows({{1, 2}, {0, 0}}, 2, k));
  CHECK(r2.pivot_cols == std::vector<std::size_t>{0});
}

TEST_CASE("rref is idempotent and rank preserving on random matrices") {
  FieldSpec k(5);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Mat m = random_mat(rng, 6, 6, k, trial % 7);
    auto once = rref(m);
    auto twice = rref(once.reduced);
    CHECK(twice.reduced == once.reduced);
    CHECK(twice.rank == once.rank);
    CHECK(rank(m.transposed()) == once.rank);
  }
}

TEST_CASE("kernel_basis examples") {
  FieldSpec k(3);
  auto zero = Mat(3, 3, k);
  CHECK(kernel_basis(zero) == Mat::identity(3, k));
  CHECK(kernel_basis(Mat::identity(3, k)).rows() == 0);

  auto m = Mat::from_rows({{1, 2}, {2, 1}}, 2, k);
  auto ker = kernel_basis(m);
  REQUIRE(ker.rows() == 1);
  CHECK((ker * m).is_zero());
}

TEST_CASE("rank-nullity and kernel correctness on random shapes") {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2u, 3u, 7u, 65537u}) {
    FieldSpec k(p);
    for (int trial = 0; trial < 40; ++trial) {
      std::size_t r = 1 + rng() % 8, c = 1 + rng() % 8;
      Mat m = random_mat(rng, r, c, k, trial % 9);
      Mat ker = kernel_basis(m);
      CHECK(ker.rows() + rank(m) == r);
      if (ker.rows()) CHECK((ker * m).is_zero());
      CHECK(rank(ker) == ker.rows());
    }
  }
}

TEST_CASE("solve returns exact solutions or nothing") {
  FieldSpec k(3);
  auto b = Mat::from_rows({{1, 2, 0}}, 3, k);
  auto x = solve(Mat::identity(3, k), b);
  REQUIRE(x);
  CHECK(*x == b);
  CHECK_FALSE(solve(Mat(3, 3, k), b));
  CHECK_THROWS_AS(solve(Mat::identity(2, k), b), DimensionMismatch);

  std::mt19937_64 rng(3);
  FieldSpec k7(7);
  int solved = 0;
  for (int trial = 0; trial < 60; ++trial) {
    Mat m = random_mat(rng, 4, 5, k7, 5);
    Mat rhs = random_mat(rng, 2, 5, k7);
    if (trial % 2) rhs = random_mat(rng, 2, 4, k7) * m;
    auto sol = solve(m, rhs);
    if (sol) {
      ++solved;
      CHECK(((*sol) * m) == rhs);
    }
  }
  CHECK(solved >= 30);
}

TEST_CASE("operations are deterministic") {
  FieldSpec k(5);
  std::mt19937_64 rng(99);
  Mat m = random_mat(rng, 7, 5, k);
  CHECK(kernel_basis(m) == kernel_basis(m));
  CHECK(rref(m).reduced == rref(Mat(m)).reduced);
}

TEST_CASE("row space solver coordinates") {
  FieldSpec k(3);
  Mat basis = Mat::from_rows({{1, 1, 0}, {0, 1, 2}}, 3, k);
  RowSpaceSolver s(basis);
  CHECK(s.dim() == 2);
  Mat v = Mat::from_rows({{2, 1, 1}}, 3, k);  // 2*(1,1,0) + 2*(0,1,2) = (2,4,4) = (2,1,1)
  auto c = s.coordinates(v.row(0));
  REQUIRE(c);
  CHECK((*c)[0] == 2);
  CHECK((*c)[1] == 2);
  CHECK_FALSE(s.contains(Mat::from_rows({{0, 0, 1}}, 3, k).row(0)));
  CHECK(complement_units(basis, 3) == std::vector<std::size_t>{2});
}

TEST_CASE("inverse") {
  FieldSpec k(7);
  std::mt19937_64 rng(5);
  int inverted = 0;
  for (int trial = 0; trial < 20; ++trial) {
    Mat m = random_mat(rng, 4, 4, k);
    if (rank(m) < 4) {
      CHECK_THROWS(inverse(m));
      continue;
    }
    ++inverted;
    CHECK(m * inverse(m) == Mat::identity(4, k));
  }
  CHECK(inverted > 0);
}

TEST_CASE("split roots") {
  FieldSpec k3(3);
  // (x-1)(x-2) = x^2 - 3x + 2 = x^2 + 2 over F3
  auto r = poly::split_roots({2, 0, 1}, k3);
  CHECK(r == std::vector<std::uint32_t>{1, 2});
  FieldSpec big(1000003);
  // (x-5)(x-77)(x-1000000)
  poly::Poly f{1};
  for (std::uint32_t root : {5u, 77u, 1000000u}) f = poly::mul(f, {big.neg(root), 1}, big);
  CHECK(poly::split_roots(f, big) == std::vector<std::uint32_t>{5, 77, 1000000});
}
