#include "twseg/linalg.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace twseg;

namespace {

Mat random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int zero_bias = 0) {
  std::uniform_int_distribution<int> num(-6 - zero_bias, 6 + zero_bias), den(1, 4);
  Mat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      int p = num(rng);
      if (std::abs(p) > 6) p = 0;
      m(i, j) = Scalar(p) / den(rng);
    }
  return m;
}

}  // namespace

TEST_CASE("rref of a small matrix", "[linalg]") {
  Mat m = Mat::from_rows({{1, 2, 3}, {2, 4, 7}, {1, 2, 4}});
  auto r = rref(m);
  CHECK(r.rank == 2);
  CHECK(r.pivots == std::vector<std::size_t>{0, 2});
  CHECK(r.reduced == Mat::from_rows({{1, 2, 0}, {0, 0, 1}, {0, 0, 0}}));
}

TEST_CASE("determinant and inverse", "[linalg]") {
  Mat m = Mat::from_rows({{2, 1}, {7, 4}});
  CHECK(determinant(m) == 1);
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(*inv == Mat::from_rows({{4, -1}, {-7, 2}}));
  CHECK_FALSE(inverse(Mat::from_rows({{1, 2}, {2, 4}})));
  CHECK(determinant(Mat::from_rows({{1, 2}, {2, 4}})) == 0);
}

TEST_CASE("rank-nullity and kernel annihilation on random matrices", "[linalg][property]") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    const Mat m = random_matrix(rng, r, c, trial % 3 * 4);
    const auto ker = kernel(m);
    CHECK(ker.dim() + rank(m) == c);
    for (const auto& v : ker.basis_vectors()) CHECK(is_zero_vector<Scalar>(apply_map(m, v)));
  }
}

TEST_CASE("sum and intersection satisfy the dimension formula", "[linalg][property]") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + rng() % 5;
    auto a = Space::row_space(random_matrix(rng, 1 + rng() % n, n, 3));
    auto b = Space::row_space(random_matrix(rng, 1 + rng() % n, n, 3));
    auto s = sum(a, b), i = intersect(a, b);
    CHECK(s.dim() + i.dim() == a.dim() + b.dim());
    CHECK(i.is_subspace_of(a));
    CHECK(i.is_subspace_of(b));
    CHECK(a.is_subspace_of(s));
  }
}

TEST_CASE("annihilator is an involution", "[linalg][property]") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    auto a = Space::row_space(random_matrix(rng, 1 + rng() % n, n, 2));
    auto perp = annihilator(a);
    CHECK(perp.dim() + a.dim() == n);
    CHECK(annihilator(perp) == a);
  }
}

TEST_CASE("solve and coordinates", "[linalg]") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    Mat a = random_matrix(rng, n, n);
    Vec x(n);
    for (auto& e : x) e = Scalar(static_cast<long>(rng() % 9)) - 4;
    const Vec b = apply_map(a, x);
    auto y = solve(a, b);
    REQUIRE(y);
    CHECK(apply_map(a, *y) == b);
  }
  Mat sing = Mat::from_rows({{1, 1}, {1, 1}});
  CHECK_FALSE(solve(sing, Vec{Scalar(1), Scalar(2)}));
}

TEST_CASE("subspace membership and reduction", "[linalg]") {
  auto s = Space::span(3, {Vec{1, 1, 0}, Vec{0, 1, 1}});
  CHECK(s.contains(Vec{1, 2, 1}));
  CHECK_FALSE(s.contains(Vec{0, 0, 1}));
  CHECK(is_zero_vector<Scalar>(s.reduce(Vec{2, 3, 1})));
  auto c = s.coordinates(Vec{1, 0, -1});
  REQUIRE(c);
  CHECK_FALSE(s.coordinates(Vec{1, 0, 0}));
  CHECK_THROWS_AS(s.contains(Vec{1, 0}), input_error);
}

TEST_CASE("kron matches the index convention a*n+b", "[linalg]") {
  Mat a = Mat::from_rows({{1, 2}, {3, 4}}), b = Mat::from_rows({{0, 1}, {1, 0}});
  Mat k = kron(a, b);
  CHECK(k(0 * 2 + 1, 1 * 2 + 0) == a(0, 1) * b(1, 0));
  CHECK(k(1 * 2 + 0, 0 * 2 + 1) == a(1, 0) * b(0, 1));
}
