#include "twseg/findim.hpp"

#include <catch_amalgamated.hpp>

using namespace twseg;

namespace {

Vec v(std::initializer_list<int> xs) {
  Vec out;
  for (int x : xs) out.push_back(Scalar(x));
  return out;
}

/// k[e]/(e^2) on the basis 1, e.
FinDimAlgebra dual_numbers() { return FinDimAlgebra::from_table(v({1, 0}), {{v({1, 0}), v({0, 1})}, {v({0, 1}), v({0, 0})}}); }

/// Q(i) on the basis 1, i.
FinDimAlgebra gaussian() { return FinDimAlgebra::from_table(v({1, 0}), {{v({1, 0}), v({0, 1})}, {v({0, 1}), v({-1, 0})}}); }

/// Hamilton quaternions over Q on 1, i, j, k.
FinDimAlgebra quaternions() {
  const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  const int idx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  std::vector<std::vector<Vec>> t(4, std::vector<Vec>(4, Vec(4, Scalar(0))));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) t[a][b][idx[a][b]] = sign[a][b];
  return FinDimAlgebra::from_table(v({1, 0, 0, 0}), t);
}

Mat e2(int i, int j) {
  Mat m(2, 2);
  m(i, j) = 1;
  return m;
}

}  // namespace

TEST_CASE("radical of small algebras", "[findim]") {
  CHECK(radical(dual_numbers()).dim() == 1);
  CHECK(radical(dual_numbers()).contains(v({0, 1})));
  CHECK(radical(FinDimAlgebra::matrix_algebra(2)).dim() == 0);
  CHECK(radical(quaternions()).dim() == 0);
}

TEST_CASE("center dimensions", "[findim]") {
  CHECK(center(FinDimAlgebra::matrix_algebra(2)).dim() == 1);
  CHECK(center(FinDimAlgebra::matrix_algebra(3)).dim() == 1);
  const auto kk = FinDimAlgebra::product(FinDimAlgebra::matrix_algebra(1), FinDimAlgebra::matrix_algebra(1));
  CHECK(center(kk).dim() == 2);
  CHECK(center(quaternions()).dim() == 1);
}

TEST_CASE("Wedderburn types", "[findim]") {
  const auto kk = FinDimAlgebra::product(FinDimAlgebra::matrix_algebra(1), FinDimAlgebra::matrix_algebra(1));
  CHECK(wedderburn_type(kk).blocks == std::vector<std::size_t>{1, 1});
  CHECK(wedderburn_type(FinDimAlgebra::matrix_algebra(2)).blocks == std::vector<std::size_t>{2});
  const auto mixed = FinDimAlgebra::product(FinDimAlgebra::matrix_algebra(3), FinDimAlgebra::matrix_algebra(1));
  const auto w = wedderburn_type(mixed);
  CHECK(w.blocks == std::vector<std::size_t>{1, 3});
  CHECK(w.split);
  CHECK(w.center_dim == 2);
  const auto m22 = FinDimAlgebra::product(FinDimAlgebra::matrix_algebra(2), FinDimAlgebra::matrix_algebra(2));
  CHECK(wedderburn_type(m22).blocks == std::vector<std::size_t>{2, 2});
  CHECK_THROWS_AS(wedderburn_type(dual_numbers()), math_error);
}

TEST_CASE("non-split algebras are reported, not forced", "[findim]") {
  const auto g = wedderburn_type(gaussian());
  CHECK(g.semisimple);
  CHECK_FALSE(g.split);
  CHECK_FALSE(g.obstructions.empty());
  const auto h = wedderburn_type(quaternions());
  CHECK_FALSE(h.split);
  CHECK_FALSE(h.obstructions.empty());
}

TEST_CASE("Wedderburn type does not depend on the seed", "[findim]") {
  const auto m22 = FinDimAlgebra::product(FinDimAlgebra::matrix_algebra(2), FinDimAlgebra::matrix_algebra(1));
  for (unsigned long seed : {1UL, 2UL, 99UL}) CHECK(wedderburn_type(m22, seed).blocks == std::vector<std::size_t>{1, 2});
}

TEST_CASE("radical is a two-sided ideal", "[findim][property]") {
  // Upper triangular 2x2 matrices: basis e11, e12, e22.
  std::vector<std::vector<Vec>> t(3, std::vector<Vec>(3, v({0, 0, 0})));
  t[0][0] = v({1, 0, 0});
  t[0][1] = v({0, 1, 0});
  t[1][2] = v({0, 1, 0});
  t[2][2] = v({0, 0, 1});
  const auto up = FinDimAlgebra::from_table(v({1, 0, 1}), t);
  REQUIRE(up.associative());
  const auto rad = radical(up);
  CHECK(rad.dim() == 1);
  for (const auto& r : rad.basis_vectors())
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(rad.contains(up.multiply(up.basis(i), r)));
      CHECK(rad.contains(up.multiply(r, up.basis(i))));
    }
}

TEST_CASE("explicit isomorphism on M2", "[findim]") {
  const auto m2 = FinDimAlgebra::matrix_algebra(2);
  std::vector<Vec> elems;
  std::vector<std::vector<Mat>> images;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      elems.push_back(m2.basis(static_cast<std::size_t>(i * 2 + j)));
      images.push_back({e2(i, j)});
    }
  CHECK(verify_explicit_iso(m2, elems, images).ok);
  // Transpose is an anti-isomorphism.
  std::vector<std::vector<Mat>> transposed;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) transposed.push_back({e2(j, i)});
  const auto r = verify_explicit_iso(m2, elems, transposed);
  CHECK_FALSE(r.ok);
  CHECK(r.reason.find("not multiplicative") != std::string::npos);
  // Three elements do not span.
  elems.pop_back();
  images.pop_back();
  CHECK_THROWS_AS(verify_explicit_iso(m2, elems, images), input_error);
}

TEST_CASE("malformed structure constants", "[findim]") {
  CHECK_THROWS_AS(FinDimAlgebra::from_table(v({1, 0}), {{v({1, 0})}}), input_error);
  // Basis 1, a, b with aa = b, ab = 0, ba = a: (aa)a = a but a(aa) = 0.
  std::vector<std::vector<Vec>> t(3, std::vector<Vec>(3, v({0, 0, 0})));
  for (std::size_t i = 0; i < 3; ++i) {
    t[0][i][i] = 1;
    t[i][0][i] = 1;
  }
  t[1][1] = v({0, 0, 1});
  t[2][1] = v({0, 1, 0});
  const auto bad = FinDimAlgebra::from_table(v({1, 0, 0}), t);
  CHECK(bad.unital());
  CHECK_FALSE(bad.associative());
  // Q(sqrt 5) = Q[x]/(x^2 - x - 1) is a field: semisimple, one non-split block.
  const auto f = FinDimAlgebra::from_table(v({1, 0}), {{v({1, 0}), v({0, 1})}, {v({0, 1}), v({1, 1})}});
  CHECK(f.associative());
  CHECK_FALSE(wedderburn_type(f).split);
}
