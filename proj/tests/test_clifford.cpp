#include "oracles.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace twseg;

namespace {

struct Built {
  QuadraticPresentation dual;
  NormalCertificate cert;
  StabilizationData stab;
};

Built build(const oracle::Coeffs& k) {
  auto dual = oracle::segre_dual(k);
  auto r = verify_normal(dual, oracle::w_dual(k));
  REQUIRE(r.ok());
  auto stab = stabilize(dual, *r.certificate, 6);
  return {dual, *r.certificate, stab};
}

TriangularCoefficients coeffs(const oracle::Coeffs& k) { return {k.a11, k.a21, k.a22, k.b11, k.b21, k.b22}; }

}  // namespace

TEST_CASE("stabilization of the dual", "[clifford]") {
  const auto b = build(oracle::generic());
  CHECK(b.stab.stabilized);
  CHECK(b.stab.i0 == 2);
  CHECK(b.stab.dims == std::vector<std::size_t>{1, 7, 8, 8});
  const auto early = stabilize(b.dual, b.cert, 1);
  CHECK_FALSE(early.stabilized);
}

TEST_CASE("C(A) is 8-dimensional at every stabilized level", "[clifford]") {
  const auto b = build(oracle::generic());
  for (int level : {2, 3}) {
    const auto c = clifford_algebra(b.dual, b.cert, b.stab, level);
    CHECK(c.base.dim == 8);
    CHECK(c.base.associative());
    CHECK(c.base.unital());
  }
  CHECK_THROWS_AS(clifford_algebra(b.dual, b.cert, b.stab, 1), input_error);
}

TEST_CASE("t-element table matches the closed form", "[clifford]") {
  const auto expected = oracle::t_table();
  for (const auto& k : {oracle::generic(), oracle::unipotent(), oracle::diagonal()}) {
    const auto b = build(k);
    const auto c = clifford_algebra(b.dual, b.cert, b.stab, 2);
    const auto t = evaluate_t_elements(c, coeffs(k));
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) {
        INFO(t.names[i] << " * " << t.names[j]);
        CHECK(t.products[i][j] == expected[i][j]);
      }
  }
}

TEST_CASE("C(A) is M2 x M2 via rho", "[clifford]") {
  const auto k = oracle::generic();
  const auto b = build(k);
  const auto c = clifford_algebra(b.dual, b.cert, b.stab, 2);
  CHECK(radical(c.base).dim() == 0);
  CHECK(center(c.base).dim() == 2);
  const auto w = wedderburn_type(c.base);
  CHECK(w.blocks == std::vector<std::size_t>{2, 2});
  CHECK(w.split);
  const auto t = evaluate_t_elements(c, coeffs(k));
  CHECK(verify_explicit_iso(c.base, t.elements, oracle::rho(), t.names).ok);

  auto flipped = oracle::rho();
  flipped[4] = {oracle::unit2(0, 0, 1), oracle::unit2(1, 1, 1)};
  CHECK_FALSE(verify_explicit_iso(c.base, t.elements, flipped, t.names).ok);
  // t4 t4 = -t4 is one of the broken products.
  const Mat sq0 = flipped[4][0] * flipped[4][0], sq1 = flipped[4][1] * flipped[4][1];
  CHECK_FALSE((sq0 == scaled(flipped[4][0], Scalar(-1)) && sq1 == scaled(flipped[4][1], Scalar(-1))));
}

TEST_CASE("Wedderburn type over random valid coefficients", "[clifford][property]") {
  std::mt19937_64 rng(53);
  const auto expected = oracle::t_table();
  for (int trial = 0; trial < 6; ++trial) {
    const auto k = oracle::random_commuting(rng);
    const auto b = build(k);
    REQUIRE(b.stab.stabilized);
    const auto c = clifford_algebra(b.dual, b.cert, b.stab, std::max(2, b.stab.i0));
    CHECK(wedderburn_type(c.base).blocks == std::vector<std::size_t>{2, 2});
    CHECK(evaluate_t_elements(c, coeffs(k)).products == expected);
  }
}

TEST_CASE("class_of respects the level", "[clifford]") {
  const auto b = build(oracle::generic());
  const auto c = clifford_algebra(b.dual, b.cert, b.stab, 2);
  CHECK(c.class_of(c.quotient->unit()) == c.base.unit);
  CHECK_THROWS_AS(c.class_of(c.quotient->generator(0)), input_error);
  // w w^-1 = 1
  CHECK(c.class_of(c.w) == c.base.unit);
}

TEST_CASE("triangular coefficients need D = P = 0", "[clifford]") {
  auto t = oracle::generic().twist();
  CHECK(TriangularCoefficients::from_twist(t).b22 == 7);
  t.D(0, 0) = 1;
  CHECK_THROWS_AS(TriangularCoefficients::from_twist(t), input_error);
}
