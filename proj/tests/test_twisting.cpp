#include "oracles.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace twseg;

TEST_CASE("the flip descends and passes the block conditions", "[twisting]") {
  TwistData t(TwistingSeed::flip(2, 2), oracle::poly2("u", "v"), oracle::poly2("x", "y"));
  CHECK(validate_descent(t).pass());
  CHECK(validate_2x2(Twist2x2::from_seed(t.seed())).pass());
  CHECK(is_diagonal(t));
}

TEST_CASE("block form and seed round trip", "[twisting]") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    Twist2x2 t;
    for (Mat* b : {&t.C, &t.D, &t.P, &t.Q})
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) (*b)(i, j) = Scalar(static_cast<long>(rng() % 11)) - 5;
    const Twist2x2 back = Twist2x2::from_seed(t.to_seed());
    CHECK(back.C == t.C);
    CHECK(back.D == t.D);
    CHECK(back.P == t.P);
    CHECK(back.Q == t.Q);
    CHECK(t.tilde().tilde().C == t.C);
  }
}

TEST_CASE("commuting lower-triangular pairs pass both validators", "[twisting][property]") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const auto k = oracle::random_commuting(rng);
    const auto d = validate_descent(oracle::twist_data(k));
    const auto b = validate_2x2(k.twist());
    CHECK(d.pass());
    CHECK(b.pass());
    CHECK(validate_sigma(sigma_of(oracle::twist_data(k)), oracle::poly2("u", "v")));
  }
}

TEST_CASE("non-commuting pairs fail both validators", "[twisting][property]") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 60; ++trial) {
    const auto k = oracle::random_noncommuting(rng);
    const auto d = validate_descent(oracle::twist_data(k));
    const auto b = validate_2x2(k.twist());
    CHECK_FALSE(d.pass());
    CHECK_FALSE(b.pass());
    CHECK(d.pass() == b.pass());
  }
}

TEST_CASE("the non-commuting fixture fails with a witness", "[twisting]") {
  oracle::Coeffs k{1, 1, 1, 1, 0, 2};
  const auto d = validate_descent(oracle::twist_data(k));
  CHECK_FALSE(d.pass());
  CHECK((d.a_witness || d.b_witness));
  const auto b = validate_2x2(k.twist());
  CHECK_FALSE(b.cond1);
  CHECK(b.failures.front() == "DP+CQ != PD+QC");
}

TEST_CASE("singular H is an input error", "[twisting]") {
  Twist2x2 t;
  t.C = Mat::from_rows({{1, 0}, {0, 0}});
  t.Q = Mat::identity(2);
  CHECK_THROWS_AS(validate_2x2(t), input_error);
}

TEST_CASE("dimension mismatches are rejected", "[twisting]") {
  CHECK_THROWS_AS(TwistData(TwistingSeed::flip(3, 2), oracle::poly2("u", "v"), oracle::poly2("x", "y")), input_error);
}

TEST_CASE("sigma inverts for diagonal twists", "[twisting]") {
  const auto s = sigma_of(oracle::twist_data(oracle::generic()));
  CHECK(is_diagonal(s));
  const auto tau = invert_sigma(s);
  CHECK(tau(0, 0) * s(0, 0) == Mat::identity(2));
}
