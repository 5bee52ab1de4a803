#include "oracles.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace twseg;

TEST_CASE("Segre relations equal f1..f7", "[segre]") {
  for (const auto& k : {oracle::generic(), oracle::unipotent(), oracle::diagonal()}) {
    const auto sp = segre_presentation(oracle::twist_data(k));
    CHECK(sp.presentation.gens().names() == std::vector<std::string>{"X", "Y", "Z", "W"});
    CHECK(sp.presentation.relations().dim() == 7);
    CHECK(sp.presentation.relations() == oracle::segre(k).relations());
  }
}

TEST_CASE("Segre relations over random commuting pairs", "[segre][property]") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const auto k = oracle::random_commuting(rng);
    CHECK(segre_presentation(oracle::twist_data(k)).presentation.relations() == oracle::segre(k).relations());
  }
}

TEST_CASE("Hilbert series of the twisted Segre product", "[segre]") {
  const auto sp = segre_presentation(oracle::twist_data(oracle::unipotent()));
  const auto h = hilbert_series(sp.presentation, 6);
  for (std::size_t n = 0; n <= 6; ++n) CHECK(h[n] == (n + 1) * (n + 1));
}

TEST_CASE("cross validation against the componentwise model", "[segre]") {
  const auto t = oracle::twist_data(oracle::generic());
  const auto ok = cross_validate(t, 5);
  CHECK(ok.pass);
  CHECK(ok.presentation_dims == ok.component_dims);

  auto f = oracle::f_relations(oracle::generic());
  f.pop_back();
  const auto dropped = QuadraticPresentation::from_relations(oracle::xyzw(), f);
  const auto bad = cross_validate(t, 5, dropped);
  CHECK_FALSE(bad.pass);
  CHECK(bad.failure_stage == "hilbert");
  CHECK(bad.failure_degree == 2);

  // Same dimension, wrong relation: f7 replaced by XW - YZ.
  f.push_back(oracle::el({{"XW", 1}, {"YZ", -1}}));
  const auto swapped = cross_validate(t, 5, QuadraticPresentation::from_relations(oracle::xyzw(), f));
  CHECK_FALSE(swapped.pass);
  CHECK(swapped.failure_degree == 2);
  CHECK_FALSE(swapped.counterexample.empty());
}

TEST_CASE("twist that does not descend has no Segre presentation", "[segre]") {
  CHECK_THROWS_AS(segre_presentation(oracle::twist_data({1, 1, 1, 1, 0, 2})), math_error);
}

TEST_CASE("Zhang twist dichotomy", "[segre]") {
  auto diag = [](int a, int b) { return Mat::from_rows({{a, 0}, {0, b}}); };
  CHECK(zhang_twist_check(Twist2x2::diagonal(diag(2, 1), diag(2, 1))));
  CHECK_FALSE(zhang_twist_check(Twist2x2::diagonal(diag(1, 2), diag(3, 1))));
  CHECK(zhang_twist_check(Twist2x2::diagonal(diag(1, 1), diag(1, 1))));
  CHECK(zhang_twist_check(Twist2x2::diagonal(diag(3, 5), diag(6, 10))));
  CHECK_THROWS_AS(zhang_twist_check(oracle::unipotent().twist()), input_error);
}

TEST_CASE("density window for the unipotent instance", "[segre]") {
  const auto tr = smash_truncation(oracle::twist_data(oracle::unipotent()), 1, 4);
  const auto rep = density_window_check(tr, 1, -1);
  CHECK(rep.proof_range_covered);
  CHECK(rep.defects == std::vector<int>{0});
  for (const auto& e : rep.entries) {
    CHECK(e.target_dim == static_cast<std::size_t>((e.t + 1) * (e.t + 1)));
    if (e.t >= 1) CHECK(e.covered());
  }
  const auto sq = density_window_check(smash_truncation(oracle::twist_data(oracle::unipotent()), 2, 4), 1, 1);
  CHECK(sq.defects.empty());
  CHECK_THROWS_AS(density_window_check(tr, 1, 1), input_error);
}

TEST_CASE("smash truncation products are associative", "[segre][property]") {
  const auto tr = smash_truncation(oracle::twist_data(oracle::generic()), 2, 2);
  std::mt19937_64 rng(8);
  auto random_vec = [&](std::size_t n) {
    Vec v(n);
    for (auto& c : v) c = Scalar(static_cast<long>(rng() % 5)) - 2;
    return v;
  };
  for (int trial = 0; trial < 10; ++trial) {
    const auto x = random_vec(tr.dim(1, 0)), y = random_vec(tr.dim(-1, 1)), z = random_vec(tr.dim(0, 1));
    const Vec xy = tr.multiply(1, 0, x, -1, 1, y), yz = tr.multiply(-1, 1, y, 0, 1, z);
    CHECK(tr.multiply(0, 1, xy, 0, 1, z) == tr.multiply(1, 0, x, -1, 2, yz));
  }
}
