// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failures.

#include "oracles.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace twseg;

namespace {

struct Criterion {
  int id;
  std::string name;
  double limit_s;  // 0: no runtime bound
  std::function<bool(std::ostream&)> run;
};

std::size_t binom(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

bool segre_relations(std::ostream& why) {
  for (const auto& k : {oracle::unipotent(), oracle::diagonal()}) {
    const auto sp = segre_presentation(oracle::twist_data(k));
    if (!(sp.presentation.relations() == oracle::segre(k).relations())) {
      why << "relation space differs";
      return false;
    }
  }
  return true;
}

bool hilbert_values(std::ostream& why) {
  const auto ab = hilbert_series(segre_presentation(oracle::twist_data(oracle::unipotent())).presentation, 6);
  const auto s = hilbert_series(oracle::s_algebra(oracle::unipotent()), 6);
  for (std::size_t n = 0; n <= 6; ++n)
    if (ab[n] != (n + 1) * (n + 1) || s[n] != binom(n + 3, 3)) {
      why << "degree " << n << ": " << ab[n] << ", " << s[n];
      return false;
    }
  return true;
}

bool koszul_dual(std::ostream& why) {
  for (const auto& k : {oracle::unipotent(), oracle::diagonal(), oracle::generic()}) {
    const auto d = quadratic_dual(oracle::segre(k));
    if (d.relations().dim() != 9 || !(d.relations() == oracle::segre_dual(k).relations())) {
      why << "dual relations differ";
      return false;
    }
  }
  return true;
}

bool normal_f7(std::ostream& why) {
  for (const auto& k : {oracle::generic(), oracle::unipotent(), oracle::diagonal()}) {
    GradedQuotient q(oracle::s_algebra(k), 6);
    const auto w = q.normal_form(oracle::f7(k));
    const auto r = verify_normal(q, w);
    if (!r.ok()) return why << "f7 not normal", false;
    const Mat mu = oracle::mu_f7(k);
    for (int i = 0; i < 4; ++i) {
      FreeElement image(1);
      for (std::size_t t = 0; t < 4; ++t) image.add({static_cast<int>(t)}, mu(t, i));
      if (!(q.normal_form(oracle::f7(k) * FreeElement::word({i})) == q.normal_form(image * oracle::f7(k))))
        return why << "commutation rule " << i << " fails", false;
    }
    if (!(r.certificate->nu1 * mu == Mat::identity(4))) return why << "nu is not the inverse of the displayed rule", false;
    if (!regularity_window(q, w, 6).regular) return why << "regularity window", false;
  }
  return true;
}

bool normal_w(std::ostream& why) {
  for (const auto& k : {oracle::generic(), oracle::unipotent(), oracle::diagonal()}) {
    const auto dual = oracle::segre_dual(k);
    const auto r = verify_normal(dual, oracle::w_dual(k));
    if (!r.ok()) return why << "w not normal", false;
    if (!(r.certificate->nu1 == oracle::nu_dual(k))) return why << "nu differs", false;
    const auto added = add_relation(dual, oracle::w_dual(k));
    if (!(added.presentation.relations() == quadratic_dual(oracle::s_algebra(k)).relations()))
      return why << "quotient by w is not the dual of S", false;
  }
  return true;
}

bool clifford(std::ostream& why) {
  const auto k = oracle::generic();
  const auto dual = oracle::segre_dual(k);
  const auto cert = *verify_normal(dual, oracle::w_dual(k)).certificate;
  const auto st = stabilize(dual, cert, 6);
  if (!st.stabilized || st.i0 != 2 || st.dims != std::vector<std::size_t>{1, 7, 8, 8}) return why << "stabilization", false;
  const auto c = clifford_algebra(dual, cert, st);
  if (c.base.dim != 8 || !c.base.associative() || !c.base.unital()) return why << "C(A) shape", false;
  const auto t = evaluate_t_elements(c, {k.a11, k.a21, k.a22, k.b11, k.b21, k.b22});
  const auto expected = oracle::t_table();
  int bad = 0;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) bad += !(t.products[i][j] == expected[i][j]);
  if (bad) return why << bad << " table entries differ", false;
  if (radical(c.base).dim() != 0 || center(c.base).dim() != 2) return why << "radical or center", false;
  if (wedderburn_type(c.base).blocks != std::vector<std::size_t>{2, 2}) return why << "Wedderburn type", false;
  if (!verify_explicit_iso(c.base, t.elements, oracle::rho(), t.names).ok) return why << "rho", false;
  return true;
}

bool zhang(std::ostream& why) {
  auto diag = [](int a, int b) { return Mat::from_rows({{a, 0}, {0, b}}); };
  const bool yes = zhang_twist_check(Twist2x2::diagonal(diag(2, 1), diag(2, 1)));
  const bool no = zhang_twist_check(Twist2x2::diagonal(diag(1, 2), diag(3, 1)));
  if (!yes || no) why << "balanced " << yes << ", unbalanced " << no;
  return yes && !no;
}

bool density(std::ostream& why) {
  const auto t = oracle::twist_data(oracle::unipotent());
  const auto rep = density_window_check(smash_truncation(t, 1, 4), 1, -1);
  if (!rep.proof_range_covered || rep.defects != std::vector<int>{0}) return why << "S1 S-1 window", false;
  const auto sq = density_window_check(smash_truncation(t, 2, 4), 1, 1);
  if (!sq.defects.empty()) return why << "S1 S1 != S2", false;
  return true;
}

bool validators(std::ostream& why) {
  std::mt19937_64 rng(1009);
  for (int trial = 0; trial < 50; ++trial) {
    const auto k = oracle::random_commuting(rng);
    const bool a = validate_2x2(k.twist()).pass(), b = validate_descent(oracle::twist_data(k)).pass();
    if (!a || !b) return why << "commuting pair " << trial << " rejected", false;
  }
  for (int trial = 0; trial < 50; ++trial) {
    const auto k = oracle::random_noncommuting(rng);
    const bool a = validate_2x2(k.twist()).pass(), b = validate_descent(oracle::twist_data(k)).pass();
    if (a || b) return why << "non-commuting pair " << trial << " accepted", false;
  }
  return true;
}

bool koszul_numeric(std::ostream& why) {
  const auto k = oracle::unipotent();
  const bool ab = koszul_series_check(segre_presentation(oracle::twist_data(k)).presentation, 6);
  const bool s = koszul_series_check(oracle::s_algebra(k), 6);
  if (!ab || !s) why << "segre " << ab << ", S " << s;
  return ab && s;
}

bool hilbert_oracle(std::ostream& why) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t count = 1 + rng() % 3;
    std::vector<FreeElement> rels;
    std::vector<std::vector<mpq_class>> dense;
    for (std::size_t r = 0; r < count; ++r) {
      FreeElement e(2);
      std::vector<mpq_class> row(4);
      for (int ab = 0; ab < 4; ++ab) {
        const int c = coef(rng);
        e.add({ab / 2, ab % 2}, c);
        row[ab] = c;
      }
      rels.push_back(e);
      dense.push_back(row);
    }
    GradedQuotient q(QuadraticPresentation::from_relations(GeneratorSet({"a", "b"}), rels), 4);
    for (int d = 0; d <= 4; ++d)
      if (q.dim(d) != oracle::hilbert_by_enumeration(2, dense, d))
        return why << "set " << trial << " degree " << d, false;
  }
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Segre presentation equals span{f1..f7} (unipotent, diagonal)", 1, segre_relations},
      {2, "Hilbert values (n+1)^2 and C(n+3,3) up to degree 6", 5, hilbert_values},
      {3, "Koszul dual equals span{g1..g9}", 0, koszul_dual},
      {4, "f7 normal in S with the four commutation rules, regular to degree 6", 0, normal_f7},
      {5, "w normal in the dual with the stated nu; dual/(w) = S^!", 0, normal_w},
      {6, "C(A): dims 1,7,8,8, i0=2, 8x8 table, M2 x M2 via rho", 10, clifford},
      {7, "Zhang twist dichotomy", 0, zhang},
      {8, "density window S1 S-1 (t<=4) and S1 S1 = S2", 0, density},
      {9, "validate_2x2 and validate_descent agree on 50+50 random pairs", 30, validators},
      {10, "Koszul series identity to degree 6 for the Segre product and S", 0, koszul_numeric},
      {11, "Hilbert dimensions match the enumeration oracle on 20 random sets", 0, hilbert_oracle},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    std::ostringstream why;
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(why);
    } catch (const std::exception& e) {
      why << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && c.limit_s > 0 && secs > c.limit_s) {
      ok = false;
      why << "runtime " << secs << " s over " << c.limit_s << " s";
    }
    failures += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " (" << std::fixed;
    std::cout.precision(3);
    std::cout << secs << " s)";
    if (!ok) std::cout << ": " << why.str();
    std::cout << '\n';
  }
  return failures;
}
