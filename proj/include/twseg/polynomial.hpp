#pragma once

// Univariate polynomials over the rationals, with exact rational-root
// extraction. Integer factorization for the rational root test uses trial
// division followed by Pollard's rho.

#include "twseg/scalar.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

namespace twseg {

class Polynomial {
 public:
  Polynomial() = default;
  /// coeffs[i] is the coefficient of t^i.
  explicit Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const Scalar& a) { return Polynomial({a}); }
  static Polynomial monomial(const Scalar& a, std::size_t deg) {
    std::vector<Scalar> c(deg + 1, Scalar(0));
    c[deg] = a;
    return Polynomial(std::move(c));
  }
  /// t - root
  static Polynomial linear_factor(const Scalar& root) { return Polynomial({-root, Scalar(1)}); }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar(0); }
  Scalar leading() const { return c_.empty() ? Scalar(0) : c_.back(); }

  Scalar operator()(const Scalar& x) const {
    Scalar acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    Polynomial p = *this;
    Scalar lc = leading();
    for (auto& x : p.c_) x /= lc;
    return p;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Scalar> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return Polynomial(std::move(d));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()), Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()), Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// (quotient, remainder)
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw math_error("polynomial division by zero");
    std::vector<Scalar> r = a.c_;
    if (a.degree() < b.degree()) return {Polynomial(), a};
    std::vector<Scalar> q(a.c_.size() - b.c_.size() + 1, Scalar(0));
    const Scalar lc = b.leading();
    for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
      Scalar f = r[i + b.c_.size() - 1] / lc;
      q[i] = f;
      if (twseg::is_zero(f)) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] -= f * b.c_[j];
    }
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
  }

  /// Monic gcd.
  friend Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
      auto r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  /// Returns (g, u, v) with u a + v b = g monic.
  friend std::tuple<Polynomial, Polynomial, Polynomial> extended_gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial r0 = a, r1 = b, s0 = constant(1), s1, t0, t1 = constant(1);
    while (!r1.is_zero()) {
      auto [q, r] = divmod(r0, r1);
      Polynomial s2 = s0 - q * s1, t2 = t0 - q * t1;
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Scalar lc = r0.leading();
    Polynomial inv = constant(Scalar(1) / lc);
    return {r0 * inv, s0 * inv, t0 * inv};
  }

  /// Lagrange interpolation through distinct nodes.
  static Polynomial interpolate(const std::vector<Scalar>& xs, const std::vector<Scalar>& ys) {
    if (xs.size() != ys.size()) throw input_error("interpolation node count mismatch");
    Polynomial acc;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (twseg::is_zero(ys[i])) continue;
      Polynomial basis = constant(ys[i]);
      for (std::size_t j = 0; j < xs.size(); ++j) {
        if (j == i) continue;
        basis = basis * Polynomial({-xs[j] / (xs[i] - xs[j]), Scalar(1) / (xs[i] - xs[j])});
      }
      acc = acc + basis;
    }
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && twseg::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<Scalar> c_;
};

namespace detail {

using IntPoly = std::vector<mpz_class>;  // low order first

inline mpz_class eval_mod(const IntPoly& f, const mpz_class& x, const mpz_class& m) {
  mpz_class acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % m;
  return acc < 0 ? acc + m : acc;
}

inline mpz_class eval_exact(const IntPoly& f, const mpz_class& x) {
  mpz_class acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
  return acc;
}

inline IntPoly derivative(const IntPoly& f) {
  IntPoly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * static_cast<unsigned long>(i));
  return d;
}

/// Integer roots of a monic integer polynomial whose roots are simple modulo
/// some small prime. Roots mod p are lifted by Newton iteration past the
/// Cauchy bound and then checked exactly. Returns false when no usable prime
/// is found (repeated roots).
inline bool integer_roots_monic(const IntPoly& f, std::vector<mpz_class>& out) {
  mpz_class bound = 0;
  for (std::size_t i = 0; i + 1 < f.size(); ++i) bound = std::max(bound, mpz_class(abs(f[i])));
  bound += 1;
  const IntPoly df = derivative(f);
  unsigned long p = 1009;
  for (int tries = 0; tries < 12; ++tries, ++p) {
    while (!mpz_probab_prime_p(mpz_class(p).get_mpz_t(), 25)) ++p;
    const mpz_class pm(p);
    std::vector<unsigned long> fp;
    for (const auto& c : f) {
      mpz_class r = c % pm;
      if (r < 0) r += pm;
      fp.push_back(r.get_ui());
    }
    std::vector<unsigned long> roots;
    bool simple = true;
    for (unsigned long x = 0; x < p && simple; ++x) {
      unsigned long acc = 0;
      for (std::size_t i = fp.size(); i-- > 0;) acc = (acc * x + fp[i]) % p;
      if (acc != 0) continue;
      if (eval_mod(df, mpz_class(x), pm) == 0) simple = false;
      roots.push_back(x);
    }
    if (!simple) continue;
    for (unsigned long r0 : roots) {
      mpz_class r(r0), m = pm;
      while (m <= 2 * bound) {
        m *= m;
        mpz_class inv, d = eval_mod(df, r, m);
        if (!mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t())) break;
        r = (r - eval_mod(f, r, m) * inv) % m;
        if (r < 0) r += m;
      }
      if (r > m / 2) r -= m;
      if (eval_exact(f, r) == 0) out.push_back(r);
    }
    return true;
  }
  return false;
}

inline bool rational_sqrt(const Scalar& x, Scalar& out) {
  if (sgn(x) < 0) return false;
  mpz_class n = x.get_num(), d = x.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  out = Scalar(sn, sd);
  out.canonicalize();
  return true;
}

}  // namespace detail

/// Distinct rational roots, ascending.
inline std::vector<Scalar> rational_roots(const Polynomial& p) {
  if (p.is_zero()) throw math_error("rational_roots of the zero polynomial");
  std::vector<Scalar> roots;
  Polynomial q = p;
  if (twseg::is_zero(q.coeff(0))) {
    roots.push_back(Scalar(0));
    while (q.degree() > 0 && twseg::is_zero(q.coeff(0))) q = divmod(q, Polynomial::monomial(1, 1)).first;
  }
  if (q.degree() == 1) {
    roots.push_back(-q.coeff(0) / q.coeff(1));
  } else if (q.degree() == 2) {
    Scalar a = q.coeff(2), b = q.coeff(1), c = q.coeff(0);
    Scalar disc = b * b - 4 * a * c, s;
    if (detail::rational_sqrt(disc, s)) {
      roots.push_back((-b + s) / (2 * a));
      roots.push_back((-b - s) / (2 * a));
    }
  } else if (q.degree() > 2) {
    // x = y / lc turns q into a monic integer polynomial in y.
    mpz_class lcm_den = 1;
    for (const auto& c : q.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
    detail::IntPoly ints;
    for (const auto& c : q.coeffs()) ints.push_back(mpz_class(c * lcm_den));
    // m[i] = f[i] lc^(d-1-i)
    auto monic = [&](const detail::IntPoly& f) {
      const std::size_t d = f.size() - 1;
      detail::IntPoly m(f.size());
      m[d] = 1;
      mpz_class pw = 1;
      for (std::size_t i = d; i-- > 0;) {
        m[i] = f[i] * pw;
        pw *= f[d];
      }
      return m;
    };
    std::vector<mpz_class> ys;
    if (!detail::integer_roots_monic(monic(ints), ys)) {
      // Repeated roots modulo every tried prime: retry on the squarefree part.
      const Polynomial sf = divmod(q, gcd(q, q.derivative())).first;
      if (sf.degree() < q.degree()) {
        for (const auto& r : rational_roots(sf)) roots.push_back(r);
        ys.clear();
      } else {
        throw math_error("rational root search failed");
      }
    }
    for (const auto& y : ys) {
      Scalar r(y, ints.back());
      r.canonicalize();
      roots.push_back(r);
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

/// Multiplicity of `root` in p.
inline int root_multiplicity(Polynomial p, const Scalar& root) {
  int m = 0;
  const auto lin = Polynomial::linear_factor(root);
  while (!p.is_zero() && twseg::is_zero(p(root))) {
    p = divmod(p, lin).first;
    ++m;
  }
  return m;
}

}  // namespace twseg
