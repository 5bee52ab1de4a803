#pragma once

// Twisting seeds psi0: U (x) V -> V (x) U and their extensions.
//
// Coordinates: V has basis v_0..v_{n-1} (generators of A), U has basis
// u_0..u_{m-1} (generators of B). A vector of U (x) V is indexed j*n + i
// (U index outermost), a vector of V (x) U is indexed i*m + j. The seed
// matrix has shape (n*m) x (m*n) and column j*n+i holds psi0(u_j (x) v_i).
//
// The 2x2 block form: psi0(u_j (x) v_i) = sum_{i',j'} Blk_{j j'}(i,i') v_i' (x) u_j'
// with Blk_00 = C, Blk_01 = D, Blk_10 = P, Blk_11 = Q, so that
//   psi0(x (x) (u,v)^T) = C (u,v)^T (x) x + D (u,v)^T (x) y, and so on.

#include "twseg/polynomial.hpp"
#include "twseg/quadratic.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace twseg {

class TwistingSeed {
 public:
  TwistingSeed() = default;
  TwistingSeed(std::size_t dim_v, std::size_t dim_u, Mat matrix) : n_(dim_v), m_(dim_u), mat_(std::move(matrix)) {
    if (mat_.rows() != n_ * m_ || mat_.cols() != n_ * m_) throw input_error("twisting seed has the wrong shape");
    if (!inverse(mat_)) throw input_error("twisting seed is not invertible");
  }

  static TwistingSeed flip(std::size_t dim_v, std::size_t dim_u) {
    Mat m(dim_v * dim_u, dim_v * dim_u);
    for (std::size_t i = 0; i < dim_v; ++i)
      for (std::size_t j = 0; j < dim_u; ++j) m(i * dim_u + j, j * dim_v + i) = 1;
    return TwistingSeed(dim_v, dim_u, std::move(m));
  }

  std::size_t dim_v() const { return n_; }
  std::size_t dim_u() const { return m_; }
  const Mat& matrix() const { return mat_; }

  /// Coefficient of v_i' (x) u_j' in psi0(u_j (x) v_i).
  const Scalar& coeff(std::size_t j, std::size_t i, std::size_t i2, std::size_t j2) const {
    return mat_(i2 * m_ + j2, j * n_ + i);
  }

 private:
  std::size_t n_ = 0, m_ = 0;
  Mat mat_;
};

struct Twist2x2 {
  Mat C = Mat(2, 2), D = Mat(2, 2), P = Mat(2, 2), Q = Mat(2, 2);

  static Twist2x2 diagonal(Mat c, Mat q) { return {std::move(c), Mat(2, 2), Mat(2, 2), std::move(q)}; }

  /// H = [[C, D], [P, Q]]
  Mat h() const {
    Mat out(4, 4);
    const Mat* blk[2][2] = {{&C, &D}, {&P, &Q}};
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b)
        for (std::size_t r = 0; r < 2; ++r)
          for (std::size_t c = 0; c < 2; ++c) out(2 * a + r, 2 * b + c) = (*blk[a][b])(r, c);
    return out;
  }

  /// The permuted blocks read off S(H): C~ = [[c11,d11],[p11,q11]] etc.
  Twist2x2 tilde() const {
    auto pick = [&](std::size_t r, std::size_t c) {
      return Mat::from_rows({{C(r, c), D(r, c)}, {P(r, c), Q(r, c)}});
    };
    return {pick(0, 0), pick(0, 1), pick(1, 0), pick(1, 1)};
  }

  TwistingSeed to_seed() const {
    for (const Mat* b : {&C, &D, &P, &Q})
      if (b->rows() != 2 || b->cols() != 2) throw input_error("twist blocks must be 2x2");
    Mat m(4, 4);
    const Mat* blk[2][2] = {{&C, &D}, {&P, &Q}};
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t j2 = 0; j2 < 2; ++j2)
        for (std::size_t i = 0; i < 2; ++i)
          for (std::size_t i2 = 0; i2 < 2; ++i2) m(i2 * 2 + j2, j * 2 + i) = (*blk[j][j2])(i, i2);
    return TwistingSeed(2, 2, std::move(m));
  }

  static Twist2x2 from_seed(const TwistingSeed& s) {
    if (s.dim_v() != 2 || s.dim_u() != 2) throw input_error("seed is not 2x2");
    Twist2x2 t;
    Mat* blk[2][2] = {{&t.C, &t.D}, {&t.P, &t.Q}};
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t j2 = 0; j2 < 2; ++j2)
        for (std::size_t i = 0; i < 2; ++i)
          for (std::size_t i2 = 0; i2 < 2; ++i2) (*blk[j][j2])(i, i2) = s.coeff(j, i, i2, j2);
    return t;
  }
};

class TwistData {
 public:
  TwistData(TwistingSeed seed, QuadraticPresentation a, QuadraticPresentation b)
      : seed_(std::move(seed)), a_(std::move(a)), b_(std::move(b)) {
    if (seed_.dim_v() != a_.num_generators()) throw input_error("seed dimV does not match the generators of A");
    if (seed_.dim_u() != b_.num_generators()) throw input_error("seed dimU does not match the generators of B");
  }
  const TwistingSeed& seed() const { return seed_; }
  const QuadraticPresentation& a() const { return a_; }
  const QuadraticPresentation& b() const { return b_; }

 private:
  TwistingSeed seed_;
  QuadraticPresentation a_, b_;
};

namespace detail {

/// psi_{1,q}: U^q (x) V -> V (x) U^q, peeling U from the left.
inline Mat extend_one_v(const TwistingSeed& s, std::size_t q) {
  const std::size_t n = s.dim_v(), m = s.dim_u();
  if (q == 0) return Mat::identity(n);
  Mat acc = s.matrix();
  for (std::size_t k = 2; k <= q; ++k) {
    // U U^{k-1} V -> U V U^{k-1} -> V U U^{k-1}
    acc = kron(s.matrix(), Mat::identity(ipow(m, k - 1))) * kron(Mat::identity(m), acc);
  }
  return acc;
}

/// psi_{p,1}: U (x) V^p -> V^p (x) U, peeling V from the right.
inline Mat extend_one_u(const TwistingSeed& s, std::size_t p) {
  const std::size_t n = s.dim_v(), m = s.dim_u();
  if (p == 0) return Mat::identity(m);
  Mat acc = s.matrix();
  for (std::size_t k = 2; k <= p; ++k) {
    // U V^{k-1} V -> V^{k-1} U V -> V^{k-1} V U
    acc = kron(Mat::identity(ipow(n, k - 1)), s.matrix()) * kron(acc, Mat::identity(n));
  }
  return acc;
}

inline Mat extend_left(const TwistingSeed& s, std::size_t p, std::size_t q) {
  const std::size_t n = s.dim_v(), m = s.dim_u();
  if (p == 0 || q == 0) return Mat::identity(ipow(n, p) * ipow(m, q));
  Mat acc = extend_one_v(s, q);  // p = 1
  for (std::size_t k = 2; k <= p; ++k) {
    // U^q V V^{k-1} -> V U^q V^{k-1} -> V V^{k-1} U^q
    acc = kron(Mat::identity(n), acc) * kron(extend_one_v(s, q), Mat::identity(ipow(n, k - 1)));
  }
  return acc;
}

inline Mat extend_right(const TwistingSeed& s, std::size_t p, std::size_t q) {
  const std::size_t n = s.dim_v(), m = s.dim_u();
  if (p == 0 || q == 0) return Mat::identity(ipow(n, p) * ipow(m, q));
  Mat acc = extend_one_u(s, p);  // q = 1
  for (std::size_t k = 2; k <= q; ++k) {
    // U^{k-1} U V^p -> U^{k-1} V^p U -> V^p U^{k-1} U
    acc = kron(acc, Mat::identity(m)) * kron(Mat::identity(ipow(m, k - 1)), extend_one_u(s, p));
  }
  return acc;
}

}  // namespace detail

/// psi on U^q (x) V^p -> V^p (x) U^q in the free tensor algebras. Input
/// index uword*n^p + vword, output index vword*m^q + uword.
inline Mat extend_seed(const TwistingSeed& s, std::size_t p, std::size_t q) { return detail::extend_left(s, p, q); }

/// The same map built by peeling the other tensor factor first.
inline Mat extend_seed_right(const TwistingSeed& s, std::size_t p, std::size_t q) {
  return detail::extend_right(s, p, q);
}

struct DescentReport {
  bool b_side = false;  // psi(R_B (x) V) in V (x) R_B
  bool a_side = false;  // psi(U (x) R_A) in R_A (x) U
  std::optional<Vec> b_witness, a_witness;  // images that escape
  bool pass() const { return b_side && a_side; }
};

inline DescentReport validate_descent(const TwistData& t) {
  const auto& s = t.seed();
  const std::size_t n = s.dim_v(), m = s.dim_u();
  DescentReport rep;

  const Mat ext_b = extend_seed(s, 1, 2);  // U^2 V -> V U^2
  // V (x) R_B and R_A (x) U as subspaces.
  std::vector<Vec> vb;
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& r : t.b().relations().basis_vectors()) {
      Vec v(n * m * m, Scalar(0));
      for (std::size_t k = 0; k < m * m; ++k) v[i * m * m + k] = r[k];
      vb.push_back(std::move(v));
    }
  const Space v_rb = Space::span(n * m * m, vb);
  rep.b_side = true;
  for (const auto& r : t.b().relations().basis_vectors())
    for (std::size_t i = 0; i < n; ++i) {
      Vec src(m * m * n, Scalar(0));
      for (std::size_t k = 0; k < m * m; ++k) src[k * n + i] = r[k];
      Vec img = apply_map(ext_b, src);
      if (!v_rb.contains(img)) {
        rep.b_side = false;
        if (!rep.b_witness) rep.b_witness = img;
      }
    }

  const Mat ext_a = extend_seed(s, 2, 1);  // U V^2 -> V^2 U
  std::vector<Vec> va;
  for (const auto& r : t.a().relations().basis_vectors())
    for (std::size_t j = 0; j < m; ++j) {
      Vec v(n * n * m, Scalar(0));
      for (std::size_t k = 0; k < n * n; ++k) v[k * m + j] = r[k];
      va.push_back(std::move(v));
    }
  const Space ra_u = Space::span(n * n * m, va);
  rep.a_side = true;
  for (std::size_t j = 0; j < m; ++j)
    for (const auto& r : t.a().relations().basis_vectors()) {
      Vec src(m * n * n, Scalar(0));
      for (std::size_t k = 0; k < n * n; ++k) src[j * n * n + k] = r[k];
      Vec img = apply_map(ext_a, src);
      if (!ra_u.contains(img)) {
        rep.a_side = false;
        if (!rep.a_witness) rep.a_witness = img;
      }
    }
  return rep;
}

struct TwoByTwoReport {
  bool cond1 = false;  // CP=PC, DQ=QD, DP+CQ=PD+QC
  bool cond2 = false;  // the same for the tilde blocks
  std::vector<std::string> failures;
  bool pass() const { return cond1 && cond2; }
};

inline TwoByTwoReport validate_2x2(const Twist2x2& t) {
  if (!inverse(t.h())) throw input_error("assembled block matrix H is not invertible");
  TwoByTwoReport rep;
  auto check = [&](const Twist2x2& b, const std::string& tag) {
    bool ok = true;
    if (!(b.C * b.P == b.P * b.C)) ok = false, rep.failures.push_back(tag + "CP != PC");
    if (!(b.D * b.Q == b.Q * b.D)) ok = false, rep.failures.push_back(tag + "DQ != QD");
    if (!(b.D * b.P + b.C * b.Q == b.P * b.D + b.Q * b.C)) ok = false, rep.failures.push_back(tag + "DP+CQ != PD+QC");
    return ok;
  };
  rep.cond1 = check(t, "");
  rep.cond2 = check(t.tilde(), "tilde: ");
  return rep;
}

/// sigma_ij as coordinate matrices on V: column k of comp[i][j] holds
/// sigma_ij(v_k), read from psi(u_i (x) v_k) = sum_j sigma_ij(v_k) (x) u_j.
struct SigmaHom {
  std::size_t n = 0, m = 0;
  std::vector<std::vector<Mat>> comp;

  const Mat& operator()(std::size_t i, std::size_t j) const { return comp.at(i).at(j); }
};

inline SigmaHom sigma_of(const TwistingSeed& s) {
  const std::size_t n = s.dim_v(), m = s.dim_u();
  SigmaHom out{n, m, std::vector<std::vector<Mat>>(m, std::vector<Mat>(m, Mat(n, n)))};
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t k2 = 0; k2 < n; ++k2) out.comp[i][j](k2, k) = s.coeff(i, k, k2, j);
  return out;
}
inline SigmaHom sigma_of(const TwistData& t) { return sigma_of(t.seed()); }

/// sigma: A -> M_m(A) respects the relations of A. The ideal is generated in
/// degree 2, so checking R_A suffices for every degree.
inline bool validate_sigma(const SigmaHom& s, const QuadraticPresentation& a) {
  if (a.num_generators() != s.n) throw input_error("sigma does not act on these generators");
  for (std::size_t i = 0; i < s.m; ++i)
    for (std::size_t j = 0; j < s.m; ++j) {
      Mat prod(s.n * s.n, s.n * s.n);
      for (std::size_t t = 0; t < s.m; ++t) prod = prod + kron(s(i, t), s(t, j));
      for (const auto& r : a.relations().basis_vectors())
        if (!a.relations().contains(apply_map(prod, r))) return false;
    }
  return true;
}

/// The block matrix with block (k, j) = sigma_jk; tau is read from its
/// inverse. Both identities sum_k tau_ki sigma_jk = sum_k sigma_ki tau_jk =
/// delta_ij are verified before returning.
inline SigmaHom invert_sigma(const SigmaHom& s) {
  const std::size_t n = s.n, m = s.m;
  Mat big(n * m, n * m);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) big(k * n + r, j * n + c) = s(j, k)(r, c);
  auto inv = inverse(big);
  if (!inv) throw math_error("sigma is not invertible: the seed cannot be bijective");
  SigmaHom tau{n, m, std::vector<std::vector<Mat>>(m, std::vector<Mat>(m, Mat(n, n)))};
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) tau.comp[k][i](r, c) = (*inv)(i * n + r, k * n + c);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Mat left(n, n), right(n, n);
      for (std::size_t k = 0; k < m; ++k) {
        left = left + tau(k, i) * s(j, k);
        right = right + s(k, i) * tau(j, k);
      }
      Mat expect = i == j ? Mat::identity(n) : Mat(n, n);
      if (!(left == expect) || !(right == expect)) throw math_error("internal inconsistency inverting sigma");
    }
  return tau;
}

inline bool is_diagonal(const SigmaHom& s) {
  for (std::size_t i = 0; i < s.m; ++i)
    for (std::size_t j = 0; j < s.m; ++j)
      if (i != j && !s(i, j).is_zero()) return false;
  return true;
}
inline bool is_diagonal(const TwistData& t) { return is_diagonal(sigma_of(t)); }

struct DiagonalNormalization {
  Mat X, C, Q;  // C = X^-1 C0 X, Q = X^-1 Q0 X, both lower triangular
};

namespace detail {

inline bool lower_triangular2(const Mat& m) { return is_zero(m(0, 1)); }

/// Rational eigenvalues of a 2x2 matrix, descending; throws when irrational.
inline std::vector<Scalar> eigenvalues2(const Mat& a) {
  Scalar tr = a(0, 0) + a(1, 1), det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  auto roots = rational_roots(Polynomial({det, -tr, Scalar(1)}));
  if (roots.empty()) throw math_error("characteristic polynomial has no rational roots (eigenvalues are irrational)");
  std::reverse(roots.begin(), roots.end());
  return roots;
}

inline Vec null_vector2(const Mat& a, const Scalar& lambda) {
  Scalar p = a(0, 0) - lambda, q = a(0, 1), r = a(1, 0), s = a(1, 1) - lambda;
  if (!is_zero(p) || !is_zero(q)) return {q, -p};
  if (!is_zero(r) || !is_zero(s)) return {s, -r};
  return {Scalar(0), Scalar(1)};
}

}  // namespace detail

/// X with X^-1 C X and X^-1 Q X lower triangular. The second column of X is
/// a common eigenvector; with two distinct eigenvalues X diagonalizes.
inline DiagonalNormalization normalize_diagonal(const Mat& c, const Mat& q) {
  for (const Mat* m : {&c, &q})
    if (m->rows() != 2 || m->cols() != 2) throw input_error("normalize_diagonal expects 2x2 matrices");
  if (!(c * q == q * c)) throw input_error("C and Q do not commute");
  if (detail::lower_triangular2(c) && detail::lower_triangular2(q)) return {Mat::identity(2), c, q};

  const bool c_scalar = is_zero(c(0, 1)) && is_zero(c(1, 0)) && c(0, 0) == c(1, 1);
  const Mat& drive = c_scalar ? q : c;
  auto ev = detail::eigenvalues2(drive);
  Mat x(2, 2);
  if (ev.size() == 2) {
    x.set_column(0, detail::null_vector2(drive, ev[0]));
    x.set_column(1, detail::null_vector2(drive, ev[1]));
  } else {
    Vec e = detail::null_vector2(drive, ev[0]);
    x.set_column(1, e);
    x.set_column(0, is_zero(e[1]) ? Vec{Scalar(0), Scalar(1)} : Vec{Scalar(1), Scalar(0)});
  }
  auto xi = inverse(x);
  if (!xi) throw math_error("normalization matrix is singular");
  DiagonalNormalization out{x, *xi * c * x, *xi * q * x};
  if (!detail::lower_triangular2(out.C) || !detail::lower_triangular2(out.Q))
    throw math_error("no common eigenvector over the rationals");
  return out;
}

}  // namespace twseg
