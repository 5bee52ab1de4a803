#pragma once

// Twisted Segre products and the bigraded smash product.
//
// Segre generators are the pairs v_i (x) u_j, indexed j*n + i. For n = m = 2
// they are named X = u(x)x, Y = v(x)x, Z = u(x)y, W = v(x)y (A = k[u,v],
// B = k[x,y]); otherwise "g_i_j".
//
// Elements of A_p (x) B_q are stored with A outermost: index a*dim B_q + b,
// a and b indexing normal words.

#include "twseg/twisting.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace twseg {

inline GeneratorSet segre_generators(std::size_t n, std::size_t m) {
  if (n == 2 && m == 2) return GeneratorSet({"X", "Y", "Z", "W"});
  std::vector<std::string> names;
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i) names.push_back("g_" + std::to_string(i) + "_" + std::to_string(j));
  return GeneratorSet(std::move(names));
}

struct SegrePresentation {
  QuadraticPresentation presentation;
  TwistData twist;
};

/// Relations (1 (x) psi0^-1 (x) 1)(R_A (x) U (x) U + V (x) V (x) R_B), i.e.
/// the kernel of T(V(x)U)_2 -> A_2 (x) B_2.
inline SegrePresentation segre_presentation(const TwistData& t) {
  if (!validate_descent(t).pass()) throw math_error("twist does not descend to A and B");
  const auto& s = t.seed();
  const std::size_t n = s.dim_v(), m = s.dim_u(), g = n * m;
  auto tgt = [&](std::size_t i, std::size_t k, std::size_t j, std::size_t l) { return ((i * n + k) * m + j) * m + l; };

  std::vector<Vec> w;
  for (const auto& r : t.a().relations().basis_vectors())
    for (std::size_t jl = 0; jl < m * m; ++jl) {
      Vec v(n * n * m * m, Scalar(0));
      for (std::size_t ik = 0; ik < n * n; ++ik) v[ik * m * m + jl] = r[ik];
      w.push_back(std::move(v));
    }
  for (std::size_t ik = 0; ik < n * n; ++ik)
    for (const auto& r : t.b().relations().basis_vectors()) {
      Vec v(n * n * m * m, Scalar(0));
      for (std::size_t jl = 0; jl < m * m; ++jl) v[ik * m * m + jl] = r[jl];
      w.push_back(std::move(v));
    }
  const Space target = Space::span(n * n * m * m, w);

  Mat map(n * n * m * m, g * g);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < m; ++l) {
          const std::size_t col = (j * n + i) * g + (l * n + k);
          for (std::size_t k2 = 0; k2 < n; ++k2)
            for (std::size_t j2 = 0; j2 < m; ++j2) {
              const Scalar& c = s.coeff(j, k, k2, j2);
              if (!is_zero(c)) map(tgt(i, k2, j2, l), col) += c;
            }
        }
  const Space ann = annihilator(target);
  Space rel = kernel(ann.basis() * map);
  return {QuadraticPresentation(segre_generators(n, m), std::move(rel)), t};
}

/// Products on A (x) B with (a(x)b)(c(x)d) = a c_psi (x) b^psi d. The maps
/// psi: B_q (x) A_p -> A_p (x) B_q are built on the quotients from the
/// seed, one letter at a time. Everything is precomputed, so the object is
/// read-only after construction. Requires a twist that descends.
class SmashEngine {
 public:
  SmashEngine(const TwistData& t, int max_a, int max_b)
      : seed_(t.seed()), qa_(t.a(), max_a), qb_(t.b(), max_b) {
    if (!validate_descent(t).pass()) throw math_error("twist does not descend to A and B");
    for (int q = 0; q <= max_b; ++q)
      for (int p = 0; p <= max_a; ++p) build_psi(q, p);
    mul_a_ = tables(qa_);
    mul_b_ = tables(qb_);
  }

  const GradedQuotient& a() const { return qa_; }
  const GradedQuotient& b() const { return qb_; }
  std::size_t dim(int p, int q) const { return qa_.dim(p) * qb_.dim(q); }

  /// B_q (x) A_p -> A_p (x) B_q; column index b*dim A_p + a, row index
  /// a*dim B_q + b.
  const Mat& psi(int q, int p) const { return psi_.at({q, p}); }

  Vec multiply(int p, int q, const Vec& x, int r, int s, const Vec& y) const {
    const std::size_t dap = qa_.dim(p), dbq = qb_.dim(q), dar = qa_.dim(r), dbs = qb_.dim(s);
    const std::size_t dao = qa_.dim(p + r), dbo = qb_.dim(q + s);
    if (x.size() != dap * dbq || y.size() != dar * dbs) throw input_error("smash element has wrong length");
    const Mat& ps = psi(q, r);
    const auto& ma = mul_a_[p][r];
    const auto& mb = mul_b_[q][s];
    Vec out(dao * dbo, Scalar(0));
    for (std::size_t a = 0; a < dap; ++a)
      for (std::size_t b = 0; b < dbq; ++b) {
        const Scalar& xc = x[a * dbq + b];
        if (is_zero(xc)) continue;
        for (std::size_t c = 0; c < dar; ++c) {
          // psi(b (x) c) = sum coef c2 (x) b2
          std::vector<std::pair<std::size_t, Scalar>> col;
          for (std::size_t row = 0; row < dar * dbq; ++row)
            if (!is_zero(ps(row, b * dar + c))) col.emplace_back(row, ps(row, b * dar + c));
          if (col.empty()) continue;
          for (std::size_t d = 0; d < dbs; ++d) {
            const Scalar& yc = y[c * dbs + d];
            if (is_zero(yc)) continue;
            for (const auto& [row, coef] : col) {
              const std::size_t c2 = row / dbq, b2 = row % dbq;
              const Vec& ac = ma[a][c2];
              const Vec& bd = mb[b2][d];
              const Scalar f = xc * yc * coef;
              for (std::size_t i = 0; i < dao; ++i) {
                if (is_zero(ac[i])) continue;
                const Scalar fi = f * ac[i];
                for (std::size_t j = 0; j < dbo; ++j)
                  if (!is_zero(bd[j])) out[i * dbo + j] += fi * bd[j];
              }
            }
          }
        }
      }
    return out;
  }

  /// Pure tensor of two basis elements.
  Vec basis_tensor(int p, int q, std::size_t a, std::size_t b) const {
    Vec v(dim(p, q), Scalar(0));
    v.at(a * qb_.dim(q) + b) = 1;
    return v;
  }

 private:
  using Table = std::vector<std::vector<std::vector<std::vector<Vec>>>>;  // [p][r][a][c]

  static Table tables(const GradedQuotient& q) {
    const int top = q.max_degree();
    Table t(static_cast<std::size_t>(top) + 1);
    for (int p = 0; p <= top; ++p) {
      t[p].resize(static_cast<std::size_t>(top - p) + 1);
      for (int r = 0; r + p <= top; ++r)
        for (std::size_t a = 0; a < q.dim(p); ++a) t[p][r].push_back(q.times_all_words(q.basis_element(p, a), r));
    }
    return t;
  }

  void build_psi(int q, int p) {
    const std::size_t dap = qa_.dim(p), dbq = qb_.dim(q);
    Mat out(dap * dbq, dbq * dap);
    if (p == 0 || q == 0) {
      for (std::size_t a = 0; a < dap; ++a)
        for (std::size_t b = 0; b < dbq; ++b) out(a * dbq + b, b * dap + a) = 1;
    } else if (p == 1 && q == 1) {
      const std::size_t n = seed_.dim_v(), m = seed_.dim_u();
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t i2 = 0; i2 < n; ++i2)
            for (std::size_t j2 = 0; j2 < m; ++j2) out(i2 * m + j2, j * n + i) = seed_.coeff(j, i, i2, j2);
    } else if (p == 1) {
      // b = b' y: y passes x first, then b' passes the result.
      const std::size_t n = seed_.dim_v();
      const Mat& prev = psi(q - 1, 1);
      const std::size_t dprev = qb_.dim(q - 1);
      for (std::size_t b = 0; b < dbq; ++b) {
        const auto [bp, y] = qb_.parents(q)[b];
        for (std::size_t x = 0; x < n; ++x) {
          const Mat& first = psi(1, 1);
          for (std::size_t r1 = 0; r1 < first.rows(); ++r1) {
            const Scalar& c1 = first(r1, static_cast<std::size_t>(y) * n + x);
            if (is_zero(c1)) continue;
            const std::size_t x2 = r1 / qb_.dim(1), y2 = r1 % qb_.dim(1);
            for (std::size_t r2 = 0; r2 < prev.rows(); ++r2) {
              const Scalar& c2 = prev(r2, bp * n + x2);
              if (is_zero(c2)) continue;
              const std::size_t x3 = r2 / dprev, b3 = r2 % dprev;
              Vec e(dprev, Scalar(0));
              e[b3] = 1;
              Vec by = qb_.append_letter(e, q - 1, static_cast<int>(y2));
              for (std::size_t k = 0; k < dbq; ++k)
                if (!is_zero(by[k])) out(x3 * dbq + k, b * dap + x) += c1 * c2 * by[k];
            }
          }
        }
      }
    } else {
      // c = c' x: b passes c' first, then the result passes x.
      const Mat& prev = psi(q, p - 1);
      const Mat& last = psi(q, 1);
      const std::size_t dprev = qa_.dim(p - 1), n = qa_.dim(1);
      for (std::size_t c = 0; c < dap; ++c) {
        const auto [cp, x] = qa_.parents(p)[c];
        for (std::size_t b = 0; b < dbq; ++b)
          for (std::size_t r1 = 0; r1 < prev.rows(); ++r1) {
            const Scalar& c1 = prev(r1, b * dprev + cp);
            if (is_zero(c1)) continue;
            const std::size_t a2 = r1 / dbq, b2 = r1 % dbq;
            for (std::size_t r2 = 0; r2 < last.rows(); ++r2) {
              const Scalar& c2 = last(r2, b2 * n + static_cast<std::size_t>(x));
              if (is_zero(c2)) continue;
              const std::size_t x3 = r2 / dbq, b3 = r2 % dbq;
              Vec e(dprev, Scalar(0));
              e[a2] = 1;
              Vec ax = qa_.append_letter(e, p - 1, static_cast<int>(x3));
              for (std::size_t k = 0; k < dap; ++k)
                if (!is_zero(ax[k])) out(k * dbq + b3, b * dap + c) += c1 * c2 * ax[k];
            }
          }
      }
    }
    psi_.emplace(std::make_pair(q, p), std::move(out));
  }

  TwistingSeed seed_;
  GradedQuotient qa_, qb_;
  std::map<std::pair<int, int>, Mat> psi_;
  Table mul_a_, mul_b_;
};

/// The diagonal A_n (x) B_n with the twisted product.
class SegreComponentModel {
 public:
  SegreComponentModel(const TwistData& t, int max_degree) : eng_(t, max_degree, max_degree), top_(max_degree) {}
  int max_degree() const { return top_; }
  std::size_t dim(int d) const { return eng_.dim(d, d); }
  Vec multiply(int p, const Vec& x, int q, const Vec& y) const {
    if (p + q > top_) throw std::out_of_range("degree overflow beyond configured truncation");
    return eng_.multiply(p, p, x, q, q, y);
  }
  const SmashEngine& engine() const { return eng_; }

 private:
  SmashEngine eng_;
  int top_;
};

inline SegreComponentModel segre_component_model(const TwistData& t, int max_degree) {
  return SegreComponentModel(t, max_degree);
}

struct CrossValidationReport {
  bool pass = false;
  std::vector<std::size_t> presentation_dims, component_dims;
  // First failure, if any.
  std::string failure_stage;  // "hilbert", "relations", "multiplicativity", "rank"
  int failure_degree = -1;
  std::string failure_detail;
  Vec counterexample;
};

/// Compares T(V(x)U)/I with the componentwise model up to degree N through
/// Theta: g_(i,j) -> v_i (x) u_j extended along normal-word prefixes.
inline CrossValidationReport cross_validate(const TwistData& t, int max_degree,
                                            const std::optional<QuadraticPresentation>& claimed = std::nullopt) {
  if (max_degree < 2) throw input_error("cross validation needs max degree >= 2");
  const QuadraticPresentation pres = claimed ? *claimed : segre_presentation(t).presentation;
  const std::size_t n = t.seed().dim_v(), m = t.seed().dim_u();
  if (pres.num_generators() != n * m) throw input_error("presentation has the wrong number of generators");
  SegreComponentModel model(t, max_degree);
  GradedQuotient q(pres, max_degree);
  CrossValidationReport rep;
  for (int d = 0; d <= max_degree; ++d) {
    rep.presentation_dims.push_back(q.dim(d));
    rep.component_dims.push_back(model.dim(d));
  }
  auto fail = [&](std::string stage, int d, std::string detail, Vec ce) {
    rep.pass = false;
    rep.failure_stage = std::move(stage);
    rep.failure_degree = d;
    rep.failure_detail = std::move(detail);
    rep.counterexample = std::move(ce);
    return rep;
  };
  for (int d = 0; d <= max_degree; ++d)
    if (q.dim(d) != model.dim(d))
      return fail("hilbert", d,
                  "presentation dim " + std::to_string(q.dim(d)) + " != component dim " + std::to_string(model.dim(d)), {});

  // Theta on generators: g = j*n+i -> v_i (x) u_j.
  std::vector<Vec> gen(n * m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i) gen[j * n + i] = model.engine().basis_tensor(1, 1, i, j);

  // Theta applied to free words of degree 2 kills the relations.
  for (const auto& r : pres.relations().basis_vectors()) {
    Vec acc(model.dim(2), Scalar(0));
    for (std::size_t ab = 0; ab < r.size(); ++ab) {
      if (is_zero(r[ab])) continue;
      Vec prod = model.multiply(1, gen[ab / (n * m)], 1, gen[ab % (n * m)]);
      for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += r[ab] * prod[k];
    }
    if (!is_zero_vector<Scalar>(acc)) return fail("relations", 2, "a relation does not vanish in the model", r);
  }

  // theta[d] column k = image of the k-th normal word.
  std::vector<Mat> theta;
  theta.push_back(Mat::identity(1));
  for (int d = 1; d <= max_degree; ++d) {
    Mat th(model.dim(d), q.dim(d));
    for (std::size_t k = 0; k < q.dim(d); ++k) {
      const auto [p, letter] = q.parents(d)[k];
      th.set_column(k, d == 1 ? gen[static_cast<std::size_t>(letter)]
                              : model.multiply(d - 1, theta[d - 1].column(p), 1, gen[static_cast<std::size_t>(letter)]));
    }
    theta.push_back(std::move(th));
  }
  auto theta_of = [&](const GradedElement& x) { return apply_map(theta[static_cast<std::size_t>(x.degree)], x.coords); };

  // (s, letter) for every normal s: the reductions in the presentation agree
  // with the model.
  for (int d = 1; d < max_degree; ++d)
    for (std::size_t s = 0; s < q.dim(d); ++s)
      for (std::size_t g = 0; g < n * m; ++g) {
        auto x = q.basis_element(d, s);
        auto lhs = theta_of(q.multiply(x, q.generator(g)));
        auto rhs = model.multiply(d, theta_of(x), 1, gen[g]);
        if (!(lhs == rhs)) return fail("multiplicativity", d + 1, "Theta(s*g) != Theta(s)Theta(g)", q.lift(x).dense(n * m));
      }
  for (int p = 1; p <= max_degree; ++p)
    for (int r = 1; p + r <= std::min(max_degree, 4); ++r)
      for (std::size_t a = 0; a < q.dim(p); ++a)
        for (std::size_t c = 0; c < q.dim(r); ++c) {
          auto x = q.basis_element(p, a), y = q.basis_element(r, c);
          if (!(theta_of(q.multiply(x, y)) == model.multiply(p, theta_of(x), r, theta_of(y))))
            return fail("multiplicativity", p + r, "Theta(xy) != Theta(x)Theta(y)", x.coords);
        }
  for (int d = 0; d <= max_degree; ++d)
    if (rank(theta[static_cast<std::size_t>(d)]) != model.dim(d))
      return fail("rank", d, "Theta is not surjective", {});
  rep.pass = true;
  return rep;
}

/// Window of the bigraded smash product: S_(i,j) = A_{i+j} (x) B_j for
/// |i| <= I and 0 <= j <= J.
class SmashTruncation {
 public:
  SmashTruncation(const TwistData& t, int bound_i, int bound_j)
      : eng_(t, check(bound_i, bound_j) + bound_j, bound_j), bi_(bound_i), bj_(bound_j) {}

  int bound_i() const { return bi_; }
  int bound_j() const { return bj_; }
  bool in_window(int i, int j) const { return i >= -bi_ && i <= bi_ && j >= 0 && j <= bj_; }
  std::size_t dim(int i, int j) const {
    if (!in_window(i, j)) throw std::out_of_range("component outside the window");
    return i + j < 0 ? 0 : eng_.dim(i + j, j);
  }

  /// S_(i,j) x S_(s,t) -> S_(i+s, j+t).
  Vec multiply(int i, int j, const Vec& x, int s, int t, const Vec& y) const {
    if (!in_window(i + s, j + t)) throw std::out_of_range("product leaves the window");
    if (dim(i, j) == 0 || dim(s, t) == 0) return Vec(dim(i + s, j + t), Scalar(0));
    return eng_.multiply(i + j, j, x, s + t, t, y);
  }

  const SmashEngine& engine() const { return eng_; }

 private:
  static int check(int bi, int bj) {
    if (bi < 0 || bj < 0) throw input_error("window bounds must be non-negative");
    return bi;
  }
  SmashEngine eng_;
  int bi_, bj_;
};

inline SmashTruncation smash_truncation(const TwistData& t, int bound_i, int bound_j) {
  return SmashTruncation(t, bound_i, bound_j);
}

struct DensityEntry {
  int t = 0;                    // B-degree of the target S_(i+s, t)
  std::size_t target_dim = 0;
  std::size_t span_dim = 0;     // dim of the span of in-window products
  bool covered() const { return span_dim == target_dim; }
};

struct DensityReport {
  int i = 0, s = 0;
  std::vector<DensityEntry> entries;
  std::vector<int> defects;     // t with span_dim < target_dim
  bool proof_range_covered = false;  // every t >= max(0, -s) covered
};

/// For each t <= J, the span of S_(i,j) S_(s,t-j) inside S_(i+s,t).
inline DensityReport density_window_check(const SmashTruncation& tr, int i, int s) {
  if (!tr.in_window(i, 0) || !tr.in_window(s, 0) || !tr.in_window(i + s, 0))
    throw input_error("window too small for the requested components");
  DensityReport rep{i, s, {}, {}, true};
  for (int t = 0; t <= tr.bound_j(); ++t) {
    DensityEntry e{t, tr.dim(i + s, t), 0};
    std::vector<Vec> prods;
    for (int j = 0; j <= t; ++j) {
      const std::size_t d1 = tr.dim(i, j), d2 = tr.dim(s, t - j);
      for (std::size_t a = 0; a < d1; ++a)
        for (std::size_t b = 0; b < d2; ++b) {
          Vec x(d1, Scalar(0)), y(d2, Scalar(0));
          x[a] = 1;
          y[b] = 1;
          prods.push_back(tr.multiply(i, j, x, s, t - j, y));
        }
    }
    e.span_dim = e.target_dim == 0 ? 0 : Space::span(e.target_dim, prods).dim();
    if (!e.covered()) {
      rep.defects.push_back(t);
      if (t >= std::max(0, -s)) rep.proof_range_covered = false;
    }
    rep.entries.push_back(e);
  }
  return rep;
}

struct ZhangReport {
  bool balanced = false;             // a11 b22 == a22 b11
  bool star_equals_commutative = false;
  Space star_relations;
};

/// For C = diag(a11,a22), Q = diag(b11,b22): rewrite the Segre relations in
/// the Zhang twist by phi = diag(1/b11, 1/b22, 1/a11, 1/a22) on X,Y,Z,W and
/// compare with the commutative Segre relations.
inline ZhangReport zhang_twist_details(const Twist2x2& tw) {
  auto diag = [](const Mat& x) { return x.rows() == 2 && x.cols() == 2 && is_zero(x(0, 1)) && is_zero(x(1, 0)); };
  if (!tw.D.is_zero() || !tw.P.is_zero() || !diag(tw.C) || !diag(tw.Q))
    throw input_error("zhang twist check needs D = P = 0 and diagonal C, Q");
  const Scalar a11 = tw.C(0, 0), a22 = tw.C(1, 1), b11 = tw.Q(0, 0), b22 = tw.Q(1, 1);
  GeneratorSet gv({"u", "v"}), gu({"x", "y"});
  auto poly = [](GeneratorSet g) {
    return QuadraticPresentation::from_relations(std::move(g), {FreeElement::word({0, 1}) - FreeElement::word({1, 0})});
  };
  auto a = poly(gv), b = poly(gu);
  auto twisted = segre_presentation(TwistData(tw.to_seed(), a, b)).presentation;
  auto plain = segre_presentation(TwistData(TwistingSeed::flip(2, 2), a, b)).presentation;

  // g_a * g_b = phi_b g_a g_b, so the relation sum r_ab g_a g_b becomes
  // sum r_ab / phi_b (g_a * g_b).
  const std::vector<Scalar> phi = {1 / b11, 1 / b22, 1 / a11, 1 / a22};
  Mat scale(16, 16);
  for (std::size_t ab = 0; ab < 16; ++ab) scale(ab, ab) = 1 / phi[ab % 4];
  ZhangReport rep;
  rep.balanced = a11 * b22 == a22 * b11;
  rep.star_relations = image(scale, twisted.relations());
  rep.star_equals_commutative = rep.star_relations == plain.relations();
  return rep;
}

inline bool zhang_twist_check(const Twist2x2& tw) { return zhang_twist_details(tw).star_equals_commutative; }

}  // namespace twseg
