#pragma once

// Degree-2 normal elements. Convention: a w = w nu(a). Column i of nu1
// holds the coordinates of nu(x_i) over the generators.

#include "twseg/polynomial.hpp"
#include "twseg/quadratic.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace twseg {

struct NormalCertificate {
  GradedElement w;  // normal-word coordinates in degree 2
  Mat nu1;
  int checked_degree = 3;
};

enum class NormalStatus { normal, not_normal, not_unique, zero_element, singular };

inline const char* to_string(NormalStatus s) {
  switch (s) {
    case NormalStatus::normal: return "normal";
    case NormalStatus::not_normal: return "not_normal";
    case NormalStatus::not_unique: return "not_unique";
    case NormalStatus::zero_element: return "zero_element";
    case NormalStatus::singular: return "singular";
  }
  return "unknown";
}

struct NormalResult {
  NormalStatus status = NormalStatus::not_normal;
  std::optional<NormalCertificate> certificate;
  long failing_generator = -1;  // first x_i with x_i w outside w A_1
  Vec defect;                   // x_i w reduced modulo w A_1
  bool ok() const { return status == NormalStatus::normal; }
};

/// Solves x_i w = w nu(x_i) in degree 3 for every generator.
inline NormalResult verify_normal(const GradedQuotient& q, const GradedElement& w) {
  if (w.degree != 2) throw input_error("normal elements are checked in degree 2");
  if (q.max_degree() < 3) throw input_error("verify_normal needs the quotient up to degree 3");
  NormalResult res;
  if (w.is_zero()) {
    res.status = NormalStatus::zero_element;
    return res;
  }
  const std::size_t n = q.num_generators();
  Mat wa(q.dim(3), n);
  for (std::size_t j = 0; j < n; ++j) wa.set_column(j, q.multiply(w, q.generator(j)).coords);
  const bool unique = rank(wa) == n;
  const Space span = Space::row_space(transpose(wa));
  Mat nu(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec target = q.multiply(q.generator(i), w).coords;
    auto sol = solve(wa, target);
    if (!sol) {
      res.status = NormalStatus::not_normal;
      res.failing_generator = static_cast<long>(i);
      res.defect = span.reduce(target);
      return res;
    }
    nu.set_column(i, *sol);
  }
  if (!unique) {
    res.status = NormalStatus::not_unique;
    return res;
  }
  if (!inverse(nu)) {
    res.status = NormalStatus::singular;
    return res;
  }
  res.status = NormalStatus::normal;
  res.certificate = NormalCertificate{w, std::move(nu), 3};
  return res;
}

inline NormalResult verify_normal(const QuadraticPresentation& pres, const FreeElement& w) {
  GradedQuotient q(pres, 3);
  return verify_normal(q, q.normal_form(w));
}

/// (nu1 (x) nu1)(R) = R.
inline bool extend_automorphism(const QuadraticPresentation& pres, const Mat& nu1) {
  const std::size_t n = pres.num_generators();
  if (nu1.rows() != n || nu1.cols() != n) throw input_error("automorphism matrix has the wrong shape");
  if (!inverse(nu1)) return false;
  return image(kron(nu1, nu1), pres.relations()) == pres.relations();
}

/// Matrix of the multiplicative extension of nu1 on degree d, built along
/// normal-word prefixes: nu(s x) = nu(s) nu(x).
inline Mat automorphism_in_degree(const GradedQuotient& q, const Mat& nu1, int d) {
  Mat cur = Mat::identity(1);
  for (int k = 1; k <= d; ++k) {
    Mat next(q.dim(k), q.dim(k));
    for (std::size_t c = 0; c < q.dim(k); ++c) {
      const auto [p, letter] = q.parents(k)[c];
      Vec prev = cur.column(p);
      Vec acc(q.dim(k), Scalar(0));
      for (std::size_t b = 0; b < q.num_generators(); ++b) {
        const Scalar& coef = nu1(b, static_cast<std::size_t>(letter));
        if (is_zero(coef)) continue;
        Vec v = q.append_letter(prev, k - 1, static_cast<int>(b));
        for (std::size_t t = 0; t < v.size(); ++t) acc[t] += coef * v[t];
      }
      next.set_column(c, acc);
    }
    cur = std::move(next);
  }
  return cur;
}

struct RegularityRow {
  int degree = 0;
  std::size_t dim = 0, left_rank = 0, right_rank = 0;
  bool injective() const { return left_rank == dim && right_rank == dim; }
};

struct RegularityReport {
  std::vector<RegularityRow> rows;
  bool regular = true;
};

/// Ranks of a -> w a and a -> a w from degree d to d+2, d <= N-2.
inline RegularityReport regularity_window(const GradedQuotient& q, const GradedElement& w, int max_degree) {
  if (w.is_zero()) throw input_error("regularity of the zero element");
  if (max_degree > q.max_degree()) throw std::out_of_range("degree not cached");
  RegularityReport rep;
  for (int d = 0; d + 2 <= max_degree; ++d) {
    RegularityRow row{d, q.dim(d), rank(q.left_multiplication(w, d)), rank(q.right_multiplication(w, d))};
    rep.regular = rep.regular && row.injective();
    rep.rows.push_back(row);
  }
  return rep;
}

/// A linear family of normal elements sharing one automorphism.
struct NormalFamily {
  std::vector<Vec> basis;  // vectors in A_2
  Mat nu1;
};

struct NormalSearchResult {
  std::vector<NormalCertificate> found;   // one representative per line or family
  std::vector<NormalFamily> families;     // families of dimension > 1
  std::vector<std::vector<Vec>> pencils;  // 2-dim spans of normal elements whose nu varies
  bool all_normal = false;     // every element of the support span is normal
  bool inconclusive = false;   // refined space too large, or a degenerate line was skipped
  std::size_t refined_dim = 0;
  std::vector<std::vector<Vec>> degenerate_lines;  // w A_1 drops rank along these
  std::vector<std::string> notes;  // why the search is inconclusive
};

namespace detail {

/// Candidates c with x_i w(c) in w(P) A_1 and w(c) x_i in A_1 w(P), iterated
/// until stable. Returns a basis of the refined coefficient space (rows are
/// vectors in A_2).
inline std::vector<Vec> refine_support(const GradedQuotient& q, std::vector<Vec> basis) {
  const std::size_t n = q.num_generators();
  for (;;) {
    if (basis.empty()) return basis;
    std::vector<Vec> right_span, left_span;
    for (const auto& b : basis)
      for (std::size_t j = 0; j < n; ++j) {
        GradedElement e{2, b};
        right_span.push_back(q.multiply(e, q.generator(j)).coords);
        left_span.push_back(q.multiply(q.generator(j), e).coords);
      }
    const Space wr = Space::span(q.dim(3), right_span), wl = Space::span(q.dim(3), left_span);
    // Stack the linear conditions reduce(x_i w(c)) = 0 and reduce(w(c) x_i) = 0.
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Vec> l_cols, r_cols;
      for (const auto& b : basis) {
        GradedElement e{2, b};
        l_cols.push_back(wr.reduce(q.multiply(q.generator(i), e).coords));
        r_cols.push_back(wl.reduce(q.multiply(e, q.generator(i)).coords));
      }
      for (std::size_t t = 0; t < q.dim(3); ++t) {
        Vec rl(basis.size()), rr(basis.size());
        for (std::size_t k = 0; k < basis.size(); ++k) {
          rl[k] = l_cols[k][t];
          rr[k] = r_cols[k][t];
        }
        rows.push_back(std::move(rl));
        rows.push_back(std::move(rr));
      }
    }
    Mat sys(rows.size(), basis.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t k = 0; k < basis.size(); ++k) sys(r, k) = rows[r][k];
    const Space ker = kernel(sys);
    if (ker.dim() == basis.size()) return basis;
    std::vector<Vec> next;
    for (const auto& c : ker.basis_vectors()) {
      Vec v(q.dim(2), Scalar(0));
      for (std::size_t k = 0; k < basis.size(); ++k)
        for (std::size_t t = 0; t < v.size(); ++t) v[t] += c[k] * basis[k][t];
      next.push_back(std::move(v));
    }
    basis = std::move(next);
  }
}

/// rank(w A_1) = dim A_1.
inline bool right_span_full(const GradedQuotient& q, const Vec& w) {
  const std::size_t n = q.num_generators();
  Mat wa(q.dim(3), n);
  for (std::size_t j = 0; j < n; ++j) wa.set_column(j, q.multiply(GradedElement{2, w}, q.generator(j)).coords);
  return rank(wa) == n;
}

inline Vec add_vectors(Vec a, const Vec& b) {
  for (std::size_t t = 0; t < a.size(); ++t) a[t] += b[t];
  return a;
}

inline bool same_line(const Vec& a, const Vec& b) {
  Mat m(2, a.size());
  for (std::size_t t = 0; t < a.size(); ++t) {
    m(0, t) = a[t];
    m(1, t) = b[t];
  }
  return rank(m) <= 1;
}

}  // namespace detail

namespace detail {

/// Rank conditions for normality of w(c) = sum c_k basis_k: every
/// (n+1)-minor of [w x_1 .. w x_n | x_i w] vanishes. Minors are compressed
/// by random integer row combinations into determinants that are
/// polynomials in c.
class MinorSystem {
 public:
  MinorSystem(const GradedQuotient& q, const std::vector<Vec>& basis, unsigned long seed)
      : q_(q), n_(q.num_generators()), rng_(seed) {
    for (const auto& b : basis) {
      GradedElement e{2, b};
      std::vector<Vec> right, left;
      for (std::size_t j = 0; j < n_; ++j) {
        right.push_back(q.multiply(e, q.generator(j)).coords);
        left.push_back(q.multiply(q.generator(j), e).coords);
      }
      right_.push_back(std::move(right));
      left_.push_back(std::move(left));
    }
  }

  std::size_t n() const { return n_; }

  /// A fresh random compression for generator i.
  std::pair<std::size_t, Mat> draw(std::size_t i) {
    std::uniform_int_distribution<int> dist(-9, 9);
    Mat comp(n_ + 1, q_.dim(3));
    for (std::size_t r = 0; r <= n_; ++r)
      for (std::size_t c = 0; c < q_.dim(3); ++c) comp(r, c) = dist(rng_);
    return {i, std::move(comp)};
  }

  Scalar eval(const std::pair<std::size_t, Mat>& minor, const Vec& c) const {
    const auto& [i, comp] = minor;
    Mat m(q_.dim(3), n_ + 1);
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (is_zero(c[k])) continue;
      for (std::size_t t = 0; t < q_.dim(3); ++t) {
        for (std::size_t j = 0; j < n_; ++j) m(t, j) += c[k] * right_[k][j][t];
        m(t, n_) += c[k] * left_[k][i][t];
      }
    }
    return determinant(comp * m);
  }

  /// The minor restricted to the line c(t) = base + t dir, as a polynomial.
  Polynomial on_line(const std::pair<std::size_t, Mat>& minor, const Vec& base, const Vec& dir) const {
    std::vector<Scalar> xs, ys;
    for (std::size_t k = 0; k <= n_ + 1; ++k) {
      Scalar t(static_cast<long>(k));
      Vec c = base;
      for (std::size_t a = 0; a < c.size(); ++a) c[a] += t * dir[a];
      xs.push_back(t);
      ys.push_back(eval(minor, c));
    }
    return Polynomial::interpolate(xs, ys);
  }

 private:
  const GradedQuotient& q_;
  std::size_t n_;
  std::mt19937_64 rng_;
  std::vector<std::vector<Vec>> right_, left_;
};

/// Sylvester resultant with formal degrees d1, d2.
inline Scalar resultant(const Polynomial& f, const Polynomial& g, std::size_t d1, std::size_t d2) {
  const std::size_t sz = d1 + d2;
  if (sz == 0) return Scalar(1);
  Mat m(sz, sz);
  for (std::size_t r = 0; r < d2; ++r)
    for (std::size_t k = 0; k <= d1; ++k) m(r, r + k) = f.coeff(d1 - k);
  for (std::size_t r = 0; r < d1; ++r)
    for (std::size_t k = 0; k <= d2; ++k) m(d2 + r, r + k) = g.coeff(d2 - k);
  return determinant(m);
}

/// k-th principal subresultant coefficient with formal degrees d1, d2.
inline Scalar subresultant(const Polynomial& f, const Polynomial& g, std::size_t d1, std::size_t d2, std::size_t k) {
  const std::size_t sz = d1 + d2 - 2 * k;
  if (sz == 0) return Scalar(1);
  Mat m(sz, sz);
  for (std::size_t r = 0; r + k < d2; ++r)
    for (std::size_t j = 0; j <= d1 && r + j < sz; ++j) m(r, r + j) = f.coeff(d1 - j);
  for (std::size_t r = 0; r + k < d1; ++r)
    for (std::size_t j = 0; j <= d2 && r + j < sz; ++j) m(d2 - k + r, r + j) = g.coeff(d2 - j);
  return determinant(m);
}

/// Rational t with base + t dir satisfying every drawn minor. Sets `whole`
/// when all minors vanish identically on the line.
inline std::vector<Scalar> line_candidates(MinorSystem& sys, const Vec& base, const Vec& dir, bool& whole) {
  Polynomial g;
  for (int trial = 0; trial < 3; ++trial)
    for (std::size_t i = 0; i < sys.n(); ++i) g = gcd(g, sys.on_line(sys.draw(i), base, dir));
  whole = g.is_zero();
  if (whole || g.degree() <= 0) return {};
  return rational_roots(g);
}

/// The c in the span of `basis` with x_i w(c) = w(c) nu1(x_i) for all i.
inline std::vector<Vec> normal_family(const GradedQuotient& q, const std::vector<Vec>& basis, const Mat& nu1) {
  const std::size_t n = q.num_generators();
  std::vector<std::vector<Vec>> cols(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    GradedElement e{2, basis[k]};
    for (std::size_t i = 0; i < n; ++i) {
      GradedElement img = q.zero(1);
      for (std::size_t j = 0; j < n; ++j)
        if (!is_zero(nu1(j, i))) img = img + nu1(j, i) * q.generator(j);
      cols[k].push_back((q.multiply(q.generator(i), e) - q.multiply(e, img)).coords);
    }
  }
  const std::size_t d3 = q.dim(3);
  Mat sys(n * d3, basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t t = 0; t < d3; ++t) sys(i * d3 + t, k) = cols[k][i][t];
  std::vector<Vec> out;
  for (const auto& c : kernel(sys).basis_vectors()) {
    Vec v(q.dim(2), Scalar(0));
    for (std::size_t k = 0; k < basis.size(); ++k)
      for (std::size_t t = 0; t < v.size(); ++t) v[t] += c[k] * basis[k][t];
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace detail

/// Normal elements inside the span of the given degree-2 words (their classes
/// in A_2). Exactness comes from verify_normal on every candidate; the
/// randomized minor compression only affects which candidates are proposed.
inline NormalSearchResult search_normal_degree2(const GradedQuotient& q, const std::vector<Word>& support,
                                                unsigned long seed = 1) {
  if (support.empty()) throw input_error("normal search needs a non-empty support");
  std::vector<Vec> gens;
  for (const auto& w : support) {
    if (w.size() != 2) throw input_error("support words must have degree 2");
    gens.push_back(q.normal_form_word(w));
  }
  const Space p0 = Space::span(q.dim(2), gens);
  NormalSearchResult res;
  if (p0.dim() == 0) return res;
  const auto p0_basis = p0.basis_vectors();
  const std::size_t n = q.num_generators();

  auto basis = detail::refine_support(q, p0_basis);
  res.refined_dim = basis.size();
  auto combine = [&](const Vec& c) {
    Vec v(q.dim(2), Scalar(0));
    for (std::size_t k = 0; k < basis.size(); ++k)
      for (std::size_t t = 0; t < v.size(); ++t) v[t] += c[k] * basis[k][t];
    return v;
  };
  auto known = [&](const Vec& v) {
    for (const auto& f : res.found)
      if (detail::same_line(f.w.coords, v)) return true;
    for (const auto& fam : res.families)
      if (Space::span(q.dim(2), fam.basis).contains(v)) return true;
    for (const auto& pen : res.pencils)
      if (Space::span(q.dim(2), pen).contains(v)) return true;
    return false;
  };
  auto add_vec = [&](const Vec& v) {
    if (is_zero_vector<Scalar>(v) || known(v)) return false;
    auto r = verify_normal(q, GradedElement{2, v});
    if (!r.ok()) return false;
    auto fam = detail::normal_family(q, p0_basis, r.certificate->nu1);
    if (fam.size() > 1) {
      if (fam.size() == p0.dim()) res.all_normal = true;
      res.families.push_back({fam, r.certificate->nu1});
    }
    res.found.push_back(*r.certificate);
    return true;
  };
  // The minors have degree <= n + 1 along a line, so n + 2 normal samples
  // force every point of the line into the rank condition.
  auto record_pencil = [&](const Vec& u, const Vec& v) {
    if (detail::same_line(u, v)) return false;
    if (known(u) && known(v) && known(detail::add_vectors(u, v))) return true;
    for (std::size_t j = 0; j < n + 2; ++j) {
      Vec x = u;
      for (std::size_t t = 0; t < x.size(); ++t) x[t] += Scalar(static_cast<long>(j)) * v[t];
      if (!verify_normal(q, GradedElement{2, x}).ok()) return false;
    }
    if (!verify_normal(q, GradedElement{2, v}).ok()) return false;
    // A pencil sharing one nu is already a family.
    add_vec(u);
    if (known(v) && known(detail::add_vectors(u, v))) return true;
    res.pencils.push_back(Space::span(q.dim(2), {u, v}).basis_vectors());
    return true;
  };
  auto flag = [&](const std::string& why) {
    res.inconclusive = true;
    res.notes.push_back(why);
  };
  auto try_add = [&](const Vec& c) { add_vec(combine(c)); };
  auto unit = [&](std::size_t k) {
    Vec e(basis.size(), Scalar(0));
    e[k] = 1;
    return e;
  };
  // All drawn minors vanish on the line: it is a pencil of normal elements,
  // a family, or w A_1 degenerates along it.
  auto on_whole_line = [&](const Vec& base, const Vec& dir) {
    const Vec u = combine(base), v = combine(dir);
    if (record_pencil(u, v)) return;
    bool hit = false, degenerate = true;
    for (long t : {0L, 1L, -2L, 3L}) {
      Vec x = u;
      for (std::size_t a = 0; a < x.size(); ++a) x[a] += Scalar(t) * v[a];
      if (known(x) || add_vec(x)) hit = true;
      degenerate = degenerate && !detail::right_span_full(q, x);
    }
    if (!hit && degenerate) res.degenerate_lines.push_back(Space::span(q.dim(2), {u, v}).basis_vectors());
    else if (!hit) flag("a line satisfies every drawn minor but no sample is normal");
  };

  // Every basis direction normal with one common nu.
  for (const auto& b : p0_basis) {
    add_vec(b);
    if (res.all_normal) return res;
  }

  const std::size_t r = basis.size();
  if (r == 0) return res;
  if (r > 3) {
    flag("refined support has dimension " + std::to_string(r) + " > 3");
    return res;
  }
  detail::MinorSystem sys(q, basis, seed);
  try_add(unit(r - 1));
  if (r >= 2) {
    // Pencil e_{r-2} + t e_{r-1}.
    bool whole = false;
    for (const auto& t : detail::line_candidates(sys, unit(r - 2), unit(r - 1), whole)) {
      Vec c = unit(r - 2);
      c[r - 1] = t;
      try_add(c);
    }
    if (whole) on_whole_line(unit(r - 2), unit(r - 1));
  }
  if (r == 3) {
    const std::size_t deg = n + 1;
    const Vec dir{Scalar(0), Scalar(0), Scalar(1)};
    auto line_at = [&](const Scalar& s) { return Vec{Scalar(1), s, Scalar(0)}; };

    // Curve components common to all minors meet a generic line s = s*.
    // Their rational points are collected, and collinear normal ones become
    // pencils.
    std::vector<Vec> curve_points;
    bool curve_unresolved = false;
    for (long j = 0; j < 3; ++j) {
      const Scalar s = ratio(7919 + 13 * j, 101 + 7 * j);
      Polynomial g;
      for (int trial = 0; trial < 3; ++trial)
        for (std::size_t i = 0; i < n; ++i) g = gcd(g, sys.on_line(sys.draw(i), line_at(s), dir));
      if (g.is_zero()) {
        on_whole_line(line_at(s), dir);
        continue;
      }
      if (g.degree() <= 0) continue;
      std::size_t counted = 0;
      for (const auto& t : rational_roots(g)) {
        counted += static_cast<std::size_t>(root_multiplicity(g, t));
        const Vec v = combine(Vec{Scalar(1), s, t});
        const auto st = verify_normal(q, GradedElement{2, v}).status;
        if (st == NormalStatus::normal) curve_points.push_back(v);
      }
      if (counted < static_cast<std::size_t>(g.degree())) curve_unresolved = true;
    }
    for (std::size_t i = 0; i < curve_points.size(); ++i)
      for (std::size_t j = i + 1; j < curve_points.size(); ++j) record_pencil(curve_points[i], curve_points[j]);
    bool stray = false;
    for (const auto& v : curve_points) stray = stray || !known(v);
    if (stray) flag("normal points on a common curve that is not a line");
    if (curve_unresolved) flag("common curve with irrational points");

    // Isolated points in the chart (1, s, t). Two minors may share a curve,
    // so the plain resultant can vanish. Use the subresultant at the generic
    // gcd degree: it vanishes where the gcd in t jumps.
    std::vector<std::pair<std::size_t, Mat>> live;
    const Vec random_point{Scalar(1), ratio(7919, 101), ratio(-3571, 97)};
    for (int round = 0; round < 2; ++round)
      for (std::size_t i = 0; i < n; ++i) {
        auto m = sys.draw(i);
        if (!is_zero(sys.eval(m, random_point))) live.push_back(std::move(m));
      }
    bool solved = live.empty();  // nothing alive: the whole plane satisfies the drawn minors
    if (live.empty()) on_whole_line(line_at(Scalar(0)), dir);
    for (std::size_t attempt = 0; attempt + 1 < live.size() && !solved; ++attempt) {
      const auto& m1 = live[attempt];
      const auto& m2 = live[attempt + 1];
      const Scalar probe(ratio(7919, 101 + static_cast<long>(attempt)));
      const Polynomial f0 = sys.on_line(m1, line_at(probe), dir), g0 = sys.on_line(m2, line_at(probe), dir);
      // Formal degrees in t come from the generic line, not from n + 1.
      if (f0.degree() < 0 || g0.degree() < 0) continue;
      const auto d1 = static_cast<std::size_t>(f0.degree()), d2 = static_cast<std::size_t>(g0.degree());
      std::size_t k = 0;
      while (k < std::min(d1, d2) && is_zero(detail::subresultant(f0, g0, d1, d2, k))) ++k;
      if (k == std::min(d1, d2) && k > 0) continue;
      std::vector<Scalar> xs, ys;
      for (std::size_t p = 0; p <= 2 * deg * deg + 1; ++p) {
        Scalar s(static_cast<long>(p) - static_cast<long>(deg * deg));
        xs.push_back(s);
        ys.push_back(
            detail::subresultant(sys.on_line(m1, line_at(s), dir), sys.on_line(m2, line_at(s), dir), d1, d2, k));
      }
      const Polynomial psc = Polynomial::interpolate(xs, ys);
      if (psc.is_zero()) continue;
      solved = true;
      for (const auto& s : rational_roots(psc)) {
        bool whole = false;
        for (const auto& t : detail::line_candidates(sys, line_at(s), dir, whole)) try_add(Vec{Scalar(1), s, t});
        if (whole) on_whole_line(line_at(s), dir);
      }
    }
    if (!solved) flag("no pair of minors with a nonzero subresultant");
  }
  return res;
}

/// Members of a search result whose quotient pres/(w) has exactly the relation
/// space of `target` (same generators). The condition is linear in w, so each
/// pencil or family contributes a subspace.
inline std::vector<Vec> select_by_quotient(const QuadraticPresentation& pres, const GradedQuotient& q,
                                           const NormalSearchResult& found, const QuadraticPresentation& target) {
  const Space& r_pres = pres.relations();
  const Space& r_target = target.relations();
  std::vector<Vec> out;
  if (sum(r_target, r_pres).dim() != r_target.dim() || r_target.dim() != r_pres.dim() + 1) return out;
  auto lifted = [&](const Vec& v) { return q.lift(GradedElement{2, v}).dense(pres.num_generators()); };
  auto consider = [&](const std::vector<Vec>& span) {
    // c with lift(sum c_k span_k) in r_target.
    std::vector<Vec> lifts;
    for (const auto& v : span) lifts.push_back(r_target.reduce(lifted(v)));
    Mat m(lifts.front().size(), span.size());
    for (std::size_t k = 0; k < span.size(); ++k)
      for (std::size_t t = 0; t < lifts[k].size(); ++t) m(t, k) = lifts[k][t];
    for (const auto& c : kernel(m).basis_vectors()) {
      Vec w(q.dim(2), Scalar(0));
      for (std::size_t k = 0; k < span.size(); ++k)
        for (std::size_t t = 0; t < w.size(); ++t) w[t] += c[k] * span[k][t];
      bool dup = false;
      for (const auto& o : out) dup = dup || detail::same_line(o, w);
      if (!dup) out.push_back(std::move(w));
    }
  };
  for (const auto& f : found.found) consider({f.w.coords});
  for (const auto& fam : found.families) consider(fam.basis);
  for (const auto& pen : found.pencils) consider(pen);
  return out;
}

}  // namespace twseg
