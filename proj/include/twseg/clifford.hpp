#pragma once

// C(A) = A^![w^-1]_0 at a single stabilized level. A class a w^-i with
// a in A^!_{2i} is represented at level L >= i by a w^(L-i) in A^!_{2L};
// products use (a w^-L)(b w^-L) = a nu^L(b) w^-2L and are pulled back along
// x -> x w^L.

#include "twseg/findim.hpp"
#include "twseg/normality.hpp"
#include "twseg/twisting.hpp"

#include <memory>
#include <string>
#include <vector>

namespace twseg {

struct StabilizationData {
  bool stabilized = false;
  int i0 = -1;
  std::vector<std::size_t> dims;  // dim A^!_{2i}, i = 0 .. i0+1 (or maxI+1 on failure)
  Mat mulw;                       // a -> a w from degree 2 i0 to 2 i0 + 2
};

namespace detail {

inline GradedElement power(const GradedQuotient& q, const GradedElement& w, int k) {
  GradedElement acc = q.unit();
  for (int i = 0; i < k; ++i) acc = q.multiply(acc, w);
  return acc;
}

inline void require_certificate(const GradedQuotient& q, const NormalCertificate& cert) {
  const auto r = verify_normal(q, cert.w);
  if (!r.ok() || !(r.certificate->nu1 == cert.nu1)) throw input_error("certificate does not verify in this presentation");
  if (!extend_automorphism(q.presentation(), cert.nu1)) throw input_error("nu1 does not extend to an automorphism");
}

}  // namespace detail

/// Least i0 <= max_i with dim A^!_{2i0} = dim A^!_{2i0+2} and a -> a w
/// bijective between them.
inline StabilizationData stabilize(const QuadraticPresentation& dual, const NormalCertificate& cert, int max_i) {
  if (max_i < 0) throw input_error("max stabilization index must be non-negative");
  StabilizationData st;
  for (int i = 0; i <= max_i; ++i) {
    GradedQuotient q(dual, std::max(3, 2 * i + 2));
    if (i == 0) detail::require_certificate(q, cert);
    st.dims.clear();
    for (int k = 0; k <= i + 1; ++k) st.dims.push_back(q.dim(2 * k));
    if (q.dim(2 * i) != q.dim(2 * i + 2)) continue;
    Mat m = q.right_multiplication(cert.w, 2 * i);
    if (rank(m) != q.dim(2 * i)) continue;
    st.stabilized = true;
    st.i0 = i;
    st.mulw = std::move(m);
    return st;
  }
  return st;
}

struct CliffordAlgebra {
  FinDimAlgebra base;
  int level = 0;
  std::vector<Word> basis_words;  // normal words of A^!_{2 level}
  std::shared_ptr<const GradedQuotient> quotient;
  GradedElement w;

  /// Class of a w^-i for a in degree 2i, i <= level.
  Vec class_of(const GradedElement& a) const {
    if (a.degree % 2 != 0) throw input_error("only even degrees have classes in C(A)");
    const int i = a.degree / 2;
    if (i > level) throw input_error("degree " + std::to_string(a.degree) + " is above the stabilized level");
    return quotient->multiply(a, detail::power(*quotient, w, level - i)).coords;
  }

  Vec class_of(const FreeElement& a) const { return class_of(quotient->normal_form(a)); }
};

/// Structure constants at `level` (default: stab.i0), checked for
/// associativity and the unit w^level.
inline CliffordAlgebra clifford_algebra(const QuadraticPresentation& dual, const NormalCertificate& cert,
                                        const StabilizationData& stab, int level = -1) {
  if (!stab.stabilized) throw input_error("stabilization did not succeed");
  if (level < 0) level = stab.i0;
  if (level < stab.i0) throw input_error("level below the stabilization index");
  auto q = std::make_shared<const GradedQuotient>(dual, std::max(3, 4 * level));
  detail::require_certificate(*q, cert);
  const int d = 2 * level;
  const std::size_t dim = q->dim(d);

  const GradedElement wl = detail::power(*q, cert.w, level);
  const auto pull = inverse(q->right_multiplication(wl, d));
  if (!pull) throw math_error("right multiplication by w^" + std::to_string(level) + " is not bijective");

  Mat nu = Mat::identity(dim);
  const Mat nu_d = automorphism_in_degree(*q, cert.nu1, d);
  for (int k = 0; k < level; ++k) nu = nu * nu_d;

  std::vector<std::vector<Vec>> table(dim, std::vector<Vec>(dim));
  for (std::size_t j = 0; j < dim; ++j) {
    const GradedElement twisted{d, nu.column(j)};
    for (std::size_t i = 0; i < dim; ++i)
      table[i][j] = apply_map(*pull, q->multiply(q->basis_element(d, i), twisted).coords);
  }
  CliffordAlgebra c{FinDimAlgebra::from_table(wl.coords, std::move(table)), level, q->normal_words(d), q, cert.w};
  if (!c.base.unital()) throw math_error("class of w^level is not a unit");
  if (!c.base.associative()) throw math_error("structure constants are not associative");
  return c;
}

/// Coefficients of a lower-triangular diagonal twist: C = [[a11,0],[a21,a22]],
/// Q = [[b11,0],[b21,b22]], D = P = 0.
struct TriangularCoefficients {
  Scalar a11, a21, a22, b11, b21, b22;

  static TriangularCoefficients from_twist(const Twist2x2& t) {
    if (!is_zero(t.C(0, 1)) || !is_zero(t.Q(0, 1)) || !(t.D == Mat(2, 2)) || !(t.P == Mat(2, 2)))
      throw input_error("twist is not lower-triangular diagonal");
    return {t.C(0, 0), t.C(1, 0), t.C(1, 1), t.Q(0, 0), t.Q(1, 0), t.Q(1, 1)};
  }
};

struct TElementTable {
  std::vector<std::string> names;         // "1", "t1", .., "t7"
  std::vector<Vec> elements;              // coordinates in the stabilized basis
  std::vector<std::vector<Vec>> products; // products[i][j] in coordinates over `elements`
};

/// The elements 1, t1..t7 (generators X, Y, Z, W of the dual in this order)
/// and their product table expressed over themselves.
inline TElementTable evaluate_t_elements(const CliffordAlgebra& c, const TriangularCoefficients& k) {
  if (c.level < 2) throw input_error("t7 lives at level 2; build the algebra at level >= 2");
  if (c.quotient->num_generators() != 4) throw input_error("t-elements need four generators");
  enum { X = 0, Y = 1, Z = 2, W = 3 };
  auto word = [](std::initializer_list<int> letters, const Scalar& coef) {
    FreeElement e(static_cast<int>(letters.size()));
    e.add(Word(letters), coef);
    return e;
  };
  std::vector<FreeElement> t;
  t.push_back(word({Y, W}, k.a22));
  t.push_back(word({Y, X}, k.a11));
  t.push_back(word({Y, Z}, k.a11) + word({Y, W}, k.a21));
  t.push_back(word({W, X}, k.b11) + word({W, Y}, k.b21));
  t.push_back(word({W, Z}, k.b11));
  t.push_back(word({X, Z}, k.a11) + word({X, W}, k.a21));
  t.push_back(word({Y, X, W, Z}, k.a11 * k.a11 * k.a22 / k.b22));

  TElementTable tab;
  tab.names = {"1", "t1", "t2", "t3", "t4", "t5", "t6", "t7"};
  tab.elements.push_back(c.base.unit);
  for (const auto& e : t) tab.elements.push_back(c.class_of(e));
  Mat basis(c.base.dim, tab.elements.size());
  for (std::size_t i = 0; i < tab.elements.size(); ++i) basis.set_column(i, tab.elements[i]);
  if (rank(basis) != c.base.dim || tab.elements.size() != c.base.dim)
    throw math_error("1, t1..t7 do not form a basis of C(A)");
  tab.products.assign(tab.elements.size(), std::vector<Vec>(tab.elements.size()));
  for (std::size_t i = 0; i < tab.elements.size(); ++i)
    for (std::size_t j = 0; j < tab.elements.size(); ++j)
      tab.products[i][j] = *solve(basis, c.base.multiply(tab.elements[i], tab.elements[j]));
  return tab;
}

}  // namespace twseg
