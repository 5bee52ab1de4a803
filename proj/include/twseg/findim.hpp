#pragma once

// Finite-dimensional unital algebras given by structure constants: radical,
// center, Wedderburn blocks over Q, and checks of explicit isomorphisms onto
// products of matrix algebras.

#include "twseg/linalg.hpp"
#include "twseg/polynomial.hpp"

#include <cstdlib>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace twseg {

struct FinDimAlgebra {
  std::size_t dim = 0;
  Vec unit;
  std::vector<std::vector<Vec>> table;  // table[i][j] = coordinates of e_i e_j

  /// Validates shapes only; call associative() / unital() for the axioms.
  static FinDimAlgebra from_table(Vec unit, std::vector<std::vector<Vec>> table) {
    const std::size_t d = unit.size();
    if (table.size() != d) throw input_error("structure table has the wrong number of rows");
    for (const auto& row : table) {
      if (row.size() != d) throw input_error("structure table has a short row");
      for (const auto& v : row)
        if (v.size() != d) throw input_error("structure constant vector has the wrong length");
    }
    return FinDimAlgebra{d, std::move(unit), std::move(table)};
  }

  /// M_s(Q) with e_{ij} at index i*s + j.
  static FinDimAlgebra matrix_algebra(std::size_t s) {
    const std::size_t d = s * s;
    FinDimAlgebra a{d, Vec(d, Scalar(0)), std::vector<std::vector<Vec>>(d, std::vector<Vec>(d, Vec(d, Scalar(0))))};
    for (std::size_t i = 0; i < s; ++i) {
      a.unit[i * s + i] = 1;
      for (std::size_t j = 0; j < s; ++j)
        for (std::size_t k = 0; k < s; ++k) a.table[i * s + j][j * s + k][i * s + k] = 1;
    }
    return a;
  }

  static FinDimAlgebra product(const FinDimAlgebra& a, const FinDimAlgebra& b) {
    const std::size_t d = a.dim + b.dim;
    FinDimAlgebra p{d, Vec(d, Scalar(0)), std::vector<std::vector<Vec>>(d, std::vector<Vec>(d, Vec(d, Scalar(0))))};
    for (std::size_t i = 0; i < a.dim; ++i) {
      p.unit[i] = a.unit[i];
      for (std::size_t j = 0; j < a.dim; ++j)
        for (std::size_t k = 0; k < a.dim; ++k) p.table[i][j][k] = a.table[i][j][k];
    }
    for (std::size_t i = 0; i < b.dim; ++i) {
      p.unit[a.dim + i] = b.unit[i];
      for (std::size_t j = 0; j < b.dim; ++j)
        for (std::size_t k = 0; k < b.dim; ++k) p.table[a.dim + i][a.dim + j][a.dim + k] = b.table[i][j][k];
    }
    return p;
  }

  Vec basis(std::size_t i) const {
    Vec e(dim, Scalar(0));
    e.at(i) = 1;
    return e;
  }

  Vec multiply(const Vec& x, const Vec& y) const {
    Vec out(dim, Scalar(0));
    for (std::size_t i = 0; i < dim; ++i) {
      if (is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        if (is_zero(y[j])) continue;
        const Scalar c = x[i] * y[j];
        const Vec& t = table[i][j];
        for (std::size_t k = 0; k < dim; ++k)
          if (!is_zero(t[k])) out[k] += c * t[k];
      }
    }
    return out;
  }

  /// Matrix of y -> x y.
  Mat left_matrix(const Vec& x) const {
    Mat m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) m.set_column(j, multiply(x, basis(j)));
    return m;
  }

  bool associative() const {
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t l = 0; l < dim; ++l)
          if (multiply(table[i][j], basis(l)) != multiply(basis(i), table[j][l])) return false;
    return true;
  }

  bool unital() const {
    for (std::size_t i = 0; i < dim; ++i)
      if (multiply(unit, basis(i)) != basis(i) || multiply(basis(i), unit) != basis(i)) return false;
    return true;
  }
};

/// Kernel of the trace form tr(L_a L_b); the Jacobson radical in
/// characteristic 0.
inline Space radical(const FinDimAlgebra& a) {
  Vec tr(a.dim, Scalar(0));
  for (std::size_t k = 0; k < a.dim; ++k)
    for (std::size_t j = 0; j < a.dim; ++j) tr[k] += a.table[k][j][j];
  Mat gram(a.dim, a.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k) gram(i, j) += a.table[i][j][k] * tr[k];
  return kernel(gram);
}

inline Space center(const FinDimAlgebra& a) {
  Mat sys(a.dim * a.dim, a.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t k = 0; k < a.dim; ++k)
      for (std::size_t t = 0; t < a.dim; ++t) sys(i * a.dim + t, k) = a.table[k][i][t] - a.table[i][k][t];
  return kernel(sys);
}

namespace detail {

/// Minimal polynomial of x inside the corner algebra with unit f.
inline Polynomial minimal_polynomial(const FinDimAlgebra& a, const Vec& x, const Vec& f) {
  std::vector<Vec> powers{f};
  for (;;) {
    Vec next = a.multiply(powers.back(), x);
    Mat m(a.dim, powers.size());
    for (std::size_t c = 0; c < powers.size(); ++c) m.set_column(c, powers[c]);
    if (auto sol = solve(m, next)) {
      std::vector<Scalar> coeffs(powers.size() + 1, Scalar(0));
      for (std::size_t c = 0; c < powers.size(); ++c) coeffs[c] = -(*sol)[c];
      coeffs.back() = 1;
      return Polynomial(coeffs);
    }
    powers.push_back(std::move(next));
  }
}

inline Vec evaluate(const FinDimAlgebra& a, const Polynomial& p, const Vec& x, const Vec& f) {
  Vec acc(a.dim, Scalar(0));
  for (int k = p.degree(); k >= 0; --k) {
    acc = a.multiply(acc, x);
    const Scalar& c = p.coeff(static_cast<std::size_t>(k));
    for (std::size_t t = 0; t < a.dim; ++t) acc[t] += c * f[t];
  }
  return acc;
}

/// Spectral idempotent of x for the rational eigenvalue lambda, inside the
/// corner with unit f. Empty when lambda is the only eigenvalue.
inline std::optional<Vec> spectral_idempotent(const FinDimAlgebra& a, const Polynomial& minpoly, const Scalar& lambda,
                                              const Vec& x, const Vec& f) {
  const int mult = root_multiplicity(minpoly, lambda);
  Polynomial p1 = Polynomial::constant(Scalar(1));
  for (int k = 0; k < mult; ++k) p1 = p1 * Polynomial::linear_factor(lambda);
  const Polynomial p2 = divmod(minpoly, p1).first;
  if (p2.degree() <= 0) return std::nullopt;
  // u p2 + v p1 = 1, so u(x) p2(x) is the identity on the lambda part.
  const auto [g, u, v] = extended_gcd(p2, p1);
  (void)v;
  if (g.degree() != 0) return std::nullopt;
  return evaluate(a, divmod(u * p2, minpoly).second * Polynomial::constant(1 / g.coeff(0)), x, f);
}

inline Space corner(const FinDimAlgebra& a, const Vec& f) {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < a.dim; ++i) gens.push_back(a.multiply(a.multiply(f, a.basis(i)), f));
  return Space::span(a.dim, gens);
}

inline Vec random_combination(const std::vector<Vec>& basis, std::size_t dim, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-7, 7);
  Vec v(dim, Scalar(0));
  for (const auto& b : basis) {
    const Scalar c(dist(rng));
    for (std::size_t t = 0; t < dim; ++t) v[t] += c * b[t];
  }
  return v;
}

/// Shrinks the idempotent f through spectral idempotents of corner elements
/// until f A f is one-dimensional. A simple block whose corner reaches
/// dimension one is a full matrix algebra over Q.
inline bool reaches_rank_one(const FinDimAlgebra& a, Vec f, std::mt19937_64& rng) {
  for (int round = 0; round < 64; ++round) {
    const Space c = corner(a, f);
    if (c.dim() <= 1) return c.dim() == 1;
    const auto basis = c.basis_vectors();
    std::vector<Vec> candidates = basis;
    for (int k = 0; k < 8; ++k) candidates.push_back(random_combination(basis, a.dim, rng));
    bool shrunk = false;
    for (const auto& x : candidates) {
      const Polynomial m = minimal_polynomial(a, x, f);
      if (m.degree() <= 1) continue;
      for (const auto& lambda : rational_roots(m)) {
        auto g = spectral_idempotent(a, m, lambda, x, f);
        if (!g || is_zero_vector<Scalar>(*g) || *g == f) continue;
        Vec h = f;
        for (std::size_t t = 0; t < a.dim; ++t) h[t] -= (*g)[t];
        f = corner(a, *g).dim() <= corner(a, h).dim() ? *g : h;
        shrunk = true;
        break;
      }
      if (shrunk) break;
    }
    if (!shrunk) return false;
  }
  return false;
}

}  // namespace detail

struct WedderburnReport {
  bool semisimple = false;
  bool split = false;  // every block certified as M_s(Q)
  std::size_t center_dim = 0;
  std::vector<std::size_t> blocks;  // s for each block of dimension s^2, ascending
  std::vector<Vec> central_idempotents;
  std::vector<std::string> obstructions;
};

inline unsigned long default_seed() {
  if (const char* env = std::getenv("SEGRE_TWIST_SEED")) {
    try {
      return std::stoul(env);
    } catch (const std::exception&) {
      throw input_error("SEGRE_TWIST_SEED must be a non-negative integer");
    }
  }
  return 1;
}

/// Central idempotents from a generic central element, then a split check per
/// block. A generic element generates the (commutative, semisimple) center,
/// so its minimal polynomial has degree dim Z; a few reseeds cover the
/// non-generic draws.
inline WedderburnReport wedderburn_type(const FinDimAlgebra& a, unsigned long seed = default_seed()) {
  WedderburnReport rep;
  rep.semisimple = radical(a).dim() == 0;
  if (!rep.semisimple) throw math_error("algebra is not semisimple");
  const auto zb = center(a).basis_vectors();
  rep.center_dim = zb.size();
  std::mt19937_64 rng(seed);

  Vec z;
  Polynomial m;
  for (int attempt = 0; attempt < 8; ++attempt) {
    z = detail::random_combination(zb, a.dim, rng);
    m = detail::minimal_polynomial(a, z, a.unit);
    if (static_cast<std::size_t>(m.degree()) == zb.size()) break;
  }
  if (static_cast<std::size_t>(m.degree()) != zb.size()) {
    rep.obstructions.push_back("no generic central element found");
    return rep;
  }

  const auto roots = rational_roots(m);
  Vec rest = a.unit;
  for (const auto& lambda : roots) {
    Vec e = a.unit;
    if (roots.size() > 1 || m.degree() > 1) {
      auto g = detail::spectral_idempotent(a, m, lambda, z, a.unit);
      if (!g) throw math_error("central idempotent computation failed");
      e = *g;
    }
    rep.central_idempotents.push_back(e);
    for (std::size_t t = 0; t < a.dim; ++t) rest[t] -= e[t];
  }
  if (static_cast<std::size_t>(roots.size()) < zb.size())
    rep.obstructions.push_back("center has a factor of degree " + std::to_string(zb.size() - roots.size()) +
                               " without rational roots");

  rep.split = rep.obstructions.empty();
  for (const auto& e : rep.central_idempotents) {
    const std::size_t d = detail::corner(a, e).dim();
    std::size_t s = 0;
    while ((s + 1) * (s + 1) <= d) ++s;
    if (s * s != d) {
      rep.obstructions.push_back("block of dimension " + std::to_string(d) + " is not a square");
      rep.split = false;
      continue;
    }
    rep.blocks.push_back(s);
    if (!detail::reaches_rank_one(a, e, rng)) {
      rep.obstructions.push_back("block of size " + std::to_string(s) + " not certified split over Q");
      rep.split = false;
    }
  }
  std::sort(rep.blocks.begin(), rep.blocks.end());
  return rep;
}

struct IsoReport {
  bool ok = false;
  std::string reason;
};

/// elements[k] (coordinates in alg) is sent to the block-diagonal matrix
/// images[k] (one square matrix per block). True iff the induced linear map
/// is well defined, bijective, unital and multiplicative.
inline IsoReport verify_explicit_iso(const FinDimAlgebra& alg, const std::vector<Vec>& elements,
                                     const std::vector<std::vector<Mat>>& images,
                                     const std::vector<std::string>& names = {}) {
  if (elements.size() != images.size() || elements.empty()) throw input_error("assignment is empty or ragged");
  const auto& shape = images.front();
  std::size_t target = 0;
  for (const auto& b : shape) {
    if (b.rows() != b.cols()) throw input_error("assignment blocks must be square");
    target += b.rows() * b.rows();
  }
  auto flatten = [&](const std::vector<Mat>& blocks) {
    if (blocks.size() != shape.size()) throw input_error("assignment images have different block counts");
    Vec v;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      if (blocks[k].rows() != shape[k].rows() || blocks[k].cols() != shape[k].cols())
        throw input_error("assignment images have different block sizes");
      for (std::size_t i = 0; i < blocks[k].rows(); ++i)
        for (std::size_t j = 0; j < blocks[k].cols(); ++j) v.push_back(blocks[k](i, j));
    }
    return v;
  };
  auto label = [&](std::size_t k) { return k < names.size() ? names[k] : "#" + std::to_string(k); };

  Mat src(alg.dim, elements.size()), dst(target, elements.size());
  for (std::size_t k = 0; k < elements.size(); ++k) {
    if (elements[k].size() != alg.dim) throw input_error("assignment element has the wrong length");
    src.set_column(k, elements[k]);
    dst.set_column(k, flatten(images[k]));
  }
  if (rank(src) != alg.dim) throw input_error("assignment is not defined on a spanning set");
  // phi src = dst; phi is unique because src has full row rank.
  auto phi_t = solve_many(transpose(src), transpose(dst));
  if (!phi_t) return {false, "assignment is not linear (images violate a relation among the elements)"};
  const Mat phi = transpose(*phi_t);
  if (target != alg.dim || !inverse(phi)) return {false, "induced map is not bijective"};

  auto image_of = [&](const Vec& x) {
    Vec flat = apply_map(phi, x);
    std::vector<Mat> blocks;
    std::size_t pos = 0;
    for (const auto& b : shape) {
      Mat m(b.rows(), b.rows());
      for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.rows(); ++j) m(i, j) = flat[pos++];
      blocks.push_back(std::move(m));
    }
    return blocks;
  };
  for (const auto& b : image_of(alg.unit))
    if (!(b == Mat::identity(b.rows()))) return {false, "unit is not sent to the identity"};
  for (std::size_t k = 0; k < elements.size(); ++k)
    for (std::size_t l = 0; l < elements.size(); ++l) {
      const auto lhs = image_of(alg.multiply(elements[k], elements[l]));
      for (std::size_t b = 0; b < shape.size(); ++b)
        if (!(lhs[b] == images[k][b] * images[l][b]))
          return {false, "not multiplicative on " + label(k) + "*" + label(l)};
    }
  return {true, ""};
}

}  // namespace twseg
