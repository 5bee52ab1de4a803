#pragma once

// Dense exact linear algebra: matrices, reduced row-echelon forms, kernels and
// the lattice of subspaces of a fixed coordinate space.
//
// Vectors are plain std::vector<F>; matrices act on column vectors. A
// Subspace is always stored by its reduced row-echelon basis, so two
// subspaces are equal exactly when their bases compare equal row by row.

#include "twseg/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace twseg {

template <class F>
using Vector = std::vector<F>;

template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<F> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) throw input_error("matrix entry count does not match shape");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<F>>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != m.cols_) throw input_error("ragged matrix rows");
      std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<F> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const F> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  Vector<F> row_vector(std::size_t r) const { return {row(r).begin(), row(r).end()}; }
  Vector<F> column(std::size_t c) const {
    Vector<F> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }
  void set_column(std::size_t c, std::span<const F> v) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }

  const std::vector<F>& entries() const { return data_; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const F& x) { return twseg::is_zero(x); });
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

template <class F>
Matrix<F> operator*(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.cols() != b.rows()) throw input_error("matrix product shape mismatch");
  Matrix<F> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const F& aik = a(i, k);
      if (is_zero(aik)) continue;
      auto brow = b.row(k);
      auto orow = out.row(i);
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!is_zero(brow[j])) orow[j] += aik * brow[j];
    }
  return out;
}

template <class F>
Matrix<F> operator+(Matrix<F> a, const Matrix<F>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw input_error("matrix sum shape mismatch");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) += b(i, j);
  return a;
}

template <class F>
Matrix<F> operator-(Matrix<F> a, const Matrix<F>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw input_error("matrix difference shape mismatch");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= b(i, j);
  return a;
}

template <class F>
Matrix<F> scaled(Matrix<F> a, const F& s) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) *= s;
  return a;
}

template <class F>
Matrix<F> transpose(const Matrix<F>& a) {
  Matrix<F> t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

/// Kronecker product; index (i1*rows(b)+i2, j1*cols(b)+j2).
template <class F>
Matrix<F> kron(const Matrix<F>& a, const Matrix<F>& b) {
  Matrix<F> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const F& x = a(i1, j1);
      if (is_zero(x)) continue;
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
          if (!is_zero(b(i2, j2))) out(i1 * b.rows() + i2, j1 * b.cols() + j2) = x * b(i2, j2);
    }
  return out;
}

template <class F>
Vector<F> apply_map(const Matrix<F>& a, std::span<const F> v) {
  if (a.cols() != v.size()) throw input_error("matrix-vector shape mismatch");
  Vector<F> out(a.rows(), F(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto r = a.row(i);
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!is_zero(v[j]) && !is_zero(r[j])) out[i] += r[j] * v[j];
  }
  return out;
}

template <class F>
Vector<F> apply_map(const Matrix<F>& a, const Vector<F>& v) {
  return apply_map(a, std::span<const F>(v));
}

template <class F>
bool is_zero_vector(std::span<const F> v) {
  return std::all_of(v.begin(), v.end(), [](const F& x) { return is_zero(x); });
}

template <class F>
struct RrefResult {
  Matrix<F> reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank = 0;
};

/// Gauss-Jordan elimination to reduced row-echelon form. Zero rows are kept
/// at the bottom so the shape is unchanged.
template <class F>
RrefResult<F> rref(Matrix<F> m) {
  RrefResult<F> res;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t rank = 0;
  F factor;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && is_zero(m(p, c))) ++p;
    if (p == rows) continue;
    if (p != rank)
      for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(rank, j));
    {
      F inv = F(1) / m(rank, c);
      auto prow = m.row(rank);
      for (std::size_t j = c; j < cols; ++j)
        if (!is_zero(prow[j])) prow[j] *= inv;
    }
    auto prow = m.row(rank);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || is_zero(m(r, c))) continue;
      factor = m(r, c);
      auto row = m.row(r);
      for (std::size_t j = c; j < cols; ++j)
        if (!is_zero(prow[j])) row[j] -= factor * prow[j];
    }
    res.pivots.push_back(c);
    ++rank;
  }
  res.rank = rank;
  res.reduced = std::move(m);
  return res;
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  return rref(m).rank;
}

template <class F>
class Subspace;

/// Null space {v : m v = 0}.
template <class F>
Subspace<F> kernel(const Matrix<F>& m);

template <class F>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  /// Row space of `generators` (rows are vectors of the ambient space).
  static Subspace row_space(const Matrix<F>& generators) {
    Subspace s(generators.cols());
    auto res = rref(generators);
    Matrix<F> basis(res.rank, generators.cols());
    for (std::size_t r = 0; r < res.rank; ++r)
      std::copy(res.reduced.row(r).begin(), res.reduced.row(r).end(), basis.row(r).begin());
    s.basis_ = std::move(basis);
    s.pivots_ = std::move(res.pivots);
    return s;
  }

  static Subspace span(std::size_t ambient_dim, const std::vector<Vector<F>>& vectors) {
    Matrix<F> m(vectors.size(), ambient_dim);
    for (std::size_t r = 0; r < vectors.size(); ++r) {
      if (vectors[r].size() != ambient_dim) throw input_error("vector length does not match ambient dimension");
      std::copy(vectors[r].begin(), vectors[r].end(), m.row(r).begin());
    }
    return row_space(m);
  }

  static Subspace full(std::size_t ambient_dim) { return row_space(Matrix<F>::identity(ambient_dim)); }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix<F>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vector<F> basis_vector(std::size_t i) const { return basis_.row_vector(i); }
  std::vector<Vector<F>> basis_vectors() const {
    std::vector<Vector<F>> out;
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_vector(i));
    return out;
  }

  /// Remainder of v after elimination against the echelon basis; zero iff v
  /// lies in the subspace.
  Vector<F> reduce(Vector<F> v) const {
    check_length(v.size());
    for (std::size_t r = 0; r < basis_.rows(); ++r) {
      const F c = v[pivots_[r]];
      if (is_zero(c)) continue;
      auto b = basis_.row(r);
      for (std::size_t j = pivots_[r]; j < ambient_; ++j)
        if (!is_zero(b[j])) v[j] -= c * b[j];
    }
    return v;
  }

  bool contains(const Vector<F>& v) const { return is_zero_vector<F>(reduce(v)); }

  /// Coordinates of v in the echelon basis; nullopt if v is not in the span.
  std::optional<Vector<F>> coordinates(const Vector<F>& v) const {
    check_length(v.size());
    Vector<F> coords(dim(), F(0));
    for (std::size_t r = 0; r < dim(); ++r) coords[r] = v[pivots_[r]];
    Vector<F> rebuilt(ambient_, F(0));
    for (std::size_t r = 0; r < dim(); ++r) {
      if (is_zero(coords[r])) continue;
      auto b = basis_.row(r);
      for (std::size_t j = 0; j < ambient_; ++j)
        if (!is_zero(b[j])) rebuilt[j] += coords[r] * b[j];
    }
    if (rebuilt != v) return std::nullopt;
    return coords;
  }

  bool is_subspace_of(const Subspace& other) const {
    same_ambient(other);
    for (std::size_t r = 0; r < dim(); ++r)
      if (!other.contains(basis_vector(r))) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

  void same_ambient(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw input_error("subspaces live in different ambient spaces");
  }

 private:
  void check_length(std::size_t n) const {
    if (n != ambient_) throw input_error("vector length does not match ambient dimension");
  }

  std::size_t ambient_ = 0;
  Matrix<F> basis_;
  std::vector<std::size_t> pivots_;
};

template <class F>
Subspace<F> kernel(const Matrix<F>& m) {
  auto res = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : res.pivots) is_pivot[p] = true;
  std::vector<Vector<F>> vecs;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector<F> v(cols, F(0));
    v[f] = F(1);
    for (std::size_t r = 0; r < res.rank; ++r) v[res.pivots[r]] = -res.reduced(r, f);
    vecs.push_back(std::move(v));
  }
  return Subspace<F>::span(cols, vecs);
}

template <class F>
Subspace<F> sum(const Subspace<F>& a, const Subspace<F>& b) {
  a.same_ambient(b);
  Matrix<F> m(a.dim() + b.dim(), a.ambient_dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    std::copy(a.basis().row(r).begin(), a.basis().row(r).end(), m.row(r).begin());
  for (std::size_t r = 0; r < b.dim(); ++r)
    std::copy(b.basis().row(r).begin(), b.basis().row(r).end(), m.row(a.dim() + r).begin());
  return Subspace<F>::row_space(m);
}

/// Intersection via the kernel of the stacked system x*A - y*B = 0.
template <class F>
Subspace<F> intersect(const Subspace<F>& a, const Subspace<F>& b) {
  a.same_ambient(b);
  const std::size_t n = a.ambient_dim(), ka = a.dim(), kb = b.dim();
  Matrix<F> stacked(n, ka + kb);
  for (std::size_t r = 0; r < ka; ++r)
    for (std::size_t j = 0; j < n; ++j) stacked(j, r) = a.basis()(r, j);
  for (std::size_t r = 0; r < kb; ++r)
    for (std::size_t j = 0; j < n; ++j) stacked(j, ka + r) = -b.basis()(r, j);
  auto ker = kernel(stacked);
  std::vector<Vector<F>> vecs;
  for (std::size_t k = 0; k < ker.dim(); ++k) {
    Vector<F> v(n, F(0));
    for (std::size_t r = 0; r < ka; ++r) {
      const F& c = ker.basis()(k, r);
      if (is_zero(c)) continue;
      for (std::size_t j = 0; j < n; ++j) v[j] += c * a.basis()(r, j);
    }
    vecs.push_back(std::move(v));
  }
  return Subspace<F>::span(n, vecs);
}

template <class F>
bool contains(const Subspace<F>& a, const Vector<F>& v) {
  return a.contains(v);
}

template <class F>
bool equal(const Subspace<F>& a, const Subspace<F>& b) {
  a.same_ambient(b);
  return a == b;
}

/// Orthogonal complement under the coordinate pairing <x, y> = sum x_i y_i.
template <class F>
Subspace<F> annihilator(const Subspace<F>& r) {
  if (r.dim() == 0) return Subspace<F>::full(r.ambient_dim());
  return kernel(r.basis());
}

/// Image of a subspace under a linear map.
template <class F>
Subspace<F> image(const Matrix<F>& map, const Subspace<F>& s) {
  if (map.cols() != s.ambient_dim()) throw input_error("map does not act on this subspace");
  std::vector<Vector<F>> vecs;
  for (std::size_t r = 0; r < s.dim(); ++r) vecs.push_back(apply_map<F>(map, s.basis().row(r)));
  return Subspace<F>::span(map.rows(), vecs);
}

/// Some solution x of a x = b, or nullopt when the system is inconsistent.
template <class F>
std::optional<Vector<F>> solve(const Matrix<F>& a, const Vector<F>& b) {
  if (a.rows() != b.size()) throw input_error("solve: right-hand side length mismatch");
  Matrix<F> aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto res = rref(aug);
  if (!res.pivots.empty() && res.pivots.back() == a.cols()) return std::nullopt;
  Vector<F> x(a.cols(), F(0));
  for (std::size_t r = 0; r < res.rank; ++r) x[res.pivots[r]] = res.reduced(r, a.cols());
  return x;
}

/// Column-by-column solve of A X = B.
template <class F>
std::optional<Matrix<F>> solve_many(const Matrix<F>& a, const Matrix<F>& b) {
  Matrix<F> x(a.cols(), b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    auto col = solve(a, b.column(c));
    if (!col) return std::nullopt;
    x.set_column(c, *col);
  }
  return x;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  const std::size_t n = a.rows();
  Matrix<F> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = F(1);
  }
  auto res = rref(aug);
  if (res.rank < n || res.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<F> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = res.reduced(i, n + j);
  return inv;
}

template <class F>
F determinant(Matrix<F> m) {
  if (m.rows() != m.cols()) throw input_error("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  F det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(m(p, c))) ++p;
    if (p == n) return F(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (is_zero(m(r, c))) continue;
      F f = m(r, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

using Mat = Matrix<Scalar>;
using Vec = Vector<Scalar>;
using Space = Subspace<Scalar>;

}  // namespace twseg
