#pragma once

// Quadratic algebras T(V)/(R) computed degree by degree.
//
// Words of a fixed degree are indexed lexicographically in the generator
// order, so a degree-d word w_1...w_d over n letters has coordinate
// sum_k w_k n^(d-1-k). This indexing is part of the file-format contract.
//
// The quotient in degree d is built from degree d-1:
//   A_d = (A_{d-1} (x) V) / image(A_{d-2} (x) R),
// with candidates (normal word of degree d-1, letter) in lexicographic
// order. The normal words kept are the lexicographically earliest ones that
// stay independent modulo the relations; they are exactly the non-pivot
// columns of the image when it is reduced from the right.

#include "twseg/linalg.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace twseg {

using Word = std::vector<int>;

inline std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp--) r *= base;
  return r;
}

inline std::size_t word_index(const Word& w, std::size_t n) {
  std::size_t idx = 0;
  for (int letter : w) idx = idx * n + static_cast<std::size_t>(letter);
  return idx;
}

inline Word word_from_index(std::size_t idx, std::size_t degree, std::size_t n) {
  Word w(degree);
  for (std::size_t k = degree; k-- > 0;) {
    w[k] = static_cast<int>(idx % n);
    idx /= n;
  }
  return w;
}

class GeneratorSet {
 public:
  GeneratorSet() = default;
  explicit GeneratorSet(std::vector<std::string> names) : names_(std::move(names)) {
    std::set<std::string> seen;
    for (const auto& s : names_) {
      if (s.empty()) throw input_error("empty generator label");
      if (!seen.insert(s).second) throw input_error("duplicate generator label '" + s + "'");
    }
  }

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }

  std::size_t index_of(std::string_view label) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == label) return i;
    throw input_error("unknown generator '" + std::string(label) + "'");
  }

  /// Star toggled on every label: X -> X*, X* -> X.
  GeneratorSet dual() const {
    std::vector<std::string> out;
    for (const auto& s : names_) out.push_back(s.back() == '*' ? s.substr(0, s.size() - 1) : s + "*");
    return GeneratorSet(std::move(out));
  }

  std::string word_label(const Word& w) const {
    if (w.empty()) return "1";
    bool single = true;
    for (const auto& s : names_) single = single && s.size() == 1;
    std::string out;
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (!single && k) out += ".";
      out += name(static_cast<std::size_t>(w[k]));
    }
    return out;
  }

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  std::vector<std::string> names_;
};

/// Homogeneous element of the tensor algebra. Zero coefficients are never
/// stored.
class FreeElement {
 public:
  FreeElement() = default;
  explicit FreeElement(int degree) : degree_(degree) {}

  static FreeElement word(Word w, const Scalar& c = Scalar(1)) {
    FreeElement e(static_cast<int>(w.size()));
    e.add(w, c);
    return e;
  }

  static FreeElement from_dense(std::span<const Scalar> coords, int degree, std::size_t n) {
    if (coords.size() != ipow(n, static_cast<std::size_t>(degree))) throw input_error("dense element has wrong length");
    FreeElement e(degree);
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (!twseg::is_zero(coords[i])) e.terms_[word_from_index(i, static_cast<std::size_t>(degree), n)] = coords[i];
    return e;
  }

  int degree() const { return degree_; }
  const std::map<Word, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Word& w, const Scalar& c) {
    if (static_cast<int>(w.size()) != degree_) throw input_error("inhomogeneous term added to free element");
    if (twseg::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (twseg::is_zero(it->second)) terms_.erase(it);
    }
  }

  Vec dense(std::size_t n) const {
    Vec v(ipow(n, static_cast<std::size_t>(degree_)), Scalar(0));
    for (const auto& [w, c] : terms_) {
      for (int letter : w)
        if (letter < 0 || static_cast<std::size_t>(letter) >= n) throw input_error("word letter out of range");
      v[word_index(w, n)] = c;
    }
    return v;
  }

  friend FreeElement operator+(FreeElement a, const FreeElement& b) {
    if (a.degree_ != b.degree_ && !a.is_zero() && !b.is_zero()) throw input_error("adding elements of different degree");
    if (a.is_zero()) a.degree_ = b.degree_;
    for (const auto& [w, c] : b.terms_) a.add(w, c);
    return a;
  }
  friend FreeElement operator-(FreeElement a, const FreeElement& b) { return a + (Scalar(-1) * b); }
  friend FreeElement operator*(const Scalar& s, FreeElement a) {
    if (twseg::is_zero(s)) return FreeElement(a.degree_);
    for (auto& [w, c] : a.terms_) c *= s;
    return a;
  }
  /// Concatenation product in the tensor algebra.
  friend FreeElement operator*(const FreeElement& a, const FreeElement& b) {
    FreeElement out(a.degree_ + b.degree_);
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) {
        Word w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        out.add(w, ca * cb);
      }
    return out;
  }
  friend bool operator==(const FreeElement&, const FreeElement&) = default;

 private:
  int degree_ = 0;
  std::map<Word, Scalar> terms_;
};

/// T(V)/(R) with R a subspace of V (x) V in lexicographic word coordinates.
class QuadraticPresentation {
 public:
  QuadraticPresentation() = default;
  QuadraticPresentation(GeneratorSet gens, Space relations) : gens_(std::move(gens)), rel_(std::move(relations)) {
    if (rel_.ambient_dim() != gens_.dim() * gens_.dim())
      throw input_error("relation space must live in V (x) V");
  }

  static QuadraticPresentation from_relations(GeneratorSet gens, const std::vector<FreeElement>& relations) {
    const std::size_t n = gens.dim();
    std::vector<Vec> vecs;
    for (const auto& r : relations) {
      if (r.is_zero()) continue;
      if (r.degree() != 2) throw input_error("quadratic relations must have degree 2");
      vecs.push_back(r.dense(n));
    }
    Space rel = Space::span(n * n, vecs);
    return QuadraticPresentation(std::move(gens), std::move(rel));
  }

  static QuadraticPresentation free(GeneratorSet gens) {
    const std::size_t n = gens.dim();
    return QuadraticPresentation(std::move(gens), Space(n * n));
  }

  const GeneratorSet& gens() const { return gens_; }
  const Space& relations() const { return rel_; }
  std::size_t num_generators() const { return gens_.dim(); }

  std::vector<FreeElement> relation_elements() const {
    std::vector<FreeElement> out;
    for (std::size_t r = 0; r < rel_.dim(); ++r)
      out.push_back(FreeElement::from_dense(rel_.basis().row(r), 2, gens_.dim()));
    return out;
  }

  friend bool operator==(const QuadraticPresentation&, const QuadraticPresentation&) = default;

 private:
  GeneratorSet gens_;
  Space rel_;
};

/// Element of the quotient algebra in one degree, in normal-word coordinates.
struct GradedElement {
  int degree = 0;
  Vec coords;

  bool is_zero() const { return is_zero_vector<Scalar>(coords); }
  friend bool operator==(const GradedElement&, const GradedElement&) = default;
};

inline GradedElement operator+(GradedElement a, const GradedElement& b) {
  if (a.degree != b.degree) throw input_error("adding graded elements of different degree");
  for (std::size_t i = 0; i < a.coords.size(); ++i) a.coords[i] += b.coords[i];
  return a;
}
inline GradedElement operator-(GradedElement a, const GradedElement& b) {
  if (a.degree != b.degree) throw input_error("subtracting graded elements of different degree");
  for (std::size_t i = 0; i < a.coords.size(); ++i) a.coords[i] -= b.coords[i];
  return a;
}
inline GradedElement operator*(const Scalar& s, GradedElement a) {
  for (auto& c : a.coords) c *= s;
  return a;
}

/// Degreewise realization of T(V)/(R) up to a fixed truncation degree:
/// normal words, the letter-append maps A_d (x) V -> A_{d+1}, and everything
/// derived from them. Immutable after construction.
class GradedQuotient {
 public:
  using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

  GradedQuotient(QuadraticPresentation pres, int max_degree) : pres_(std::move(pres)), max_degree_(max_degree) {
    if (max_degree_ < 0) throw input_error("negative truncation degree");
    n_ = pres_.num_generators();
    levels_.resize(static_cast<std::size_t>(max_degree_) + 1);
    levels_[0].words = {Word{}};
    levels_[0].parent = {{0, -1}};
    for (int d = 1; d <= max_degree_; ++d) build_level(d);
  }

  const QuadraticPresentation& presentation() const { return pres_; }
  int max_degree() const { return max_degree_; }
  std::size_t num_generators() const { return n_; }

  std::size_t dim(int d) const { return level(d).words.size(); }
  const std::vector<Word>& normal_words(int d) const { return level(d).words; }
  /// (index of the degree d-1 prefix, last letter) of each normal word.
  const std::vector<std::pair<std::size_t, int>>& parents(int d) const { return level(d).parent; }

  GradedElement zero(int d) const { return {d, Vec(dim(d), Scalar(0))}; }
  GradedElement unit() const { return basis_element(0, 0); }
  GradedElement basis_element(int d, std::size_t i) const {
    GradedElement e = zero(d);
    e.coords.at(i) = 1;
    return e;
  }
  GradedElement generator(std::size_t i) const {
    if (max_degree_ < 1) throw std::out_of_range("truncation below degree 1");
    return basis_element(1, i);
  }

  /// Class of v*x_letter, for v in degree d.
  Vec append_letter(const Vec& v, int d, int letter) const {
    if (d + 1 > max_degree_) throw std::out_of_range("degree overflow beyond configured truncation");
    const auto& lev = level(d);
    Vec out(dim(d + 1), Scalar(0));
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (twseg::is_zero(v[i])) continue;
      for (const auto& [k, c] : lev.append[i * n_ + static_cast<std::size_t>(letter)]) out[k] += v[i] * c;
    }
    return out;
  }

  Vec normal_form_word(const Word& w) const {
    int d = static_cast<int>(w.size());
    if (d > max_degree_) throw std::out_of_range("degree not cached");
    Vec v{Scalar(1)};
    for (int k = 0; k < d; ++k) {
      if (w[k] < 0 || static_cast<std::size_t>(w[k]) >= n_) throw input_error("word letter out of range");
      v = append_letter(v, k, w[k]);
    }
    return v;
  }

  GradedElement normal_form(const FreeElement& x) const {
    if (x.degree() > max_degree_) throw std::out_of_range("degree not cached");
    GradedElement out = zero(x.degree());
    for (const auto& [w, c] : x.terms()) {
      Vec v = normal_form_word(w);
      for (std::size_t i = 0; i < v.size(); ++i)
        if (!twseg::is_zero(v[i])) out.coords[i] += c * v[i];
    }
    return out;
  }

  /// Representative in the tensor algebra as a combination of normal words.
  FreeElement lift(const GradedElement& x) const {
    FreeElement out(x.degree);
    for (std::size_t i = 0; i < x.coords.size(); ++i) out.add(normal_words(x.degree)[i], x.coords[i]);
    return out;
  }

  /// x times every normal word of degree q, as vectors of degree deg(x)+q.
  std::vector<Vec> times_all_words(const GradedElement& x, int q) const {
    std::vector<Vec> prev{x.coords};
    for (int k = 1; k <= q; ++k) {
      std::vector<Vec> cur;
      cur.reserve(dim(k));
      for (const auto& [p, a] : parents(k)) cur.push_back(append_letter(prev[p], x.degree + k - 1, a));
      prev = std::move(cur);
    }
    return prev;
  }

  GradedElement multiply(const GradedElement& x, const GradedElement& y) const {
    if (x.degree + y.degree > max_degree_) throw std::out_of_range("degree overflow beyond configured truncation");
    GradedElement out = zero(x.degree + y.degree);
    auto xw = times_all_words(x, y.degree);
    for (std::size_t j = 0; j < y.coords.size(); ++j) {
      if (twseg::is_zero(y.coords[j])) continue;
      for (std::size_t k = 0; k < out.coords.size(); ++k)
        if (!twseg::is_zero(xw[j][k])) out.coords[k] += y.coords[j] * xw[j][k];
    }
    return out;
  }

  /// Matrix of x -> x*y on degree d.
  Mat right_multiplication(const GradedElement& y, int d) const {
    Mat m(dim(d + y.degree), dim(d));
    for (std::size_t i = 0; i < dim(d); ++i) m.set_column(i, multiply(basis_element(d, i), y).coords);
    return m;
  }

  /// Matrix of y -> x*y on degree d.
  Mat left_multiplication(const GradedElement& x, int d) const {
    Mat m(dim(d + x.degree), dim(d));
    auto xw = times_all_words(x, d);
    for (std::size_t j = 0; j < dim(d); ++j) m.set_column(j, xw[j]);
    return m;
  }

  /// Projection V^(x)d -> A_d; column k is the class of the k-th word.
  Mat word_images(int d) const {
    const std::size_t words = ipow(n_, static_cast<std::size_t>(d));
    Mat m(dim(d), words);
    for (std::size_t k = 0; k < words; ++k)
      m.set_column(k, normal_form_word(word_from_index(k, static_cast<std::size_t>(d), n_)));
    return m;
  }

 private:
  struct Level {
    std::vector<Word> words;
    std::vector<std::pair<std::size_t, int>> parent;
    std::vector<SparseVec> append;  // candidate (i, letter) -> next degree
  };

  const Level& level(int d) const {
    if (d < 0 || d > max_degree_) throw std::out_of_range("degree not cached");
    return levels_[static_cast<std::size_t>(d)];
  }

  void build_level(int d) {
    Level& prev = levels_[static_cast<std::size_t>(d) - 1];
    const std::size_t cand = prev.words.size() * n_;

    // Reversed column order so pivots land on the lexicographically latest
    // candidates.
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> rows;
    if (d >= 2) {
      const Level& pp = levels_[static_cast<std::size_t>(d) - 2];
      const Space& rel = pres_.relations();
      for (std::size_t s = 0; s < pp.words.size(); ++s)
        for (std::size_t r = 0; r < rel.dim(); ++r) {
          std::map<std::size_t, Scalar> row;
          auto rv = rel.basis().row(r);
          for (std::size_t ab = 0; ab < rv.size(); ++ab) {
            if (twseg::is_zero(rv[ab])) continue;
            const std::size_t a = ab / n_, b = ab % n_;
            for (const auto& [k, c] : pp.append[s * n_ + a]) row[k * n_ + b] += rv[ab] * c;
          }
          std::vector<std::pair<std::size_t, Scalar>> sparse;
          for (auto& [k, c] : row)
            if (!twseg::is_zero(c)) sparse.emplace_back(k, c);
          if (!sparse.empty()) rows.push_back(std::move(sparse));
        }
    }
    Mat m(rows.size(), cand);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (const auto& [k, c] : rows[r]) m(r, cand - 1 - k) = c;
    auto red = rref(std::move(m));

    std::vector<long> normal_index(cand, -1);
    std::vector<long> pivot_row(cand, -1);
    for (std::size_t r = 0; r < red.rank; ++r) pivot_row[cand - 1 - red.pivots[r]] = static_cast<long>(r);
    Level lev;
    for (std::size_t k = 0; k < cand; ++k) {
      if (pivot_row[k] >= 0) continue;
      normal_index[k] = static_cast<long>(lev.words.size());
      Word w = prev.words[k / n_];
      w.push_back(static_cast<int>(k % n_));
      lev.words.push_back(std::move(w));
      lev.parent.emplace_back(k / n_, static_cast<int>(k % n_));
    }
    prev.append.assign(cand, {});
    for (std::size_t k = 0; k < cand; ++k) {
      if (normal_index[k] >= 0) {
        prev.append[k].emplace_back(static_cast<std::size_t>(normal_index[k]), Scalar(1));
        continue;
      }
      auto row = red.reduced.row(static_cast<std::size_t>(pivot_row[k]));
      for (std::size_t j = 0; j < cand; ++j) {
        const std::size_t orig = cand - 1 - j;
        if (orig == k || twseg::is_zero(row[j])) continue;
        prev.append[k].emplace_back(static_cast<std::size_t>(normal_index[orig]), -row[j]);
      }
      std::sort(prev.append[k].begin(), prev.append[k].end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
    }
    levels_[static_cast<std::size_t>(d)] = std::move(lev);
  }

  QuadraticPresentation pres_;
  int max_degree_ = 0;
  std::size_t n_ = 0;
  std::vector<Level> levels_;
};

/// Degree-d component of the ideal (R), as a subspace of V^(x)d.
inline Space relation_space(const QuadraticPresentation& pres, int d) {
  if (d < 2) throw input_error("relation_space needs degree >= 2");
  GradedQuotient q(pres, d);
  return kernel(q.word_images(d));
}

inline std::size_t hilbert(const QuadraticPresentation& pres, int d) {
  if (d < 0) throw input_error("negative degree");
  return GradedQuotient(pres, d).dim(d);
}

inline std::vector<std::size_t> hilbert_series(const GradedQuotient& q) {
  std::vector<std::size_t> h;
  for (int d = 0; d <= q.max_degree(); ++d) h.push_back(q.dim(d));
  return h;
}

inline std::vector<std::size_t> hilbert_series(const QuadraticPresentation& pres, int max_degree) {
  return hilbert_series(GradedQuotient(pres, max_degree));
}

/// A^! = T(V*)/(R^perp) under <x*(x)y*, u(x)v> = delta_xu delta_yv.
inline QuadraticPresentation quadratic_dual(const QuadraticPresentation& pres) {
  return QuadraticPresentation(pres.gens().dual(), annihilator(pres.relations()));
}

/// Numerical Koszul test: sum_{i+j=n} (-1)^j h_A(i) h_{A!}(j) = [n = 0] for n <= N.
inline bool koszul_series_check(const QuadraticPresentation& pres, int max_degree) {
  if (max_degree < 0) throw input_error("negative degree");
  auto ha = hilbert_series(pres, max_degree);
  auto hd = hilbert_series(quadratic_dual(pres), max_degree);
  for (int n = 0; n <= max_degree; ++n) {
    long long s = 0;
    for (int j = 0; j <= n; ++j) {
      long long term = static_cast<long long>(ha[n - j]) * static_cast<long long>(hd[j]);
      s += (j % 2 == 0) ? term : -term;
    }
    if (s != (n == 0 ? 1 : 0)) return false;
  }
  return true;
}

struct AddRelationResult {
  QuadraticPresentation presentation;
  bool degenerate = false;  // w already lay in the relation space
};

inline AddRelationResult add_relation(const QuadraticPresentation& pres, const FreeElement& w) {
  if (w.degree() != 2 && !w.is_zero()) throw input_error("added relation must have degree 2");
  const std::size_t n = pres.num_generators();
  Vec v = w.is_zero() ? Vec(n * n, Scalar(0)) : w.dense(n);
  if (pres.relations().contains(v)) return {pres, true};
  Space extra = Space::span(n * n, {v});
  return {QuadraticPresentation(pres.gens(), sum(pres.relations(), extra)), false};
}

/// Relation spaces agree after substituting generator i of p1 by the
/// combination in column i of `substitution` (coordinates over p2's
/// generators).
inline bool presentations_equal(const QuadraticPresentation& p1, const QuadraticPresentation& p2, const Mat& substitution) {
  const std::size_t n = p1.num_generators();
  if (p2.num_generators() != n) throw input_error("presentations have different generator counts");
  if (substitution.rows() != n || substitution.cols() != n || !inverse(substitution))
    throw input_error("identification is not a bijection");
  return image(kron(substitution, substitution), p1.relations()) == p2.relations();
}

/// Generator i of p1 is identified with generator identification[i] of p2.
inline bool presentations_equal(const QuadraticPresentation& p1, const QuadraticPresentation& p2,
                                const std::vector<std::size_t>& identification) {
  const std::size_t n = p1.num_generators();
  if (p2.num_generators() != n) throw input_error("presentations have different generator counts");
  if (identification.size() != n) throw input_error("identification is not a bijection");
  std::vector<bool> hit(n, false);
  Mat s(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (identification[i] >= n || hit[identification[i]]) throw input_error("identification is not a bijection");
    hit[identification[i]] = true;
    s(identification[i], i) = 1;
  }
  return presentations_equal(p1, p2, s);
}

inline std::vector<std::size_t> identity_identification(std::size_t n) {
  std::vector<std::size_t> id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = i;
  return id;
}

}  // namespace twseg
