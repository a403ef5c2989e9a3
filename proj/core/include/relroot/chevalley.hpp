#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "relroot/error.hpp"
#include "relroot/poly.hpp"
#include "relroot/root_system.hpp"

namespace relroot {

struct SparseEntry {
  std::uint32_t row;
  std::int64_t coeff;
};
/// Column-major sparse integer matrix: cols[j] lists the nonzero rows of column j.
using SparseColumns = std::vector<std::vector<SparseEntry>>;

/// Chevalley basis of the simple Lie algebra of a root system. Basis order:
/// positive roots (root index order), then h_1..h_l, then negative roots.
/// Signs follow the extraspecial-pair convention with N = +(p+1) on every
/// extraspecial pair. The constructor verifies antisymmetry, |N| = p+1 and
/// the Jacobi identity on all basis triples, throwing InternalError otherwise.
class ChevalleyBasis {
 public:
  explicit ChevalleyBasis(std::shared_ptr<const RootSystem> rs);

  const RootSystem& roots() const { return *rs_; }
  const std::shared_ptr<const RootSystem>& roots_ptr() const { return rs_; }
  std::size_t dim() const { return rs_->size() + rs_->rank(); }

  std::size_t basis_of_root(std::size_t root) const {
    return rs_->is_positive(root) ? root : root + rs_->rank();
  }
  std::size_t basis_of_h(int node) const { return rs_->num_positive() + node; }

  /// N_{a,b} for root indices, 0 when a+b is not a root.
  int structure_constant(std::size_t a, std::size_t b) const { return n_[a * rs_->size() + b]; }
  /// The extraspecial pair (alpha_i, xi - alpha_i) of a positive non-simple root xi.
  std::pair<std::size_t, std::size_t> extraspecial_pair(std::size_t xi) const;

  /// [x, y] for basis indices as sparse integer vector.
  const std::vector<SparseEntry>& bracket(std::size_t x, std::size_t y) const { return table_[x * dim() + y]; }

  /// (ad e_root)^k / k! for k = 1..3; empty matrix columns when zero.
  const SparseColumns& divided_power(std::size_t root, int k) const { return powers_.at(root).at(k - 1); }

  /// v <- x_root(t) v.
  template <class T>
  void apply(std::size_t root, const T& t, std::vector<T>& v) const;

 private:
  int compute_n(std::size_t a, std::size_t b, std::vector<char>& state);
  void build_brackets();
  void build_powers();
  void verify() const;

  std::shared_ptr<const RootSystem> rs_;
  std::vector<int> n_;
  std::vector<std::size_t> extraspecial_;
  std::vector<std::vector<SparseEntry>> table_;
  std::vector<std::vector<SparseColumns>> powers_;
};

/// Shared, lazily built basis per type (thread-safe).
std::shared_ptr<const ChevalleyBasis> chevalley_basis(const RootType& t);
std::shared_ptr<const RootSystem> root_system(const RootType& t);

// ---------------------------------------------------------------------------
// Scalar helpers so that words and matrices are generic over the coefficient type.

inline bool is_zero_value(const Poly& p) { return p.is_zero(); }
inline bool is_zero_value(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero_value(std::int64_t x) { return x == 0; }

inline Poly scale_value(const Poly& p, std::int64_t c) { return p * Rational(long(c)); }
inline Rational scale_value(const Rational& q, std::int64_t c) { return q * Rational(long(c)); }
inline std::int64_t scale_value(std::int64_t x, std::int64_t c) { return x * c; }

inline Poly divide_value(const Poly& p, std::int64_t c) { return p * ratio(1, long(c)); }
inline Rational divide_value(const Rational& q, std::int64_t c) { return q / Rational(long(c)); }
inline std::int64_t divide_value(std::int64_t x, std::int64_t c) {
  if (x % c) throw PreconditionError("inexact integer division during collection");
  return x / c;
}

template <class T>
void ChevalleyBasis::apply(std::size_t root, const T& t, std::vector<T>& v) const {
  if (is_zero_value(t)) return;
  const auto& pw = powers_.at(root);
  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < v.size(); ++j)
    if (!is_zero_value(v[j])) support.push_back(j);
  T tk = t;
  std::map<std::uint32_t, T> acc;
  for (int k = 0; k < 3; ++k) {
    if (k > 0) tk = tk * t;
    bool any = false;
    for (std::size_t j : support)
      for (const auto& e : pw[k][j]) {
        T term = scale_value(tk * v[j], e.coeff);
        auto it = acc.find(e.row);
        if (it == acc.end()) acc.emplace(e.row, std::move(term));
        else it->second = it->second + term;
        any = true;
      }
    if (!any && k > 0) break;
  }
  for (auto& [row, value] : acc) v[row] = v[row] + value;
}

// ---------------------------------------------------------------------------
// Words in root elements

template <class T>
struct Letter {
  std::size_t root;
  T t;
};

template <class T>
using Word = std::vector<Letter<T>>;

template <class T>
Word<T> inverse_word(const Word<T>& w) {
  Word<T> out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->root, scale_value(it->t, -1)});
  return out;
}

template <class T>
Word<T> concat(Word<T> a, const Word<T>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

/// [x, y] = x y x^-1 y^-1.
template <class T>
Word<T> commutator_word(const Word<T>& x, const Word<T>& y) {
  return concat(concat(concat(x, y), inverse_word(x)), inverse_word(y));
}

/// v <- (product of the word) v.
template <class T>
void apply_word(const ChevalleyBasis& cb, const Word<T>& w, std::vector<T>& v) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) cb.apply(it->root, it->t, v);
}

/// Dense square matrix, row-major.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t n, const T& fill) : n_(n), a_(n * n, fill) {}
  static Matrix identity(std::size_t n, const T& zero, const T& one) {
    Matrix m(n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }
  std::size_t size() const { return n_; }
  T& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }
  std::vector<T> column(std::size_t c) const {
    std::vector<T> v(n_);
    for (std::size_t r = 0; r < n_; ++r) v[r] = (*this)(r, c);
    return v;
  }
  void set_column(std::size_t c, const std::vector<T>& v) {
    for (std::size_t r = 0; r < n_; ++r) (*this)(r, c) = v[r];
  }
  bool operator==(const Matrix& o) const { return n_ == o.n_ && a_ == o.a_; }
  Matrix operator*(const Matrix& o) const {
    Matrix m(n_, T(0) * (*this)(0, 0));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < n_; ++k) {
        const T& x = (*this)(i, k);
        if (is_zero_value(x)) continue;
        for (std::size_t j = 0; j < n_; ++j)
          if (!is_zero_value(o(k, j))) m(i, j) = m(i, j) + x * o(k, j);
      }
    return m;
  }

 private:
  std::size_t n_ = 0;
  std::vector<T> a_;
};

using UnipotentMatrix = Matrix<Poly>;

template <class T>
Matrix<T> word_matrix(const ChevalleyBasis& cb, const Word<T>& w, const T& zero, const T& one) {
  std::size_t n = cb.dim();
  Matrix<T> m(n, zero);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<T> v(n, zero);
    v[j] = one;
    apply_word(cb, w, v);
    m.set_column(j, v);
  }
  return m;
}

/// True when the product of the word acts as the identity on every basis vector.
template <class T>
bool word_is_identity(const ChevalleyBasis& cb, const Word<T>& w, const T& zero, const T& one) {
  for (std::size_t j = 0; j < cb.dim(); ++j) {
    std::vector<T> v(cb.dim(), zero);
    v[j] = one;
    apply_word(cb, w, v);
    for (std::size_t r = 0; r < cb.dim(); ++r)
      if (!(v[r] == (r == j ? one : zero))) return false;
  }
  return true;
}

/// exp(t ad e_root) as an exact matrix.
UnipotentMatrix adjoint_root_element(const ChevalleyBasis& cb, std::size_t root, const Poly& t);

/// Images of h_1..h_l under the product of a word.
template <class T>
std::vector<std::vector<T>> h_columns(const ChevalleyBasis& cb, const Word<T>& w, const T& zero, const T& one) {
  std::vector<std::vector<T>> cols;
  for (int i = 0; i < cb.roots().rank(); ++i) {
    std::vector<T> v(cb.dim(), zero);
    v[cb.basis_of_h(i)] = one;
    apply_word(cb, w, v);
    cols.push_back(std::move(v));
  }
  return cols;
}

/// Coefficients t_g with prod_{g in order} x_g(t_g) acting on h_1..h_l like
/// the given images. `order` must be compatible with a linear functional that
/// is positive on every root involved. Throws PreconditionError when the
/// images are not those of such a product.
template <class T>
std::vector<T> collect_h_columns(const ChevalleyBasis& cb, std::vector<std::vector<T>> cols,
                                 const std::vector<std::size_t>& order, const T& zero, const T& one) {
  const RootSystem& rs = cb.roots();
  std::vector<T> coeffs;
  for (std::size_t g : order) {
    std::size_t row = cb.basis_of_root(g);
    std::optional<std::int64_t> pivot;
    int node = -1;
    for (int i = 0; i < rs.rank(); ++i) {
      for (const auto& e : cb.divided_power(g, 1)[cb.basis_of_h(i)])
        if (e.row == row) {
          pivot = e.coeff;
          node = i;
        }
      if (pivot) break;
    }
    if (!pivot) throw InternalError("root element acts trivially on the Cartan subalgebra");
    T t = divide_value(cols[node][row], *pivot);
    coeffs.push_back(t);
    if (is_zero_value(t)) continue;
    T minus = scale_value(t, -1);
    for (auto& c : cols) cb.apply(g, minus, c);
  }
  for (int i = 0; i < rs.rank(); ++i)
    for (std::size_t r = 0; r < cb.dim(); ++r) {
      bool diag = r == cb.basis_of_h(i);
      if (diag ? !(cols[i][r] == one) : !is_zero_value(cols[i][r]))
        throw PreconditionError("word does not collect in the given order");
    }
  (void)zero;
  return coeffs;
}

/// Default collection order: increasing height, ties lexicographic (for an
/// all-negative word: increasing |height|).
std::vector<std::size_t> default_order(const RootSystem& rs, bool positive);

/// Collects a word whose roots are all positive or all negative. Returns the
/// nonzero factors in `order` (default_order when empty).
Word<Poly> collect_to_normal_form(const ChevalleyBasis& cb, const Word<Poly>& word,
                                  std::vector<std::size_t> order = {});

/// One constant C_ij of the commutator formula.
struct CommutatorTerm {
  int i;
  int j;
  std::size_t root;
  std::int64_t c;
};

/// Constants C_ij with [x_a(s), x_b(t)] = prod x_{ia+jb}(C_ij s^i t^j), the
/// product taken in increasing i+j, then increasing i. Throws
/// PreconditionError when a and b are collinear.
std::vector<CommutatorTerm> commutator_constants(const ChevalleyBasis& cb, std::size_t a, std::size_t b);

}  // namespace relroot
