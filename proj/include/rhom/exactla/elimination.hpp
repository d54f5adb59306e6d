#pragma once

// Exact Gaussian elimination and subspace bookkeeping.
//
// Every routine pivots deterministically (first nonzero column, topmost
// candidate row), so bases produced here are reproducible bit-for-bit.

#include "rhom/errors.hpp"
#include "rhom/exactla/matrix.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace rhom {

template <class T>
struct Rref {
  Index rank = 0;
  std::vector<Index> pivots;
  Matrix<T> reduced;
};

/// Reduced row echelon form over a field (Rational or Fraction).
template <class T>
Rref<T> rref(Matrix<T> m) {
  Rref<T> out;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index piv = -1;
    for (Index i = row; i < m.rows(); ++i) {
      if (!is_zero(m(i, col))) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != row) m.row(piv).swap(m.row(row));
    if (m(row, col) != T(1)) {
      T inv = T(1) / m(row, col);
      for (Index j = col; j < m.cols(); ++j)
        if (!is_zero(m(row, j))) m(row, j) *= inv;
    }
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      T f = m(i, col);
      for (Index j = col; j < m.cols(); ++j)
        if (!is_zero(m(row, j))) m(i, j) -= f * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = row;
  out.reduced = std::move(m);
  return out;
}

/// Laurent matrices are eliminated over the fraction field Q(nu).
inline Rref<Fraction> rref(const MatrixL& m) { return rref(cast_matrix<Fraction>(m)); }

template <class T>
Index rank(const Matrix<T>& m) {
  return rref(m).rank;
}

/// Fraction-free (Bareiss) rank over Q[nu, nu^-1]; every division is exact.
Index rank_fraction_free(const MatrixL& m);

/// Linearly independent vectors of a fixed ambient space, stored as the rows
/// of a reduced echelon matrix.
template <class T>
class SubspaceBasis {
 public:
  SubspaceBasis() = default;
  explicit SubspaceBasis(Index ambient) : ambient_(ambient), rows_(0, ambient) {}

  /// Span of the rows of `vectors` (need not be independent).
  static SubspaceBasis span(Index ambient, const Matrix<T>& vectors) {
    SubspaceBasis out(ambient);
    if (vectors.rows() == 0) return out;
    auto r = rref(Matrix<T>(vectors));
    out.rows_ = r.reduced.topRows(r.rank);
    out.pivots_ = std::move(r.pivots);
    return out;
  }

  static SubspaceBasis full(Index ambient) { return span(ambient, identity<T>(ambient)); }

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return rows_.rows(); }
  bool empty() const { return rows_.rows() == 0; }
  const Matrix<T>& vectors() const { return rows_; }
  Vector<T> vector(Index i) const { return rows_.row(i).transpose(); }
  const std::vector<Index>& pivots() const { return pivots_; }

  /// Subtracts the multiples of the basis rows that clear every pivot
  /// position. The result is zero iff v lies in the span. Works for any
  /// vector scalar U with U -= T * U defined (e.g. Laurent vectors reduced
  /// modulo a rational subspace).
  template <class U>
  void reduce_in_place(Vector<U>& v) const {
    for (Index r = 0; r < dim(); ++r) {
      Index p = pivots_[r];
      if (is_zero(v(p))) continue;
      U f = v(p);
      for (Index j = p; j < ambient_; ++j)
        if (!is_zero(rows_(r, j))) v(j) -= U(rows_(r, j)) * f;
    }
  }

  Vector<T> reduce(Vector<T> v) const {
    reduce_in_place(v);
    return v;
  }

  bool contains(const Vector<T>& v) const { return is_zero_matrix(reduce(v)); }

  bool contains(const SubspaceBasis& other) const {
    for (Index i = 0; i < other.dim(); ++i)
      if (!contains(other.vector(i))) return false;
    return true;
  }

  /// Coordinates of v in this basis; nullopt when v is not in the span.
  std::optional<Vector<T>> coordinates(const Vector<T>& v) const {
    Vector<T> c(dim());
    for (Index r = 0; r < dim(); ++r) c(r) = v(pivots_[r]);
    Vector<T> back = Vector<T>::Zero(ambient_);
    for (Index r = 0; r < dim(); ++r)
      if (!is_zero(c(r)))
        for (Index j = 0; j < ambient_; ++j)
          if (!is_zero(rows_(r, j))) back(j) += rows_(r, j) * c(r);
    if (back != v) return std::nullopt;
    return c;
  }

  SubspaceBasis sum(const SubspaceBasis& other) const {
    Matrix<T> stacked(dim() + other.dim(), ambient_);
    stacked << rows_, other.rows_;
    return span(ambient_, stacked);
  }

  friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }

 private:
  Index ambient_ = 0;
  Matrix<T> rows_;
  std::vector<Index> pivots_;
};

using SubspaceQ = SubspaceBasis<Rational>;
using SubspaceF = SubspaceBasis<Fraction>;

/// Right null space of m, in reduced echelon form.
template <class T>
SubspaceBasis<T> kernel_basis(const Matrix<T>& m) {
  auto r = rref(Matrix<T>(m));
  const Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index p : r.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  Matrix<T> basis = Matrix<T>::Zero(n - r.rank, n);
  Index k = 0;
  for (Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis(k, free) = T(1);
    for (Index i = 0; i < r.rank; ++i)
      if (!is_zero(r.reduced(i, free))) basis(k, r.pivots[static_cast<std::size_t>(i)]) = -r.reduced(i, free);
    ++k;
  }
  return SubspaceBasis<T>::span(n, basis);
}

inline SubspaceF kernel_basis(const MatrixL& m) { return kernel_basis(cast_matrix<Fraction>(m)); }

/// Span of the columns of m.
template <class T>
SubspaceBasis<T> column_space(const Matrix<T>& m) {
  return SubspaceBasis<T>::span(m.rows(), m.transpose());
}

/// A complement C of `sub` inside `ambient`: ambient = sub (+) C. The choice
/// is greedy over the reduced echelon basis of `ambient` in index order, which
/// for a coordinate space means greedy over standard basis vectors.
template <class T>
SubspaceBasis<T> quotient_complement(const SubspaceBasis<T>& ambient, const SubspaceBasis<T>& sub) {
  if (!ambient.contains(sub)) throw NotASubspace("quotient_complement: sub is not contained in ambient");
  SubspaceBasis<T> acc = sub;
  std::vector<Index> chosen;
  for (Index i = 0; i < ambient.dim() && acc.dim() < ambient.dim(); ++i) {
    Vector<T> v = ambient.vector(i);
    if (acc.contains(v)) continue;
    chosen.push_back(i);
    Matrix<T> one = v.transpose();
    acc = acc.sum(SubspaceBasis<T>::span(ambient.ambient_dim(), one));
  }
  Matrix<T> rows(static_cast<Index>(chosen.size()), ambient.ambient_dim());
  for (std::size_t k = 0; k < chosen.size(); ++k) rows.row(static_cast<Index>(k)) = ambient.vectors().row(chosen[k]);
  return SubspaceBasis<T>::span(ambient.ambient_dim(), rows);
}

/// Vectors of `candidates` (rows, in order) forming a basis of a complement of
/// `sub` inside span(sub, candidates). Unlike quotient_complement this keeps
/// the chosen candidates verbatim; returns their row indices.
template <class T>
std::vector<Index> greedy_complement(const SubspaceBasis<T>& sub, const Matrix<T>& candidates) {
  std::vector<Index> chosen;
  SubspaceBasis<T> acc = sub;
  for (Index i = 0; i < candidates.rows(); ++i) {
    Vector<T> v = candidates.row(i).transpose();
    Vector<T> red = acc.reduce(v);
    if (is_zero_matrix(red)) continue;
    chosen.push_back(i);
    Matrix<T> one = red.transpose();
    acc = acc.sum(SubspaceBasis<T>::span(acc.ambient_dim(), one));
  }
  return chosen;
}

/// One solution x of a x = b (free variables set to zero), or nullopt.
template <class T>
std::optional<Vector<T>> solve(const Matrix<T>& a, const Vector<T>& b) {
  Matrix<T> aug(a.rows(), a.cols() + 1);
  aug << a, b;
  auto r = rref(std::move(aug));
  Vector<T> x = Vector<T>::Zero(a.cols());
  for (Index i = 0; i < r.rank; ++i) {
    Index p = r.pivots[static_cast<std::size_t>(i)];
    if (p == a.cols()) return std::nullopt;
    x(p) = r.reduced(i, a.cols());
  }
  return x;
}

/// Exact inverse by Gauss-Jordan on [a | I]; nullopt when a is singular.
template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& a) {
  const Index n = a.rows();
  if (a.cols() != n) return std::nullopt;
  Matrix<T> aug(n, 2 * n);
  aug << a, identity<T>(n);
  auto r = rref(std::move(aug));
  if (r.rank < n || (n > 0 && r.pivots[static_cast<std::size_t>(n - 1)] != n - 1)) return std::nullopt;
  return Matrix<T>(r.reduced.rightCols(n));
}

}  // namespace rhom
