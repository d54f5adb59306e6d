#pragma once

#include "rhom/exactla/fraction.hpp"
#include "rhom/exactla/laurent.hpp"
#include "rhom/exactla/rational.hpp"

#include <Eigen/Core>

namespace rhom::detail {

template <class T>
struct ExactNumTraits : Eigen::GenericNumTraits<T> {
  using Real = T;
  using NonInteger = T;
  using Nested = T;
  using Literal = T;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace rhom::detail

namespace Eigen {
template <>
struct NumTraits<rhom::Rational> : rhom::detail::ExactNumTraits<rhom::Rational> {};
template <>
struct NumTraits<rhom::Laurent> : rhom::detail::ExactNumTraits<rhom::Laurent> {};
template <>
struct NumTraits<rhom::Fraction> : rhom::detail::ExactNumTraits<rhom::Fraction> {};
}  // namespace Eigen

namespace rhom {

using Index = Eigen::Index;

template <class T>
using Matrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <class T>
using Vector = Eigen::Matrix<T, Eigen::Dynamic, 1>;

using MatrixQ = Matrix<Rational>;
using VectorQ = Vector<Rational>;
using MatrixL = Matrix<Laurent>;
using VectorL = Vector<Laurent>;
using MatrixF = Matrix<Fraction>;
using VectorF = Vector<Fraction>;

template <class Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!is_zero(m(i, j))) return false;
  return true;
}

/// Entry-wise conversion between scalar domains (Rational -> Laurent ->
/// Fraction).
template <class To, class Derived>
Matrix<To> cast_matrix(const Eigen::MatrixBase<Derived>& m) {
  Matrix<To> out(m.rows(), m.cols());
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) out(i, j) = To(m(i, j));
  return out;
}

/// Substitutes a value for nu.
MatrixQ specialize(const MatrixL& m, const Rational& nu_value);
MatrixQ specialize(const MatrixF& m, const Rational& nu_value);

/// Exact matrix product without going through Eigen's blocked kernels, which
/// assume cheap scalar copies.
template <class T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out = Matrix<T>::Zero(a.rows(), b.cols());
  for (Index k = 0; k < a.cols(); ++k)
    for (Index i = 0; i < a.rows(); ++i) {
      if (is_zero(a(i, k))) continue;
      for (Index j = 0; j < b.cols(); ++j)
        if (!is_zero(b(k, j))) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

template <class T>
Vector<T> multiply(const Matrix<T>& a, const Vector<T>& v) {
  Vector<T> out = Vector<T>::Zero(a.rows());
  for (Index k = 0; k < a.cols(); ++k) {
    if (is_zero(v(k))) continue;
    for (Index i = 0; i < a.rows(); ++i)
      if (!is_zero(a(i, k))) out(i) += a(i, k) * v(k);
  }
  return out;
}

template <class T>
Matrix<T> identity(Index n) {
  Matrix<T> out = Matrix<T>::Zero(n, n);
  for (Index i = 0; i < n; ++i) out(i, i) = T(1);
  return out;
}

template <class T>
Matrix<T> power(const Matrix<T>& m, int k) {
  Matrix<T> out = identity<T>(m.rows());
  for (int i = 0; i < k; ++i) out = multiply(out, m);
  return out;
}

}  // namespace rhom
