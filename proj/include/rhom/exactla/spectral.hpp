#pragma once

#include "rhom/exactla/elimination.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace rhom {

/// Kernel of (m - lambda I)^power. power <= 0 means power = dimension.
template <class T>
SubspaceBasis<T> generalized_eigenspace(const Matrix<T>& m, const T& lambda, int power = 0) {
  const Index n = m.rows();
  if (power <= 0) power = static_cast<int>(n);
  Matrix<T> shifted = m;
  for (Index i = 0; i < n; ++i) shifted(i, i) -= lambda;
  return kernel_basis(rhom::power(shifted, power));
}

inline SubspaceF generalized_eigenspace(const MatrixL& m, const Laurent& lambda, int power = 0) {
  return generalized_eigenspace(cast_matrix<Fraction>(m), Fraction(lambda), power);
}

/// Characteristic polynomial det(x I - m), coefficients from x^0 upward
/// (monic, so the last entry is 1).
std::vector<Rational> characteristic_polynomial(const MatrixQ& m);

struct Eigenvalue {
  Rational value;
  int multiplicity = 0;
  friend bool operator==(const Eigenvalue&, const Eigenvalue&) = default;
};

/// Rational roots of the characteristic polynomial with multiplicities, in
/// increasing order; nullopt when the polynomial does not split into
/// rational linear factors.
std::optional<std::vector<Eigenvalue>> rational_eigenvalues(const MatrixQ& m);

/// exp(m) for nilpotent m as the finite series sum_k m^k / k!.
/// Throws NotNilpotent when m^dim != 0.
MatrixQ exp_nilpotent(const MatrixQ& m);

}  // namespace rhom
