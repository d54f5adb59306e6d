#pragma once

#include "rhom/gca/cohomology.hpp"

#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace rhom::gca {

/// Finite-dimensional connected-or-not graded-commutative algebra with zero
/// differential, given by a basis per degree 0..top and a product table.
/// Products landing above `top` are unknown unless the algebra is declared
/// zero there.
class GradedAlgebra {
 public:
  using ProductFn = std::function<VectorQ(int, Index, int, Index)>;

  GradedAlgebra() = default;
  GradedAlgebra(std::vector<std::vector<std::string>> names, bool zero_above_top, const ProductFn& product);

  /// H^0..H^max_degree of a cohomology ring. Zero above the top when the
  /// underlying free algebra is an exterior algebra that fits.
  static GradedAlgebra from_cohomology(const CohomologyRing& h);

  /// Subalgebra of h spanned per degree by the rows of basis[k] (class
  /// coordinates). Rows are brought to reduced echelon form first. Throws
  /// Error when the span is not closed under products.
  static GradedAlgebra subalgebra(const CohomologyRing& h, const std::vector<MatrixQ>& basis,
                                  std::vector<std::vector<std::string>> names = {});

  /// Free algebra modulo the ideal generated by `relations`, through the
  /// algebra's cutoff. Basis: monomials that are not leading terms of the
  /// ideal in each degree.
  static GradedAlgebra from_presentation(const AlgebraPtr& free, const std::vector<ElementQ>& relations);

  int top_degree() const { return static_cast<int>(names_.size()) - 1; }
  bool zero_above_top() const { return zero_above_top_; }
  Index dim(int k) const;
  std::vector<Index> dims() const;
  const std::string& name(int k, Index i) const { return names_.at(static_cast<std::size_t>(k)).at(static_cast<std::size_t>(i)); }
  bool is_connected() const { return top_degree() >= 0 && dim(0) == 1; }

  /// e_i * e_j in degree k1 + k2. Throws CutoffExceeded when unknown.
  const VectorQ& product(int k1, Index i, int k2, Index j) const;
  VectorQ multiply(int k1, const VectorQ& a, int k2, const VectorQ& b) const;
  /// Coordinates of the unit in degree 0.
  VectorQ unit() const;

  /// Span of products of positive-degree elements in degree k.
  SubspaceQ decomposables(int k) const;

  /// Value in degree deg(e) of an element of a free algebra under the
  /// multiplicative map sending generator g to (degree of g, images[g]).
  VectorQ evaluate(const ElementQ& e, const std::vector<VectorQ>& images) const;
  VectorQ evaluate(const Monomial& m, const AlgebraPtr& free, const std::vector<VectorQ>& images) const;

 private:
  std::vector<std::vector<std::string>> names_;
  bool zero_above_top_ = false;
  std::map<std::tuple<int, Index, int, Index>, VectorQ> products_;
};

}  // namespace rhom::gca
