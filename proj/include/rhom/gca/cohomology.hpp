#pragma once

#include "rhom/exactla/elimination.hpp"
#include "rhom/gca/differential.hpp"

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

namespace rhom::gca {

/// Cohomology of a free CGA with differential, with canonical representative
/// cocycles and a cup-product table.
///
/// In each degree the cocycles are reduced modulo the reduced echelon basis of
/// the coboundaries and the results are brought to reduced echelon form; these
/// rows are the representatives. The coordinates of any cocycle are then read
/// off at the representatives' pivot positions after the same reduction, so no
/// linear system is solved per query.
class CohomologyRing {
 public:
  CohomologyRing(DifferentialQ d, int max_degree);
  /// Only degrees min_degree..max_degree are computed; others throw.
  CohomologyRing(DifferentialQ d, int min_degree, int max_degree);

  int max_degree() const { return max_degree_; }
  const AlgebraPtr& algebra() const { return d_.algebra(); }
  const DifferentialQ& differential() const { return d_; }

  Index betti(int k) const;
  std::vector<Index> betti_numbers() const;

  const SubspaceQ& cocycles(int k) const { return at(k).cocycles; }
  const SubspaceQ& coboundaries(int k) const { return at(k).coboundaries; }
  /// Rows are the representatives' coordinates in the degree-k monomial basis.
  const MatrixQ& representatives(int k) const { return at(k).reps; }
  ElementQ representative(int k, Index i) const;
  /// "[x1*z1]" for monomial representatives, "[x1*z1 - y1*z2]" otherwise.
  std::string class_name(int k, Index i) const;

  /// Coordinates of the class of a degree-k cocycle. Throws NotACocycle.
  template <class T>
  Vector<T> class_coordinates(int k, const Element<T>& cocycle) const;

  /// Coordinates of [rep(k1, i)] * [rep(k2, j)] in degree k1 + k2 (an empty
  /// vector beyond max_degree). Cached; safe to call concurrently.
  const VectorQ& cup_product(int k1, Index i, int k2, Index j) const;
  /// Product of arbitrary classes given by coordinates.
  VectorQ multiply(int k1, const VectorQ& a, int k2, const VectorQ& b) const;

 private:
  struct Degree {
    bool computed = false;
    SubspaceQ cocycles;
    SubspaceQ coboundaries;
    MatrixQ reps;
    std::vector<Index> rep_pivots;
  };
  const Degree& at(int k) const;

  DifferentialQ d_;
  int max_degree_;
  std::vector<Degree> degrees_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::tuple<int, Index, int, Index>, VectorQ> products_;
};

template <class T>
Vector<T> CohomologyRing::class_coordinates(int k, const Element<T>& cocycle) const {
  const Degree& deg = at(k);
  Vector<T> v = cocycle.coordinates(k);
  deg.coboundaries.reduce_in_place(v);
  Vector<T> c(deg.reps.rows());
  for (Index r = 0; r < deg.reps.rows(); ++r) c(r) = v(deg.rep_pivots[static_cast<std::size_t>(r)]);
  Vector<T> back = Vector<T>::Zero(v.size());
  for (Index r = 0; r < deg.reps.rows(); ++r) {
    if (is_zero(c(r))) continue;
    for (Index j = 0; j < v.size(); ++j)
      if (!is_zero(deg.reps(r, j))) back(j) += T(deg.reps(r, j)) * c(r);
  }
  if (back != v) throw NotACocycle("element of degree " + std::to_string(k) + " is not a cocycle: " + cocycle.to_string());
  return c;
}

/// Matrices of phi* in the canonical representative bases, degrees
/// 0..min(max degrees). Verifies the chain-map property first.
template <class T>
std::vector<Matrix<T>> induced_map_on_cohomology(const Morphism<T>& phi, const CohomologyRing& src,
                                                 const CohomologyRing& tgt) {
  phi.require_chain_map(src.differential(), tgt.differential());
  std::vector<Matrix<T>> out;
  const int top = std::min(src.max_degree(), tgt.max_degree());
  for (int k = 0; k <= top; ++k) {
    Matrix<T> m(tgt.betti(k), src.betti(k));
    for (Index j = 0; j < src.betti(k); ++j) {
      Element<T> img = phi.apply(src.representative(k, j));
      m.col(j) = tgt.class_coordinates(k, img);
    }
    out.push_back(std::move(m));
  }
  return out;
}

/// Betti numbers of a tensor product from those of the factors.
std::vector<Index> kunneth(const std::vector<Index>& a, const std::vector<Index>& b);

}  // namespace rhom::gca
