#pragma once

#include "rhom/errors.hpp"
#include "rhom/exactla/elimination.hpp"
#include "rhom/gca/differential.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rhom::liealg {

struct AntisymmetryViolation {
  int i = 0, j = 0, k = 0;  ///< c[i][j][k] != -c[j][i][k]
};

struct JacobiViolation {
  int i = 0, j = 0, k = 0;
  VectorQ residual;  ///< [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]
};

struct ValidationReport {
  std::vector<AntisymmetryViolation> antisymmetry;
  std::vector<JacobiViolation> jacobi;
  bool ok() const { return antisymmetry.empty() && jacobi.empty(); }
  std::string summary() const;
};

/// Finite-dimensional Lie algebra over Q, stored by its full table of
/// structure constants: bracket(i, j)(k) is the coefficient of e_k in
/// [e_i, e_j]. Both orientations are stored, so antisymmetry is a checked
/// property rather than an assumption.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  /// Zero brackets on the given basis.
  LieAlgebra(std::string name, std::vector<std::string> basis);

  const std::string& name() const { return name_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<std::string>& basis() const { return basis_; }
  std::optional<int> index_of(const std::string& basis_name) const;

  /// Sets [e_i, e_j] only.
  void set_bracket_raw(int i, int j, VectorQ value);
  /// Sets [e_i, e_j] = value and [e_j, e_i] = -value.
  void set_bracket(int i, int j, const VectorQ& value);
  /// Convenience for [e_i, e_j] = sum of c * e_k.
  void set_bracket_terms(int i, int j, const std::vector<std::pair<int, Rational>>& terms);

  const VectorQ& bracket(int i, int j) const { return table_[static_cast<std::size_t>(i * dim() + j)]; }
  VectorQ bracket(const VectorQ& a, const VectorQ& b) const;
  /// Matrix of ad(e_i): column j holds [e_i, e_j].
  MatrixQ ad(int i) const;
  MatrixQ ad(const VectorQ& x) const;

  ValidationReport validate() const;

  /// Lower central series terms as subspaces, until stable.
  std::vector<SubspaceQ> lower_central_series() const;
  std::vector<SubspaceQ> derived_series() const;
  bool is_nilpotent() const;
  bool is_solvable() const;
  /// trace(ad e_i) = 0 for every basis vector.
  bool is_unimodular() const;

  /// The algebra in the basis f_a = sum_i p(i, a) e_i. Throws if p is singular.
  LieAlgebra change_basis(const MatrixQ& p, std::vector<std::string> names = {}) const;
  /// Span of the listed basis vectors, which must be closed under brackets.
  LieAlgebra subalgebra(const std::vector<int>& indices, std::string name = {}) const;
  LieAlgebra renamed(std::string name, std::vector<std::string> basis = {}) const;

  /// Structure constants (and basis size) agree; names are ignored.
  bool same_structure(const LieAlgebra& other) const;
  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.name_ == b.name_ && a.basis_ == b.basis_ && a.same_structure(b);
  }

 private:
  std::string name_;
  std::vector<std::string> basis_;
  std::vector<VectorQ> table_;
};

/// Splitting g = <S> + n with n spanned by the listed basis vectors.
struct SplittingSpec {
  int s_index = 0;
  std::vector<int> nilradical_indices;
  /// S = e_s and the remaining indices in order.
  static SplittingSpec complement_of(const LieAlgebra& g, int s_index);
};

struct WeightVector {
  std::vector<Rational> weights;
  bool acts_trivially = false;
  Rational trace() const;
};

/// Checks that the nilradical span is a nilpotent ideal on which ad S is
/// diagonal in the given basis, and returns the diagonal. Throws NotAnIdeal,
/// NotNilpotent or NotDiagonal naming the offending basis vector, and
/// ValidationError when tr(ad S) contradicts unimodularity.
WeightVector verify_splitting(const LieAlgebra& g, const SplittingSpec& spec);

enum class SolvabilityStatus { Certified, Undetermined };

struct SolvabilityCertificate {
  SolvabilityStatus status = SolvabilityStatus::Undetermined;
  std::string reason;
  std::optional<WeightVector> weights;
};

/// Sufficient test only; never claims a negative. Nilpotent algebras are
/// certified without a splitting.
SolvabilityCertificate completely_solvable_certificate(const LieAlgebra& g,
                                                       const std::optional<SplittingSpec>& spec = std::nullopt);

struct CeComplex {
  gca::AlgebraPtr algebra;
  gca::DifferentialQ d;
};

/// Degree-1 generators dual to the basis (lowercased names), with
/// d x_k = sum_{i<j} c[i][j][k] x_i x_j. Validates first (ValidationError).
/// cutoff < 0 means the dimension.
CeComplex ce_complex(const LieAlgebra& g, int cutoff = -1);
/// Same differential without validation; d^2 may fail to vanish.
CeComplex ce_complex_unchecked(const LieAlgebra& g, int cutoff = -1);

LieAlgebra heisenberg3(const std::string& suffix = "");
LieAlgebra abelian(int k);
/// Basis of g followed by basis of h; names from h that clash get a "'".
LieAlgebra direct_sum(const LieAlgebra& g, const LieAlgebra& h, std::string name = {});
/// <S> + n with [S, e_i] = w_i e_i. Throws NotADerivation.
LieAlgebra semidirect_by_weights(const WeightVector& w, const LieAlgebra& n, const std::string& s_name = "S",
                                 std::string name = {});
/// Basis S, T, X1, Y1, Z1, X2, Y2, Z2.
LieAlgebra benson_gordon();
/// <T> + two Heisenberg algebras with basis T, X1, Y1, Z1, X2, Y2, Z2.
LieAlgebra benson_gordon_nilradical();

}  // namespace rhom::liealg
