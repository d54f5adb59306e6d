#pragma once

#include "rhom/gca/graded_algebra.hpp"
#include "rhom/liealg/lie_algebra.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace rhom::mostow {

struct FiberActionSpec {
  liealg::WeightVector weights;
  /// Coordinates of the unipotent twist in the nilradical basis; empty = 0.
  VectorQ R;
};

/// eta = (diag nu^w)^t o (exp ad R)^t on the dual of the nilradical, extended
/// to the Chevalley-Eilenberg algebra, with its matrices on cohomology.
struct FiberAction {
  liealg::LieAlgebra nilradical;
  FiberActionSpec spec;
  liealg::CeComplex ce;
  gca::MorphismL eta;
  /// Column j holds the coordinates of eta(x_j) in the dual basis.
  MatrixL on_dual;
  std::shared_ptr<const gca::CohomologyRing> cohomology;
  /// Matrix of eta* in the canonical representative basis, per degree.
  std::vector<MatrixL> induced;
  /// Matrices whose generic rank was cross-checked at nu = 2 and nu = 3.
  int specialization_checks = 0;
};

/// Throws NotNilpotent (ad R), NotAChainMap, SpecializationMismatch, and
/// Error when the weights are not integers.
FiberAction build_fiber_action(const liealg::LieAlgebra& nilradical, FiberActionSpec spec);

/// A cohomology class given by a cocycle, with a display label.
struct LabelledClass {
  std::string label;
  gca::ElementQ cocycle;
};
using OrderedBasis = std::vector<std::vector<LabelledClass>>;

struct TriangularDegree {
  std::vector<std::string> labels;
  /// Columns: class coordinates of the ordered basis in the representative basis.
  MatrixQ change;
  /// eta* in the ordered basis; zero below the diagonal.
  MatrixL matrix;
  std::vector<Laurent> diagonal;
  /// Weight of each ordered class (sum over its generator content).
  std::vector<int> weights;
};

struct TriangularCertificate {
  std::vector<TriangularDegree> degrees;
};

/// Degrees with an entry in `order` use that basis (it must be a basis of
/// H^k); other degrees use the canonical representatives. Throws
/// NotTriangular naming (degree, row, column), or Error when a listed class
/// family is not a basis or a diagonal entry is not nu^(weight).
TriangularCertificate certify_triangular(const FiberAction& f, const OrderedBasis& order = {});

struct NilpotentSubmodule {
  /// Per degree, subspace of H^k in class coordinates (reduced echelon rows).
  std::vector<SubspaceQ> spaces;
  gca::GradedAlgebra algebra;
  /// Per degree, ordered positions of the certificate whose diagonal is 1.
  std::vector<std::vector<Index>> unipotent_positions;
  int specialization_checks = 0;

  std::vector<Index> dims() const { return algebra.dims(); }
  /// Coordinates in U of a class of H^k given by class coordinates; nullopt
  /// when the class is not in U.
  std::optional<VectorQ> coordinates(int k, const VectorQ& class_coords) const;
};

/// Generalized 1-eigenspace of eta* per degree over Q(nu), cross-checked at
/// nu = 2 and nu = 3. Throws SpecializationMismatch, NotRational (basis not
/// defined over Q), or Error when the span is not closed under products.
NilpotentSubmodule max_nilpotent_submodule(const FiberAction& f, const TriangularCertificate& cert);

struct StarListEntry {
  std::string label;
  gca::ElementQ cocycle;
};

struct StarListAudit {
  /// Ordered basis classes of positive degree with diagonal entry 1.
  std::vector<std::string> computed;
  std::vector<std::string> expected;
  /// Expected entries that are not (up to scalar) a diagonal-1 basis class.
  std::vector<std::string> missing;
  /// Computed entries not matched by an expected entry.
  std::vector<std::string> extra;
};

StarListAudit audit_star_list(const FiberAction& f, const TriangularCertificate& cert,
                              const std::vector<StarListEntry>& expected);

/// Builds a cocycle from a label such as "[x1z1][y2]" (a product of
/// bracketed monomials in the CE generator names). Throws Error.
gca::ElementQ parse_class_label(const gca::AlgebraPtr& a, const std::string& label);

}  // namespace rhom::mostow
