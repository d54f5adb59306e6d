#pragma once

#include "rhom/cli/audit.hpp"
#include "rhom/gca/graded_algebra.hpp"

#include <optional>
#include <string>

namespace rhom::cli {

struct CommandOutput {
  std::string text;
  Json json;
  int exit_code = 0;
};

/// A basis name or a decimal index. Throws ParseError.
int resolve_s_index(const liealg::LieAlgebra& g, const std::string& spec);
/// Comma-separated rationals. Throws ParseError unless there are dim entries.
VectorQ parse_twist(const std::string& csv, int dim);

/// Cohomology algebra of the CE complex through the top degree.
gca::GradedAlgebra cohomology_algebra(const liealg::LieAlgebra& g);
/// Maximal nilpotent submodule U of the fiber cohomology.
gca::GradedAlgebra unipotent_algebra(const liealg::LieAlgebra& g, int s_index, const VectorQ& R);

/// Without an s_index every basis vector is tried as the splitting element.
CommandOutput cmd_check(const liealg::LieAlgebra& g, std::optional<int> s_index = std::nullopt);
/// max_degree < 0 means the dimension.
CommandOutput cmd_cohomology(const liealg::LieAlgebra& g, int max_degree = -1);
CommandOutput cmd_ce(const liealg::LieAlgebra& g);
CommandOutput cmd_mostow(const liealg::LieAlgebra& g, int s_index, const VectorQ& R, int cutoff = 6);
CommandOutput cmd_bigraded(const gca::GradedAlgebra& h, int degree_cutoff, int stage_cutoff);
CommandOutput cmd_minimal(const liealg::LieAlgebra& g, int degree_cutoff, int stage_cutoff);
/// Exit code 0 with a no-lattice certificate, 2 when inconclusive.
CommandOutput cmd_audit(const liealg::LieAlgebra& g, const AuditOptions& options = {});
CommandOutput cmd_certificate(const liealg::LieAlgebra& g, const AuditOptions& options = {});

}  // namespace rhom::cli
