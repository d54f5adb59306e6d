#pragma once

#include "rhom/gca/graded_algebra.hpp"

#include <string>
#include <vector>

namespace rhom::sullivan {

/// Bigraded model (Lambda Z, d) of a connected graded algebra H with zero
/// differential. Generator g has total degree and stage (lower degree) stored
/// in its GeneratorDecl; d lowers the stage by one. Generators are named
/// z<stage>_<degree>_<i> and listed stage by stage.
struct BigradedModel {
  gca::AlgebraPtr algebra;
  gca::DifferentialQ d;
  /// Stage-0 generators: coordinates of their image under rho in H.
  std::vector<VectorQ> rho;
  /// Stage-0 generators: basis label of H at the chosen complement position.
  std::vector<std::string> labels;
  int degree_cutoff = 0;
  int stage_cutoff = 0;
  /// Some stage beyond stage_cutoff would have been needed.
  bool stage_cutoff_hit = false;
  /// settled[q]: the model's cohomology in degree q is concentrated in lower
  /// degree 0 and rho maps it isomorphically onto H^q.
  std::vector<bool> settled;
  /// lower_betti[q][n]: dimension of H_n of the model in total degree q.
  std::vector<std::vector<Index>> lower_betti;

  int stage_of(int g) const { return *algebra->generator(g).lower_degree; }
  int num_stages() const;
  Index count(int stage, int degree) const;
  /// table[stage][degree], degrees 0..degree_cutoff.
  std::vector<std::vector<Index>> count_table() const;
  std::vector<int> generators_of(int stage, int degree) const;
  bool all_settled() const;
  /// Total cohomology dimension of the model per degree 0..degree_cutoff.
  std::vector<Index> betti_numbers() const;
};

/// Stage 0 is a greedy complement of the decomposables of H, stage 1 a greedy
/// complement of K * Lambda+Z0 in K = ker rho, and stage n+1 a greedy
/// complement of boundaries plus products with Lambda+Z0 in the lower-degree-n
/// cycles. H must be known through degree_cutoff + 1 (or vanish above its top).
/// Throws NotConnected, InsufficientCutoff.
BigradedModel bigraded_model(const gca::GradedAlgebra& h, int degree_cutoff, int stage_cutoff);

}  // namespace rhom::sullivan
