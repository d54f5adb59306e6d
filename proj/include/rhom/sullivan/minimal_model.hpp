#pragma once

#include "rhom/gca/cohomology.hpp"

#include <string>
#include <vector>

namespace rhom::sullivan {

struct ModelGenerator {
  std::string name;
  int degree = 0;
  /// 0 for closed generators added for surjectivity; s >= 1 for the s-th
  /// round of generators killing the kernel in degree + 1.
  int stage = 0;
  gca::ElementQ differential;
  /// Image in the target algebra.
  gca::ElementQ image;
};

struct MinimalModelReport {
  gca::AlgebraPtr algebra;
  gca::DifferentialQ d;
  gca::DifferentialQ target;
  std::vector<ModelGenerator> generators;
  int degree_cutoff = 0;
  int stage_cutoff = 0;
  bool stage_cutoff_hit = false;
  /// Per degree 0..degree_cutoff.
  std::vector<bool> settled;
  std::vector<bool> quasi_isomorphic;
  std::vector<Index> model_betti, target_betti;
  /// Generators that become closed after adding decomposables: the rank of
  /// the projection of the degree-k cocycles onto the generators.
  std::vector<Index> closed_counts;

  std::vector<Index> generator_counts() const;
  /// counts[degree][stage]
  std::vector<std::vector<Index>> stage_counts() const;
  gca::MorphismQ map() const;
  bool verified() const;
};

/// Sullivan minimal model of a free connected DGA through degree_cutoff.
/// Degree by degree: closed generators for the cokernel on H^n, then rounds of
/// generators of degree n killing the kernel on H^n+1, at most stage_cutoff
/// rounds. The quasi-isomorphism is checked on cohomology afterwards.
MinimalModelReport minimal_model(const gca::DifferentialQ& target, int degree_cutoff, int stage_cutoff = 8);

}  // namespace rhom::sullivan
