#pragma once

#include "rhom/gca/graded_algebra.hpp"

#include <string>
#include <vector>

namespace rhom::mostow {

/// Generators and relations of a connected graded algebra through a cutoff.
struct AlgebraPresentation {
  /// Free algebra on the chosen indecomposables, named g<degree>_<i>.
  gca::AlgebraPtr free;
  /// Image of each generator in the target (coordinates in its degree).
  std::vector<VectorQ> images;
  /// Target basis label of each generator's image.
  std::vector<std::string> labels;
  /// relations[k]: basis of the kernel of the free cover in degree k.
  std::vector<std::vector<gca::ElementQ>> relations;
  int cutoff = 0;

  std::vector<Index> generator_counts() const;
  std::vector<Index> relation_counts() const;
};

/// Generators in degree k: a greedy complement of the decomposables in the
/// standard basis. Throws Error if the free cover fails to be onto.
AlgebraPresentation presentation(const gca::GradedAlgebra& u, int cutoff);

}  // namespace rhom::mostow
