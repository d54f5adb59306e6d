#pragma once

// Reference data for the nilradical <T> + n3 + n3 of the Benson-Gordon
// algebra: listed cohomology bases, the classes claimed unipotent, and the
// claimed generators and relations of the unipotent part. t is dual to T.

#include "rhom/mostow/fiber_action.hpp"

#include <string>
#include <utility>
#include <vector>

namespace rhom::mostow::bg {

/// Class labels of the n3 + n3 part per degree 0..6.
const std::vector<std::vector<std::string>>& listed_labels();

/// Degree k: listed_labels()[k], then [t] times listed_labels()[k-1].
OrderedBasis listed_basis(const gca::AlgebraPtr& a);

/// The seven classes claimed to be the only unipotent basis vectors.
std::vector<StarListEntry> star_entries(const gca::AlgebraPtr& a);

/// Claimed generators of U: name and class label (b, u1..u4, v1..v3).
const std::vector<std::pair<std::string, std::string>>& u_generators();

/// Claimed relations as products of two named generators.
const std::vector<std::pair<std::string, std::string>>& claimed_relations();

}  // namespace rhom::mostow::bg
