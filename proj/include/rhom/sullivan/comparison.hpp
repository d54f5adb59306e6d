#pragma once

#include "rhom/mostow/presentation.hpp"
#include "rhom/sullivan/bigraded_model.hpp"
#include "rhom/sullivan/minimal_model.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rhom::sullivan {

/// Structural facts about the bigraded model of the fiber algebra that make
/// its degree-4 stage-0 generators survive any perturbation D with D - d
/// lowering the stage by at least two.
struct FiberStability {
  /// Stage >= 2 generators of degree <= 3 (must be empty).
  std::vector<std::string> low_degree_late_stage;
  /// Degree-3 generators whose d has a linear term (must be empty).
  std::vector<std::string> linear_hits;
  bool certified = false;
  /// Stage-0 generators of degree 4, when certified.
  std::vector<std::string> stable_generators;
  /// Stage-0 counts per degree 0..degree_cutoff.
  std::vector<Index> stage0_counts;
  /// Degree -> count, only for degrees where stability is certified.
  std::map<int, Index> stable_counts;
  Index presentation_count = 0;
};

/// Throws InsufficientCutoff unless the model reaches degree 5 and stage 3
/// and is settled through degree 4; Error when the presentation and the model
/// disagree on the degree-4 indecomposables.
FiberStability fiber_model_analysis(const mostow::AlgebraPresentation& p, const BigradedModel& b);

enum class Verdict { NoLatticeCertificate, Inconclusive };

std::string to_string(Verdict v);

struct ComparisonVerdict {
  Verdict verdict = Verdict::Inconclusive;
  std::vector<Index> fiber_counts;
  std::map<int, Index> fiber_stable;
  std::vector<Index> ce_counts;
  std::vector<int> mismatched_degrees;
  /// Set for NoLatticeCertificate: the first mismatching degree.
  std::optional<int> degree;
  Index fiber_count = 0;
  Index ce_count = 0;

  std::string summary() const;
};

/// Throws UnsettledDegree when a compared degree is not settled on the CE side.
ComparisonVerdict compare_models(const FiberStability& fiber, const MinimalModelReport& ce);

}  // namespace rhom::sullivan
