#pragma once

#include "rhom/cli/report.hpp"
#include "rhom/sullivan/comparison.hpp"

#include <cstdint>
#include <optional>

namespace rhom::cli {

struct AuditOptions {
  int s_index = 0;
  /// Seeds the twist R when none is given.
  std::uint32_t seed = 1;
  std::optional<VectorQ> R;
  /// Bigraded model of U; degree 7 reaches the last stage-1 generators.
  int degree_cutoff = 7;
  int stage_cutoff = 4;
  /// Minimal model of the CE complex.
  int ce_degree_cutoff = 5;
  int ce_stage_cutoff = 8;
  bool timings = false;
};

struct AuditResult {
  AuditReport report;
  sullivan::ComparisonVerdict verdict;
  /// 0 when a no-lattice certificate is issued, 2 when inconclusive.
  int exit_code() const;
};

/// Twist with entries in {-2, ..., 2} drawn from mt19937(seed).
VectorQ twist_from_seed(std::uint32_t seed, int dim);

Json verdict_json(const sullivan::ComparisonVerdict& v);

/// Runs the whole pipeline and records one claim per step. Claims about the
/// Benson-Gordon algebra carry expected values only when g has its basis and
/// structure constants and S is the splitting element; otherwise they are
/// UNSTATED. Throws on hard errors (invalid algebra, bad splitting, ...).
AuditResult run_audit(const liealg::LieAlgebra& g, const AuditOptions& options = {});

}  // namespace rhom::cli
