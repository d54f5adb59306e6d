#pragma once

#include "rhom/gca/differential.hpp"

#include <string>
#include <utility>
#include <vector>

namespace rhom::sullivan {

/// One pass: the splitting of every degree and the pairs eliminated in the
/// lowest degree where the linear part d' is nonzero.
struct ReductionStep {
  int degree = 0;
  /// Per degree 0..cutoff: dimensions of Im d', V' and W (V = Im d' + V' + W,
  /// Ker d' = Im d' + V').
  std::vector<Index> image_dims, kept_dims, w_dims;
  /// (w, p): w spans W in `degree`, p is the generator of degree + 1 solved
  /// for from d(w) = p + ...
  std::vector<std::pair<std::string, std::string>> eliminated;
  /// d(w) for each eliminated pair, after the triangular change of basis.
  std::vector<std::string> pair_differentials;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  std::vector<Index> betti_before, betti_after;
  bool empty() const { return steps.empty(); }
};

struct LehmannResult {
  gca::DifferentialQ minimal;
  ReductionTrace trace;
};

/// Linear part of d on the generators of degree n: rows are the generators of
/// degree n + 1, columns those of degree n.
MatrixQ linear_part(const gca::DifferentialQ& d, int n);
bool has_linear_part(const gca::DifferentialQ& d);

/// Repeatedly divides out the ideal generated by a complement W of Ker d' and
/// d(W) until d' = 0. Betti numbers are compared before and after through
/// degree cutoff() - 1 of the input algebra. Throws H1NotZero, NonFreeInput.
LehmannResult lehmann_reduce(const gca::DifferentialQ& d);

}  // namespace rhom::sullivan
