#include "rhom/gca/differential.hpp"

namespace rhom::gca {

std::vector<SquareViolation> check_d_squared(const DifferentialQ& d) {
  std::vector<SquareViolation> out;
  const auto& a = d.algebra();
  for (int g = 0; g < a->num_generators(); ++g) {
    ElementQ dd = d.apply(d.on_generator(g));
    if (!dd.is_zero()) out.push_back({g, a->generator(g).name, std::move(dd)});
  }
  return out;
}

bool d_squared_vanishes_on_monomials(const DifferentialQ& d, int max_degree) {
  for (int n = 0; n <= max_degree; ++n) {
    MatrixQ first = d.matrix(n);
    if (first.size() == 0) continue;
    if (!is_zero_matrix(multiply(d.matrix(n + 1), first))) return false;
  }
  return true;
}

}  // namespace rhom::gca
