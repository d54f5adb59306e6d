#include "rhom/mostow/presentation.hpp"

namespace rhom::mostow {

std::vector<Index> AlgebraPresentation::generator_counts() const {
  std::vector<Index> out(static_cast<std::size_t>(cutoff + 1), 0);
  for (const auto& g : free->generators()) ++out[static_cast<std::size_t>(g.degree)];
  return out;
}

std::vector<Index> AlgebraPresentation::relation_counts() const {
  std::vector<Index> out;
  for (const auto& r : relations) out.push_back(static_cast<Index>(r.size()));
  return out;
}

AlgebraPresentation presentation(const gca::GradedAlgebra& u, int cutoff) {
  if (!u.is_connected()) throw Error("presentation requires a connected algebra");
  AlgebraPresentation p;
  p.cutoff = cutoff;
  std::vector<gca::GeneratorDecl> gens;
  for (int k = 1; k <= cutoff; ++k) {
    const Index n = u.dim(k);
    if (n == 0) continue;
    SubspaceQ comp = quotient_complement(SubspaceQ::full(n), u.decomposables(k));
    for (Index r = 0; r < comp.dim(); ++r) {
      Index pos = comp.pivots()[static_cast<std::size_t>(r)];
      gens.push_back({"g" + std::to_string(k) + "_" + std::to_string(r + 1), k, std::nullopt});
      p.images.push_back(comp.vector(r));
      p.labels.push_back(u.name(k, pos));
    }
  }
  p.free = gca::FreeCGA::make(std::move(gens), cutoff);
  for (int k = 0; k <= cutoff; ++k) {
    const auto& basis = p.free->monomial_basis(k);
    const Index target = u.dim(k);
    MatrixQ eval(target, static_cast<Index>(basis.size()));
    for (std::size_t j = 0; j < basis.size(); ++j) {
      VectorQ v = u.evaluate(basis[j], p.free, p.images);
      eval.col(static_cast<Index>(j)) = v.size() == 0 ? VectorQ(VectorQ::Zero(target)) : v;
    }
    if (rank(eval) != target) throw Error("free cover is not onto in degree " + std::to_string(k));
    SubspaceQ ker = kernel_basis(eval);
    p.relations.emplace_back();
    for (Index r = 0; r < ker.dim(); ++r) p.relations.back().push_back(gca::ElementQ::from_coordinates(p.free, k, ker.vector(r)));
  }
  return p;
}

}  // namespace rhom::mostow
