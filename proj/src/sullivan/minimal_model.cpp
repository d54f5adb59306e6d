#include "rhom/sullivan/minimal_model.hpp"

#include <algorithm>

namespace rhom::sullivan {

namespace {

struct Built {
  gca::AlgebraPtr a;
  gca::DifferentialQ d;
  gca::MorphismQ phi;
};

Built build(const std::vector<ModelGenerator>& gens, const gca::DifferentialQ& target, int cutoff) {
  std::vector<gca::GeneratorDecl> decls;
  for (const auto& g : gens) decls.push_back({g.name, g.degree, std::nullopt});
  auto a = gca::FreeCGA::make(std::move(decls), cutoff);
  gca::DifferentialQ d(a);
  gca::MorphismQ phi(a, target.algebra());
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (!gens[g].differential.is_zero()) d.set(static_cast<int>(g), gens[g].differential.rebind(a));
    phi.set(static_cast<int>(g), gens[g].image);
  }
  return {a, std::move(d), std::move(phi)};
}

// Columns: classes of the model's representatives in degree k, in the
// target's class coordinates.
MatrixQ induced(const Built& m, const gca::CohomologyRing& hm, const gca::CohomologyRing& ha, int k) {
  MatrixQ out(ha.betti(k), hm.betti(k));
  for (Index j = 0; j < hm.betti(k); ++j) out.col(j) = ha.class_coordinates(k, m.phi.apply(hm.representative(k, j)));
  return out;
}

}  // namespace

std::vector<Index> MinimalModelReport::generator_counts() const {
  std::vector<Index> out(static_cast<std::size_t>(degree_cutoff + 1), 0);
  for (const auto& g : generators) ++out[static_cast<std::size_t>(g.degree)];
  return out;
}

std::vector<std::vector<Index>> MinimalModelReport::stage_counts() const {
  std::vector<std::vector<Index>> out(static_cast<std::size_t>(degree_cutoff + 1));
  for (const auto& g : generators) {
    auto& row = out[static_cast<std::size_t>(g.degree)];
    if (row.size() <= static_cast<std::size_t>(g.stage)) row.resize(static_cast<std::size_t>(g.stage) + 1, 0);
    ++row[static_cast<std::size_t>(g.stage)];
  }
  return out;
}

gca::MorphismQ MinimalModelReport::map() const {
  gca::MorphismQ phi(algebra, target.algebra());
  for (std::size_t g = 0; g < generators.size(); ++g) phi.set(static_cast<int>(g), generators[g].image);
  return phi;
}

bool MinimalModelReport::verified() const {
  return std::all_of(quasi_isomorphic.begin(), quasi_isomorphic.end(), [](bool b) { return b; }) &&
         model_betti == target_betti;
}

MinimalModelReport minimal_model(const gca::DifferentialQ& target, int degree_cutoff, int stage_cutoff) {
  if (degree_cutoff < 1) throw InsufficientCutoff("degree cutoff must be positive");
  const auto& ta = target.algebra();
  if (!ta->is_bounded() && ta->cutoff() < degree_cutoff + 2)
    throw InsufficientCutoff("target algebra must be enumerated through degree " + std::to_string(degree_cutoff + 2));
  gca::CohomologyRing ha(target, degree_cutoff + 1);

  MinimalModelReport out;
  out.target = target;
  out.degree_cutoff = degree_cutoff;
  out.stage_cutoff = stage_cutoff;
  out.settled.assign(static_cast<std::size_t>(degree_cutoff + 1), true);
  std::vector<ModelGenerator> gens;
  auto name = [&](int n) {
    Index c = 1;
    for (const auto& g : gens) c += g.degree == n;
    return "m" + std::to_string(n) + "_" + std::to_string(c);
  };

  for (int n = 1; n <= degree_cutoff; ++n) {
    // Closed generators for the cokernel on H^n.
    {
      Built m = build(gens, target, n + 1);
      gca::CohomologyRing hm(m.d, n, n);
      SubspaceQ image = column_space(induced(m, hm, ha, n));
      SubspaceQ comp = quotient_complement(SubspaceQ::full(ha.betti(n)), image);
      for (Index r = 0; r < comp.dim(); ++r) {
        gca::ElementQ rep(ta);
        VectorQ c = comp.vector(r);
        for (Index i = 0; i < c.size(); ++i)
          if (!is_zero(c(i))) rep += ha.representative(n, i) * c(i);
        gens.push_back({name(n), n, 0, gca::ElementQ(), rep});
      }
    }
    // Rounds killing the kernel on H^{n+1}.
    for (int stage = 1;; ++stage) {
      Built m = build(gens, target, n + 2);
      gca::CohomologyRing hm(m.d, n + 1, n + 1);
      SubspaceQ ker = kernel_basis(induced(m, hm, ha, n + 1));
      if (ker.empty()) break;
      if (stage > stage_cutoff) {
        out.stage_cutoff_hit = true;
        for (int k = n; k <= degree_cutoff; ++k) out.settled[static_cast<std::size_t>(k)] = false;
        break;
      }
      const MatrixQ dn = target.matrix(n);
      for (Index r = 0; r < ker.dim(); ++r) {
        gca::ElementQ z(m.a);
        VectorQ c = ker.vector(r);
        for (Index i = 0; i < c.size(); ++i)
          if (!is_zero(c(i))) z += hm.representative(n + 1, i) * c(i);
        auto pre = solve(dn, m.phi.apply(z).coordinates(n + 1));
        if (!pre) throw Error("image of a kernel class is not exact in the target");
        gens.push_back({name(n), n, stage, z, gca::ElementQ::from_coordinates(ta, n, *pre)});
      }
    }
  }

  Built fin = build(gens, target, degree_cutoff + 1);
  out.algebra = fin.a;
  out.d = fin.d;
  for (auto& g : gens) {
    if (!g.differential.is_zero()) g.differential = g.differential.rebind(fin.a);
    for (const auto& [mono, c] : g.differential.terms())
      if (mono.length() < 2) throw Error("model differential has a linear part on " + g.name);
  }
  out.generators = std::move(gens);
  fin.phi.require_chain_map(fin.d, target);

  gca::CohomologyRing hm(fin.d, degree_cutoff);
  for (int k = 0; k <= degree_cutoff; ++k) {
    out.model_betti.push_back(hm.betti(k));
    out.target_betti.push_back(ha.betti(k));
    MatrixQ f = induced(fin, hm, ha, k);
    const bool iso = f.rows() == f.cols() && rank(f) == f.rows();
    out.quasi_isomorphic.push_back(iso);
    if (!iso) out.settled[static_cast<std::size_t>(k)] = false;
    // Rank of the cocycles' linear parts.
    const auto& basis = fin.a->monomial_basis(k);
    std::vector<Index> gen_cols;
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (basis[j].length() == 1) gen_cols.push_back(static_cast<Index>(j));
    const auto& cz = hm.cocycles(k);
    MatrixQ proj(cz.dim(), static_cast<Index>(gen_cols.size()));
    for (Index r = 0; r < cz.dim(); ++r)
      for (std::size_t j = 0; j < gen_cols.size(); ++j) proj(r, static_cast<Index>(j)) = cz.vectors()(r, gen_cols[j]);
    out.closed_counts.push_back(k == 0 ? 0 : rank(proj));
  }
  return out;
}

}  // namespace rhom::sullivan
