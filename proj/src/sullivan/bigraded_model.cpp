#include "rhom/sullivan/bigraded_model.hpp"

#include <algorithm>

namespace rhom::sullivan {

namespace {

struct PendingGenerator {
  gca::GeneratorDecl decl;
  gca::ElementQ d;  // in some earlier algebra with the same leading generators
};

// Positions of the degree-q monomials of lower degree n.
std::vector<Index> chains(const gca::FreeCGA& a, int q, int n) {
  std::vector<Index> out;
  if (q < 0 || q > a.cutoff()) return out;
  const auto& basis = a.monomial_basis(q);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (a.lower_degree(basis[i]) == n) out.push_back(static_cast<Index>(i));
  return out;
}

MatrixQ restrict(const MatrixQ& m, const std::vector<Index>& rows, const std::vector<Index>& cols) {
  MatrixQ out(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) out(static_cast<Index>(r), static_cast<Index>(c)) = m(rows[r], cols[c]);
  return out;
}

// Element of degree q supported on `idx`, given local coordinates.
gca::ElementQ lift(const gca::AlgebraPtr& a, int q, const std::vector<Index>& idx, const VectorQ& local) {
  gca::ElementQ e(a);
  const auto& basis = a->monomial_basis(q);
  for (std::size_t i = 0; i < idx.size(); ++i) e.add_term(basis[static_cast<std::size_t>(idx[i])], local(static_cast<Index>(i)));
  return e;
}

VectorQ localize(const gca::ElementQ& e, int q, const std::vector<Index>& idx) {
  VectorQ full = e.coordinates(q);
  VectorQ out(static_cast<Index>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i) out(static_cast<Index>(i)) = full(idx[i]);
  return out;
}

MatrixQ rows_of(const std::vector<VectorQ>& vs, Index ambient) {
  MatrixQ m(static_cast<Index>(vs.size()), ambient);
  for (std::size_t r = 0; r < vs.size(); ++r) m.row(static_cast<Index>(r)) = vs[r].transpose();
  return m;
}

struct Built {
  gca::AlgebraPtr a;
  gca::DifferentialQ d;
};

Built build(const std::vector<PendingGenerator>& gens, int cutoff) {
  std::vector<gca::GeneratorDecl> decls;
  for (const auto& g : gens) decls.push_back(g.decl);
  Built b{gca::FreeCGA::make(std::move(decls), cutoff), {}};
  b.d = gca::DifferentialQ(b.a);
  for (std::size_t g = 0; g < gens.size(); ++g)
    if (!gens[g].d.is_zero()) b.d.set(static_cast<int>(g), gens[g].d.rebind(b.a));
  return b;
}

int max_lower_degree(const gca::FreeCGA& a, int top) {
  int out = 0;
  for (int q = 0; q <= top; ++q)
    for (const auto& m : a.monomial_basis(q)) out = std::max(out, a.lower_degree(m));
  return out;
}

// Cycles of lower degree n in total degree q, in local coordinates of chains(q, n).
SubspaceQ lower_cycles(const Built& b, const std::vector<MatrixQ>& dm, int q, int n) {
  auto src = chains(*b.a, q, n);
  auto tgt = chains(*b.a, q + 1, n - 1);
  if (n == 0 || tgt.empty()) return SubspaceQ::full(static_cast<Index>(src.size()));
  return kernel_basis(restrict(dm[static_cast<std::size_t>(q)], tgt, src));
}

SubspaceQ lower_boundaries(const Built& b, const std::vector<MatrixQ>& dm, int q, int n) {
  auto tgt = chains(*b.a, q, n);
  if (q == 0) return SubspaceQ(static_cast<Index>(tgt.size()));
  auto src = chains(*b.a, q - 1, n + 1);
  if (src.empty()) return SubspaceQ(static_cast<Index>(tgt.size()));
  return column_space(restrict(dm[static_cast<std::size_t>(q - 1)], tgt, src));
}

}  // namespace

int BigradedModel::num_stages() const {
  int s = 0;
  for (int g = 0; g < algebra->num_generators(); ++g) s = std::max(s, stage_of(g) + 1);
  return s;
}

Index BigradedModel::count(int stage, int degree) const {
  return static_cast<Index>(generators_of(stage, degree).size());
}

std::vector<std::vector<Index>> BigradedModel::count_table() const {
  std::vector<std::vector<Index>> out(static_cast<std::size_t>(num_stages()),
                                      std::vector<Index>(static_cast<std::size_t>(degree_cutoff + 1), 0));
  for (int g = 0; g < algebra->num_generators(); ++g) {
    const int deg = algebra->degree_of(g);
    if (deg <= degree_cutoff) ++out[static_cast<std::size_t>(stage_of(g))][static_cast<std::size_t>(deg)];
  }
  return out;
}

std::vector<int> BigradedModel::generators_of(int stage, int degree) const {
  std::vector<int> out;
  for (int g = 0; g < algebra->num_generators(); ++g)
    if (stage_of(g) == stage && algebra->degree_of(g) == degree) out.push_back(g);
  return out;
}

bool BigradedModel::all_settled() const {
  return std::all_of(settled.begin(), settled.end(), [](bool b) { return b; });
}

std::vector<Index> BigradedModel::betti_numbers() const {
  std::vector<Index> out;
  for (const auto& row : lower_betti) {
    Index s = 0;
    for (Index v : row) s += v;
    out.push_back(s);
  }
  return out;
}

BigradedModel bigraded_model(const gca::GradedAlgebra& h, int degree_cutoff, int stage_cutoff) {
  if (!h.is_connected()) throw NotConnected("bigraded model needs a connected algebra");
  if (degree_cutoff < 1 || stage_cutoff < 1) throw InsufficientCutoff("degree and stage cutoffs must be positive");
  const int top = degree_cutoff + 1;  // cycles in degree top give generators of degree degree_cutoff
  if (h.top_degree() < top && !h.zero_above_top())
    throw InsufficientCutoff("target algebra must be known through degree " + std::to_string(top));

  BigradedModel out;
  out.degree_cutoff = degree_cutoff;
  out.stage_cutoff = stage_cutoff;
  std::vector<PendingGenerator> gens;

  // Stage 0: indecomposables with their section rho.
  for (int k = 1; k <= degree_cutoff; ++k) {
    const Index n = h.dim(k);
    if (n == 0) continue;
    SubspaceQ comp = quotient_complement(SubspaceQ::full(n), h.decomposables(k));
    for (Index r = 0; r < comp.dim(); ++r) {
      gens.push_back({{"z0_" + std::to_string(k) + "_" + std::to_string(r + 1), k, 0}, {}});
      out.rho.push_back(comp.vector(r));
      out.labels.push_back(h.name(k, comp.pivots()[static_cast<std::size_t>(r)]));
    }
  }
  const std::size_t n0 = gens.size();
  auto rho_matrix = [&](const gca::AlgebraPtr& a, int q, const std::vector<Index>& cols) {
    const auto& basis = a->monomial_basis(q);
    std::vector<VectorQ> rho_ext = out.rho;
    for (int g = static_cast<int>(n0); g < a->num_generators(); ++g) rho_ext.push_back(VectorQ::Zero(h.dim(a->degree_of(g))));
    MatrixQ m(h.dim(q), static_cast<Index>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) {
      VectorQ v = h.evaluate(basis[static_cast<std::size_t>(cols[j])], a, rho_ext);
      m.col(static_cast<Index>(j)) = v.size() == 0 ? VectorQ(VectorQ::Zero(h.dim(q))) : v;
    }
    return m;
  };

  // Stage 1: a minimal set of ideal generators of K = ker rho.
  {
    Built b0 = build(gens, top);
    std::vector<SubspaceQ> kernel(static_cast<std::size_t>(top + 1));
    for (int q = 0; q <= top; ++q) {
      auto all = chains(*b0.a, q, 0);
      kernel[static_cast<std::size_t>(q)] = kernel_basis(rho_matrix(b0.a, q, all));
    }
    for (int q = 2; q <= top; ++q) {
      const auto& kq = kernel[static_cast<std::size_t>(q)];
      if (kq.empty()) continue;
      std::vector<VectorQ> prods;
      for (int a = 1; a < q; ++a) {
        const auto& ka = kernel[static_cast<std::size_t>(q - a)];
        for (const auto& m : b0.a->monomial_basis(a))
          for (Index r = 0; r < ka.dim(); ++r) {
            auto e = gca::ElementQ::monomial(b0.a, m) * gca::ElementQ::from_coordinates(b0.a, q - a, ka.vector(r));
            prods.push_back(e.coordinates(q));
          }
      }
      SubspaceQ dec = SubspaceQ::span(kq.ambient_dim(), rows_of(prods, kq.ambient_dim()));
      SubspaceQ comp = quotient_complement(kq, dec);
      for (Index r = 0; r < comp.dim(); ++r)
        gens.push_back({{"z1_" + std::to_string(q - 1) + "_" + std::to_string(r + 1), q - 1, 1},
                        gca::ElementQ::from_coordinates(b0.a, q, comp.vector(r))});
    }
  }

  // Stage n + 1 from the lower-degree-n homology of the model so far.
  for (int n = 1;; ++n) {
    Built b = build(gens, top + 1);
    if (n > max_lower_degree(*b.a, top)) break;
    std::vector<MatrixQ> dm;
    for (int q = 0; q <= top; ++q) dm.push_back(b.d.matrix(q));
    std::vector<SubspaceQ> cycles(static_cast<std::size_t>(top + 1));
    for (int q = 0; q <= top; ++q) cycles[static_cast<std::size_t>(q)] = lower_cycles(b, dm, q, n);
    std::vector<PendingGenerator> added;
    for (int q = 2; q <= top; ++q) {
      const auto& cq = cycles[static_cast<std::size_t>(q)];
      if (cq.empty()) continue;
      auto idx = chains(*b.a, q, n);
      SubspaceQ killed = lower_boundaries(b, dm, q, n);
      std::vector<VectorQ> prods;
      for (int a = 1; a < q; ++a) {
        const auto& ca = cycles[static_cast<std::size_t>(q - a)];
        if (ca.empty()) continue;
        auto idx_a = chains(*b.a, q - a, n);
        for (Index m : chains(*b.a, a, 0))
          for (Index r = 0; r < ca.dim(); ++r) {
            auto e = gca::ElementQ::monomial(b.a, b.a->monomial_basis(a)[static_cast<std::size_t>(m)]) *
                     lift(b.a, q - a, idx_a, ca.vector(r));
            prods.push_back(localize(e, q, idx));
          }
      }
      killed = killed.sum(SubspaceQ::span(cq.ambient_dim(), rows_of(prods, cq.ambient_dim())));
      SubspaceQ comp = quotient_complement(cq, killed);
      if (comp.empty()) continue;
      if (n + 1 > stage_cutoff) {
        out.stage_cutoff_hit = true;
        continue;
      }
      for (Index r = 0; r < comp.dim(); ++r)
        added.push_back({{"z" + std::to_string(n + 1) + "_" + std::to_string(q - 1) + "_" + std::to_string(r + 1), q - 1, n + 1},
                         lift(b.a, q, idx, comp.vector(r))});
    }
    gens.insert(gens.end(), added.begin(), added.end());
    if (n >= stage_cutoff) break;
  }

  Built fin = build(gens, top);
  out.algebra = fin.a;
  out.d = fin.d;

  // Per-degree verification of the cohomology against H.
  std::vector<MatrixQ> dm;
  for (int q = 0; q <= degree_cutoff; ++q) dm.push_back(fin.d.matrix(q));
  const int low = max_lower_degree(*fin.a, degree_cutoff);
  for (int q = 0; q <= degree_cutoff; ++q) {
    std::vector<Index> row;
    bool ok = true;
    for (int n = 0; n <= low; ++n) {
      auto idx = chains(*fin.a, q, n);
      SubspaceQ cyc = lower_cycles(fin, dm, q, n);
      SubspaceQ bnd = lower_boundaries(fin, dm, q, n);
      row.push_back(cyc.dim() - bnd.dim());
      if (n == 0) {
        MatrixQ rho = rho_matrix(fin.a, q, idx);
        if (rank(rho) != h.dim(q)) ok = false;
        if (!bnd.empty() && !is_zero_matrix(rhom::multiply(rho, MatrixQ(bnd.vectors().transpose())))) ok = false;
        if (cyc.dim() - bnd.dim() != h.dim(q)) ok = false;
      } else if (cyc.dim() != bnd.dim()) {
        ok = false;
      }
    }
    out.lower_betti.push_back(std::move(row));
    out.settled.push_back(ok);
  }
  return out;
}

}  // namespace rhom::sullivan
