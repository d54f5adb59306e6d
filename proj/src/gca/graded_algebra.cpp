#include "rhom/gca/graded_algebra.hpp"

namespace rhom::gca {

GradedAlgebra::GradedAlgebra(std::vector<std::vector<std::string>> names, bool zero_above_top,
                             const ProductFn& product)
    : names_(std::move(names)), zero_above_top_(zero_above_top) {
  const int top = top_degree();
  for (int k1 = 0; k1 <= top; ++k1)
    for (int k2 = k1; k1 + k2 <= top; ++k2)
      for (Index i = 0; i < dim(k1); ++i)
        for (Index j = 0; j < dim(k2); ++j) {
          VectorQ p = product(k1, i, k2, j);
          if (p.size() != dim(k1 + k2)) throw Error("product table entry has the wrong size");
          if (k1 != k2 || i != j) {
            // graded commutativity fills the mirrored entry
            VectorQ q = p;
            if (k1 % 2 != 0 && k2 % 2 != 0) q = -q;
            products_.emplace(std::make_tuple(k2, j, k1, i), std::move(q));
          }
          products_.insert_or_assign(std::make_tuple(k1, i, k2, j), std::move(p));
        }
}

Index GradedAlgebra::dim(int k) const {
  if (k < 0) return 0;
  if (k > top_degree()) {
    if (zero_above_top_) return 0;
    throw CutoffExceeded("graded algebra known only through degree " + std::to_string(top_degree()));
  }
  return static_cast<Index>(names_[static_cast<std::size_t>(k)].size());
}

std::vector<Index> GradedAlgebra::dims() const {
  std::vector<Index> out;
  for (int k = 0; k <= top_degree(); ++k) out.push_back(dim(k));
  return out;
}

const VectorQ& GradedAlgebra::product(int k1, Index i, int k2, Index j) const {
  static const VectorQ empty;
  if (k1 + k2 > top_degree()) {
    if (zero_above_top_) return empty;
    throw CutoffExceeded("product lands above the known range of the graded algebra");
  }
  return products_.at(std::make_tuple(k1, i, k2, j));
}

VectorQ GradedAlgebra::multiply(int k1, const VectorQ& a, int k2, const VectorQ& b) const {
  VectorQ out = VectorQ::Zero(dim(k1 + k2));
  for (Index i = 0; i < a.size(); ++i) {
    if (is_zero(a(i))) continue;
    for (Index j = 0; j < b.size(); ++j) {
      if (is_zero(b(j))) continue;
      const VectorQ& p = product(k1, i, k2, j);
      Rational f = a(i) * b(j);
      for (Index r = 0; r < p.size(); ++r)
        if (!is_zero(p(r))) out(r) += p(r) * f;
    }
  }
  return out;
}

VectorQ GradedAlgebra::unit() const {
  if (!is_connected()) throw Error("graded algebra is not connected");
  VectorQ u(1);
  u(0) = 1;
  return u;
}

SubspaceQ GradedAlgebra::decomposables(int k) const {
  std::vector<VectorQ> prods;
  for (int k1 = 1; 2 * k1 <= k; ++k1)
    for (Index i = 0; i < dim(k1); ++i)
      for (Index j = 0; j < dim(k - k1); ++j) prods.push_back(product(k1, i, k - k1, j));
  MatrixQ m(static_cast<Index>(prods.size()), dim(k));
  for (std::size_t r = 0; r < prods.size(); ++r) m.row(static_cast<Index>(r)) = prods[r].transpose();
  return SubspaceQ::span(dim(k), m);
}

VectorQ GradedAlgebra::evaluate(const Monomial& m, const AlgebraPtr& free, const std::vector<VectorQ>& images) const {
  VectorQ acc = unit();
  int deg = 0;
  for (int g : m.factors()) {
    const int dg = free->degree_of(g);
    if (deg + dg > top_degree() && !zero_above_top_)
      throw CutoffExceeded("evaluation lands above the known range of the graded algebra");
    acc = multiply(deg, acc, dg, images.at(static_cast<std::size_t>(g)));
    deg += dg;
    if (acc.size() == 0 || is_zero_matrix(acc)) return VectorQ::Zero(dim(free->degree(m)));
  }
  return acc;
}

VectorQ GradedAlgebra::evaluate(const ElementQ& e, const std::vector<VectorQ>& images) const {
  auto deg = e.degree();
  if (!deg) {
    if (e.is_zero()) throw Error("cannot evaluate the zero element without a degree");
    throw Error("cannot evaluate an inhomogeneous element");
  }
  VectorQ out = VectorQ::Zero(dim(*deg));
  for (const auto& [m, c] : e.terms()) {
    VectorQ v = evaluate(m, e.algebra(), images);
    if (v.size() > 0) out += v * c;
  }
  return out;
}

GradedAlgebra GradedAlgebra::from_cohomology(const CohomologyRing& h) {
  std::vector<std::vector<std::string>> names;
  for (int k = 0; k <= h.max_degree(); ++k) {
    names.emplace_back();
    for (Index i = 0; i < h.betti(k); ++i) names.back().push_back(h.class_name(k, i));
  }
  const auto& a = h.algebra();
  int total = 0;
  for (const auto& g : a->generators()) total += g.degree;
  const bool zero_above = a->is_bounded() && h.max_degree() >= total;
  return GradedAlgebra(std::move(names), zero_above,
                       [&h](int k1, Index i, int k2, Index j) { return h.cup_product(k1, i, k2, j); });
}

GradedAlgebra GradedAlgebra::subalgebra(const CohomologyRing& h, const std::vector<MatrixQ>& basis,
                                        std::vector<std::vector<std::string>> names) {
  std::vector<SubspaceQ> spaces;
  for (int k = 0; k < static_cast<int>(basis.size()); ++k) spaces.push_back(SubspaceQ::span(h.betti(k), basis[static_cast<std::size_t>(k)]));
  if (names.empty()) {
    for (int k = 0; k < static_cast<int>(spaces.size()); ++k) {
      names.emplace_back();
      for (Index i = 0; i < spaces[static_cast<std::size_t>(k)].dim(); ++i) {
        std::string s;
        const VectorQ v = spaces[static_cast<std::size_t>(k)].vector(i);
        for (Index c = 0; c < v.size(); ++c) {
          if (is_zero(v(c))) continue;
          if (!s.empty()) s += " + ";
          if (v(c) != 1) s += to_string(v(c)) + "*";
          s += h.class_name(k, c);
        }
        names.back().push_back(s);
      }
    }
  }
  const int top = static_cast<int>(spaces.size()) - 1;
  int total = 0;
  for (const auto& g : h.algebra()->generators()) total += g.degree;
  const bool zero_above = h.algebra()->is_bounded() && top >= total;
  return GradedAlgebra(std::move(names), zero_above, [&](int k1, Index i, int k2, Index j) {
    const auto& s1 = spaces[static_cast<std::size_t>(k1)];
    const auto& s2 = spaces[static_cast<std::size_t>(k2)];
    VectorQ p = h.multiply(k1, s1.vector(i), k2, s2.vector(j));
    auto c = spaces[static_cast<std::size_t>(k1 + k2)].coordinates(p);
    if (!c) throw Error("subspace is not closed under products in degree " + std::to_string(k1 + k2));
    return *c;
  });
}

GradedAlgebra GradedAlgebra::from_presentation(const AlgebraPtr& free, const std::vector<ElementQ>& relations) {
  const int top = free->cutoff();
  std::vector<SubspaceQ> ideal;
  std::vector<std::vector<Index>> standard;
  std::vector<std::vector<std::string>> names;
  for (int n = 0; n <= top; ++n) {
    std::vector<VectorQ> rows;
    for (const auto& r : relations) {
      auto d = r.degree();
      if (!d) continue;
      if (*d > n) continue;
      for (const auto& m : free->monomial_basis(n - *d)) rows.push_back((ElementQ::monomial(free, m) * r).coordinates(n));
    }
    MatrixQ mat(static_cast<Index>(rows.size()), free->dim(n));
    for (std::size_t i = 0; i < rows.size(); ++i) mat.row(static_cast<Index>(i)) = rows[i].transpose();
    ideal.push_back(SubspaceQ::span(free->dim(n), mat));
    std::vector<bool> pivot(static_cast<std::size_t>(free->dim(n)), false);
    for (Index p : ideal.back().pivots()) pivot[static_cast<std::size_t>(p)] = true;
    standard.emplace_back();
    names.emplace_back();
    for (Index i = 0; i < free->dim(n); ++i)
      if (!pivot[static_cast<std::size_t>(i)]) {
        standard.back().push_back(i);
        names.back().push_back(n == 0 ? "1" : free->to_string(free->monomial_basis(n)[static_cast<std::size_t>(i)]));
      }
  }
  return GradedAlgebra(std::move(names), false, [&](int k1, Index i, int k2, Index j) {
    const auto& m1 = free->monomial_basis(k1)[static_cast<std::size_t>(standard[static_cast<std::size_t>(k1)][static_cast<std::size_t>(i)])];
    const auto& m2 = free->monomial_basis(k2)[static_cast<std::size_t>(standard[static_cast<std::size_t>(k2)][static_cast<std::size_t>(j)])];
    const int n = k1 + k2;
    VectorQ v = (ElementQ::monomial(free, m1) * ElementQ::monomial(free, m2)).coordinates(n);
    ideal[static_cast<std::size_t>(n)].reduce_in_place(v);
    const auto& st = standard[static_cast<std::size_t>(n)];
    VectorQ out(static_cast<Index>(st.size()));
    for (std::size_t s = 0; s < st.size(); ++s) out(static_cast<Index>(s)) = v(st[s]);
    return out;
  });
}

}  // namespace rhom::gca
