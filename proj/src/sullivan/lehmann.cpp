#include "rhom/sullivan/lehmann.hpp"

#include "rhom/exactla/elimination.hpp"
#include "rhom/gca/cohomology.hpp"

namespace rhom::sullivan {

namespace {

std::vector<int> generators_in(const gca::FreeCGA& a, int n) {
  std::vector<int> out;
  for (int g = 0; g < a.num_generators(); ++g)
    if (a.degree_of(g) == n) out.push_back(g);
  return out;
}

int max_generator_degree(const gca::FreeCGA& a) {
  int m = 0;
  for (const auto& g : a.generators()) m = std::max(m, g.degree);
  return m;
}

}  // namespace

MatrixQ linear_part(const gca::DifferentialQ& d, int n) {
  const auto& a = *d.algebra();
  auto src = generators_in(a, n);
  auto tgt = generators_in(a, n + 1);
  MatrixQ m = MatrixQ::Zero(static_cast<Index>(tgt.size()), static_cast<Index>(src.size()));
  for (std::size_t j = 0; j < src.size(); ++j)
    for (std::size_t i = 0; i < tgt.size(); ++i)
      m(static_cast<Index>(i), static_cast<Index>(j)) = d.on_generator(src[j]).coefficient(gca::Monomial::generator(tgt[i]));
  return m;
}

bool has_linear_part(const gca::DifferentialQ& d) {
  const int top = max_generator_degree(*d.algebra());
  for (int n = 1; n <= top; ++n)
    if (!is_zero_matrix(linear_part(d, n))) return true;
  return false;
}

LehmannResult lehmann_reduce(const gca::DifferentialQ& input) {
  if (!input.algebra()) throw NonFreeInput("input has no underlying free algebra");
  const int cutoff = input.algebra()->cutoff() - 1;
  if (cutoff < 1) throw InsufficientCutoff("algebra cutoff too small to compare cohomology");
  gca::CohomologyRing before(input, cutoff);
  if (before.betti(1) != 0) throw H1NotZero("H^1 = " + std::to_string(before.betti(1)) + ", reduction needs H^1 = 0");

  LehmannResult out;
  out.trace.betti_before = before.betti_numbers();
  gca::DifferentialQ d = input;
  while (has_linear_part(d)) {
    const auto& a = d.algebra();
    const int top = max_generator_degree(*a);
    ReductionStep step;
    step.degree = -1;
    for (int n = 0; n <= cutoff; ++n) {
      const Index dim_n = static_cast<Index>(generators_in(*a, n).size());
      const Index im = n >= 1 ? rank(linear_part(d, n - 1)) : 0;
      const Index w = n <= top ? rank(linear_part(d, n)) : 0;
      step.image_dims.push_back(im);
      step.w_dims.push_back(w);
      step.kept_dims.push_back(dim_n - im - w);
      if (step.degree < 0 && w > 0) step.degree = n;
    }
    const int n = step.degree;
    auto src = generators_in(*a, n);
    auto tgt = generators_in(*a, n + 1);
    MatrixQ lin = linear_part(d, n);

    // W: generators of degree n whose linear images are independent.
    std::vector<Index> w_cols = greedy_complement(SubspaceQ(lin.rows()), MatrixQ(lin.transpose()));
    const Index k = static_cast<Index>(w_cols.size());
    // Triangular recombination of W so that each d'(w~_i) has its own pivot p_i.
    MatrixQ aug = MatrixQ::Zero(k, lin.rows() + k);
    for (Index i = 0; i < k; ++i) {
      aug.row(i).head(lin.rows()) = lin.col(w_cols[static_cast<std::size_t>(i)]).transpose();
      aug(i, lin.rows() + i) = 1;
    }
    auto rr = rref(aug);

    std::vector<bool> removed(static_cast<std::size_t>(a->num_generators()), false);
    std::vector<int> pivot_gen;
    for (Index i = 0; i < k; ++i) {
      removed[static_cast<std::size_t>(src[static_cast<std::size_t>(w_cols[static_cast<std::size_t>(i)])])] = true;
      int p = tgt[static_cast<std::size_t>(rr.pivots[static_cast<std::size_t>(i)])];
      removed[static_cast<std::size_t>(p)] = true;
      pivot_gen.push_back(p);
    }
    std::vector<gca::GeneratorDecl> kept;
    std::vector<int> new_index(static_cast<std::size_t>(a->num_generators()), -1);
    for (int g = 0; g < a->num_generators(); ++g) {
      if (removed[static_cast<std::size_t>(g)]) continue;
      new_index[static_cast<std::size_t>(g)] = static_cast<int>(kept.size());
      kept.push_back(a->generator(g));
    }
    auto b = gca::FreeCGA::make(kept, a->cutoff());
    gca::MorphismQ pi(a, b);
    for (int g = 0; g < a->num_generators(); ++g)
      if (new_index[static_cast<std::size_t>(g)] >= 0) pi.set(g, gca::ElementQ::generator(b, new_index[static_cast<std::size_t>(g)]));
    // Removed generators map to zero for now; d(w~_i) - p_i involves no p_j.
    std::vector<gca::ElementQ> p_images;
    for (Index i = 0; i < k; ++i) {
      gca::ElementQ dw(a);
      for (Index j = 0; j < k; ++j) {
        const Rational& c = rr.reduced(i, lin.rows() + j);
        if (!is_zero(c)) dw += d.on_generator(src[static_cast<std::size_t>(w_cols[static_cast<std::size_t>(j)])]) * c;
      }
      gca::ElementQ wt(a);
      for (Index j = 0; j < k; ++j) {
        const Rational& c = rr.reduced(i, lin.rows() + j);
        if (!is_zero(c)) wt += gca::ElementQ::generator(a, src[static_cast<std::size_t>(w_cols[static_cast<std::size_t>(j)])], c);
      }
      step.eliminated.emplace_back(wt.to_string(), a->generator(pivot_gen[static_cast<std::size_t>(i)]).name);
      step.pair_differentials.push_back(dw.to_string());
      dw -= gca::ElementQ::generator(a, pivot_gen[static_cast<std::size_t>(i)]);
      p_images.push_back(-pi.apply(dw));
    }
    for (Index i = 0; i < k; ++i) pi.set(pivot_gen[static_cast<std::size_t>(i)], p_images[static_cast<std::size_t>(i)]);

    gca::DifferentialQ next(b);
    for (int g = 0; g < a->num_generators(); ++g) {
      const int ng = new_index[static_cast<std::size_t>(g)];
      if (ng >= 0) next.set(ng, pi.apply(d.on_generator(g)));
    }
    auto bad = gca::check_d_squared(next);
    if (!bad.empty()) throw DifferentialNotSquareZero("reduced differential fails d^2 = 0 on " + bad.front().name);
    out.trace.steps.push_back(std::move(step));
    d = std::move(next);
  }
  gca::CohomologyRing after(d, cutoff);
  out.trace.betti_after = after.betti_numbers();
  if (out.trace.betti_after != out.trace.betti_before) throw Error("reduction changed the Betti numbers");
  out.minimal = std::move(d);
  return out;
}

}  // namespace rhom::sullivan
