#include "rhom/gca/graded_algebra.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace rhom;
using namespace rhom::gca;

namespace {

AlgebraPtr exterior(std::vector<std::string> names, int cutoff) {
  std::vector<GeneratorDecl> gens;
  for (auto& n : names) gens.push_back({n, 1, std::nullopt});
  return FreeCGA::make(std::move(gens), cutoff);
}

ElementQ gen(const AlgebraPtr& a, const std::string& name) { return ElementQ::generator(a, *a->find_generator(name)); }

// Heisenberg CE complex on generators with the given suffix: dz = xy.
void heisenberg_d(DifferentialQ& d, const std::string& s) {
  const auto& a = d.algebra();
  d.set(*a->find_generator("z" + s), gen(a, "x" + s) * gen(a, "y" + s));
}

// Sign of sorting a word of odd letters by bubble sort: independent of the
// library's pair-counting rule.
int bubble_sign(std::vector<int> w) {
  int sign = 1;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j + 1 < w.size() - i; ++j)
      if (w[j] > w[j + 1]) {
        std::swap(w[j], w[j + 1]);
        sign = -sign;
      }
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == w[i + 1]) return 0;
  return sign;
}

}  // namespace

TEST_CASE("monomial bases") {
  auto xyz = exterior({"x", "y", "z"}, 3);
  const auto& b2 = xyz->monomial_basis(2);
  REQUIRE(b2.size() == 3);
  CHECK(xyz->to_string(b2[0]) == "x*y");
  CHECK(xyz->to_string(b2[1]) == "x*z");
  CHECK(xyz->to_string(b2[2]) == "y*z");

  auto u = FreeCGA::make({{"u", 2, std::nullopt}}, 6);
  REQUIRE(u->monomial_basis(4).size() == 1);
  CHECK(u->to_string(u->monomial_basis(4)[0]) == "u^2");
  CHECK(u->dim(3) == 0);
  CHECK_THROWS_AS(u->monomial_basis(7), CutoffExceeded);

  auto n = exterior({"t", "x1", "y1", "z1", "x2", "y2", "z2"}, 7);
  CHECK(n->dim(3) == 35);
  CHECK(n->dim(8) == 0);  // bounded exterior algebra
}

TEST_CASE("Koszul signs") {
  auto a = exterior({"x1", "y1", "z1", "y2"}, 4);
  auto x = gen(a, "x1"), y = gen(a, "y1");
  CHECK(x * y == -(y * x));
  CHECK((x * x).is_zero());
  auto lhs = (gen(a, "x1") * gen(a, "z1")) * (gen(a, "y1") * gen(a, "y2"));
  // x1 z1 y1 y2 = -x1 y1 z1 y2
  auto expected = -(gen(a, "x1") * gen(a, "y1") * gen(a, "z1") * gen(a, "y2"));
  CHECK(lhs == expected);
  CHECK(lhs.to_string() == "-x1*y1*z1*y2");

  auto other = exterior({"x1"}, 1);
  CHECK_THROWS_AS(gen(a, "x1") * gen(other, "x1"), MixedAlgebras);
}

TEST_CASE("multiplication sign agrees with a bubble-sort oracle") {
  auto a = exterior({"a", "b", "c", "d", "e", "f"}, 6);
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> g(0, 5), len(1, 4);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<int> w;
    int l = len(rng);
    for (int i = 0; i < l; ++i) w.push_back(g(rng));
    ElementQ prod = ElementQ::unit(a);
    for (int v : w) prod = prod * ElementQ::generator(a, v);
    int s = bubble_sign(w);
    if (s == 0) {
      CHECK(prod.is_zero());
    } else {
      std::vector<int> sorted = w;
      std::sort(sorted.begin(), sorted.end());
      CHECK(prod == ElementQ::monomial(a, Monomial(sorted), Rational(s)));
    }
  }
}

TEST_CASE("graded commutativity on mixed-parity monomials") {
  auto a = FreeCGA::make({{"x", 1, {}}, {"y", 1, {}}, {"u", 2, {}}, {"t", 3, {}}}, 8);
  for (int p = 0; p <= 4; ++p)
    for (int q = 0; p + q <= 8; ++q)
      for (const auto& m1 : a->monomial_basis(p))
        for (const auto& m2 : a->monomial_basis(q)) {
          auto e1 = ElementQ::monomial(a, m1), e2 = ElementQ::monomial(a, m2);
          Rational s = (p * q) % 2 ? -1 : 1;
          CHECK(e1 * e2 == (e2 * e1) * s);
        }
}

TEST_CASE("differential examples") {
  auto a = exterior({"x1", "y1", "z1", "x2", "y2", "z2"}, 6);
  DifferentialQ d(a);
  heisenberg_d(d, "1");
  heisenberg_d(d, "2");
  CHECK(d.apply(gen(a, "z1")) == gen(a, "x1") * gen(a, "y1"));
  CHECK(d.apply(gen(a, "x1")).is_zero());
  auto z1z2 = gen(a, "z1") * gen(a, "z2");
  auto expected = gen(a, "x1") * gen(a, "y1") * gen(a, "z2") - gen(a, "z1") * gen(a, "x2") * gen(a, "y2");
  CHECK(d.apply(z1z2) == expected);
  CHECK(check_d_squared(d).empty());
  CHECK(d_squared_vanishes_on_monomials(d, 4));
}

TEST_CASE("check_d_squared flags a table that breaks Jacobi") {
  // [e1,e2]=e3, [e1,e3]=e2. Oracle: Jacobi sum for (e1,e2,e3) is
  // [e1,[e2,e3]] + [e2,[e3,e1]] + [e3,[e1,e2]] = 0 + [e2,-e2] + [e3,e3] = 0,
  // so Jacobi holds and d^2 must vanish as well.
  auto a = exterior({"e1", "e2", "e3"}, 3);
  DifferentialQ d(a);
  d.set(2, gen(a, "e1") * gen(a, "e2"));
  d.set(1, gen(a, "e1") * gen(a, "e3"));
  CHECK(check_d_squared(d).empty());

  // dz = xy, dx = zw: d(dz) = zwy and d(dx) = xyw, both nonzero.
  auto b = exterior({"x", "y", "z", "w"}, 4);
  DifferentialQ bad(b);
  bad.set(2, gen(b, "x") * gen(b, "y"));
  bad.set(0, gen(b, "z") * gen(b, "w"));
  auto v = check_d_squared(bad);
  REQUIRE(v.size() == 2);
  CHECK(v[0].name == "x");
  CHECK(v[0].image == gen(b, "x") * gen(b, "y") * gen(b, "w"));
  CHECK(v[1].name == "z");
  CHECK(v[1].image == gen(b, "z") * gen(b, "w") * gen(b, "y"));
  CHECK_THROWS_AS(CohomologyRing(bad, 3), DifferentialNotSquareZero);

  auto ut = FreeCGA::make({{"u", 2, {}}, {"t", 3, {}}}, 8);
  DifferentialQ dut(ut);
  dut.set(1, gen(ut, "u") * gen(ut, "u"));
  CHECK(check_d_squared(dut).empty());
}

TEST_CASE("Heisenberg cohomology") {
  auto a = exterior({"x1", "y1", "z1"}, 3);
  DifferentialQ d(a);
  heisenberg_d(d, "1");
  CohomologyRing h(d, 3);
  CHECK(h.betti_numbers() == std::vector<Index>{1, 2, 2, 1});
  CHECK(h.class_name(1, 0) == "[x1]");
  CHECK(h.class_name(1, 1) == "[y1]");
  CHECK(h.class_name(2, 0) == "[x1*z1]");
  CHECK(h.class_name(2, 1) == "[y1*z1]");
  CHECK(h.class_name(3, 0) == "[x1*y1*z1]");

  // [x1][y1] = 0 since x1 y1 = d z1
  CHECK(is_zero_matrix(h.cup_product(1, 0, 1, 1)));
  // [x1 z1][y1] = -[x1 y1 z1]
  VectorQ expected(1);
  expected << -1;
  CHECK(h.cup_product(2, 0, 1, 1) == expected);
  // unit
  for (Index i = 0; i < 2; ++i) CHECK(h.cup_product(0, 0, 2, i) == VectorQ(VectorQ::Unit(2, i)));

  CHECK_THROWS_AS(h.class_coordinates(1, gen(a, "z1")), NotACocycle);
  // a coboundary has zero class
  CHECK(is_zero_matrix(h.class_coordinates(2, gen(a, "x1") * gen(a, "y1"))));
}

TEST_CASE("small cohomology examples") {
  auto ab = exterior({"a", "b"}, 2);
  CHECK(CohomologyRing(DifferentialQ(ab), 2).betti_numbers() == std::vector<Index>{1, 2, 1});

  // contractible pair: |t| = 1, |u| = 2, dt = u
  auto ut = FreeCGA::make({{"t", 1, {}}, {"u", 2, {}}}, 7);
  DifferentialQ d(ut);
  d.set(0, gen(ut, "u"));
  CHECK(CohomologyRing(d, 6).betti_numbers() == std::vector<Index>{1, 0, 0, 0, 0, 0, 0});
}

TEST_CASE("Kunneth for the nilradical") {
  auto a = exterior({"t", "x1", "y1", "z1", "x2", "y2", "z2"}, 7);
  DifferentialQ d(a);
  heisenberg_d(d, "1");
  heisenberg_d(d, "2");
  CohomologyRing h(d, 7);
  auto direct = h.betti_numbers();
  auto conv = kunneth(kunneth({1, 1}, {1, 2, 2, 1}), {1, 2, 2, 1});
  CHECK(direct == conv);
  CHECK(direct == std::vector<Index>{1, 5, 12, 18, 18, 12, 5, 1});
  for (std::size_t k = 0; k < direct.size(); ++k) CHECK(direct[k] == direct[direct.size() - 1 - k]);
}

TEST_CASE("induced maps") {
  auto a = exterior({"x1", "y1", "z1"}, 3);
  DifferentialQ dq(a);
  heisenberg_d(dq, "1");
  CohomologyRing h(dq, 3);

  MorphismQ id(a, a);
  for (int g = 0; g < 3; ++g) id.set(g, ElementQ::generator(a, g));
  for (const auto& m : induced_map_on_cohomology(id, h, h)) CHECK(m == identity<Rational>(m.rows()));

  Morphism<Laurent> eta(a, a);
  eta.set(0, ElementL::generator(a, 0, Laurent::nu(1)));
  eta.set(1, ElementL::generator(a, 1, Laurent::nu(-2)));
  eta.set(2, ElementL::generator(a, 2, Laurent::nu(-1)));
  auto mats = induced_map_on_cohomology(eta, h, h);
  MatrixL h1(2, 2);
  h1 << Laurent::nu(1), Laurent(), Laurent(), Laurent::nu(-2);
  CHECK(mats[1] == h1);
  CHECK(mats[3](0, 0) == Laurent::nu(-2));

  MorphismQ broken(a, a);
  broken.set(0, gen(a, "x1"));
  broken.set(1, gen(a, "y1"));
  broken.set(2, gen(a, "z1") * Rational(2));
  CHECK_THROWS_AS(induced_map_on_cohomology(broken, h, h), NotAChainMap);
}

TEST_CASE("induced maps respect cup products and compose") {
  auto a = exterior({"t", "x1", "y1", "z1", "x2", "y2", "z2"}, 7);
  DifferentialQ d(a);
  heisenberg_d(d, "1");
  heisenberg_d(d, "2");
  CohomologyRing h(d, 7);
  // swap the two Heisenberg factors and send t to t + x1
  MorphismQ phi(a, a);
  phi.set(0, gen(a, "t") + gen(a, "x1"));
  for (int g = 1; g <= 3; ++g) phi.set(g, ElementQ::generator(a, g + 3));
  for (int g = 4; g <= 6; ++g) phi.set(g, ElementQ::generator(a, g - 3));
  auto m = induced_map_on_cohomology(phi, h, h);
  for (int k1 = 1; k1 <= 3; ++k1)
    for (int k2 = k1; k1 + k2 <= 4; ++k2)
      for (Index i = 0; i < h.betti(k1); ++i)
        for (Index j = 0; j < h.betti(k2); ++j) {
          VectorQ lhs = multiply(m[static_cast<std::size_t>(k1 + k2)], VectorQ(h.cup_product(k1, i, k2, j)));
          VectorQ rhs = h.multiply(k1, m[static_cast<std::size_t>(k1)].col(i), k2, m[static_cast<std::size_t>(k2)].col(j));
          CHECK(lhs == rhs);
        }

  MorphismQ phi2(a, a);
  for (int g = 0; g < 7; ++g) phi2.set(g, phi.apply(phi.on_generator(g)));
  auto m2 = induced_map_on_cohomology(phi2, h, h);
  for (int k = 0; k <= 7; ++k) CHECK(m2[static_cast<std::size_t>(k)] == multiply(m[static_cast<std::size_t>(k)], m[static_cast<std::size_t>(k)]));
}

TEST_CASE("d squared vanishes on random monomials of admitted differentials") {
  auto a = FreeCGA::make({{"x", 1, {}}, {"y", 1, {}}, {"z", 1, {}}, {"u", 2, {}}, {"t", 3, {}}, {"s", 2, {}}}, 9);
  DifferentialQ d(a);
  d.set(2, gen(a, "x") * gen(a, "y"));
  d.set(4, gen(a, "u") * gen(a, "u"));
  d.set(5, gen(a, "z") * gen(a, "x") * gen(a, "y"));
  REQUIRE(check_d_squared(d).empty());
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<int> deg(0, 7);
    int n = deg(rng);
    const auto& basis = a->monomial_basis(n);
    if (basis.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    CHECK(d.apply(d.apply(basis[pick(rng)])).is_zero());
  }
}

TEST_CASE("graded algebras from cohomology and presentations") {
  auto a = exterior({"x1", "y1", "z1"}, 3);
  DifferentialQ d(a);
  heisenberg_d(d, "1");
  CohomologyRing h(d, 3);
  auto g = GradedAlgebra::from_cohomology(h);
  CHECK(g.dims() == std::vector<Index>{1, 2, 2, 1});
  CHECK(g.zero_above_top());
  CHECK(g.decomposables(2).dim() == 0);
  CHECK(g.decomposables(3).dim() == 1);
  CHECK(g.product(1, 1, 2, 0) == g.product(2, 0, 1, 1));

  auto u = FreeCGA::make({{"u", 2, {}}}, 8);
  auto q = GradedAlgebra::from_presentation(u, {gen(u, "u") * gen(u, "u")});
  CHECK(q.dims() == std::vector<Index>{1, 0, 1, 0, 0, 0, 0, 0, 0});
  CHECK(is_zero_matrix(q.product(2, 0, 2, 0)));
  CHECK(q.name(2, 0) == "u");
  std::vector<VectorQ> images{VectorQ::Ones(1)};
  CHECK(q.evaluate(gen(u, "u"), images) == VectorQ::Ones(1));
  CHECK(is_zero_matrix(q.evaluate(gen(u, "u") * gen(u, "u"), images)));
}
