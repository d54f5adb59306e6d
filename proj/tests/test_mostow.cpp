#include "rhom/mostow/benson_gordon.hpp"
#include "rhom/mostow/presentation.hpp"

#include <doctest.h>

#include <map>
#include <random>

using namespace rhom;
using namespace rhom::mostow;
using liealg::LieAlgebra;

namespace {

liealg::WeightVector bg_weights() {
  auto g = liealg::benson_gordon();
  return liealg::verify_splitting(g, liealg::SplittingSpec::complement_of(g, 0));
}

FiberAction bg_action(VectorQ r = VectorQ()) {
  return build_fiber_action(liealg::benson_gordon_nilradical(), {bg_weights(), std::move(r)});
}

VectorQ random_twist(std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, 4);
  const int vals[] = {-2, -1, 0, 1, 2};
  VectorQ r(7);
  for (Index i = 0; i < 7; ++i) r(i) = vals[pick(rng)];
  return r;
}

// Weight of a label like "[t][x1z1]" from a hand table.
int label_weight(const std::string& label) {
  static const std::map<std::string, int> w{{"t", 0}, {"x1", 1}, {"y1", -2}, {"z1", -1},
                                            {"x2", -1}, {"y2", 2}, {"z2", 1}};
  int s = 0;
  for (std::size_t i = 0; i < label.size(); ++i)
    if (std::isalpha(static_cast<unsigned char>(label[i]))) {
      std::string tok(1, label[i]);
      if (i + 1 < label.size() && std::isdigit(static_cast<unsigned char>(label[i + 1]))) tok += label[i + 1];
      s += w.at(tok);
    }
  return s;
}

VectorQ class_of(const FiberAction& f, const std::string& label) {
  auto c = parse_class_label(f.ce.algebra, label);
  return f.cohomology->class_coordinates(*c.degree(), c);
}

}  // namespace

TEST_CASE("fiber action on generators") {
  auto f = bg_action();
  auto idx = [&](const char* n) { return *f.ce.algebra->find_generator(n); };
  CHECK(f.on_dual(idx("x1"), idx("x1")) == Laurent::nu(1));
  CHECK(f.on_dual(idx("y1"), idx("y1")) == Laurent::nu(-2));
  CHECK(f.on_dual(idx("z2"), idx("z2")) == Laurent::nu(1));
  CHECK(f.on_dual(idx("t"), idx("t")).is_one());
  CHECK(f.specialization_checks > 0);

  auto n = liealg::benson_gordon_nilradical();
  liealg::WeightVector zero{std::vector<Rational>(7, Rational(0)), true};
  auto id = build_fiber_action(n, {zero, VectorQ()});
  CHECK(id.on_dual == identity<Laurent>(7));

  // R = X1: exp(ad X1) = I + ad X1 with ad X1 (Y1) = Z1, so the dual map sends
  // z1 to nu^-1 z1 + nu^-2 y1 and fixes the line of y1.
  VectorQ r = VectorQ::Zero(7);
  r(1) = 1;
  auto tw = bg_action(r);
  CHECK(tw.on_dual(idx("y1"), idx("z1")) == Laurent::nu(-2));
  CHECK(tw.on_dual(idx("z1"), idx("z1")) == Laurent::nu(-1));
  for (int i = 0; i < 7; ++i)
    if (i != idx("y1")) CHECK(tw.on_dual(i, idx("y1")).is_zero());

  LieAlgebra sx("sx", {"S", "X"});
  sx.set_bracket_terms(0, 1, {{1, Rational(1)}});
  liealg::WeightVector w0{{0, 0}, true};
  VectorQ rs = VectorQ::Zero(2);
  rs(0) = 1;
  CHECK_THROWS_AS(build_fiber_action(sx, {w0, rs}), NotNilpotent);
}

TEST_CASE("triangular certificate") {
  auto f = bg_action();
  auto cert = certify_triangular(f, bg::listed_basis(f.ce.algebra));
  const auto& h1 = cert.degrees[1];
  REQUIRE(h1.diagonal.size() == 5);
  CHECK(h1.labels[0] == "[x1]");
  CHECK(h1.diagonal[0] == Laurent::nu(1));
  CHECK(h1.diagonal[1] == Laurent::nu(-2));
  CHECK(h1.diagonal[2] == Laurent::nu(-1));
  CHECK(h1.diagonal[3] == Laurent::nu(2));
  CHECK(h1.diagonal[4].is_one());
  for (const auto& deg : cert.degrees)
    for (std::size_t j = 0; j < deg.labels.size(); ++j) CHECK(deg.diagonal[j] == Laurent::nu(label_weight(deg.labels[j])));

  std::mt19937 rng(42);
  for (int s = 0; s < 10; ++s) {
    auto ft = bg_action(random_twist(rng));
    auto ct = certify_triangular(ft, bg::listed_basis(ft.ce.algebra));
    for (std::size_t k = 0; k < ct.degrees.size(); ++k) CHECK(ct.degrees[k].diagonal == cert.degrees[k].diagonal);
  }

  auto h = liealg::heisenberg3();
  auto fid = build_fiber_action(h, {{{0, 0, 0}, true}, VectorQ()});
  auto cid = certify_triangular(fid);
  for (const auto& deg : cid.degrees)
    for (const auto& d : deg.diagonal) CHECK(d.is_one());
}

TEST_CASE("unipotent submodule of the Benson-Gordon fiber") {
  auto f = bg_action();
  auto cert = certify_triangular(f, bg::listed_basis(f.ce.algebra));
  auto u = max_nilpotent_submodule(f, cert);

  // oracle: weight-zero classes of the listed basis
  std::vector<Index> oracle;
  for (const auto& deg : bg::listed_basis(f.ce.algebra)) {
    Index c = 0;
    for (const auto& lc : deg) c += label_weight(lc.label) == 0;
    oracle.push_back(c);
  }
  CHECK(oracle == std::vector<Index>{1, 1, 4, 4, 4, 4, 1, 1});
  CHECK(u.dims() == oracle);
  auto d = u.dims();
  CHECK(std::equal(d.begin(), d.end(), d.rbegin()));

  MatrixQ deg2(4, f.cohomology->betti(2));
  int r = 0;
  for (const char* s : {"[x1z1]", "[x1x2]", "[y1y2]", "[x2z2]"}) deg2.row(r++) = class_of(f, s).transpose();
  CHECK(SubspaceQ::span(deg2.cols(), deg2) == u.spaces[2]);

  std::mt19937 rng(9);
  for (int s = 0; s < 10; ++s) {
    auto ft = bg_action(random_twist(rng));
    auto ut = max_nilpotent_submodule(ft, certify_triangular(ft));
    CHECK(ut.dims() == oracle);
  }
}

TEST_CASE("identity action keeps all of the cohomology") {
  auto h = liealg::heisenberg3();
  auto f = build_fiber_action(h, {{{0, 0, 0}, true}, VectorQ()});
  auto cert = certify_triangular(f);
  auto u = max_nilpotent_submodule(f, cert);
  CHECK(u.dims() == f.cohomology->betti_numbers());
  auto audit = audit_star_list(f, cert, {});
  CHECK(audit.computed.size() == 5);
  CHECK(audit.extra.size() == 5);
}

TEST_CASE("relations and decomposability in U") {
  auto f = bg_action();
  auto cert = certify_triangular(f, bg::listed_basis(f.ce.algebra));
  auto u = max_nilpotent_submodule(f, cert);
  std::map<std::string, std::pair<int, VectorQ>> gen;
  for (const auto& [name, label] : bg::u_generators()) {
    auto c = parse_class_label(f.ce.algebra, label);
    int k = *c.degree();
    auto coords = u.coordinates(k, f.cohomology->class_coordinates(k, c));
    REQUIRE(coords.has_value());
    gen[name] = {k, *coords};
  }
  for (const auto& [a, b] : bg::claimed_relations()) {
    const auto& [ka, va] = gen[a];
    const auto& [kb, vb] = gen[b];
    CHECK_MESSAGE(is_zero_matrix(u.algebra.multiply(ka, va, kb, vb)), a << "*" << b);
  }
  // cochain-level oracle: u1 u4 = x1 z1 y1 y2 = -x1 y1 z1 y2 = -v2, and
  // u2 u4 = x2 z2 y1 y2 = -y1 x2 y2 z2 = -v3 (one and three transpositions)
  auto prod = [&](const char* p, const char* q) {
    const auto& [kp, vp] = gen[p];
    const auto& [kq, vq] = gen[q];
    return u.algebra.multiply(kp, vp, kq, vq);
  };
  CHECK(prod("u1", "u4") == -gen["v2"].second);
  CHECK(prod("u2", "u4") == -gen["v3"].second);
  CHECK_FALSE(is_zero_matrix(prod("u1", "u2")));
  CHECK_FALSE(is_zero_matrix(prod("u3", "v1")));

  auto p = presentation(u.algebra, 7);
  auto counts = p.generator_counts();
  CHECK(counts[1] == 1);
  CHECK(counts[2] == 4);
  CHECK(counts[3] == 0);
  // oracle: dim U^4 minus rank of the span of all products of degree-2 classes
  CHECK(counts[4] == u.algebra.dim(4) - u.algebra.decomposables(4).dim());
  CHECK(counts[4] == 1);
  CHECK(p.relation_counts()[4] == 7);  // 10 quadratic monomials onto a 3-dim span
}

TEST_CASE("star list audit") {
  auto f = bg_action();
  auto cert = certify_triangular(f, bg::listed_basis(f.ce.algebra));
  auto audit = audit_star_list(f, cert, bg::star_entries(f.ce.algebra));
  CHECK(audit.missing.empty());
  auto has = [&](const std::string& s) { return std::find(audit.extra.begin(), audit.extra.end(), s) != audit.extra.end(); };
  CHECK(has("[x1z1][x2z2]"));
  CHECK(has("[x1y1z1][x2y2z2]"));
  CHECK(has("[t]"));
}

TEST_CASE("eta* is a ring automorphism") {
  std::mt19937 rng(4);
  auto f = bg_action(random_twist(rng));
  const auto& h = *f.cohomology;
  auto mul = [&](int k1, const VectorL& a, int k2, const VectorL& b) {
    VectorL out = VectorL::Zero(h.betti(k1 + k2));
    for (Index i = 0; i < a.size(); ++i)
      for (Index j = 0; j < b.size(); ++j) {
        if (a(i).is_zero() || b(j).is_zero()) continue;
        out += cast_matrix<Laurent>(h.cup_product(k1, i, k2, j)) * (a(i) * b(j));
      }
    return out;
  };
  for (int k1 = 1; k1 <= 2; ++k1)
    for (int k2 = k1; k2 <= 3; ++k2)
      for (Index i = 0; i < h.betti(k1); ++i)
        for (Index j = 0; j < h.betti(k2); ++j) {
          VectorL lhs = multiply(f.induced[static_cast<std::size_t>(k1 + k2)], VectorL(cast_matrix<Laurent>(h.cup_product(k1, i, k2, j))));
          VectorL rhs = mul(k1, f.induced[static_cast<std::size_t>(k1)].col(i), k2, f.induced[static_cast<std::size_t>(k2)].col(j));
          CHECK(lhs == rhs);
        }
}
