#include "rhom/liealg/lie_algebra.hpp"
#include "rhom/mostow/benson_gordon.hpp"
#include "rhom/mostow/fiber_action.hpp"
#include "rhom/mostow/presentation.hpp"
#include "rhom/sullivan/bigraded_model.hpp"
#include "rhom/sullivan/comparison.hpp"
#include "rhom/sullivan/lehmann.hpp"
#include "rhom/sullivan/minimal_model.hpp"

#include "random_dga.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace rhom;
using namespace rhom::sullivan;
using gca::ElementQ;
using gca::FreeCGA;
using namespace rhom::testing;

namespace {

// Q[u]/(u^2) with |u| = 2, known through degree 8.
gca::GradedAlgebra truncated_polynomial() {
  auto free = FreeCGA::make({{"u", 2, std::nullopt}}, 8);
  auto u = ElementQ::generator(free, 0);
  return gca::GradedAlgebra::from_presentation(free, {u * u});
}

gca::GradedAlgebra exterior_on_one() {
  auto ce = liealg::ce_complex(liealg::abelian(1));
  return gca::GradedAlgebra::from_cohomology(gca::CohomologyRing(ce.d, 1));
}

const gca::GradedAlgebra& fiber_algebra() {
  static const gca::GradedAlgebra u = [] {
    auto g = liealg::benson_gordon();
    auto w = liealg::verify_splitting(g, liealg::SplittingSpec::complement_of(g, 0));
    auto f = mostow::build_fiber_action(liealg::benson_gordon_nilradical(), {w, VectorQ()});
    auto cert = mostow::certify_triangular(f, mostow::bg::listed_basis(f.ce.algebra));
    return mostow::max_nilpotent_submodule(f, cert).algebra;
  }();
  return u;
}

const BigradedModel& fiber_model() {
  static const BigradedModel b = bigraded_model(fiber_algebra(), 5, 4);
  return b;
}

// Every term of d(g) has lower degree stage(g) - 1.
bool lowers_stage_by_one(const BigradedModel& b) {
  for (int g = 0; g < b.algebra->num_generators(); ++g)
    for (const auto& [m, c] : b.d.on_generator(g).terms())
      if (b.algebra->lower_degree(m) != b.stage_of(g) - 1) return false;
  return true;
}

std::vector<Index> generator_degrees(const gca::FreeCGA& a) {
  std::vector<Index> out;
  for (const auto& g : a.generators()) {
    if (out.size() <= static_cast<std::size_t>(g.degree)) out.resize(static_cast<std::size_t>(g.degree) + 1, 0);
    ++out[static_cast<std::size_t>(g.degree)];
  }
  return out;
}

}  // namespace

TEST_CASE("bigraded model of a truncated polynomial algebra") {
  auto h = truncated_polynomial();
  auto b = bigraded_model(h, 5, 4);
  CHECK(b.all_settled());
  CHECK_FALSE(b.stage_cutoff_hit);
  REQUIRE(b.algebra->num_generators() == 2);
  CHECK(b.count(0, 2) == 1);
  CHECK(b.count(1, 3) == 1);
  const int t = b.generators_of(1, 3).front();
  auto u = ElementQ::generator(b.algebra, b.generators_of(0, 2).front());
  CHECK(b.d.on_generator(t) == u * u);

  // Oracle: cohomology of Lambda(u, t; dt = u^2) is Q[u]/(u^2).
  auto oracle = make_dga({{"u", 2, std::nullopt}, {"t", 3, std::nullopt}}, 7, {{"t", {{{"u", "u"}, 1}}}});
  gca::CohomologyRing hc(oracle, 6);
  CHECK(hc.betti_numbers() == std::vector<Index>{1, 0, 1, 0, 0, 0, 0});
  CHECK(b.betti_numbers() == std::vector<Index>{1, 0, 1, 0, 0, 0});
}

TEST_CASE("bigraded model of a free algebra is itself") {
  auto b = bigraded_model(exterior_on_one(), 5, 3);
  CHECK(b.all_settled());
  REQUIRE(b.algebra->num_generators() == 1);
  CHECK(b.count(0, 1) == 1);
  CHECK(b.d.on_generator(0).is_zero());
  CHECK(b.num_stages() == 1);
}

TEST_CASE("bigraded model needs a connected algebra and enough data") {
  gca::GradedAlgebra two_points({{"1", "e"}}, true, [](int, Index i, int, Index j) {
    VectorQ v = VectorQ::Zero(2);
    if (i == j) v(i) = 1;
    return v;
  });
  CHECK_THROWS_AS(bigraded_model(two_points, 3, 3), NotConnected);
  auto free = FreeCGA::make({{"u", 2, std::nullopt}}, 4);
  auto h = gca::GradedAlgebra::from_presentation(free, {ElementQ::generator(free, 0) * ElementQ::generator(free, 0)});
  CHECK_THROWS_AS(bigraded_model(h, 5, 3), InsufficientCutoff);
}

TEST_CASE("bigraded model of the fiber algebra") {
  const auto& b = fiber_model();
  auto p = mostow::presentation(fiber_algebra(), 6);
  CHECK(b.all_settled());
  CHECK_FALSE(b.stage_cutoff_hit);
  CHECK(b.count(0, 1) == 1);
  CHECK(b.count(0, 2) == 4);
  // Indecomposables and degree-4 relations from the presentation; no
  // relations exist below degree 4, so all of them are minimal.
  CHECK(b.count(0, 4) == p.generator_counts()[4]);
  CHECK(p.relation_counts()[2] == 0);
  CHECK(p.relation_counts()[3] == 0);
  CHECK(b.count(1, 3) == p.relation_counts()[4]);
  CHECK(b.count(1, 3) == 7);
  CHECK(b.count(0, 4) == 1);
  CHECK(gca::check_d_squared(b.d).empty());
  CHECK(lowers_stage_by_one(b));
  const auto dims = fiber_algebra().dims();
  CHECK(b.betti_numbers() == std::vector<Index>(dims.begin(), dims.begin() + 6));
  for (int g = 0; g < b.algebra->num_generators(); ++g)
    if (b.stage_of(g) == 1) CHECK(b.algebra->lower_degree(b.d.on_generator(g).terms().begin()->first) == 0);
}

TEST_CASE("bigraded model of the Heisenberg cohomology ring") {
  auto ce = liealg::ce_complex(liealg::heisenberg3());
  auto h = gca::GradedAlgebra::from_cohomology(gca::CohomologyRing(ce.d, 3));
  auto b = bigraded_model(h, 3, 3);
  CHECK(b.count(0, 1) + b.count(1, 1) == 3);
  auto m = minimal_model(ce.d, 3);
  CHECK(m.generator_counts()[1] == 3);
  CHECK(lowers_stage_by_one(b));
  CHECK(gca::check_d_squared(b.d).empty());
}

TEST_CASE("Lehmann reduction examples") {
  SUBCASE("contractible pair") {
    auto d = make_dga({{"t", 1, std::nullopt}, {"u", 2, std::nullopt}}, 6, {{"t", {{{"u"}, 1}}}});
    auto r = lehmann_reduce(d);
    CHECK(r.minimal.algebra()->num_generators() == 0);
    REQUIRE(r.trace.steps.size() == 1);
    CHECK(r.trace.steps[0].eliminated == std::vector<std::pair<std::string, std::string>>{{"t", "u"}});
  }
  SUBCASE("one pair among a minimal part") {
    auto d = make_dga({{"u", 2, std::nullopt}, {"t", 3, std::nullopt}, {"s", 3, std::nullopt}, {"w", 4, std::nullopt}}, 9,
                      {{"t", {{{"u", "u"}, 1}}}, {"s", {{{"w"}, 1}}}});
    auto r = lehmann_reduce(d);
    const auto& a = *r.minimal.algebra();
    REQUIRE(a.num_generators() == 2);
    CHECK(a.generator(0).name == "u");
    CHECK(a.generator(1).name == "t");
    auto u = ElementQ::generator(r.minimal.algebra(), 0);
    CHECK(r.minimal.on_generator(1) == u * u);
    CHECK(r.minimal.on_generator(0).is_zero());
    CHECK(r.trace.betti_before == r.trace.betti_after);
    REQUIRE(r.trace.steps.size() == 1);
    const auto& step = r.trace.steps[0];
    CHECK(step.degree == 3);
    CHECK(step.w_dims[3] == 1);
    CHECK(step.image_dims[4] == 1);
    CHECK(step.kept_dims[3] == 1);
    CHECK(step.eliminated.front().second == "w");
  }
  SUBCASE("already minimal") {
    auto d = make_dga({{"u", 2, std::nullopt}, {"t", 3, std::nullopt}}, 8, {{"t", {{{"u", "u"}, 1}}}});
    auto r = lehmann_reduce(d);
    CHECK(r.trace.empty());
    CHECK(r.minimal.algebra() == d.algebra());
  }
  SUBCASE("H^1 must vanish") {
    auto d = make_dga({{"x", 1, std::nullopt}, {"u", 2, std::nullopt}}, 5, {});
    CHECK_THROWS_AS(lehmann_reduce(d), H1NotZero);
  }
}

TEST_CASE("Lehmann reduction on random DGAs with contractible pairs") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 20; ++trial) {
    CAPTURE(trial);
    auto in = random_dga_with_pairs(rng);
    REQUIRE(gca::check_d_squared(in.d).empty());
    auto r = lehmann_reduce(in.d);
    const int cutoff = in.d.algebra()->cutoff() - 1;
    gca::CohomologyRing before(in.d, cutoff), after(r.minimal, cutoff);
    CHECK(before.betti_numbers() == after.betti_numbers());
    CHECK_FALSE(has_linear_part(r.minimal));
    CHECK(r.minimal.algebra()->num_generators() == in.d.algebra()->num_generators() - 2 * in.pairs);
    CHECK(gca::check_d_squared(r.minimal).empty());
  }
}

TEST_CASE("minimal models of nilpotent CE complexes") {
  SUBCASE("Heisenberg") {
    auto ce = liealg::ce_complex(liealg::heisenberg3());
    auto m = minimal_model(ce.d, 3);
    CHECK(m.verified());
    CHECK(m.generator_counts() == std::vector<Index>{0, 3, 0, 0});
    auto stages = m.stage_counts();
    CHECK(stages[1] == std::vector<Index>{2, 1});
    const auto& z = m.generators[2];
    auto x = ElementQ::generator(m.algebra, 0), y = ElementQ::generator(m.algebra, 1);
    CHECK((z.differential == x * y || z.differential == -(x * y) || z.differential == y * x));
  }
  SUBCASE("abelian") {
    for (int k = 1; k <= 3; ++k) {
      auto ce = liealg::ce_complex(liealg::abelian(k));
      auto m = minimal_model(ce.d, 4);
      CHECK(m.verified());
      auto counts = m.generator_counts();
      CHECK(counts[1] == k);
      for (std::size_t i = 2; i < counts.size(); ++i) CHECK(counts[i] == 0);
    }
  }
  SUBCASE("already minimal DGA keeps its generator counts") {
    auto d = make_dga({{"u", 2, std::nullopt}, {"t", 3, std::nullopt}}, 8, {{"t", {{{"u", "u"}, 1}}}});
    auto m = minimal_model(d, 5);
    CHECK(m.verified());
    CHECK(m.generator_counts() == std::vector<Index>{0, 0, 1, 1, 0, 0});
  }
}

TEST_CASE("minimal model of the Benson-Gordon CE complex") {
  auto g = liealg::benson_gordon();
  auto ce = liealg::ce_complex(g);
  auto m = minimal_model(ce.d, 5);
  CHECK(m.verified());
  CHECK_FALSE(m.stage_cutoff_hit);
  CHECK(m.generator_counts()[1] == 2);
  CHECK(m.stage_counts()[1] == std::vector<Index>{2});
  // Independent oracle: Betti numbers of the CE complex computed directly.
  gca::CohomologyRing direct(ce.d, 5);
  CHECK(m.model_betti == direct.betti_numbers());
  CHECK(m.closed_counts[2] == 4);
  CHECK(m.closed_counts[4] == 1);
  for (const auto& gen : m.generators)
    for (const auto& [mono, c] : gen.differential.terms()) CHECK(mono.length() >= 2);

  std::mt19937 rng(77);
  std::uniform_int_distribution<int> coef(-1, 1);
  for (int trial = 0; trial < 5; ++trial) {
    CAPTURE(trial);
    MatrixQ p;
    do {
      p = identity<Rational>(8);
      for (Index i = 0; i < 8; ++i)
        for (Index j = 0; j < 8; ++j)
          if (i != j) p(i, j) = coef(rng);
    } while (rank(p) < 8);
    auto h = g.change_basis(p);
    auto mh = minimal_model(liealg::ce_complex(h).d, 5);
    CHECK(mh.verified());
    CHECK(mh.generator_counts() == m.generator_counts());
    CHECK(mh.closed_counts == m.closed_counts);
  }
}

TEST_CASE("fiber stability of the degree-4 generators") {
  const auto& b = fiber_model();
  auto p = mostow::presentation(fiber_algebra(), 6);
  auto f = fiber_model_analysis(p, b);
  CHECK(f.low_degree_late_stage.empty());
  CHECK(f.linear_hits.empty());
  CHECK(f.certified);
  CHECK(f.stable_counts.at(4) == p.generator_counts()[4]);

  auto h = truncated_polynomial();
  auto bq = bigraded_model(h, 5, 3);
  auto pq = mostow::presentation(h, 6);
  auto fq = fiber_model_analysis(pq, bq);
  CHECK(fq.certified);
  CHECK(fq.stable_counts.at(4) == 0);

  auto shallow = bigraded_model(h, 4, 3);
  CHECK_THROWS_AS(fiber_model_analysis(pq, shallow), InsufficientCutoff);
}

TEST_CASE("model comparison") {
  auto ce_bg = minimal_model(liealg::ce_complex(liealg::benson_gordon()).d, 5);
  SUBCASE("computed fiber side") {
    auto f = fiber_model_analysis(mostow::presentation(fiber_algebra(), 6), fiber_model());
    auto v = compare_models(f, ce_bg);
    CHECK(v.verdict == (f.stable_counts.at(4) == ce_bg.closed_counts[4] ? Verdict::Inconclusive : Verdict::NoLatticeCertificate));
  }
  SUBCASE("differing counts give a certificate") {
    FiberStability f;
    f.certified = true;
    f.stable_counts[4] = 3;
    auto v = compare_models(f, ce_bg);
    CHECK(v.verdict == Verdict::NoLatticeCertificate);
    CHECK(v.degree == 4);
    CHECK(v.fiber_count == 3);
    CHECK(v.ce_count == 1);
  }
  SUBCASE("circle") {
    auto b = bigraded_model(exterior_on_one(), 5, 3);
    auto f = fiber_model_analysis(mostow::presentation(exterior_on_one(), 4), b);
    auto v = compare_models(f, minimal_model(liealg::ce_complex(liealg::abelian(1)).d, 5));
    CHECK(v.verdict == Verdict::Inconclusive);
    CHECK(v.mismatched_degrees.empty());
  }
  SUBCASE("unsettled CE side") {
    FiberStability f;
    f.stable_counts[4] = 1;
    auto shallow = minimal_model(liealg::ce_complex(liealg::benson_gordon()).d, 3);
    CHECK_THROWS_AS(compare_models(f, shallow), UnsettledDegree);
  }
}
