#include "rhom/cli/commands.hpp"

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

using namespace rhom;
using namespace rhom::cli;

namespace {

std::string data(const std::string& name) { return std::string(RHOM_DATA_DIR) + "/" + name; }

std::string thrown_message(const std::function<void()>& f) {
  try {
    f();
  } catch (const std::exception& e) {
    return e.what();
  }
  return {};
}

bool has_float(const Json& j) {
  if (j.is_number_float()) return true;
  if (j.is_structured())
    for (const auto& v : j) if (has_float(v)) return true;
  return false;
}

const AuditResult& bg_audit() {
  static const AuditResult r = run_audit(load(data("benson_gordon.json")));
  return r;
}

const ClaimRecord& claim(const AuditReport& r, const std::string& id) {
  const ClaimRecord* c = r.find(id);
  REQUIRE_MESSAGE(c != nullptr, id);
  return *c;
}

int run_cli(const std::string& args) {
  std::string cmd = std::string(RHOM_CLI) + " " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

liealg::LieAlgebra random_algebra(std::mt19937& rng) {
  std::uniform_int_distribution<int> w(-3, 3);
  liealg::WeightVector wv;
  auto n = liealg::direct_sum(liealg::heisenberg3("1"), liealg::abelian(2));
  const int x = w(rng), y = w(rng);
  wv.weights = {x, y, x + y, w(rng), w(rng)};
  auto g = liealg::semidirect_by_weights(wv, n);
  MatrixQ p = MatrixQ::Identity(g.dim(), g.dim());
  std::uniform_int_distribution<int> c(-2, 2);
  for (int i = 0; i < g.dim(); ++i)
    for (int j = i + 1; j < g.dim(); ++j) p(i, j) = Rational(c(rng), 1 + (c(rng) + 2));
  return g.change_basis(p);
}

}  // namespace

TEST_CASE("bundled files load") {
  auto bg = load_file(data("benson_gordon.json"));
  const auto& g = bg.algebra;
  CHECK(g.dim() == 8);
  CHECK(g.validate().ok());
  CHECK(bg.s_element == std::optional<std::string>("S"));
  // The bracket table written out by hand; all other brackets vanish.
  liealg::LieAlgebra table("table", {"S", "T", "X1", "Y1", "Z1", "X2", "Y2", "Z2"});
  table.set_bracket_terms(2, 3, {{4, Rational(1)}});
  table.set_bracket_terms(5, 6, {{7, Rational(1)}});
  table.set_bracket_terms(0, 2, {{2, Rational(1)}});
  table.set_bracket_terms(0, 5, {{5, Rational(-1)}});
  table.set_bracket_terms(0, 3, {{3, Rational(-2)}});
  table.set_bracket_terms(0, 6, {{6, Rational(2)}});
  table.set_bracket_terms(0, 4, {{4, Rational(-1)}});
  table.set_bracket_terms(0, 7, {{7, Rational(1)}});
  CHECK(g.same_structure(table));
  CHECK(g.basis() == table.basis());

  auto h = load(data("heisenberg3.json"));
  CHECK(h.dim() == 3);
  CHECK(h.same_structure(liealg::heisenberg3()));
  CHECK(load(data("abelian_2.json")).same_structure(liealg::abelian(2)));
}

TEST_CASE("antisymmetry breach is reported with its position") {
  std::string msg = thrown_message([] { load(data("corrupted_antisymmetry.json")); });
  CHECK(msg.find("(0,1,2)") != std::string::npos);
  CHECK_THROWS_AS(load(data("corrupted_antisymmetry.json")), ValidationError);
  const char* jacobi_breach = R"({"name": "bad", "basis": ["A", "B", "C"], "brackets": [
      {"i": 0, "j": 1, "terms": [{"k": 1, "c": "1"}]},
      {"i": 0, "j": 2, "terms": [{"k": 0, "c": "1"}]},
      {"i": 1, "j": 2, "terms": [{"k": 2, "c": "1"}]}]})";
  CHECK_THROWS_AS(parse_lie_file(jacobi_breach), ValidationError);
}

TEST_CASE("parse errors name the record") {
  auto msg = [](const std::string& text) { return thrown_message([&] { parse_lie_file(text, "f.json"); }); };
  CHECK(msg("{\"name\": \"x\",\n \"basis\": [\"A\",}").find("line 2") != std::string::npos);
  CHECK_THROWS_AS(parse_lie_file("[1, 2]"), ParseError);
  std::string base = R"({"name": "x", "basis": ["A", "B"], "brackets": [)";
  CHECK(msg(base + R"({"i": 0, "j": 2, "terms": []}]})").find("brackets[0].j") != std::string::npos);
  CHECK(msg(base + R"({"i": 0, "j": 1, "terms": [{"k": 1, "c": "1/0"}]}]})").find("brackets[0].terms[0].c") != std::string::npos);
  CHECK(msg(base + R"({"i": 0, "j": 1, "terms": [{"k": 1, "c": 0.5}]}]})").find("brackets[0].terms[0].c") != std::string::npos);
  CHECK(msg(base + R"({"i": 0, "j": 1, "terms": []}, {"i": 0, "j": 1, "terms": []}]})").find("brackets[1]") != std::string::npos);
  CHECK(msg(R"({"name": "x", "basis": ["A", "A"]})").find("basis") != std::string::npos);
  CHECK(msg(R"({"name": "x", "basis": ["A"], "s_element": "Q"})").find("s_element") != std::string::npos);
  CHECK_THROWS_AS(load(data("does_not_exist.json")), ParseError);
}

TEST_CASE("omitted brackets are zero and the reverse bracket is implied") {
  auto f = parse_lie_file(R"({"name": "h", "basis": ["X", "Y", "Z"],
      "brackets": [{"i": 1, "j": 0, "terms": [{"k": 2, "c": "-3/6"}]}]})");
  CHECK(f.algebra.bracket(0, 1)(2) == Rational(1, 2));
  CHECK(f.algebra.bracket(1, 0)(2) == Rational(-1, 2));
  CHECK(is_zero_matrix(f.algebra.bracket(0, 2)));
  CHECK_FALSE(f.s_element.has_value());
}

TEST_CASE("file round trip is exact") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    auto g = random_algebra(rng);
    auto back = parse_lie_file(emit_lie_file(g));
    CHECK(back.algebra == g);
  }
  auto bg = liealg::benson_gordon();
  auto back = parse_lie_file(emit_lie_file(bg, "S"));
  CHECK(back.algebra == bg);
  CHECK(back.s_element == std::optional<std::string>("S"));
}

TEST_CASE("report serialization") {
  AuditReport empty;
  Json doc = Json::parse(emit_report(empty, ReportFormat::Json));
  CHECK(doc["claims"].empty());
  CHECK(doc["timings"].empty());
  CHECK(parse_report(emit_report(empty, ReportFormat::Json)) == empty);

  AuditReport r;
  r.algebra_name = "example";
  r.claims.push_back({"a.one", "A stated count.", 3, 3, ClaimStatus::Pass, ""});
  r.claims.push_back({"a.two", "A stated Laurent value.", laurent_json(Laurent::nu(-2) * Rational(3, 4)),
                      laurent_json(Laurent::nu(2)), ClaimStatus::Discrepant, "differs"});
  r.claims.push_back({"a.three", "A value never printed.", Json{{"x", {1, 2}}}, nullptr, ClaimStatus::Unstated, ""});
  r.verdict = Json{{"verdict", "Inconclusive"}, {"summary", "no difference found"}};
  r.timings = {{"step", 12}};
  CHECK(parse_report(emit_report(r, ReportFormat::Json)) == r);
  CHECK(r.claims[1].computed == Json{{"-2", "3/4"}});

  std::string text = emit_report(r, ReportFormat::Text);
  CHECK(text.find("A stated Laurent value.") != std::string::npos);
  CHECK(text.find("DISCREPANT") != std::string::npos);
  CHECK(text.find("no difference found") != std::string::npos);
  CHECK_THROWS_AS(parse_report("{\"tool_version\": \"x\"}"), ParseError);
  CHECK_THROWS_AS(parse_status("FAIL"), ParseError);
}

TEST_CASE("s-index and twist arguments") {
  auto g = liealg::benson_gordon();
  CHECK(resolve_s_index(g, "S") == 0);
  CHECK(resolve_s_index(g, "X1") == 2);
  CHECK(resolve_s_index(g, "3") == 3);
  CHECK_THROWS_AS(resolve_s_index(g, "Q"), ParseError);
  CHECK_THROWS_AS(resolve_s_index(g, "8"), ParseError);
  VectorQ r = parse_twist("1,-1/2,0", 3);
  CHECK(r(1) == Rational(-1, 2));
  CHECK_THROWS_AS(parse_twist("1,2", 3), ParseError);
  CHECK_THROWS_AS(parse_twist("1,x,2", 3), ParseError);
  CHECK(twist_from_seed(5, 7) == twist_from_seed(5, 7));
}

TEST_CASE("individual commands") {
  auto bg = liealg::benson_gordon();
  auto check = cmd_check(bg);
  CHECK(check.json["unimodular"] == true);
  CHECK(check.json["nilpotent"] == false);
  CHECK(check.json["completely_solvable"] == "Certified");
  CHECK(check.exit_code == 0);

  auto coh = cmd_cohomology(liealg::heisenberg3());
  CHECK(coh.json["betti"] == Json{1, 2, 2, 1});
  CHECK(coh.text.find("1 2 2 1") != std::string::npos);

  auto ce = cmd_ce(liealg::heisenberg3());
  CHECK(ce.json["differential"]["z"] == "x*y");

  auto mostow = cmd_mostow(bg, 0, VectorQ(), 6);
  CHECK(mostow.json["weights"] == Json{"0", "1", "-2", "-1", "-1", "2", "1"});
  CHECK(mostow.json["unipotent_dims"] == Json{1, 1, 4, 4, 4, 4, 1, 1});

  auto big = cmd_bigraded(cohomology_algebra(liealg::abelian(2)), 3, 2);
  CHECK(big.json["counts"][0] == Json{0, 2, 0, 0});

  auto min = cmd_minimal(liealg::heisenberg3(), 3, 4);
  CHECK(min.json["verified"] == true);
  CHECK(min.json["generator_counts"][1] == 3);
  CHECK_FALSE(has_float(min.json));
}

TEST_CASE("audit of the reference algebra") {
  const auto& r = bg_audit();
  const auto& rep = r.report;
  CHECK(claim(rep, "splitting.weights").status == ClaimStatus::Pass);
  CHECK(claim(rep, "algebra.unimodular").status == ClaimStatus::Pass);
  const auto& z2 = claim(rep, "fiber.eta.z2");
  CHECK(z2.computed["diagonal"] == Json{{"1", "1"}});
  CHECK(z2.status != ClaimStatus::Unstated);
  CHECK(claim(rep, "fiber.h1_diagonal").status == ClaimStatus::Pass);
  CHECK(claim(rep, "star.x1z1x2z2").status == ClaimStatus::Discrepant);
  CHECK(claim(rep, "U.v2_indecomposable").status == ClaimStatus::Discrepant);
  CHECK(claim(rep, "U.v3_indecomposable").status == ClaimStatus::Discrepant);
  CHECK(claim(rep, "bigraded.Z0_2").status == ClaimStatus::Pass);

  // Every claim id appears once; discrepancies carry both values.
  std::set<std::string> ids;
  for (const auto& c : rep.claims) {
    CHECK_MESSAGE(ids.insert(c.id).second, c.id);
    if (c.status == ClaimStatus::Discrepant) CHECK_FALSE(c.expected.is_null());
    if (c.status == ClaimStatus::Unstated) CHECK(c.expected.is_null());
  }

  // The verdict follows the computed degree-4 counts.
  const auto& v = rep.verdict;
  const auto& deg4 = claim(rep, "comparison.degree4").computed;
  if (deg4["fiber"] == deg4["ce"]) {
    CHECK(v["verdict"] == "Inconclusive");
    CHECK(r.exit_code() == 2);
  } else {
    CHECK(v["verdict"] == "NoLatticeCertificate");
    CHECK(v["degree"] == 4);
    CHECK(r.exit_code() == 0);
  }
  CHECK(rep.timings.empty());
  CHECK(parse_report(emit_report(rep, ReportFormat::Json)) == rep);
}

TEST_CASE("audit output is deterministic and exact") {
  std::string first = emit_report(bg_audit().report, ReportFormat::Json);
  std::string second = emit_report(run_audit(load(data("benson_gordon.json"))).report, ReportFormat::Json);
  CHECK(first == second);
  CHECK_FALSE(has_float(Json::parse(first)));
}

TEST_CASE("audit of other algebras records values without expectations") {
  AuditOptions opt;
  opt.timings = true;
  auto r = run_audit(liealg::abelian(2), opt);
  CHECK(r.exit_code() == 2);
  CHECK_FALSE(r.report.timings.empty());
  for (const auto& c : r.report.claims)
    if (c.id.rfind("sanity.", 0) != 0 && c.id != "algebra.valid" && c.id != "ce.quasi_isomorphism")
      CHECK_MESSAGE(c.status == ClaimStatus::Unstated, c.id);
  CHECK_THROWS_AS(run_audit(liealg::heisenberg3()), Error);
}

TEST_CASE("exit codes of the command-line tool") {
  CHECK(run_cli("audit " + data("abelian_2.json")) == 2);
  CHECK(run_cli("audit " + data("corrupted_antisymmetry.json")) == 1);
  const int bg = run_cli("audit " + data("benson_gordon.json"));
  CHECK(bg == (bg_audit().verdict.verdict == sullivan::Verdict::NoLatticeCertificate ? 0 : 2));
  CHECK(run_cli("check " + data("heisenberg3.json")) == 0);
  CHECK(run_cli("cohomology " + data("does_not_exist.json")) == 1);
  CHECK(run_cli("no-such-command") == 1);
}
