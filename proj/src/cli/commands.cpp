#include "rhom/cli/commands.hpp"

#include "rhom/mostow/fiber_action.hpp"
#include "rhom/mostow/presentation.hpp"
#include "rhom/sullivan/bigraded_model.hpp"
#include "rhom/sullivan/minimal_model.hpp"

#include <sstream>

namespace rhom::cli {

namespace {

std::string join(const std::vector<Index>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

Json counts(const std::vector<Index>& v) { return Json(v); }

std::string yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

int resolve_s_index(const liealg::LieAlgebra& g, const std::string& spec) {
  if (auto i = g.index_of(spec)) return *i;
  if (!spec.empty() && spec.find_first_not_of("0123456789") == std::string::npos) {
    int i = std::stoi(spec);
    if (i < g.dim()) return i;
  }
  throw ParseError("--s-index: '" + spec + "' is neither a basis name nor an index below " + std::to_string(g.dim()));
}

VectorQ parse_twist(const std::string& csv, int dim) {
  std::vector<Rational> vals;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      vals.push_back(parse_rational(item));
    } catch (const std::exception& e) {
      throw ParseError(std::string("--R: ") + e.what());
    }
  }
  if (static_cast<int>(vals.size()) != dim)
    throw ParseError("--R: expected " + std::to_string(dim) + " entries, got " + std::to_string(vals.size()));
  VectorQ r(dim);
  for (int i = 0; i < dim; ++i) r(i) = vals[static_cast<std::size_t>(i)];
  return r;
}

gca::GradedAlgebra cohomology_algebra(const liealg::LieAlgebra& g) {
  auto ce = liealg::ce_complex(g);
  return gca::GradedAlgebra::from_cohomology(gca::CohomologyRing(ce.d, g.dim()));
}

gca::GradedAlgebra unipotent_algebra(const liealg::LieAlgebra& g, int s_index, const VectorQ& R) {
  auto spec = liealg::SplittingSpec::complement_of(g, s_index);
  auto w = liealg::verify_splitting(g, spec);
  auto f = mostow::build_fiber_action(g.subalgebra(spec.nilradical_indices), {w, R});
  return mostow::max_nilpotent_submodule(f, mostow::certify_triangular(f)).algebra;
}

CommandOutput cmd_check(const liealg::LieAlgebra& g, std::optional<int> s_index) {
  CommandOutput out;
  auto report = g.validate();
  out.json["algebra"] = g.name();
  out.json["dim"] = g.dim();
  out.json["valid"] = report.ok();
  if (!report.ok()) {
    out.json["violations"] = report.summary();
    out.text = g.name() + ": invalid\n" + report.summary();
    out.exit_code = 1;
    return out;
  }
  out.json["unimodular"] = g.is_unimodular();
  out.json["nilpotent"] = g.is_nilpotent();
  out.json["solvable"] = g.is_solvable();
  liealg::SolvabilityCertificate cert;
  std::optional<int> used;
  if (s_index) {
    cert = liealg::completely_solvable_certificate(g, liealg::SplittingSpec::complement_of(g, *s_index));
    used = s_index;
  } else {
    cert = liealg::completely_solvable_certificate(g);
    for (int i = 0; i < g.dim() && cert.status != liealg::SolvabilityStatus::Certified; ++i) {
      try {
        auto c = liealg::completely_solvable_certificate(g, liealg::SplittingSpec::complement_of(g, i));
        if (c.status == liealg::SolvabilityStatus::Certified) {
          cert = c;
          used = i;
        }
      } catch (const Error&) {
      }
    }
  }
  const bool certified = cert.status == liealg::SolvabilityStatus::Certified;
  out.json["completely_solvable"] = certified ? "Certified" : "Undetermined";
  out.json["splitting_element"] = used ? Json(g.basis()[static_cast<std::size_t>(*used)]) : Json(nullptr);
  out.json["reason"] = cert.reason;
  std::ostringstream t;
  t << g.name() << " (dim " << g.dim() << ")\n"
    << "valid: true\n"
    << "unimodular: " << yes_no(g.is_unimodular()) << "\n"
    << "nilpotent: " << yes_no(g.is_nilpotent()) << "\n"
    << "solvable: " << yes_no(g.is_solvable()) << "\n"
    << "completely solvable: " << (certified ? "Certified" : "Undetermined");
  if (used) t << " (splitting element " << g.basis()[static_cast<std::size_t>(*used)] << ")";
  t << "\n";
  out.text = t.str();
  return out;
}

CommandOutput cmd_cohomology(const liealg::LieAlgebra& g, int max_degree) {
  if (max_degree < 0 || max_degree > g.dim()) max_degree = g.dim();
  auto ce = liealg::ce_complex(g);
  gca::CohomologyRing h(ce.d, max_degree);
  CommandOutput out;
  out.json["algebra"] = g.name();
  out.json["betti"] = counts(h.betti_numbers());
  Json classes = Json::array();
  std::ostringstream t;
  t << "Betti numbers of " << g.name() << ": " << join(h.betti_numbers()) << "\n";
  for (int k = 0; k <= max_degree; ++k) {
    Json deg = Json::array();
    t << "H^" << k << ":";
    for (Index i = 0; i < h.betti(k); ++i) {
      deg.push_back(h.class_name(k, i));
      t << " " << h.class_name(k, i);
    }
    t << "\n";
    classes.push_back(std::move(deg));
  }
  out.json["classes"] = std::move(classes);
  out.text = t.str();
  return out;
}

CommandOutput cmd_ce(const liealg::LieAlgebra& g) {
  auto ce = liealg::ce_complex(g);
  CommandOutput out;
  out.json["algebra"] = g.name();
  Json d = Json::object();
  std::ostringstream t;
  for (int i = 0; i < ce.algebra->num_generators(); ++i) {
    const auto& name = ce.algebra->generator(i).name;
    d[name] = ce.d.on_generator(i).to_string();
    t << "d(" << name << ") = " << ce.d.on_generator(i).to_string() << "\n";
  }
  out.json["differential"] = std::move(d);
  out.text = t.str();
  return out;
}

CommandOutput cmd_mostow(const liealg::LieAlgebra& g, int s_index, const VectorQ& R, int cutoff) {
  auto spec = liealg::SplittingSpec::complement_of(g, s_index);
  auto w = liealg::verify_splitting(g, spec);
  auto n = g.subalgebra(spec.nilradical_indices, g.name() + "_nilradical");
  auto f = mostow::build_fiber_action(n, {w, R});
  auto cert = mostow::certify_triangular(f);
  auto u = mostow::max_nilpotent_submodule(f, cert);
  auto p = mostow::presentation(u.algebra, std::min(cutoff, u.algebra.top_degree()));
  CommandOutput out;
  std::ostringstream t;
  out.json["algebra"] = g.name();
  out.json["splitting_element"] = g.basis()[static_cast<std::size_t>(s_index)];
  Json weights = Json::array();
  t << "weights of ad " << g.basis()[static_cast<std::size_t>(s_index)] << ":";
  for (std::size_t i = 0; i < w.weights.size(); ++i) {
    weights.push_back(rational_json(w.weights[i]));
    t << " " << n.basis()[i] << "=" << rhom::to_string(w.weights[i]);
  }
  t << "\n";
  out.json["weights"] = std::move(weights);
  Json diag = Json::array();
  for (std::size_t k = 0; k < cert.degrees.size(); ++k) {
    const auto& deg = cert.degrees[k];
    Json dk = Json::array();
    t << "H^" << k << " diagonal:";
    for (std::size_t i = 0; i < deg.labels.size(); ++i) {
      dk.push_back(Json{{"class", deg.labels[i]}, {"diagonal", laurent_json(deg.diagonal[i])}});
      t << " " << deg.labels[i] << "->" << deg.diagonal[i].to_string();
    }
    t << "\n";
    diag.push_back(std::move(dk));
  }
  out.json["triangular_diagonal"] = std::move(diag);
  out.json["unipotent_dims"] = counts(u.dims());
  out.json["generator_counts"] = counts(p.generator_counts());
  out.json["relation_counts"] = counts(p.relation_counts());
  out.json["generators"] = p.labels;
  t << "U dims: " << join(u.dims()) << "\n"
    << "U generators per degree: " << join(p.generator_counts()) << "\n"
    << "U relations per degree: " << join(p.relation_counts()) << "\n";
  out.text = t.str();
  return out;
}

CommandOutput cmd_bigraded(const gca::GradedAlgebra& h, int degree_cutoff, int stage_cutoff) {
  auto b = sullivan::bigraded_model(h, degree_cutoff, stage_cutoff);
  CommandOutput out;
  std::ostringstream t;
  Json table = Json::array();
  t << "generators by stage (rows) and degree 0.." << degree_cutoff << ":\n";
  for (const auto& row : b.count_table()) {
    table.push_back(counts(row));
    t << "  " << join(row) << "\n";
  }
  out.json["counts"] = std::move(table);
  Json d = Json::object();
  for (int g = 0; g < b.algebra->num_generators(); ++g) {
    const auto& name = b.algebra->generator(g).name;
    d[name] = b.d.on_generator(g).to_string();
    t << "d(" << name << ") = " << b.d.on_generator(g).to_string() << "\n";
  }
  out.json["differential"] = std::move(d);
  out.json["settled"] = b.settled;
  out.json["stage_cutoff_hit"] = b.stage_cutoff_hit;
  t << "all degrees settled: " << yes_no(b.all_settled()) << "\n";
  out.text = t.str();
  return out;
}

CommandOutput cmd_minimal(const liealg::LieAlgebra& g, int degree_cutoff, int stage_cutoff) {
  auto ce = liealg::ce_complex(g);
  auto m = sullivan::minimal_model(ce.d, degree_cutoff, stage_cutoff);
  CommandOutput out;
  std::ostringstream t;
  out.json["algebra"] = g.name();
  out.json["generator_counts"] = counts(m.generator_counts());
  out.json["closed_counts"] = counts(m.closed_counts);
  out.json["model_betti"] = counts(m.model_betti);
  out.json["target_betti"] = counts(m.target_betti);
  out.json["verified"] = m.verified();
  Json gens = Json::array();
  for (const auto& gen : m.generators)
    gens.push_back(Json{{"name", gen.name}, {"degree", gen.degree}, {"stage", gen.stage}, {"d", gen.differential.to_string()}});
  out.json["generators"] = std::move(gens);
  t << "minimal model of CE(" << g.name() << ") through degree " << degree_cutoff << "\n"
    << "generators per degree: " << join(m.generator_counts()) << "\n"
    << "closed generators per degree: " << join(m.closed_counts) << "\n"
    << "Betti (model / target): " << join(m.model_betti) << " / " << join(m.target_betti) << "\n"
    << "quasi-isomorphism verified: " << yes_no(m.verified()) << "\n";
  out.text = t.str();
  return out;
}

CommandOutput cmd_audit(const liealg::LieAlgebra& g, const AuditOptions& options) {
  auto r = run_audit(g, options);
  return {emit_report(r.report, ReportFormat::Text), report_json(r.report), r.exit_code()};
}

CommandOutput cmd_certificate(const liealg::LieAlgebra& g, const AuditOptions& options) {
  auto r = run_audit(g, options);
  CommandOutput out;
  out.exit_code = r.exit_code();
  out.json["algebra"] = to_json(g);
  out.json["issued"] = out.exit_code == 0;
  out.json["verdict"] = verdict_json(r.verdict);
  Json discrepant = Json::array();
  for (const auto& c : r.report.claims)
    if (c.status == ClaimStatus::Discrepant) discrepant.push_back(c.id);
  out.json["discrepant_claims"] = std::move(discrepant);
  std::ostringstream t;
  if (out.exit_code == 0)
    t << "certificate issued: " << g.name() << " has no lattice; minimal models differ in degree " << *r.verdict.degree
      << " (fiber " << r.verdict.fiber_count << ", CE " << r.verdict.ce_count << ")\n";
  else
    t << "no certificate: " << r.verdict.summary() << "\n";
  out.text = t.str();
  return out;
}

}  // namespace rhom::cli
