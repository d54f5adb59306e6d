#include "rhom/sullivan/comparison.hpp"

#include <sstream>

namespace rhom::sullivan {

FiberStability fiber_model_analysis(const mostow::AlgebraPresentation& p, const BigradedModel& b) {
  if (b.degree_cutoff < 5 || b.stage_cutoff < 3)
    throw InsufficientCutoff("fiber analysis needs a bigraded model through degree 5 and stage 3");
  for (int q = 0; q <= 4; ++q)
    if (!b.settled[static_cast<std::size_t>(q)])
      throw InsufficientCutoff("bigraded model is not settled in degree " + std::to_string(q));
  if (p.cutoff < 4) throw InsufficientCutoff("presentation must reach degree 4");

  FiberStability out;
  const auto& a = *b.algebra;
  for (int g = 0; g < a.num_generators(); ++g) {
    const int deg = a.degree_of(g);
    if (b.stage_of(g) >= 2 && deg <= 3) out.low_degree_late_stage.push_back(a.generator(g).name);
    if (deg == 3) {
      for (const auto& [m, c] : b.d.on_generator(g).terms())
        if (m.length() == 1) {
          out.linear_hits.push_back(a.generator(g).name);
          break;
        }
    }
  }
  out.stage0_counts.assign(static_cast<std::size_t>(b.degree_cutoff + 1), 0);
  for (int q = 0; q <= b.degree_cutoff; ++q) out.stage0_counts[static_cast<std::size_t>(q)] = b.count(0, q);
  out.presentation_count = p.generator_counts()[4];
  if (out.presentation_count != out.stage0_counts[4])
    throw Error("presentation and bigraded model disagree on degree-4 indecomposables");
  out.certified = out.low_degree_late_stage.empty() && out.linear_hits.empty();
  if (out.certified) {
    for (int g : b.generators_of(0, 4)) out.stable_generators.push_back(a.generator(g).name);
    out.stable_counts[4] = static_cast<Index>(out.stable_generators.size());
  }
  return out;
}

std::string to_string(Verdict v) {
  return v == Verdict::NoLatticeCertificate ? "NoLatticeCertificate" : "Inconclusive";
}

std::string ComparisonVerdict::summary() const {
  std::ostringstream os;
  os << to_string(verdict);
  if (degree) os << " (degree " << *degree << ": fiber " << fiber_count << ", CE " << ce_count << ")";
  os << "; compared degrees:";
  for (const auto& [deg, c] : fiber_stable) {
    os << " " << deg << " (fiber " << c << ", CE ";
    if (static_cast<std::size_t>(deg) < ce_counts.size()) os << ce_counts[static_cast<std::size_t>(deg)];
    os << ")";
  }
  return os.str();
}

ComparisonVerdict compare_models(const FiberStability& fiber, const MinimalModelReport& ce) {
  ComparisonVerdict out;
  out.fiber_counts = fiber.stage0_counts;
  out.fiber_stable = fiber.stable_counts;
  out.ce_counts = ce.closed_counts;
  for (const auto& [deg, c] : fiber.stable_counts) {
    if (deg > ce.degree_cutoff || !ce.settled[static_cast<std::size_t>(deg)])
      throw UnsettledDegree("CE minimal model is not settled in degree " + std::to_string(deg));
    const Index other = ce.closed_counts[static_cast<std::size_t>(deg)];
    if (other == c) continue;
    out.mismatched_degrees.push_back(deg);
    if (!out.degree) {
      out.degree = deg;
      out.fiber_count = c;
      out.ce_count = other;
    }
  }
  out.verdict = out.degree ? Verdict::NoLatticeCertificate : Verdict::Inconclusive;
  return out;
}

}  // namespace rhom::sullivan
