#include "rhom/cli/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace rhom;
using namespace rhom::cli;

namespace {

struct Common {
  std::string path;
  bool json = false;
};

void add_common(CLI::App* sub, Common& c, bool file_required = true) {
  auto* opt = sub->add_option("file", c.path, "Lie algebra file (JSON)");
  if (file_required) opt->required();
  sub->add_flag("--json", c.json, "print a JSON document instead of text");
}

int emit(const CommandOutput& out, bool json) {
  std::cout << (json ? out.json.dump(2) + "\n" : out.text);
  return out.exit_code;
}

int s_index_of(const LieAlgebraFile& f, const std::string& flag) {
  if (!flag.empty()) return resolve_s_index(f.algebra, flag);
  if (f.s_element) return *f.algebra.index_of(*f.s_element);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational homotopy audit of solvable Lie algebras"};
  app.require_subcommand(1);

  Common common;
  std::string s_flag, r_flag, input, from_mostow;
  int max_degree = -1, cutoff = 6, degree_cutoff = -1, stage_cutoff = -1;
  std::uint32_t seed = 1;
  bool timings = false;

  auto* check = app.add_subcommand("check", "validate and classify an algebra");
  add_common(check, common);
  check->add_option("--s-index", s_flag, "splitting element (basis name or index)");

  auto* coh = app.add_subcommand("cohomology", "Betti numbers and representative classes");
  add_common(coh, common);
  coh->add_option("--max-degree", max_degree, "highest degree (default: dimension)");

  auto* ce = app.add_subcommand("ce", "Chevalley-Eilenberg differential");
  add_common(ce, common);

  auto* mostow_cmd = app.add_subcommand("mostow", "fiber action, triangular certificate and unipotent part");
  add_common(mostow_cmd, common);
  mostow_cmd->add_option("--s-index", s_flag, "splitting element (basis name or index)");
  mostow_cmd->add_option("--R", r_flag, "twist coordinates in the nilradical basis, comma separated");
  mostow_cmd->add_option("--seed", seed, "seed for a random twist when --R is absent");
  mostow_cmd->add_option("--cutoff", cutoff, "presentation cutoff degree");

  auto* big = app.add_subcommand("bigraded", "bigraded model of a cohomology algebra or of the unipotent part");
  add_common(big, common, false);
  auto* in_opt = big->add_option("--input", input, "Lie algebra file; models its cohomology algebra");
  auto* fm_opt = big->add_option("--from-mostow", from_mostow, "Lie algebra file; models the unipotent part of its fiber");
  in_opt->excludes(fm_opt);
  big->add_option("--s-index", s_flag, "splitting element for --from-mostow");
  big->add_option("--R", r_flag, "twist for --from-mostow");
  big->add_option("--seed", seed, "seed for a random twist when --R is absent");
  big->add_option("--degree-cutoff", degree_cutoff, "highest generator degree (default 5)");
  big->add_option("--stage-cutoff", stage_cutoff, "highest stage (default 4)");

  auto* minimal = app.add_subcommand("minimal", "Sullivan minimal model of the CE complex");
  add_common(minimal, common);
  minimal->add_option("--degree-cutoff", degree_cutoff, "highest generator degree (default 5)");
  minimal->add_option("--stage-cutoff", stage_cutoff, "rounds per degree (default 8)");

  auto* audit = app.add_subcommand("audit", "full pipeline with one record per claim");
  auto* cert = app.add_subcommand("certificate", "issue a no-lattice certificate when the models differ");
  for (auto* sub : {audit, cert}) {
    add_common(sub, common);
    sub->add_option("--s-index", s_flag, "splitting element (basis name or index)");
    sub->add_option("--R", r_flag, "twist coordinates in the nilradical basis");
    sub->add_option("--seed", seed, "seed for the random twist when --R is absent");
    sub->add_option("--degree-cutoff", degree_cutoff, "bigraded model degree cutoff (default 7)");
    sub->add_option("--stage-cutoff", stage_cutoff, "bigraded model stage cutoff (default 4)");
    sub->add_flag("--timings", timings, "record wall time per step");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    auto twist = [&](const LieAlgebraFile& f) {
      const int n = f.algebra.dim() - 1;
      return r_flag.empty() ? twist_from_seed(seed, n) : parse_twist(r_flag, n);
    };
    if (check->parsed()) {
      auto f = load_file(common.path);
      std::optional<int> s;
      if (!s_flag.empty() || f.s_element) s = s_index_of(f, s_flag);
      return emit(cmd_check(f.algebra, s), common.json);
    }
    if (coh->parsed()) return emit(cmd_cohomology(load(common.path), max_degree), common.json);
    if (ce->parsed()) return emit(cmd_ce(load(common.path)), common.json);
    if (mostow_cmd->parsed()) {
      auto f = load_file(common.path);
      int s = s_index_of(f, s_flag);
      return emit(cmd_mostow(f.algebra, s, twist(f), cutoff), common.json);
    }
    if (big->parsed()) {
      const int dc = degree_cutoff < 0 ? 5 : degree_cutoff;
      const int sc = stage_cutoff < 0 ? 4 : stage_cutoff;
      if (!from_mostow.empty()) {
        auto f = load_file(from_mostow);
        int s = s_index_of(f, s_flag);
        return emit(cmd_bigraded(unipotent_algebra(f.algebra, s, twist(f)), dc, sc), common.json);
      }
      std::string path = !input.empty() ? input : common.path;
      if (path.empty()) throw ParseError("bigraded: give a file, --input or --from-mostow");
      return emit(cmd_bigraded(cohomology_algebra(load(path)), dc, sc), common.json);
    }
    if (minimal->parsed())
      return emit(cmd_minimal(load(common.path), degree_cutoff < 0 ? 5 : degree_cutoff, stage_cutoff < 0 ? 8 : stage_cutoff),
                  common.json);
    if (audit->parsed() || cert->parsed()) {
      auto f = load_file(common.path);
      AuditOptions opt;
      opt.s_index = s_index_of(f, s_flag);
      opt.seed = seed;
      if (!r_flag.empty()) opt.R = parse_twist(r_flag, f.algebra.dim() - 1);
      if (degree_cutoff >= 0) opt.degree_cutoff = degree_cutoff;
      if (stage_cutoff >= 0) opt.stage_cutoff = stage_cutoff;
      opt.timings = timings;
      return emit(audit->parsed() ? cmd_audit(f.algebra, opt) : cmd_certificate(f.algebra, opt), common.json);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
