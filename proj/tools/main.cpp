#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "sqfree/errors.hpp"

namespace {

void add_common(CLI::App* cmd, sqfree::cli::Options& o, bool sweeps) {
  cmd->add_option("file", o.file, "matrix file")->required()->check(CLI::ExistingFile);
  cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  if (!sweeps) return;
  cmd->add_option("--order", o.order, "generator priority, lowest first (e.g. 2,1)");
  cmd->add_option("--gammas", o.gammas, "column degrees overriding the canonical solution, ';'-separated");
  cmd->add_option("--betas", o.betas, "row degrees overriding the canonical solution, ';'-separated");
  cmd->add_flag("--force", o.force, "allow more than 16 variables");
}

}  // namespace

int main(int argc, char** argv) {
  sqfree::cli::Options o;
  CLI::App app{"Invariants of squarefree modules given by monomial presentation matrices"};
  app.require_subcommand(1);

  add_common(app.add_subcommand("check", "multigradedness, squarefree solutions, uniform rank"), o, false);
  add_common(app.add_subcommand("ideals", "initial-module ideals I_i and their complexes"), o, true);
  auto* basis = app.add_subcommand("basis", "standard k-basis in one degree");
  add_common(basis, o, true);
  basis->add_option("--degree", o.degree, "comma-separated degree")->required();
  auto* reduce = app.add_subcommand("reduce", "normal form of x^a v_i");
  add_common(reduce, o, true);
  reduce->add_option("--row", o.row, "row i (1-based)")->required();
  reduce->add_option("--degree", o.degree, "exponent a")->required();
  add_common(app.add_subcommand("ann", "annihilator"), o, true);
  add_common(app.add_subcommand("dim", "Krull dimension and local cohomology range"), o, true);
  auto* betti = app.add_subcommand("betti", "multigraded Betti numbers");
  add_common(betti, o, true);
  betti->add_option("--degree", o.degree, "single degree instead of the squarefree table");
  betti->add_flag("--verify", o.verify, "compare with the Koszul strand");
  auto* lc = app.add_subcommand("localcohom", "local cohomology dimensions");
  add_common(lc, o, true);
  auto* lc_degree = lc->add_option("--degree", o.degree, "single degree");
  lc->add_flag("--patterns", o.patterns, "all 3^n sign patterns (default)")->excludes(lc_degree);
  lc->add_flag("--verify", o.verify, "compare with the Cech strand and check pattern stability");
  auto* gen = app.add_subcommand("gen", "random uniform-rank squarefree matrix");
  gen->add_option("--n", o.n, "variables")->required();
  gen->add_option("--s", o.s, "rows")->required();
  gen->add_option("--l", o.l, "columns")->required();
  gen->add_option("--seed", o.seed, "seed")->required();
  gen->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  o.command = app.get_subcommands().front()->get_name();

  try {
    const auto outcome = sqfree::cli::run_command(o);
    std::cout << (o.format == "json" ? sqfree::render_json(outcome.report) : sqfree::cli::render_text(outcome.report));
    return outcome.exit_code;
  } catch (const sqfree::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const sqfree::ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << '\n';
    return 3;
  }
}
