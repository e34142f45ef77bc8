#include "commands.hpp"

#include <algorithm>
#include <sstream>

#include "sqfree/betti.hpp"
#include "sqfree/errors.hpp"
#include "sqfree/generator.hpp"
#include "sqfree/local_cohomology.hpp"
#include "sqfree/reduction.hpp"

namespace sqfree::cli {

namespace {

constexpr int kSweepLimit = 16;

std::vector<ExponentVector> parse_degree_list(const std::string& text, int n) {
  std::vector<ExponentVector> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ';')) out.push_back(parse_degree(cur, n));
  return out;
}

std::string node_name(const GraphNode& node) {
  return (node.kind == GraphNode::Kind::Row ? "r" : "c") + std::to_string(node.index + 1);
}

GradingReport grading_report(const MultigradedMatrix& m) {
  GradingReport g;
  const MultigradedCheck check = validate_multigraded(m);
  g.multigraded = check.ok;
  if (!check.ok) {
    for (const auto& node : check.cycle) g.inconsistency += (g.inconsistency.empty() ? "" : " ") + node_name(node);
    g.inconsistency += " sum " + check.cycle_sum.to_string();
    return g;
  }
  const GeneralSolution general = solve_grading_system(m);
  g.components = general.component_count;
  for (std::size_t c : general.column_component) g.column_component.push_back(c + 1);
  for (std::size_t c : general.row_component) g.row_component.push_back(c + 1);
  g.base_gammas = general.base_gammas;
  g.base_betas = general.base_betas;
  g.uniform_rank = is_uniform_rank(m);
  if (const auto sol = find_squarefree_solution(m)) {
    g.squarefree = true;
    g.gammas = sol->gammas;
    g.betas = sol->betas;
  }
  return g;
}

struct Session {
  MatrixFile file;
  MultigradedMatrix matrix;
  std::vector<std::size_t> order;  // 0-based
  std::unique_ptr<SquarefreeModule> module;
  InvariantReport report;

  std::size_t original_row(std::size_t internal) const { return module->order()[internal]; }
  std::size_t internal_row(std::size_t original) const {
    const auto& ord = module->order();
    return static_cast<std::size_t>(std::ranges::find(ord, original) - ord.begin());
  }
};

Session open_session(const Options& o, bool need_module) {
  Session s;
  s.file = load_matrix_file(o.file);
  s.matrix = to_matrix(s.file);
  s.report.command = o.command;
  s.report.input = s.file;
  if (!o.order.empty())
    for (std::size_t r : parse_index_list(o.order)) s.order.push_back(r - 1);
  s.report.grading = grading_report(s.matrix);
  if (!need_module) return s;
  if (s.file.n > kSweepLimit && !o.force)
    throw InputError("n = " + std::to_string(s.file.n) + " exceeds " + std::to_string(kSweepLimit) +
                     "; rerun with --force to sweep anyway");
  if (!s.report.grading->multigraded) throw InputError("matrix is not multigraded (" + s.report.grading->inconsistency + ")");
  if (o.gammas.empty() != o.betas.empty()) throw InputError("--gammas and --betas must be given together");
  if (!o.gammas.empty()) {
    GradingSolution t{parse_degree_list(o.gammas, s.file.n), parse_degree_list(o.betas, s.file.n), true};
    s.report.grading->gammas = t.gammas;
    s.report.grading->betas = t.betas;
    s.module = std::make_unique<SquarefreeModule>(s.matrix, std::move(t), s.order);
  } else {
    s.module = std::make_unique<SquarefreeModule>(SquarefreeModule::canonical(s.matrix, s.order));
  }
  for (std::size_t r : s.module->order()) s.report.order.push_back(r + 1);
  if (!is_minimal_presentation(s.matrix))
    s.report.warnings.push_back("presentation is not minimal (an entry has exponent 0); Betti numbers are those of the "
                                "cokernel, not of a minimal resolution");
  return s;
}

ExponentVector nonnegative_degree(const Options& o, int n) {
  if (o.degree.empty()) throw InputError(o.command + " needs --degree");
  ExponentVector a = parse_degree(o.degree, n);
  if (!a.is_nonnegative()) throw InputError("degree " + a.to_string() + " must be nonnegative");
  return a;
}

void run_ideals(Session& s) {
  const auto& dec = s.module->initial_decomposition();
  std::vector<IdealReport> out(s.module->rows());
  for (std::size_t p = 0; p < s.module->rows(); ++p)
    out[s.original_row(p)] = {dec.ideals[p].generators(), dec.complexes[p].facets()};
  s.report.ideals = std::move(out);
}

void run_basis(Session& s, const Options& o) {
  const ExponentVector delta = nonnegative_degree(o, s.file.n);
  Json elements = Json::array();
  for (const auto& [i, b] : s.module->k_basis(delta))
    elements.push_back({{"row", s.original_row(i) + 1}, {"exponent", exponent_json(b)}});
  s.report.details = {{"degree", exponent_json(delta)}, {"dim", elements.size()}, {"elements", elements}};
}

void run_reduce(Session& s, const Options& o) {
  const ExponentVector alpha = nonnegative_degree(o, s.file.n);
  if (o.row < 1 || o.row > s.module->rows()) throw InputError("--row must be between 1 and " + std::to_string(s.module->rows()));
  const std::size_t i = s.internal_row(o.row - 1);
  const Reduction red = s.module->reduce(i, alpha);
  Json coeffs = Json::array();
  for (const auto& [j, r] : red.coefficients)
    coeffs.push_back({{"row", s.original_row(j) + 1},
                      {"value", r.to_string()},
                      {"exponent", exponent_json(alpha + s.module->beta(i) - s.module->beta(j))}});
  s.report.details = {{"row", o.row}, {"degree", exponent_json(alpha)}, {"standard", red.standard}, {"coefficients", coeffs}};
}

void run_ann(Session& s) {
  const AnnihilatorResult ann = annihilator(*s.module);
  s.report.annihilator = AnnihilatorReport{ann.method, ann.ideal.generators()};
}

void run_dim(Session& s) {
  const DepthDimReport d = depth_and_dim_report(*s.module);
  s.report.dimension = DimensionReport{d.krull_dimension, d.min_index, d.max_index, d.projective_dimension};
}

std::string dims_string(const std::vector<std::size_t>& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
  return out + ")";
}

void run_betti(Session& s, const Options& o) {
  const int n = s.file.n;
  std::vector<ExponentVector> degrees;
  if (!o.degree.empty()) {
    degrees.push_back(parse_degree(o.degree, n));
  } else {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
      degrees.push_back(ExponentVector::indicator(IndexSet(mask), n));
  }
  std::vector<BettiEntry> table;
  VerificationReport ver;
  for (const auto& alpha : degrees) {
    const auto b = betti_numbers(*s.module, alpha);
    for (std::size_t i = 0; i < b.size(); ++i)
      if (b[i] != 0) table.push_back({static_cast<int>(i), alpha, b[i]});
    if (o.verify) {
      ++ver.checked;
      const KoszulStrand k = koszul_oracle(*s.module, alpha);
      if (k.betti != b) ver.mismatches.push_back("betti at " + alpha.to_string() + ": complex " + dims_string(b) +
                                                 ", Koszul " + dims_string(k.betti));
    }
  }
  std::ranges::sort(table, [](const BettiEntry& a, const BettiEntry& b) {
    return a.i != b.i ? a.i < b.i : a.degree < b.degree;
  });
  s.report.betti = std::move(table);
  if (o.verify) s.report.verification = std::move(ver);
  if (!o.degree.empty()) {
    const BettiComplex c = build_betti_complex(*s.module, parse_degree(o.degree, n));
    std::vector<std::size_t> comps;
    for (int t = c.assembled.min_degree(); t <= c.assembled.max_degree(); ++t) comps.push_back(c.assembled.dim(t));
    s.report.details = {{"degree", exponent_json(c.alpha)},
                        {"min_cochain_degree", c.assembled.empty() ? 0 : c.assembled.min_degree()},
                        {"component_dims", comps}};
  }
}

std::string dims_string(const std::map<int, std::size_t>& dims) {
  std::string out = "{";
  bool first = true;
  for (const auto& [i, d] : dims) {
    out += (first ? "" : ", ") + std::to_string(i) + ":" + std::to_string(d);
    first = false;
  }
  return out + "}";
}

void run_localcohom(Session& s, const Options& o) {
  const int n = s.file.n;
  std::vector<LocalCohomologyRow> rows;
  VerificationReport ver;
  std::size_t disagreements = 0;
  auto verify = [&](const ExponentVector& alpha, const std::map<int, std::size_t>& dims) {
    ++ver.checked;
    const CechStrand cech = cech_oracle(*s.module, alpha);
    if (cech.dims != dims)
      ver.mismatches.push_back("local cohomology at " + alpha.to_string() + ": complex " + dims_string(dims) +
                               ", Cech " + dims_string(cech.dims));
  };
  if (!o.degree.empty()) {
    const ExponentVector alpha = parse_degree(o.degree, n);
    const LocalCohomologyComplex c = build_L_complex(*s.module, alpha);
    std::map<int, std::size_t> dims;
    for (const auto& [t, d] : c.assembled.cohomology_dims()) dims[t + c.offset + 1] = d;
    disagreements = c.disagreements.size();
    rows.push_back({support(alpha.positive_part()), support(alpha.negative_part()), dims});
    if (o.verify) verify(alpha, dims);
    std::vector<std::size_t> comps;
    for (int t = c.assembled.min_degree(); t <= c.assembled.max_degree(); ++t) comps.push_back(c.assembled.dim(t));
    s.report.details = {{"degree", exponent_json(alpha)},
                        {"min_cochain_degree", c.assembled.empty() ? 0 : c.assembled.min_degree()},
                        {"component_dims", comps}};
  } else {
    for (const PatternResult& p : pattern_sweep(*s.module, o.verify)) {
      rows.push_back({p.plus, p.minus, p.dims});
      disagreements += p.subscript_disagreements;
      if (!o.verify) continue;
      verify(pattern_representative(p.plus, p.minus, n), p.dims);
      if (!p.stable)
        ver.mismatches.push_back("pattern (" + p.plus.to_string() + ", " + p.minus.to_string() +
                                 ") changes at the doubled representative");
    }
  }
  if (disagreements > 0)
    s.report.warnings.push_back(std::to_string(disagreements) +
                                " differential terms where the literal reduction subscript alpha_i^- + tau h gives "
                                "different coefficients than the localized rewriting rule (the latter is used)");
  s.report.local_cohomology = std::move(rows);
  if (o.verify) s.report.verification = std::move(ver);
}

}  // namespace

Outcome run_command(const Options& o) {
  Outcome out;
  if (o.command == "gen") {
    out.report.command = "gen";
    out.report.input = generate_test_matrix(o.n, o.s, o.l, o.seed);
    out.report.details = {{"n", o.n}, {"s", o.s}, {"l", o.l}, {"seed", o.seed}};
    return out;
  }
  Session s = open_session(o, o.command != "check");
  if (o.command == "ideals") run_ideals(s);
  else if (o.command == "basis") run_basis(s, o);
  else if (o.command == "reduce") run_reduce(s, o);
  else if (o.command == "ann") run_ann(s);
  else if (o.command == "dim") run_dim(s);
  else if (o.command == "betti") run_betti(s, o);
  else if (o.command == "localcohom") run_localcohom(s, o);
  else if (o.command != "check") throw InputError("unknown command " + o.command);
  out.report = std::move(s.report);
  if (out.report.verification && !out.report.verification->mismatches.empty()) out.exit_code = 2;
  return out;
}

namespace {

std::string monomial(IndexSet set, const std::vector<std::string>& vars) {
  if (set.empty()) return "1";
  const bool short_names = !vars.empty() && std::ranges::all_of(vars, [](const auto& v) { return v.size() == 1; });
  std::string out;
  for (int k : set.members()) {
    if (!out.empty() && !short_names) out += '*';
    out += vars.empty() ? "x" + std::to_string(k) : vars[static_cast<std::size_t>(k - 1)];
  }
  return out;
}

std::string ideal_string(const std::vector<IndexSet>& gens, const std::vector<std::string>& vars) {
  if (gens.empty()) return "0";
  std::string out = "(";
  for (std::size_t k = 0; k < gens.size(); ++k) out += (k ? ", " : "") + monomial(gens[k], vars);
  return out + ")";
}

std::string sets_string(const std::vector<IndexSet>& sets) {
  std::string out;
  for (std::size_t k = 0; k < sets.size(); ++k) out += (k ? " " : "") + sets[k].to_string();
  return out.empty() ? "(void)" : out;
}

}  // namespace

std::string render_text(const InvariantReport& r) {
  std::ostringstream out;
  const auto& vars = r.input.vars;
  if (r.command == "gen") return serialize(r.input);
  if (r.grading) {
    const GradingReport& g = *r.grading;
    out << "multigraded: " << (g.multigraded ? "yes" : "no") << '\n';
    if (!g.multigraded) out << "inconsistent cycle: " << g.inconsistency << '\n';
    if (g.multigraded && r.command == "check") {
      out << "components: " << g.components << "  (each adds a free translation t_c in Z^" << r.input.n << ")\n";
      for (std::size_t j = 0; j < g.base_gammas.size(); ++j)
        out << "  gamma_" << j + 1 << " = " << g.base_gammas[j].to_string() << " + t_" << g.column_component[j] << '\n';
      for (std::size_t i = 0; i < g.base_betas.size(); ++i)
        out << "  beta_" << i + 1 << " = " << g.base_betas[i].to_string() << " + t_" << g.row_component[i] << '\n';
      out << "uniform rank: " << (g.uniform_rank ? "yes" : "no") << '\n';
    }
    if (g.multigraded) {
      if (!g.squarefree && g.gammas.empty()) {
        out << "no squarefree solution\n";
      } else {
        out << "squarefree solution:";
        for (std::size_t j = 0; j < g.gammas.size(); ++j) out << " gamma_" << j + 1 << "=" << g.gammas[j].to_string();
        for (std::size_t i = 0; i < g.betas.size(); ++i) out << " beta_" << i + 1 << "=" << g.betas[i].to_string();
        out << '\n';
      }
    }
  }
  if (r.ideals)
    for (std::size_t i = 0; i < r.ideals->size(); ++i)
      out << "I_" << i + 1 << " = " << ideal_string((*r.ideals)[i].generators, vars)
          << "   facets of Delta_" << i + 1 << ": " << sets_string((*r.ideals)[i].facets) << '\n';
  if (r.annihilator)
    out << "ann(M) = " << ideal_string(r.annihilator->generators, vars) << "   [" << r.annihilator->method << "]\n";
  if (r.dimension) {
    const auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("-"); };
    out << "krull dimension: " << r.dimension->krull << '\n'
        << "local cohomology nonvanishing: min " << opt(r.dimension->min_local_cohomology) << ", max "
        << opt(r.dimension->max_local_cohomology) << '\n'
        << "projective dimension: " << opt(r.dimension->projective_dimension) << '\n';
  }
  if (r.betti) {
    if (r.betti->empty()) out << "all Betti numbers vanish\n";
    for (const auto& e : *r.betti) out << "b_" << e.i << "," << e.degree.to_string() << " = " << e.value << '\n';
  }
  if (r.local_cohomology) {
    for (const auto& row : *r.local_cohomology) {
      if (row.dims.empty() && r.local_cohomology->size() > 1) continue;
      out << "pattern +" << row.plus.to_string() << " -" << row.minus.to_string() << ":";
      if (row.dims.empty()) out << " all zero";
      for (const auto& [i, d] : row.dims) out << " H^" << i << " dim " << d;
      out << '\n';
    }
  }
  if (!r.details.is_null()) {
    if (r.details.contains("elements")) {
      out << "dim M_" << ExponentVector(r.details["degree"].get<std::vector<int>>()).to_string() << " = "
          << r.details["dim"].get<std::size_t>() << '\n';
      for (const auto& e : r.details["elements"])
        out << "  x^" << ExponentVector(e["exponent"].get<std::vector<int>>()).to_string() << " v_"
            << e["row"].get<std::size_t>() << '\n';
    } else if (r.details.contains("standard")) {
      const std::string lhs = "x^" + ExponentVector(r.details["degree"].get<std::vector<int>>()).to_string() + " v_" +
                              std::to_string(r.details["row"].get<std::size_t>());
      if (r.details["standard"].get<bool>()) {
        out << lhs << " is standard\n";
      } else {
        out << lhs << " =";
        if (r.details["coefficients"].empty()) out << " 0";
        const char* sep = " ";
        for (const auto& c : r.details["coefficients"]) {
          out << sep << "(" << c["value"].get<std::string>() << ") x^"
              << ExponentVector(c["exponent"].get<std::vector<int>>()).to_string() << " v_" << c["row"].get<std::size_t>();
          sep = " + ";
        }
        out << "  mod im(phi)\n";
      }
    } else if (r.details.contains("component_dims")) {
      out << "complex at " << ExponentVector(r.details["degree"].get<std::vector<int>>()).to_string()
          << ": dims " << r.details["component_dims"].dump() << " from cochain degree "
          << r.details["min_cochain_degree"].get<int>() << '\n';
    }
  }
  if (r.verification)
    out << "verification: " << r.verification->checked << " checked, " << r.verification->mismatches.size()
        << " mismatches\n";
  if (r.verification)
    for (const auto& m : r.verification->mismatches) out << "  MISMATCH " << m << '\n';
  for (const auto& w : r.warnings) out << "warning: " << w << '\n';
  return out.str();
}

}  // namespace sqfree::cli
