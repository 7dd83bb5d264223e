#include "leibniz/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "leibniz/independence.hpp"
#include "leibniz/json_io.hpp"
#include "leibniz/parse.hpp"

namespace leibniz::cli {

namespace {

using io::json;

/// Values a run can be configured with; unset options keep these defaults.
struct RunConfig {
  std::string table;
  std::string gamma;
  std::string spec;
  std::string seq;
  std::string expr;
  std::string x;
  std::string y;
  std::string choices = "{}";
  std::string reference;
  std::string points;
  std::string embed;
  std::string target;
  std::uint64_t seed = 0;
  int samples = kGateSamples;
  int order = 1;
  double eps = 1e-6;
  int bound = -1;
  int budget = 64;
  std::string max_denominator = "1000000";
  int retries = 40;
};

/// Raised for bad arguments or unreadable input; maps to exit 2.
struct UsageError : Error {
  using Error::Error;
};

json load_json(const std::string& source, const char* what) {
  if (source.empty()) throw UsageError(std::string("missing ") + what);
  const auto first = source.find_first_not_of(" \t\r\n");
  try {
    if (first != std::string::npos && (source[first] == '{' || source[first] == '[')) return json::parse(source);
    std::ifstream in(source);
    if (!in) throw UsageError(std::string("cannot read ") + what + " '" + source + "'");
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("malformed JSON in ") + what + ": " + e.what());
  }
}

json expressions(const std::vector<FieldElement>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(x.to_string());
  return out;
}

const GammaTable& require_gamma(const io::SequenceDocument& doc) {
  if (!doc.gamma) throw UsageError("sequence document has no 'gamma'");
  return *doc.gamma;
}

struct Outcome {
  int code;
  json body;
};

// --- gamma ------------------------------------------------------------------

Outcome gamma_validate(const RunConfig& cfg) {
  const io::RawTable raw = io::raw_table_from_json(load_json(cfg.table, "table"));
  if (raw.n < 1) throw UsageError("gamma table order must be at least 1");
  const ValidationResult result = validate(raw.entries, raw.n);
  json violations = json::array();
  for (const auto& v : result.violations)
    violations.push_back({{"kind", to_string(v.kind)}, {"i", v.i}, {"j", v.j}, {"detail", v.detail}});
  return {result.ok() ? kPass : kViolation, {{"valid", result.ok()}, {"n", raw.n}, {"violations", violations}}};
}

Outcome gamma_cocycle(const RunConfig& cfg) {
  const CocycleReport report = check_cocycle(io::table_from_json(load_json(cfg.table, "table")));
  json violations = json::array();
  for (const auto& v : report.violations)
    violations.push_back({{"i", v.i}, {"j", v.j}, {"k", v.k}, {"lhs", io::to_json(v.lhs)}, {"rhs", io::to_json(v.rhs)}});
  return {report.passed() ? kPass : kViolation,
          {{"triples_checked", report.triples_checked}, {"violations", violations}}};
}

Outcome gamma_factorize(const RunConfig& cfg) {
  const GammaTable table = io::table_from_json(load_json(cfg.table, "table"));
  try {
    const FactorizeResult result = factorize(table);
    if (result.ok()) return {kPass, {{"gamma", io::to_json(*result.gamma)}}};
    const auto& m = *result.mismatch;
    return {kViolation,
            {{"mismatch",
              {{"i", m.i}, {"j", m.j}, {"table", io::to_json(m.table_value)}, {"factored", io::to_json(m.factored_value)}}}}};
  } catch (const ZeroEntryError& e) {
    return {kViolation, {{"zero_entry", {{"i", e.i}, {"j", e.j}}}}};
  }
}

Outcome gamma_synthesize(const RunConfig& cfg) {
  return {kPass, io::to_json(synthesize(io::gamma_vector_from_json(load_json(cfg.gamma, "gamma vector"))))};
}

Outcome gamma_order_condition(const RunConfig& cfg) {
  const GammaTable table = io::table_from_json(load_json(cfg.table, "table"));
  const bool holds = check_order_condition(table);
  return {holds ? kPass : kViolation, {{"holds", holds}}};
}

// --- deriv ------------------------------------------------------------------

Outcome deriv_apply(const RunConfig& cfg, bool iterated) {
  const DerivationSpec spec = io::spec_from_json(load_json(cfg.spec, "derivation spec"));
  if (cfg.expr.empty()) throw UsageError("missing --expr");
  const FieldElement x = parse_expr(cfg.expr, spec.ring());
  if (!iterated) return {kPass, {{"input", x.to_string()}, {"result", apply(spec, x).to_string()}}};
  if (cfg.order < 0) throw UsageError("--order must be non-negative");
  const auto k = static_cast<unsigned>(cfg.order);
  return {kPass, {{"input", x.to_string()}, {"order", cfg.order}, {"result", iterate(spec, k, x).to_string()}}};
}

// --- system -----------------------------------------------------------------

Outcome system_check(const RunConfig& cfg) {
  const auto doc = io::sequence_from_json(load_json(cfg.seq, "sequence"));
  const SystemReport report = check_system(doc.sequence, require_gamma(doc), cfg.samples, cfg.seed);
  json violations = json::array();
  for (const auto& v : report.violations)
    violations.push_back({{"k", v.k},
                          {"x", v.x.to_string()},
                          {"y", v.y.to_string()},
                          {"lhs", v.lhs.to_string()},
                          {"rhs", v.rhs.to_string()}});
  return {report.passed() ? kPass : kViolation,
          {{"seed", report.seed}, {"samples", report.samples}, {"violations", violations}}};
}

Outcome system_defect(const RunConfig& cfg) {
  const auto doc = io::sequence_from_json(load_json(cfg.seq, "sequence"));
  if (cfg.x.empty() || cfg.y.empty()) throw UsageError("missing --x or --y");
  const FieldElement x = parse_expr(cfg.x, doc.ring);
  const FieldElement y = parse_expr(cfg.y, doc.ring);
  const FieldElement value = leibniz_defect(doc.sequence, require_gamma(doc), x, y);
  return {kPass,
          {{"order", doc.sequence.order() + 1}, {"x", x.to_string()}, {"y", y.to_string()}, {"value", value.to_string()}}};
}

Outcome system_corld(const RunConfig& cfg) {
  const auto doc = io::sequence_from_json(load_json(cfg.seq, "sequence"));
  const DefectReport report = check_corLD_conditions(doc.sequence, require_gamma(doc), cfg.samples, cfg.seed);
  json violations = json::array();
  for (const auto& v : report.violations)
    violations.push_back({{"identity", v.identity},
                          {"x", v.x.to_string()},
                          {"y", v.y.to_string()},
                          {"z", v.z.to_string()},
                          {"lhs", v.lhs.to_string()},
                          {"rhs", v.rhs.to_string()}});
  return {report.passed() ? kPass : kViolation,
          {{"order", doc.sequence.order() + 1}, {"seed", report.seed}, {"samples", report.samples}, {"violations", violations}}};
}

Outcome system_solve_next(const RunConfig& cfg) {
  auto doc = io::sequence_from_json(load_json(cfg.seq, "sequence"));
  const auto choices = io::choices_from_json(load_json(cfg.choices, "choices"), doc.ring);
  try {
    const auto next = solve_next(doc.sequence, require_gamma(doc), choices, {cfg.samples, cfg.seed});
    doc.sequence = doc.sequence.extended(next);
    return {kPass,
            {{"seed", cfg.seed},
             {"prefix_samples", cfg.samples},
             {"generator_values", io::values_to_json(next->generator_values(), doc.ring)},
             {"sequence", io::to_json(doc)}}};
  } catch (const CocycleError& e) {
    return {kViolation, {{"refused", "cocycle"}, {"message", e.what()}}};
  } catch (const PrefixCheckError& e) {
    return {kViolation, {{"refused", "prefix"}, {"message", e.what()}}};
  }
}

Outcome system_decompose(const RunConfig& cfg) {
  const auto doc = io::sequence_from_json(load_json(cfg.seq, "sequence"));
  const int n = doc.sequence.order();
  if (n < 1) throw UsageError("decompose needs a sequence of order at least 1");
  const GammaTable& gamma = require_gamma(doc);
  const MapPtr reference =
      cfg.reference.empty()
          ? canonical_reference(doc.base, gamma, n)
          : io::term_from_json(load_json(cfg.reference, "reference"), doc.base, doc.gamma, doc.sequence.prefix(n - 1));
  try {
    const Decomposition result = decompose_solution(doc.sequence.term(n), reference, doc.ring, cfg.samples, cfg.seed);
    return {kPass,
            {{"order", n},
             {"seed", cfg.seed},
             {"samples", result.samples},
             {"leibniz", true},
             {"reference", io::term_to_json(reference, doc.base)},
             {"residual_values", io::values_to_json(result.generator_values, doc.ring)}}};
  } catch (const DecompositionError& e) {
    return {kViolation, {{"order", n}, {"seed", cfg.seed}, {"leibniz", false}, {"message", e.what()}}};
  }
}

// --- indep ------------------------------------------------------------------

json witness_json(const WitnessResult& w) {
  json matrix = json::array();
  for (const auto& row : w.matrix.entries) matrix.push_back(expressions(row));
  return {{"verdict", to_string(w.verdict)},
          {"points", expressions(w.matrix.points)},
          {"matrix", matrix},
          {"det", w.matrix.det.to_string()}};
}

Outcome indep_witness(const RunConfig& cfg) {
  const auto doc = io::sequence_from_json(load_json(cfg.seq, "sequence"));
  if (!cfg.points.empty()) {
    const json pts = load_json(cfg.points, "points");
    if (!pts.is_array()) throw UsageError("--points must be a JSON array of expressions");
    std::vector<FieldElement> points;
    for (const auto& p : pts) {
      if (!p.is_string()) throw UsageError("--points entries must be expression strings");
      points.push_back(parse_expr(p.get<std::string>(), doc.ring));
    }
    if (points.size() != doc.sequence.terms().size())
      throw UsageError("--points needs exactly n+1 expressions");
    const WitnessResult w = witness_independence(doc.sequence, points);
    return {w.verdict == Verdict::Independent ? kPass : kViolation, witness_json(w)};
  }
  const int bound = cfg.bound >= 0 ? cfg.bound : doc.sequence.order() + 2;
  const auto found = find_witness(doc.sequence, static_cast<std::uint32_t>(bound), cfg.budget, cfg.seed);
  json meta = {{"seed", cfg.seed}, {"degree_bound", bound}, {"budget", cfg.budget}};
  if (!found) {
    meta["verdict"] = "exhausted";
    return {kViolation, meta};
  }
  json body = witness_json(witness_independence(doc.sequence, *found));
  body.update(meta);
  return {kPass, body};
}

Outcome indep_certificate(const RunConfig& cfg) {
  const auto doc = io::sequence_from_json(load_json(cfg.seq, "sequence"));
  const int bound = cfg.bound >= 1 ? cfg.bound : 3;
  const auto relation = dependence_certificate(doc.sequence, static_cast<std::uint32_t>(bound));
  if (!relation) return {kViolation, {{"basis_bound", bound}, {"relation", nullptr}}};
  json coefficients = json::array();
  for (const auto& c : *relation) coefficients.push_back(io::to_json(c));
  return {kPass, {{"basis_bound", bound}, {"relation", coefficients}}};
}

Outcome indep_density(const RunConfig& cfg) {
  const auto doc = io::sequence_from_json(load_json(cfg.seq, "sequence"));
  const json embed = load_json(cfg.embed, "embedding");
  if (!embed.is_object()) throw UsageError("--embed must be a JSON object");
  std::map<std::string, double> assignment;
  for (const auto& [name, value] : embed.items()) {
    if (!value.is_number()) throw UsageError("embedding values must be numbers");
    assignment.emplace(name, value.get<double>());
  }
  const json target_json = load_json(cfg.target, "target");
  if (!target_json.is_array()) throw UsageError("--target must be a JSON array");
  std::vector<double> target;
  for (const auto& v : target_json) {
    if (!v.is_number()) throw UsageError("target entries must be numbers");
    target.push_back(v.get<double>());
  }
  DensityOptions options;
  options.eps = cfg.eps;
  options.degree_bound = static_cast<std::uint32_t>(cfg.bound >= 0 ? cfg.bound : 6);
  options.max_denominator = mpz_class(cfg.max_denominator, 10);
  options.max_retries = cfg.retries;
  const NumericEmbedding embedding(doc.ring, assignment);
  const DensityOutcome outcome = density_search(doc.sequence, embedding, target, options);
  json body = {{"embedding", embed},
               {"embedding_trust", "values assumed algebraically independent; not verified"},
               {"eps", cfg.eps},
               {"degree_bound", options.degree_bound},
               {"target", target}};
  if (!outcome.found()) {
    body["failure"] = outcome.failure;
    return {kViolation, body};
  }
  const DensityResult& r = *outcome.result;
  body["witness"] = r.witness.to_string();
  body["image"] = r.image;
  body["error"] = r.error;
  body["max_denominator"] = r.max_denominator.get_str();
  body["attempts"] = r.attempts;
  return {kPass, body};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact workbench for higher-order derivations on rational-function fields", "leibniz"};
  app.require_subcommand(1);

  auto table_opt = [&](CLI::App* sub) { sub->add_option("--table", cfg.table, "Gamma table JSON (file or inline)"); };
  auto seq_opt = [&](CLI::App* sub) { sub->add_option("--seq", cfg.seq, "Sequence JSON (file or inline)"); };
  auto sampling = [&](CLI::App* sub) {
    sub->add_option("--samples", cfg.samples, "Random samples")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "Random seed");
  };

  CLI::App* gamma = app.add_subcommand("gamma", "Gamma table algebra");
  gamma->require_subcommand(1);
  CLI::App* g_validate = gamma->add_subcommand("validate", "Check domain, symmetry and boundary");
  CLI::App* g_cocycle = gamma->add_subcommand("cocycle", "Exhaustive cocycle identity check");
  CLI::App* g_factorize = gamma->add_subcommand("factorize", "Factor a nowhere-zero table into gamma");
  CLI::App* g_synthesize = gamma->add_subcommand("synthesize", "Build the table from a gamma vector");
  CLI::App* g_order = gamma->add_subcommand("order-condition", "Nonzero interior entry on every antidiagonal");
  for (CLI::App* sub : {g_validate, g_cocycle, g_factorize, g_order}) table_opt(sub);
  g_synthesize->add_option("--gamma", cfg.gamma, "Gamma vector JSON array (file or inline)");

  CLI::App* deriv = app.add_subcommand("deriv", "Derivations and iterates");
  deriv->require_subcommand(1);
  CLI::App* d_apply = deriv->add_subcommand("apply", "Apply a derivation to an expression");
  CLI::App* d_iterate = deriv->add_subcommand("iterate", "Apply the k-th iterate");
  for (CLI::App* sub : {d_apply, d_iterate}) {
    sub->add_option("--spec", cfg.spec, "Derivation JSON (file or inline)");
    sub->add_option("--expr", cfg.expr, "Expression");
  }
  d_iterate->add_option("--order", cfg.order, "Iterate order");

  CLI::App* system = app.add_subcommand("system", "Generalized Leibniz system");
  system->require_subcommand(1);
  CLI::App* s_check = system->add_subcommand("check", "Check the system on random pairs");
  CLI::App* s_defect = system->add_subcommand("defect", "Evaluate D_n for the sequence as prefix");
  CLI::App* s_corld = system->add_subcommand("corld", "Check the conditions on D_n");
  CLI::App* s_solve = system->add_subcommand("solve-next", "Extend the sequence by one order");
  CLI::App* s_decompose = system->add_subcommand("decompose", "Split the last term into reference + derivation");
  for (CLI::App* sub : {s_check, s_defect, s_corld, s_solve, s_decompose}) seq_opt(sub);
  for (CLI::App* sub : {s_check, s_corld, s_solve, s_decompose}) sampling(sub);
  s_defect->add_option("--x", cfg.x, "First argument");
  s_defect->add_option("--y", cfg.y, "Second argument");
  s_solve->add_option("--choices", cfg.choices, "Generator values of the new term (JSON object)");
  s_decompose->add_option("--reference", cfg.reference, "Reference term JSON (default: canonical iterate)");

  CLI::App* indep = app.add_subcommand("indep", "Linear independence and density");
  indep->require_subcommand(1);
  CLI::App* i_witness = indep->add_subcommand("witness", "Certify independence by a nonzero determinant");
  CLI::App* i_certificate = indep->add_subcommand("certificate", "Search for a rational dependence relation");
  CLI::App* i_density = indep->add_subcommand("density", "Approximate a target by a graph point");
  for (CLI::App* sub : {i_witness, i_certificate, i_density}) seq_opt(sub);
  i_witness->add_option("--points", cfg.points, "Explicit points (JSON array of expressions)");
  i_witness->add_option("--bound", cfg.bound, "Basis degree bound (default n+2)");
  i_witness->add_option("--budget", cfg.budget, "Candidates to examine")->check(CLI::PositiveNumber);
  i_witness->add_option("--seed", cfg.seed, "Random seed");
  i_certificate->add_option("--bound", cfg.bound, "Basis degree bound (default 3)");
  i_density->add_option("--embed", cfg.embed, "Generator values (JSON object)");
  i_density->add_option("--target", cfg.target, "Target vector (JSON array)");
  i_density->add_option("--eps", cfg.eps, "Max-norm tolerance")->check(CLI::PositiveNumber);
  i_density->add_option("--bound", cfg.bound, "Basis degree bound (default 6)");
  i_density->add_option("--max-den", cfg.max_denominator, "Initial denominator budget");
  i_density->add_option("--retries", cfg.retries, "Denominator doublings");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    // Help is the one non-JSON output; it names the innermost subcommand given.
    app.exit(e, out, err);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    out << json{{"error", e.what()}}.dump(2) << '\n';
    return kUsage;
  }

  Outcome outcome{kUsage, {}};
  try {
    if (g_validate->parsed()) outcome = gamma_validate(cfg);
    else if (g_cocycle->parsed()) outcome = gamma_cocycle(cfg);
    else if (g_factorize->parsed()) outcome = gamma_factorize(cfg);
    else if (g_synthesize->parsed()) outcome = gamma_synthesize(cfg);
    else if (g_order->parsed()) outcome = gamma_order_condition(cfg);
    else if (d_apply->parsed()) outcome = deriv_apply(cfg, false);
    else if (d_iterate->parsed()) outcome = deriv_apply(cfg, true);
    else if (s_check->parsed()) outcome = system_check(cfg);
    else if (s_defect->parsed()) outcome = system_defect(cfg);
    else if (s_corld->parsed()) outcome = system_corld(cfg);
    else if (s_solve->parsed()) outcome = system_solve_next(cfg);
    else if (s_decompose->parsed()) outcome = system_decompose(cfg);
    else if (i_witness->parsed()) outcome = indep_witness(cfg);
    else if (i_certificate->parsed()) outcome = indep_certificate(cfg);
    else if (i_density->parsed()) outcome = indep_density(cfg);
  } catch (const std::exception& e) {
    // Everything that escapes a command is an input problem: bad files,
    // schema violations, parse errors, mismatched generators.
    err << "error: " << e.what() << '\n';
    out << json{{"error", e.what()}}.dump(2) << '\n';
    return kUsage;
  }
  out << outcome.body.dump(2) << '\n';
  return outcome.code;
}

}  // namespace leibniz::cli
