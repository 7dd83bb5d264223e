// Acceptance suite: one PASS/FAIL line per criterion, each timed against its
// runtime budget. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "leibniz/cli.hpp"
#include "leibniz/derivation.hpp"
#include "leibniz/independence.hpp"
#include "leibniz/json_io.hpp"
#include "leibniz/linalg.hpp"
#include "leibniz/parse.hpp"
#include "leibniz/sampling.hpp"
#include "leibniz/system.hpp"

namespace {

using namespace leibniz;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;  // <= 0 means no runtime bound
  std::function<Outcome()> body;
};

Rational q(long p, long d = 1) { return Rational(p) / Rational(d); }

RingPtr ring_t() {
  static const RingPtr ring = Ring::make({"t"});
  return ring;
}

FieldElement expr(const std::string& text) { return parse_expr(text, ring_t()); }

DerivationSpec spec_t(const std::string& value) { return DerivationSpec(ring_t(), {{"t", expr(value)}}); }

GammaTable broken_table() {
  return GammaTable::from_interior(4, [](int i, int j) { return (i == 2 && j == 2) ? q(2) : q(1); });
}

GammaVector random_gamma_vector(Sampler& rng, int n) {
  std::vector<Rational> values{Rational(1)};
  for (int k = 1; k <= n; ++k) values.push_back(rng.nonzero_coefficient());
  return GammaVector(std::move(values));
}

// --- 1 ----------------------------------------------------------------------

Outcome binomial_ten() {
  Outcome v;
  std::vector<RawGammaEntry> raw;
  for (int i = 0; i <= 10; ++i)
    for (int j = 0; i + j <= 10; ++j) raw.push_back({i, j, GammaTable::binomial(10)(i, j)});
  const ValidationResult valid = validate(raw, 10);
  v.require(valid.ok(), "validate rejected the binomial table");
  if (!v.ok) return v;
  const CocycleReport cocycle = check_cocycle(*valid.table);
  v.require(cocycle.passed(), "cocycle violation in the binomial table");
  v.require(cocycle.triples_checked == 286, "expected 286 triples, got " + std::to_string(cocycle.triples_checked));
  const FactorizeResult f = factorize(*valid.table);
  v.require(f.ok() && *f.gamma == GammaVector::factorial(10), "factorize did not return k!");
  if (f.ok()) v.require(synthesize(*f.gamma) == *valid.table, "synthesize(gamma) differs from the table");
  v.detail = v.ok ? "286 triples, gamma(10) = 3628800" : v.detail;
  return v;
}

// --- 2 ----------------------------------------------------------------------

Outcome gauge_round_trip() {
  Outcome v;
  Sampler rng(2);
  for (int c = 0; c < 100 && v.ok; ++c) {
    const GammaVector g = random_gamma_vector(rng, static_cast<int>(rng.uniform(1, 8)));
    const GammaTable table = synthesize(g);
    const FactorizeResult f = factorize(table);
    v.require(f.ok(), "factorize failed on a synthesized table (case " + std::to_string(c) + ")");
    if (!v.ok) break;
    for (int k = 0; k <= g.n(); ++k)
      v.require((*f.gamma)[k] == g[k] / g[1].pow(k), "gauge mismatch at case " + std::to_string(c));
    v.require(synthesize(*f.gamma) == table, "synthesize(factorize(synthesize(g))) differs");
  }
  if (v.ok) v.detail = "100 vectors, n in 1..8";
  return v;
}

// --- 3 ----------------------------------------------------------------------

Outcome coc_equivalence() {
  Outcome v;
  Sampler rng(3);
  int discrepancies = 0, cocycles = 0;
  for (int c = 0; c < 200; ++c) {
    const int n = static_cast<int>(rng.uniform(1, 6));
    GammaTable table = synthesize(random_gamma_vector(rng, n));
    if (c % 2 == 1) {
      // Perturb one interior entry (when there is one) to a new nonzero value.
      const auto interior = table.interior_entries();
      if (!interior.empty()) {
        const auto& pick = interior[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(interior.size()) - 1))];
        const int pi = std::get<0>(pick), pj = std::get<1>(pick);
        Rational fresh = std::get<2>(pick);
        while (fresh == std::get<2>(pick)) fresh = rng.nonzero_coefficient();
        const GammaTable base = table;
        table = GammaTable::from_interior(n, [&](int i, int j) { return (i == pi && j == pj) ? fresh : base(i, j); });
      }
    }
    const bool cocycle = check_cocycle(table).passed();
    cocycles += cocycle ? 1 : 0;
    if (cocycle != factorize(table).ok()) ++discrepancies;
  }
  v.require(discrepancies == 0, std::to_string(discrepancies) + " discrepancies");
  v.require(cocycles < 200, "no perturbed table broke the cocycle; the check is vacuous");
  if (v.ok)
    v.detail = "200 tables, " + std::to_string(cocycles) + " cocycles, " + std::to_string(200 - cocycles) +
               " non-cocycles, 0 discrepancies";
  return v;
}

// --- 4 ----------------------------------------------------------------------

Outcome higher_order_leibniz() {
  Outcome v;
  std::vector<Rational> binom{1};
  int checks = 0;
  for (const char* value : {"1", "t^2"}) {
    const DerivationSpec d = spec_t(value);
    Sampler rng(4);
    for (int c = 0; c < 500 && v.ok; ++c) {
      const FieldElement x = rng.element(ring_t(), 4);
      const FieldElement y = rng.element(ring_t(), 4);
      std::vector<FieldElement> dx{x}, dy{y}, dxy{x * y};
      for (int k = 1; k <= 6; ++k) {
        dx.push_back(apply(d, dx.back()));
        dy.push_back(apply(d, dy.back()));
        dxy.push_back(apply(d, dxy.back()));
      }
      for (int k = 1; k <= 6; ++k) {
        FieldElement rhs(ring_t());
        Rational coefficient(1);
        for (int i = 0; i <= k; ++i) {
          rhs += (dx[static_cast<std::size_t>(i)] * dy[static_cast<std::size_t>(k - i)]).scaled(coefficient);
          coefficient = coefficient * Rational(k - i) / Rational(i + 1);
        }
        v.require(dxy[static_cast<std::size_t>(k)] == rhs,
                  std::string("d(t)=") + value + ", k=" + std::to_string(k) + ", case " + std::to_string(c));
        ++checks;
      }
    }
  }
  if (v.ok) v.detail = std::to_string(checks) + " exact identities (2 derivations x 500 pairs x k=1..6)";
  return v;
}

// --- 5 ----------------------------------------------------------------------

Outcome constructive_solv() {
  Outcome v;
  const DerivationSpec d = spec_t("1");
  const GammaTable gamma = GammaTable::binomial(3);
  struct Path {
    const char* name;
    std::map<std::string, FieldElement> order2, order3;
  };
  const std::vector<Path> paths{{"default", {}, {}}, {"nonzero", {{"t", expr("1")}}, {{"t", expr("t^2-1/t")}}}};
  for (const Path& path : paths) {
    DerivationSequence seq = iterate_sequence(d, 1);
    for (int n = 2; n <= 3 && v.ok; ++n) {
      const std::string where = std::string(path.name) + " choices, n=" + std::to_string(n);
      const auto& choices = n == 2 ? path.order2 : path.order3;
      v.require(check_corLD_conditions(seq, gamma, 300, 50 + n).passed(), "defect conditions failed, " + where);
      const auto next = solve_next(seq, gamma, choices);
      const DerivationSequence extended = seq.extended(next);
      v.require(check_system(extended, gamma, kAcceptanceSamples, 7).passed(), "system check failed, " + where);
      // The canonical iterate only extends the canonical prefix, so past a
      // nonzero order-2 choice the reference is the zero-choice solution.
      const bool canonical_prefix = path.order2.empty();
      const MapPtr reference =
          canonical_prefix ? canonical_reference(d, gamma, n) : MapPtr(solve_next(seq, gamma, {}));
      try {
        const Decomposition dec = decompose_solution(next, reference, ring_t(), 300, 60 + n);
        const FieldElement expected = choices.empty() ? FieldElement(ring_t()) : choices.at("t");
        const FieldElement reference_t = reference->apply(expr("t"));
        v.require(dec.generator_values[0] == expected - reference_t, "residual value mismatch, " + where);
      } catch (const DecompositionError& e) {
        v.require(false, std::string("decomposition failed, ") + where + ": " + e.what());
      }
      seq = extended;
    }
  }
  if (v.ok) v.detail = "2 choice paths x n=2,3: 300 triples, 1000 samples, 300 residual samples";
  return v;
}

// --- 6 ----------------------------------------------------------------------

Outcome negative_control() {
  Outcome v;
  const CocycleReport r = check_cocycle(broken_table());
  v.require(!r.passed(), "broken table passed the cocycle check");
  if (!v.ok) return v;
  const CocycleViolation& first = r.violations.front();
  v.require(first.i == 1 && first.j == 1 && first.k == 2, "first violation is not (1,1,2)");
  v.require(first.lhs == q(2) && first.rhs == q(1), "violation values are not (2, 1)");
  bool refused = false;
  try {
    solve_next(iterate_sequence(spec_t("1"), 3), broken_table(), {});
  } catch (const CocycleError&) {
    refused = true;
  }
  v.require(refused, "solve_next accepted the broken table");
  if (v.ok) v.detail = "(1,1,2): lhs 2, rhs 1; solve_next refused";
  return v;
}

// --- 7 ----------------------------------------------------------------------

Outcome independence() {
  Outcome v;
  const DerivationSpec d = spec_t("1");
  for (int n = 1; n <= 6 && v.ok; ++n) {
    const DerivationSequence seq = iterate_sequence(d, n);
    const auto points = find_witness(seq, static_cast<std::uint32_t>(n + 2), 64, 0);
    v.require(points.has_value(), "no witness for n=" + std::to_string(n));
    if (!points) break;
    FieldMatrix m;
    for (const auto& x : *points) m.push_back(seq.images(x));
    v.require(!determinant(m).is_zero(), "zero determinant at n=" + std::to_string(n));
  }
  const DerivationSequence zero(ring_t(), {make_iterate(q(1), 1, DerivationSpec::zero(ring_t()))});
  const auto relation = dependence_certificate(zero, 3);
  bool nontrivial = false;
  if (relation)
    for (const auto& c : *relation) nontrivial = nontrivial || !c.is_zero();
  v.require(nontrivial, "no relation for the zero derivation");
  if (v.ok) v.detail = "witnesses for n=1..6; zero derivation relation (0, 1)";
  return v;
}

// --- 8 ----------------------------------------------------------------------

Outcome density() {
  Outcome v;
  const NumericEmbedding pi(ring_t(), {{"t", 3.141592653589793}});
  const DerivationSequence seq = iterate_sequence(spec_t("1"), 2);
  const std::vector<double> target{0.5, 0.25, -1.0};
  DensityOptions options;
  options.eps = 1e-6;
  options.degree_bound = 6;
  const DensityOutcome out = density_search(seq, pi, target, options);
  v.require(out.found(), "search failed: " + out.failure);
  if (!v.ok) return v;
  double error = 0;
  for (int k = 0; k <= 2; ++k)
    error = std::max(error, std::abs(eval_numeric(seq.apply(k, out.result->witness), pi) - target[static_cast<std::size_t>(k)]));
  v.require(error < 1e-6, "re-evaluated error " + std::to_string(error));
  const DerivationSequence zero(ring_t(), {make_iterate(q(0), 1, spec_t("1"))});
  v.require(!density_search(zero, pi, {0.0, 1.0}, options).found(), "zero derivation reached (0, 1)");
  if (v.ok) {
    std::ostringstream os;
    os << "error " << error << "; (id, 0) -> failure";
    v.detail = os.str();
  }
  return v;
}

// --- 9 ----------------------------------------------------------------------

std::string run_cli(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = cli::run(args, out, err);
  return out.str();
}

Outcome determinism() {
  Outcome v;
  const std::string binom10 = io::to_json(GammaTable::binomial(10)).dump();
  const std::string broken = io::to_json(broken_table()).dump();
  const std::string d = R"({"generators":["t"],"values":{"t":"1"}})";
  const std::string first = R"({"n":1,"gamma":)" + io::to_json(GammaTable::binomial(3)).dump() + R"(,"base":)" + d +
                            R"(,"terms":[{"kind":"iterate","order":1}]})";
  const auto iterates = [&](int n) {
    std::string terms;
    for (int k = 1; k <= n; ++k) terms += (k > 1 ? "," : "") + std::string(R"({"kind":"iterate","order":)") + std::to_string(k) + "}";
    return R"({"n":)" + std::to_string(n) + R"(,"base":)" + d + R"(,"terms":[)" + terms + "]}";
  };
  int code = 0;
  const std::string solved = nlohmann::json::parse(
      run_cli({"system", "solve-next", "--seq", first, "--choices", R"({"t":"1"})"}, code))["sequence"].dump();
  v.require(code == cli::kPass, "solve-next failed");
  const std::string zero = R"({"n":1,"base":)" + d + R"(,"terms":[{"kind":"iterate","order":1,"scale":"0"}]})";

  const std::vector<std::vector<std::string>> runs{
      {"gamma", "validate", "--table", binom10},
      {"gamma", "cocycle", "--table", binom10},
      {"gamma", "factorize", "--table", binom10},
      {"gamma", "synthesize", "--gamma", R"(["1","-2/3","5","7/4"])"},
      {"gamma", "cocycle", "--table", broken},
      {"deriv", "iterate", "--spec", R"({"generators":["t"],"values":{"t":"t^2"}})", "--expr", "(t+1)/(t^2-3)",
       "--order", "6"},
      {"system", "corld", "--seq", first, "--samples", "300", "--seed", "7"},
      {"system", "solve-next", "--seq", first, "--choices", R"({"t":"1"})"},
      {"system", "check", "--seq", solved, "--samples", "1000", "--seed", "7"},
      {"system", "decompose", "--seq", solved, "--samples", "300", "--seed", "7"},
      {"indep", "witness", "--seq", iterates(6), "--bound", "8", "--seed", "0"},
      {"indep", "certificate", "--seq", zero, "--bound", "3"},
      {"indep", "density", "--seq", iterates(2), "--embed", R"({"t":3.141592653589793})", "--target",
       "[0.5,0.25,-1.0]", "--eps", "1e-6", "--bound", "6"},
      {"indep", "density", "--seq", zero, "--embed", R"({"t":3.141592653589793})", "--target", "[0,1]"}};
  for (const auto& args : runs) {
    int first_code = 0, second_code = 0;
    const std::string a = run_cli(args, first_code);
    const std::string b = run_cli(args, second_code);
    v.require(a == b && first_code == second_code, "output differs for `" + args[0] + " " + args[1] + "`");
  }
  if (v.ok) v.detail = std::to_string(runs.size()) + " CLI runs, each repeated: byte-identical";
  return v;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "binomial table n=10: validate, cocycle, factorize, synthesize", 1.0, binomial_ten},
      {2, "gauge round-trip on 100 random gamma vectors", 5.0, gauge_round_trip},
      {3, "cocycle <=> factorizable on 200 random tables", 0.0, coc_equivalence},
      {4, "higher-order Leibniz for k <= 6 on 500 pairs", 30.0, higher_order_leibniz},
      {5, "constructive extension to n=2,3 with checks", 60.0, constructive_solv},
      {6, "negative control (1,1,2) and solver refusal", 0.0, negative_control},
      {7, "independence witnesses n=1..6, zero-derivation relation", 30.0, independence},
      {8, "density search at t = pi, and (id, 0) failure", 10.0, density},
      {9, "CLI determinism", 0.0, determinism},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome v;
    try {
      v = c.body();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && seconds >= c.budget_seconds) {
      v.ok = false;
      v.detail = "over budget; " + v.detail;
    }
    failures += v.ok ? 0 : 1;
    char timing[64];
    if (c.budget_seconds > 0)
      std::snprintf(timing, sizeof timing, "%.2fs < %.0fs", seconds, c.budget_seconds);
    else
      std::snprintf(timing, sizeof timing, "%.2fs", seconds);
    std::cout << (v.ok ? "PASS" : "FAIL") << "  criterion " << c.id << "  " << c.title << "  [" << timing << "]  "
              << v.detail << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
