#include "leibniz/system.hpp"

#include "leibniz/errors.hpp"
#include "leibniz/sampling.hpp"

namespace leibniz {

namespace {

void require_gamma_covers(const GammaTable& gamma, int n) {
  if (gamma.n() < n)
    throw Error("gamma table of order " + std::to_string(gamma.n()) + " does not cover order " + std::to_string(n));
}

/// D_n from precomputed images dx[i] = d_i(x), dy[i] = d_i(y), i < n.
FieldElement defect_from_images(const GammaTable& gamma, int n, const std::vector<FieldElement>& dx,
                                const std::vector<FieldElement>& dy, const RingPtr& ring) {
  FieldElement sum(ring);
  for (int i = 1; i <= n - 1; ++i) {
    const Rational& weight = gamma(i, n - i);
    if (weight.is_zero() || dx[i].is_zero() || dy[n - i].is_zero()) continue;
    sum += (dx[i] * dy[n - i]).scaled(weight);
  }
  return sum;
}

}  // namespace

FieldElement leibniz_defect(const DerivationSequence& prefix, const GammaTable& gamma, const FieldElement& x,
                            const FieldElement& y) {
  const int n = prefix.order() + 1;
  require_gamma_covers(gamma, n);
  return defect_from_images(gamma, n, prefix.images(x), prefix.images(y), prefix.ring());
}

// ---------------------------------------------------------------------------
// ExtensionMap

ExtensionMap::ExtensionMap(DerivationSequence prefix, GammaTable gamma, std::vector<FieldElement> generator_values)
    : prefix_(std::move(prefix)), gamma_(std::move(gamma)), generator_values_(std::move(generator_values)) {
  require_gamma_covers(gamma_, order());
  if (generator_values_.size() != prefix_.ring()->size())
    throw Error("extension needs one value per generator");
  for (const auto& v : generator_values_) require_same_ring(*prefix_.ring(), *v.ring());
}

FieldElement ExtensionMap::on_monomial(const Monomial& m) const {
  const RingPtr& ring = prefix_.ring();
  if (m.is_one()) return FieldElement(ring);
  std::size_t v = 0;
  while (m[v] == 0) ++v;
  if (m.degree() == 1) return generator_values_[v];
  {
    std::lock_guard lock(mutex_);
    if (const auto it = memo_.find(m); it != memo_.end()) return it->second;
  }
  // m = t_v * rest
  const Monomial unit = Monomial::unit(m.arity(), v);
  const Monomial rest = m / unit;
  const FieldElement x = FieldElement::generator(ring, v);
  const FieldElement y(Polynomial::monomial(ring, rest));
  FieldElement value = x * on_monomial(rest) + y * generator_values_[v] + leibniz_defect(prefix_, gamma_, x, y);
  std::lock_guard lock(mutex_);
  return memo_.try_emplace(m, std::move(value)).first->second;
}

FieldElement ExtensionMap::on_polynomial(const Polynomial& p) const {
  FieldElement out(prefix_.ring());
  for (const auto& [m, c] : p.terms()) out += on_monomial(m).scaled(c);
  return out;
}

FieldElement ExtensionMap::apply(const FieldElement& x) const {
  require_same_ring(*prefix_.ring(), *x.ring());
  if (x.is_polynomial()) return on_polynomial(x.num());
  // x = p/q and p = q * x give d_n(p) = q d_n(x) + x d_n(q) + D_n(q, x).
  const FieldElement q(x.den());
  const FieldElement dp = on_polynomial(x.num());
  const FieldElement dq = on_polynomial(x.den());
  return (dp - x * dq - leibniz_defect(prefix_, gamma_, q, x)) / q;
}

// ---------------------------------------------------------------------------
// Checks

SystemReport check_system(const DerivationSequence& sequence, const GammaTable& gamma, int sample_count,
                          std::uint64_t seed, int first_order) {
  if (sample_count < 1) throw Error("sample_count must be positive");
  const int n = sequence.order();
  require_gamma_covers(gamma, n);
  const RingPtr& ring = sequence.ring();
  SystemReport report;
  report.seed = seed;
  report.samples = sample_count;
  Sampler sampler(seed);
  for (int s = 0; s < sample_count; ++s) {
    const FieldElement x = sampler.element(ring);
    const FieldElement y = sampler.element(ring);
    if (n < std::max(first_order, 1)) continue;
    const auto dx = sequence.images(x);
    const auto dy = sequence.images(y);
    const FieldElement xy = x * y;
    for (int k = std::max(first_order, 1); k <= n; ++k) {
      FieldElement lhs = sequence.apply(k, xy);
      FieldElement rhs(ring);
      for (int i = 0; i <= k; ++i) {
        const Rational& weight = gamma(i, k - i);
        if (weight.is_zero()) continue;
        rhs += (dx[i] * dy[k - i]).scaled(weight);
      }
      if (lhs != rhs) report.violations.push_back({k, x, y, std::move(lhs), std::move(rhs)});
    }
  }
  return report;
}

DefectReport check_defect_conditions(const BilinearForm& form, const RingPtr& ring, int sample_count,
                                     std::uint64_t seed) {
  if (sample_count < 1) throw Error("sample_count must be positive");
  DefectReport report;
  report.seed = seed;
  report.samples = sample_count;
  Sampler sampler(seed);
  for (int s = 0; s < sample_count; ++s) {
    const FieldElement x = sampler.element(ring);
    const FieldElement y = sampler.element(ring);
    const FieldElement z = sampler.element(ring);
    auto record = [&](const char* identity, FieldElement lhs, FieldElement rhs) {
      if (lhs != rhs) report.violations.push_back({identity, x, y, z, std::move(lhs), std::move(rhs)});
    };
    const FieldElement dxy = form(x, y);
    const FieldElement dyz = form(y, z);
    const FieldElement dxz = form(x, z);
    record("symmetry", dxy, form(y, x));
    record("multiplicative", form(x * y, z) + z * dxy, form(x, y * z) + x * dyz);
    record("additivity", form(x + y, z), dxz + dyz);
  }
  return report;
}

DefectReport check_corLD_conditions(const DerivationSequence& prefix, const GammaTable& gamma, int sample_count,
                                    std::uint64_t seed) {
  require_gamma_covers(gamma, prefix.order() + 1);
  const BilinearForm form = [&](const FieldElement& x, const FieldElement& y) {
    return leibniz_defect(prefix, gamma, x, y);
  };
  return check_defect_conditions(form, prefix.ring(), sample_count, seed);
}

// ---------------------------------------------------------------------------
// Construction

std::shared_ptr<const ExtensionMap> solve_next(const DerivationSequence& prefix, const GammaTable& gamma,
                                               const std::map<std::string, FieldElement>& choices,
                                               const SolveOptions& options) {
  const RingPtr& ring = prefix.ring();
  const int n = prefix.order() + 1;
  require_gamma_covers(gamma, n);

  const CocycleReport cocycle = check_cocycle(gamma);
  if (!cocycle.passed()) {
    const auto& v = cocycle.violations.front();
    throw CocycleError("gamma table fails the cocycle identity at (" + std::to_string(v.i) + "," +
                       std::to_string(v.j) + "," + std::to_string(v.k) + "): " + v.lhs.to_string() +
                       " != " + v.rhs.to_string());
  }
  if (prefix.order() >= 1) {
    const SystemReport check = check_system(prefix, gamma, options.prefix_samples, options.seed);
    if (!check.passed())
      throw PrefixCheckError("prefix violates the system at order " + std::to_string(check.violations.front().k));
  }

  std::vector<FieldElement> values(ring->size(), FieldElement(ring));
  for (const auto& [name, value] : choices) {
    const int index = ring->index_of(name);
    if (index < 0) throw Error("choice for unknown generator '" + name + "'");
    require_same_ring(*ring, *value.ring());
    values[static_cast<std::size_t>(index)] = value;
  }
  return std::make_shared<ExtensionMap>(prefix, gamma, std::move(values));
}

MapPtr canonical_reference(const DerivationSpec& base, const GammaTable& gamma, int n) {
  const FactorizeResult factored = factorize(gamma);
  if (!factored.ok()) throw Error("gamma table does not factorize; no canonical reference");
  const GammaVector& g = *factored.gamma;
  if (n < 1 || n > g.n()) throw Error("reference order out of range");
  Rational factorial(1);
  for (int k = 2; k <= n; ++k) factorial *= Rational(k);
  return make_iterate(g[n] / factorial, static_cast<unsigned>(n), base);
}

Decomposition decompose_solution(const MapPtr& solution, const MapPtr& reference, const RingPtr& ring,
                                 int sample_count, std::uint64_t seed) {
  if (sample_count < 1) throw Error("sample_count must be positive");
  Decomposition out;
  out.residual = std::make_shared<CombinationMap>(
      std::vector<CombinationMap::Part>{{Rational(1), solution}, {Rational(-1), reference}});
  for (std::size_t v = 0; v < ring->size(); ++v)
    out.generator_values.push_back(out.residual->apply(FieldElement::generator(ring, v)));

  Sampler sampler(seed);
  for (int s = 0; s < sample_count; ++s) {
    const FieldElement x = sampler.element(ring);
    const FieldElement y = sampler.element(ring);
    const FieldElement dx = out.residual->apply(x);
    const FieldElement dy = out.residual->apply(y);
    if (out.residual->apply(x * y) != x * dy + y * dx)
      throw DecompositionError("residual violates the Leibniz rule at x = " + x.to_string() +
                               ", y = " + y.to_string());
    if (out.residual->apply(x + y) != dx + dy)
      throw DecompositionError("residual is not additive at x = " + x.to_string() + ", y = " + y.to_string());
  }
  out.samples = sample_count;
  return out;
}

}  // namespace leibniz
