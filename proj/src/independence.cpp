#include "leibniz/independence.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <set>

#include "leibniz/basis.hpp"
#include "leibniz/errors.hpp"
#include "leibniz/sampling.hpp"

namespace leibniz {

std::string to_string(Verdict verdict) {
  return verdict == Verdict::Independent ? "independent" : "inconclusive";
}

WitnessResult witness_independence(const std::vector<MapPtr>& maps, const std::vector<FieldElement>& points) {
  if (points.size() != maps.size()) throw Error("witness needs exactly one point per map");
  if (points.empty()) throw Error("witness needs at least one map");
  WitnessMatrix matrix{points, {}, FieldElement(points.front().ring())};
  for (const auto& x : points) {
    std::vector<FieldElement> row;
    row.reserve(maps.size());
    for (const auto& f : maps) row.push_back(f->apply(x));
    matrix.entries.push_back(std::move(row));
  }
  matrix.det = determinant(matrix.entries);
  const Verdict verdict = matrix.det.is_zero() ? Verdict::Inconclusive : Verdict::Independent;
  return {verdict, std::move(matrix)};
}

WitnessResult witness_independence(const DerivationSequence& sequence, const std::vector<FieldElement>& points) {
  return witness_independence(sequence.terms(), points);
}

std::optional<std::vector<FieldElement>> find_witness(const DerivationSequence& sequence,
                                                      std::uint32_t degree_bound, int budget,
                                                      std::uint64_t seed) {
  if (budget < 1) throw Error("budget must be positive");
  const RingPtr& ring = sequence.ring();
  const std::size_t width = sequence.terms().size();
  const std::vector<FieldElement> basis = enumerate_basis(ring, degree_bound);
  Sampler sampler(seed);

  // Rows in echelon form, each scaled to 1 at its pivot column.
  std::vector<std::pair<std::size_t, std::vector<FieldElement>>> echelon;
  std::vector<FieldElement> points;
  for (int attempt = 0; attempt < budget; ++attempt) {
    const auto index = static_cast<std::size_t>(attempt);
    const FieldElement x = index < basis.size() ? basis[index] : sampler.element(ring, std::max(degree_bound, 1U));
    std::vector<FieldElement> row = sequence.images(x);
    for (const auto& [pivot, reduced] : echelon) {
      if (row[pivot].is_zero()) continue;
      const FieldElement factor = row[pivot];
      for (std::size_t c = 0; c < width; ++c)
        if (!reduced[c].is_zero()) row[c] -= factor * reduced[c];
    }
    const auto lead = std::find_if(row.begin(), row.end(), [](const FieldElement& e) { return !e.is_zero(); });
    if (lead == row.end()) continue;
    const auto pivot = static_cast<std::size_t>(lead - row.begin());
    const FieldElement inv = row[pivot].inverse();
    for (auto& e : row) e *= inv;
    echelon.emplace_back(pivot, std::move(row));
    points.push_back(x);
    if (points.size() == width) {
      if (witness_independence(sequence, points).verdict == Verdict::Independent) return points;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::optional<std::vector<Rational>> dependence_certificate(const std::vector<MapPtr>& maps, const RingPtr& ring,
                                                            std::uint32_t basis_bound) {
  if (basis_bound < 1) throw Error("basis_bound must be at least 1");
  if (maps.empty()) return std::nullopt;
  RationalMatrix rows;
  for (const auto& b : enumerate_basis(ring, basis_bound)) {
    std::vector<FieldElement> values;
    Polynomial common(ring, Rational(1));
    for (const auto& f : maps) {
      values.push_back(f->apply(b));
      const Polynomial& den = values.back().den();
      common = exact_divide(common * den, gcd(common, den));
    }
    // Coordinates of the numerators over the common denominator.
    std::map<Monomial, std::vector<Rational>, GrlexLess> coordinates;
    for (std::size_t j = 0; j < values.size(); ++j) {
      const Polynomial scaled = values[j].num() * exact_divide(common, values[j].den());
      for (const auto& [m, c] : scaled.terms()) {
        auto it = coordinates.try_emplace(m, std::vector<Rational>(maps.size(), Rational(0))).first;
        it->second[j] = c;
      }
    }
    for (auto& [m, row] : coordinates) rows.push_back(std::move(row));
  }
  const auto kernel = null_space(std::move(rows), maps.size());
  if (kernel.empty()) return std::nullopt;
  return primitive_integer_vector(kernel.front());
}

std::optional<std::vector<Rational>> dependence_certificate(const DerivationSequence& sequence,
                                                            std::uint32_t basis_bound) {
  return dependence_certificate(sequence.terms(), sequence.ring(), basis_bound);
}

namespace {

struct Evaluated {
  std::vector<double> image;
  double error;
};

Evaluated evaluate_candidate(const DerivationSequence& sequence, const NumericEmbedding& embedding,
                             const FieldElement& x, const std::vector<double>& target) {
  Evaluated out{{}, 0.0};
  for (const auto& f : sequence.terms()) {
    out.image.push_back(eval_numeric(f->apply(x), embedding));
    out.error = std::max(out.error, std::fabs(out.image.back() - target[out.image.size() - 1]));
  }
  return out;
}

}  // namespace

DensityOutcome density_search(const DerivationSequence& sequence, const NumericEmbedding& embedding,
                              const std::vector<double>& target, const DensityOptions& options) {
  const RingPtr& ring = sequence.ring();
  require_same_ring(*ring, *embedding.ring());
  const std::size_t width = sequence.terms().size();
  if (target.size() != width) throw Error("target length must equal the number of sequence terms");
  if (!(options.eps > 0)) throw Error("eps must be positive");
  for (double v : target)
    if (!std::isfinite(v)) throw Error("target must be finite");
  DensityOutcome outcome;

  // Every d_k with k >= 1 kills rationals, so (q, 0, ..., 0) is hit by x = q.
  if (std::all_of(target.begin() + 1, target.end(), [](double v) { return v == 0.0; })) {
    const FieldElement x(ring, best_rational(target[0], options.max_denominator));
    Evaluated e = evaluate_candidate(sequence, embedding, x, target);
    if (e.error < options.eps) {
      outcome.result = DensityResult{x, std::move(e.image), target, e.error, options.max_denominator, 1};
      return outcome;
    }
  }

  // Numeric graph vectors of the basis elements.
  std::vector<FieldElement> candidates;
  std::vector<Eigen::VectorXd> vectors;
  for (const auto& b : enumerate_basis(ring, options.degree_bound)) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(width));
    try {
      for (std::size_t j = 0; j < width; ++j)
        v[static_cast<Eigen::Index>(j)] = eval_numeric(sequence.apply(static_cast<int>(j), b), embedding);
    } catch (const PoleError&) {
      continue;
    }
    candidates.push_back(b);
    vectors.push_back(std::move(v));
  }

  // Greedy column-pivoted Gram-Schmidt picks the best-conditioned subset.
  std::vector<Eigen::VectorXd> residual = vectors;
  std::vector<std::size_t> selected;
  std::vector<bool> used(vectors.size(), false);
  double running_max = 0.0;
  for (std::size_t step = 0; step < width; ++step) {
    std::size_t best = vectors.size();
    double best_norm = -1.0;
    for (std::size_t i = 0; i < residual.size(); ++i)
      if (!used[i] && residual[i].norm() > best_norm) {
        best = i;
        best_norm = residual[i].norm();
      }
    if (best == vectors.size() || best_norm <= 0.0 || best_norm < options.pivot_threshold * running_max) {
      outcome.failure = "singular selection: basis vectors are numerically dependent (found " +
                        std::to_string(selected.size()) + " of " + std::to_string(width) +
                        "); enlarge degree_bound";
      return outcome;
    }
    running_max = std::max(running_max, best_norm);
    used[best] = true;
    selected.push_back(best);
    const Eigen::VectorXd q = residual[best] / best_norm;
    for (std::size_t i = 0; i < residual.size(); ++i)
      if (!used[i]) residual[i] -= residual[i].dot(q) * q;
  }

  const auto size = static_cast<Eigen::Index>(width);
  Eigen::MatrixXd system(size, size);
  for (Eigen::Index c = 0; c < size; ++c) system.col(c) = vectors[selected[static_cast<std::size_t>(c)]];
  const Eigen::VectorXd rhs = Eigen::Map<const Eigen::VectorXd>(target.data(), size);
  const Eigen::VectorXd weights = system.fullPivLu().solve(rhs);
  if (!weights.allFinite()) {
    outcome.failure = "singular selection: linear solve produced non-finite weights; enlarge degree_bound";
    return outcome;
  }

  mpz_class denominator = options.max_denominator;
  for (int attempt = 1; attempt <= options.max_retries; ++attempt, denominator *= 2) {
    FieldElement x(ring);
    for (Eigen::Index c = 0; c < size; ++c)
      x += candidates[selected[static_cast<std::size_t>(c)]].scaled(best_rational(weights[c], denominator));
    Evaluated e{{}, 0.0};
    try {
      e = evaluate_candidate(sequence, embedding, x, target);
    } catch (const PoleError&) {
      continue;
    }
    if (e.error < options.eps) {
      outcome.result = DensityResult{std::move(x), std::move(e.image), target, e.error, denominator, attempt};
      return outcome;
    }
  }
  outcome.failure = "retries exhausted without reaching eps";
  return outcome;
}

}  // namespace leibniz
