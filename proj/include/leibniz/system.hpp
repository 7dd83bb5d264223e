#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "leibniz/gamma.hpp"
#include "leibniz/sequence.hpp"

namespace leibniz {

/// Sample counts used when the caller does not choose one.
inline constexpr int kGateSamples = 100;
inline constexpr int kAcceptanceSamples = 1000;

/// D_n(x, y) = sum_{i=1}^{n-1} Gamma(i, n-i) d_i(x) d_{n-i}(y) for the prefix
/// d_0..d_{n-1}, with n = prefix.order() + 1. This is the amount by which
/// d_n(xy) - x d_n(y) - y d_n(x) must differ from zero.
FieldElement leibniz_defect(const DerivationSequence& prefix, const GammaTable& gamma, const FieldElement& x,
                            const FieldElement& y);

/// The order-n term produced by solve_next. It is fixed by its values on
/// the generators and the recursion
///   d_n(xy) = x d_n(y) + y d_n(x) + D_n(x, y)
/// over monomials, extended Q-linearly to polynomials and to quotients by
///   d_n(p/q) = (d_n(p) - (p/q) d_n(q) - D_n(q, p/q)) / q.
/// Monomial values are memoized; the cache is internally locked.
class ExtensionMap final : public AdditiveMap {
 public:
  ExtensionMap(DerivationSequence prefix, GammaTable gamma, std::vector<FieldElement> generator_values);

  FieldElement apply(const FieldElement& x) const override;

  int order() const { return prefix_.order() + 1; }
  const DerivationSequence& prefix() const { return prefix_; }
  const GammaTable& gamma() const { return gamma_; }
  const std::vector<FieldElement>& generator_values() const { return generator_values_; }

 private:
  FieldElement on_monomial(const Monomial& m) const;
  FieldElement on_polynomial(const Polynomial& p) const;

  DerivationSequence prefix_;
  GammaTable gamma_;
  std::vector<FieldElement> generator_values_;
  mutable std::mutex mutex_;
  mutable std::map<Monomial, FieldElement, GrlexLess> memo_;
};

struct SystemViolation {
  int k;
  FieldElement x;
  FieldElement y;
  FieldElement lhs;  // d_k(xy)
  FieldElement rhs;  // sum_i Gamma(i, k-i) d_i(x) d_{k-i}(y)
};

struct SystemReport {
  std::uint64_t seed = 0;
  int samples = 0;
  std::vector<SystemViolation> violations;
  bool passed() const { return violations.empty(); }
};

/// Checks d_k(xy) = sum_{i=0}^k Gamma(i, k-i) d_i(x) d_{k-i}(y) exactly for
/// k = first_order..n on `sample_count` seeded random pairs.
SystemReport check_system(const DerivationSequence& sequence, const GammaTable& gamma, int sample_count,
                          std::uint64_t seed, int first_order = 1);

using BilinearForm = std::function<FieldElement(const FieldElement&, const FieldElement&)>;

struct DefectViolation {
  std::string identity;  // "symmetry", "multiplicative" or "additivity"
  FieldElement x;
  FieldElement y;
  FieldElement z;
  FieldElement lhs;
  FieldElement rhs;
};

struct DefectReport {
  std::uint64_t seed = 0;
  int samples = 0;
  std::vector<DefectViolation> violations;
  bool passed() const { return violations.empty(); }
};

/// Checks, on seeded random triples,
///   D(x, y) = D(y, x)
///   D(xy, z) + z D(x, y) = D(x, yz) + x D(y, z)
///   D(x + y, z) = D(x, z) + D(y, z)
/// which together characterize the forms D(x, y) = f(xy) - x f(y) - y f(x)
/// with f additive.
DefectReport check_defect_conditions(const BilinearForm& form, const RingPtr& ring, int sample_count,
                                     std::uint64_t seed);

/// check_defect_conditions applied to D_n of the prefix.
DefectReport check_corLD_conditions(const DerivationSequence& prefix, const GammaTable& gamma, int sample_count,
                                    std::uint64_t seed);

struct SolveOptions {
  int prefix_samples = kGateSamples;
  std::uint64_t seed = 0;
};

/// Builds d_n for n = prefix.order() + 1 so that the system also holds at
/// order n. Generators missing from `choices` get d_n(t) = 0. Throws
/// CocycleError when Gamma fails the cocycle identity and PrefixCheckError
/// when the prefix does not satisfy the system.
std::shared_ptr<const ExtensionMap> solve_next(const DerivationSequence& prefix, const GammaTable& gamma,
                                               const std::map<std::string, FieldElement>& choices,
                                               const SolveOptions& options = {});

/// (gamma(n) / n!) d^n for the gamma factorization of the table. Throws if
/// the table does not factorize.
MapPtr canonical_reference(const DerivationSpec& base, const GammaTable& gamma, int n);

struct Decomposition {
  MapPtr residual;                              // d_n - reference
  std::vector<FieldElement> generator_values;  // residual(t) per generator
  int samples = 0;
};

/// Forms the difference of two solutions at the same order and verifies on
/// seeded random samples that it is additive and satisfies the first-order
/// Leibniz rule. Throws DecompositionError otherwise.
Decomposition decompose_solution(const MapPtr& solution, const MapPtr& reference, const RingPtr& ring,
                                 int sample_count = kGateSamples, std::uint64_t seed = 0);

}  // namespace leibniz
