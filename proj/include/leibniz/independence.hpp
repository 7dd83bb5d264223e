#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "leibniz/linalg.hpp"
#include "leibniz/numeric.hpp"
#include "leibniz/sequence.hpp"

namespace leibniz {

/// M[i][j] = d_j(x_i) for points x_0..x_n. A nonzero det certifies that no
/// nontrivial relation sum_j c_j d_j = 0 holds.
struct WitnessMatrix {
  std::vector<FieldElement> points;
  FieldMatrix entries;
  FieldElement det;
};

enum class Verdict { Independent, Inconclusive };

std::string to_string(Verdict verdict);

struct WitnessResult {
  Verdict verdict;
  WitnessMatrix matrix;
};

/// Requires points.size() == maps.size().
WitnessResult witness_independence(const std::vector<MapPtr>& maps, const std::vector<FieldElement>& points);
WitnessResult witness_independence(const DerivationSequence& sequence, const std::vector<FieldElement>& points);

/// Greedy search over enumerate_basis(degree_bound) and then seeded random
/// elements for points whose witness matrix has nonzero det. `budget` caps
/// the number of candidates examined. Returns nullopt when exhausted, which
/// is not a proof of dependence.
std::optional<std::vector<FieldElement>> find_witness(const DerivationSequence& sequence,
                                                      std::uint32_t degree_bound, int budget,
                                                      std::uint64_t seed);

/// Nontrivial c with sum_j c_j f_j(b) = 0 for every b in
/// enumerate_basis(basis_bound), normalized to coprime integers with the
/// first nonzero entry positive; nullopt when the kernel is trivial.
std::optional<std::vector<Rational>> dependence_certificate(const std::vector<MapPtr>& maps, const RingPtr& ring,
                                                            std::uint32_t basis_bound);
std::optional<std::vector<Rational>> dependence_certificate(const DerivationSequence& sequence,
                                                            std::uint32_t basis_bound);

struct DensityOptions {
  double eps = 1e-6;
  std::uint32_t degree_bound = 6;
  /// Starting denominator budget for rational rounding; doubled per retry.
  mpz_class max_denominator = 1000000;
  int max_retries = 40;
  /// Basis pivots below this fraction of the largest pivot are rejected.
  double pivot_threshold = 1e-8;
};

struct DensityResult {
  FieldElement witness;
  std::vector<double> image;  // (x, d_1(x), ..., d_n(x)) at the embedding
  std::vector<double> target;
  double error;               // max-norm of image - target
  mpz_class max_denominator;  // budget in force when the witness was accepted
  int attempts;
};

struct DensityOutcome {
  std::optional<DensityResult> result;
  std::string failure;
  bool found() const { return result.has_value(); }
};

/// Searches for a field element x whose graph vector comes within eps of
/// `target` in max-norm: picks well-conditioned basis vectors, solves for
/// real weights, rounds them to rationals by continued fractions and
/// re-evaluates exactly.
DensityOutcome density_search(const DerivationSequence& sequence, const NumericEmbedding& embedding,
                              const std::vector<double>& target, const DensityOptions& options = {});

}  // namespace leibniz
