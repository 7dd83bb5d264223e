#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "leibniz/basis.hpp"
#include "leibniz/independence.hpp"
#include "leibniz/linalg.hpp"
#include "support/generators.hpp"

namespace leibniz {
namespace {

using testing::expr;
using testing::for_all;
using testing::ring_t;

Rational q(long p, long d = 1) { return Rational(p) / Rational(d); }

DerivationSpec unit_d() { return DerivationSpec(ring_t(), {{"t", expr("1")}}); }

DerivationSequence with_zero_term() {
  return DerivationSequence(ring_t(), {make_iterate(q(0), 1, unit_d())});
}

constexpr double kPi = 3.141592653589793;

// --- linear algebra ---------------------------------------------------------

TEST(NullSpace, SmallSystem) {
  // x + 2y - z = 0, 2x + 4y = 0
  const auto basis = null_space({{q(1), q(2), q(-1)}, {q(2), q(4), q(0)}}, 3);
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(primitive_integer_vector(basis[0]), (std::vector<Rational>{q(2), q(-1), q(0)}));
}

TEST(NullSpace, FullRankHasTrivialKernel) {
  EXPECT_TRUE(null_space({{q(1), q(1)}, {q(1), q(-1)}}, 2).empty());
  EXPECT_EQ(null_space({}, 3).size(), 3u);
}

TEST(Determinant, ExactOverTheField) {
  const FieldMatrix m{{expr("t"), expr("1")}, {expr("t^2"), expr("2*t")}};
  EXPECT_EQ(determinant(m), expr("t^2"));
  EXPECT_TRUE(determinant({{expr("t"), expr("2*t")}, {expr("1/t"), expr("2/t")}}).is_zero());
}

// --- witness_independence ---------------------------------------------------

TEST(Witness, Oracles) {
  const auto first = iterate_sequence(unit_d(), 1);
  const WitnessResult w = witness_independence(first, {expr("t"), expr("t^2")});
  EXPECT_EQ(w.verdict, Verdict::Independent);
  EXPECT_EQ(w.matrix.entries[1][1], expr("2*t"));
  EXPECT_EQ(w.matrix.det, expr("t^2"));

  const WitnessResult z = witness_independence(with_zero_term(), {expr("t"), expr("t^3")});
  EXPECT_EQ(z.verdict, Verdict::Inconclusive);
  EXPECT_TRUE(z.matrix.det.is_zero());

  const WitnessResult id = witness_independence(DerivationSequence(ring_t()), {expr("1")});
  EXPECT_EQ(id.verdict, Verdict::Independent);
  EXPECT_TRUE(id.matrix.det.is_one());

  EXPECT_THROW(witness_independence(first, {expr("t")}), Error);
}

TEST(Witness, DeterminantIsAlternatingAndMultilinearInPoints) {
  const auto seq = iterate_sequence(DerivationSpec(ring_t(), {{"t", expr("t^2+1")}}), 2);
  for_all(51, 15, [&](Sampler& rng, int) {
    std::vector<FieldElement> pts{rng.element(ring_t(), 2), rng.element(ring_t(), 2), rng.element(ring_t(), 2)};
    const FieldElement det = witness_independence(seq, pts).matrix.det;
    std::vector<FieldElement> swapped{pts[1], pts[0], pts[2]};
    EXPECT_EQ(witness_independence(seq, swapped).matrix.det, -det);
    const Rational c = rng.nonzero_coefficient();
    std::vector<FieldElement> scaled{pts[0], pts[1].scaled(c), pts[2]};
    EXPECT_EQ(witness_independence(seq, scaled).matrix.det, det.scaled(c));
  });
}

// --- find_witness -----------------------------------------------------------

TEST(FindWitness, IteratesOfANonzeroDerivation) {
  for (int n = 0; n <= 6; ++n) {
    const auto seq = iterate_sequence(unit_d(), n);
    const auto pts = find_witness(seq, static_cast<std::uint32_t>(n + 2), 64, 0);
    ASSERT_TRUE(pts.has_value()) << n;
    EXPECT_FALSE(witness_independence(seq, *pts).matrix.det.is_zero()) << n;
  }
  EXPECT_TRUE(find_witness(DerivationSequence(ring_t()), 3, 1, 0)->front().is_one());
}

TEST(FindWitness, ZeroTermExhausts) {
  EXPECT_FALSE(find_witness(with_zero_term(), 3, 40, 0).has_value());
  EXPECT_FALSE(find_witness(with_zero_term(), 1, 1, 7).has_value());
}

TEST(FindWitness, IsDeterministicUnderSeed) {
  const auto seq = iterate_sequence(DerivationSpec(ring_t(), {{"t", expr("t")}}), 3);
  EXPECT_EQ(find_witness(seq, 1, 50, 5), find_witness(seq, 1, 50, 5));
}

// --- dependence_certificate -------------------------------------------------

TEST(Certificate, Oracles) {
  const std::vector<MapPtr> d_2d{make_iterate(q(1), 1, unit_d()), make_iterate(q(2), 1, unit_d())};
  EXPECT_EQ(dependence_certificate(d_2d, ring_t(), 3), (std::vector<Rational>{q(2), q(-1)}));
  EXPECT_FALSE(dependence_certificate(iterate_sequence(unit_d(), 2), 3).has_value());
  EXPECT_EQ(dependence_certificate(with_zero_term(), 3), (std::vector<Rational>{q(0), q(1)}));
}

TEST(Certificate, RelationVanishesOnTheBasis) {
  const DerivationSpec d(ring_t(), {{"t", expr("t^2")}});
  const std::vector<MapPtr> maps{make_iterate(q(1), 1, d), make_iterate(q(3, 2), 2, d),
                                 std::make_shared<CombinationMap>(std::vector<CombinationMap::Part>{
                                     {q(-1), make_iterate(q(1), 1, d)}, {q(5), make_iterate(q(1), 2, d)}})};
  const auto c = dependence_certificate(maps, ring_t(), 3);
  ASSERT_TRUE(c.has_value());
  for (const auto& b : enumerate_basis(ring_t(), 3)) {
    FieldElement sum(ring_t());
    for (std::size_t j = 0; j < maps.size(); ++j) sum += maps[j]->apply(b).scaled((*c)[j]);
    EXPECT_TRUE(sum.is_zero()) << b;
  }
}

TEST(Certificate, ConsistentWithWitnesses) {
  for (int n = 1; n <= 4; ++n) {
    const auto seq = iterate_sequence(unit_d(), n);
    const auto pts = find_witness(seq, static_cast<std::uint32_t>(n + 2), 64, 0);
    ASSERT_TRUE(pts.has_value());
    std::uint32_t bound = 0;
    for (const auto& p : *pts)
      bound = std::max({bound, p.num().total_degree(), p.den().total_degree()});
    EXPECT_FALSE(dependence_certificate(seq, std::max<std::uint32_t>(bound, 1)).has_value()) << n;
  }
}

// --- density_search ---------------------------------------------------------

TEST(Density, FirstOrderAtPi) {
  const NumericEmbedding e(ring_t(), {{"t", kPi}});
  const DensityOutcome out = density_search(iterate_sequence(unit_d(), 1), e, {0.5, 0.5});
  ASSERT_TRUE(out.found()) << out.failure;
  EXPECT_LT(out.result->error, 1e-6);
}

TEST(Density, RationalTargetIsHitExactly) {
  const NumericEmbedding e(ring_t(), {{"t", kPi}});
  const DensityOutcome out = density_search(iterate_sequence(unit_d(), 3), e, {0.75, 0, 0, 0});
  ASSERT_TRUE(out.found()) << out.failure;
  EXPECT_EQ(out.result->witness, expr("3/4"));
  EXPECT_EQ(out.result->error, 0.0);
}

TEST(Density, ZeroDerivationCannotReachOffAxisTargets) {
  const NumericEmbedding e(ring_t(), {{"t", kPi}});
  const DensityOutcome out = density_search(with_zero_term(), e, {0.0, 1.0});
  EXPECT_FALSE(out.found());
  EXPECT_FALSE(out.failure.empty());
}

TEST(Density, ResultsReevaluateBelowEps) {
  const NumericEmbedding e(ring_t(), {{"t", kPi}});
  const auto seq = iterate_sequence(DerivationSpec(ring_t(), {{"t", expr("t^2+1")}}), 2);
  for_all(52, 10, [&](Sampler& rng, int) {
    const std::vector<double> target{rng.coefficient().to_double() + 0.123, rng.coefficient().to_double() - 0.3,
                                     rng.coefficient().to_double() * std::sqrt(2.0)};
    const DensityOutcome out = density_search(seq, e, target);
    ASSERT_TRUE(out.found()) << out.failure;
    const DensityResult& r = *out.result;
    double err = 0;
    for (int k = 0; k <= 2; ++k)
      err = std::max(err, std::abs(eval_numeric(seq.apply(k, r.witness), e) - target[static_cast<std::size_t>(k)]));
    EXPECT_LT(err, 1e-6);
    EXPECT_DOUBLE_EQ(err, r.error);
  });
}

TEST(Density, RejectsMismatchedTargets) {
  const NumericEmbedding e(ring_t(), {{"t", kPi}});
  EXPECT_THROW(density_search(iterate_sequence(unit_d(), 1), e, {0.5}), Error);
  EXPECT_THROW(density_search(iterate_sequence(unit_d(), 1), e, {0.5, NAN}), Error);
}

}  // namespace
}  // namespace leibniz
