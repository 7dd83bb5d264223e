#include <cmath>
#include <string>

#include <gtest/gtest.h>

#include "leibniz/basis.hpp"
#include "leibniz/errors.hpp"
#include "leibniz/numeric.hpp"
#include "support/generators.hpp"

namespace leibniz {
namespace {

using testing::expr;
using testing::for_all;
using testing::nonzero_element;
using testing::ring_st;
using testing::ring_t;

// --- oracles ----------------------------------------------------------------

TEST(Parse, QuotientKeepsCoprimeParts) {
  const FieldElement x = expr("(t^2+1)/(t-1)");
  EXPECT_EQ(x.num(), expr("t^2+1").num());
  EXPECT_EQ(x.den(), expr("t-1").num());
}

TEST(Parse, RationalConstant) {
  const FieldElement x = expr("2/3");
  ASSERT_TRUE(x.is_constant());
  EXPECT_EQ(x.constant_value(), Rational(2) / Rational(3));
}

TEST(Parse, CancelsToOne) { EXPECT_TRUE(expr("t/t").is_one()); }

TEST(Parse, DivisionByZeroElement) {
  EXPECT_THROW(expr("1/(t-t)"), DivisionByZero);
  EXPECT_THROW(expr("(t-t)^-2"), DivisionByZero);
}

TEST(Parse, SyntaxErrorsReportPosition) {
  try {
    expr("t + * 2");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position, 4u);
  }
  EXPECT_THROW(expr("(t+1"), ParseError);
  EXPECT_THROW(expr("t^"), ParseError);
  EXPECT_THROW(expr(""), ParseError);
  EXPECT_THROW(expr("t t"), ParseError);
}

TEST(Parse, UnknownIdentifier) { EXPECT_THROW(expr("s+1"), ParseError); }

TEST(Parse, UnaryMinusAndPrecedence) {
  EXPECT_EQ(expr("-t^2"), expr("0-t*t"));
  EXPECT_EQ(expr("2*t^-1"), expr("2/t"));
  EXPECT_EQ(expr("-(s-t)", ring_st()), expr("t-s", ring_st()));
  EXPECT_EQ(expr("1/2/3"), expr("1/6"));
}

TEST(Arithmetic, Oracles) {
  const FieldElement t = FieldElement::generator(ring_t(), 0);
  EXPECT_EQ(t * t, expr("t^2"));
  EXPECT_EQ(expr("t^2-1") / expr("t-1"), expr("t+1"));
  EXPECT_EQ(t.pow(-1), expr("1/t"));
  EXPECT_THROW(FieldElement(ring_t()).inverse(), DivisionByZero);
  EXPECT_THROW(FieldElement(ring_t()).pow(-1), DivisionByZero);
}

TEST(Arithmetic, DenominatorIsMonic) {
  const FieldElement x = expr("1/(3*t+6)");
  EXPECT_EQ(x.num(), expr("1/3").num());
  EXPECT_EQ(x.den(), expr("t+2").num());
  EXPECT_TRUE(x.den().leading_coefficient().is_one());
}

TEST(Gcd, Multivariate) {
  const RingPtr r = ring_st();
  const Polynomial a = expr("(t-1)*(t+s)^2", r).num();
  const Polynomial b = expr("(2*t-2)*(s-2)*(t+s)", r).num();
  EXPECT_EQ(gcd(a, b), expr("(t-1)*(t+s)", r).num());
  EXPECT_TRUE(gcd(expr("s^2+t", r).num(), expr("s+t^2", r).num()).is_one());
  EXPECT_EQ(gcd(Polynomial(r), Polynomial(r)), Polynomial(r));
}

TEST(Rendering, QuotientForm) {
  EXPECT_EQ(expr("(t^2+1)/(t-1)").to_string(), "(t^2 + 1)/(t - 1)");
  EXPECT_EQ(expr("-3/4*t^2*s + s", ring_st()).to_string(), "-3/4*s*t^2 + s");
  EXPECT_EQ(expr("0").to_string(), "0");
}

TEST(BestRational, ConvergentsOfPi) {
  EXPECT_EQ(best_rational(M_PI, 1000), Rational(355) / Rational(113));
  EXPECT_EQ(best_rational(M_PI, 10), Rational(22) / Rational(7));
  EXPECT_EQ(best_rational(0.5, 1000000), Rational(1) / Rational(2));
  EXPECT_EQ(best_rational(-2.0, 1), Rational(-2));
}

TEST(EvalNumeric, Oracles) {
  const NumericEmbedding at3(ring_t(), {{"t", 3.0}});
  const NumericEmbedding at1(ring_t(), {{"t", 1.0}});
  EXPECT_DOUBLE_EQ(eval_numeric(expr("(t^2+1)/(t-1)"), at3), 5.0);
  EXPECT_THROW(eval_numeric(expr("(t^2+1)/(t-1)"), at1), PoleError);
  EXPECT_DOUBLE_EQ(eval_numeric(expr("2/3"), at1), 2.0 / 3.0);
  EXPECT_THROW(NumericEmbedding(ring_st(), {{"t", 1.0}}), Error);
  EXPECT_THROW(NumericEmbedding(ring_t(), {{"t", NAN}}), Error);
}

TEST(Basis, Oracles) {
  const auto render = [](const std::vector<FieldElement>& xs) {
    std::vector<std::string> out;
    for (const auto& x : xs) out.push_back(x.to_string());
    return out;
  };
  using V = std::vector<std::string>;
  EXPECT_EQ(render(enumerate_basis(ring_t(), 2)), (V{"1", "t", "t^2", "1/t", "1/t^2"}));
  EXPECT_EQ(render(enumerate_basis(ring_t(), 0)), (V{"1"}));
  EXPECT_EQ(render(enumerate_basis(ring_st(), 1)), (V{"1", "s", "t", "1/s", "1/t"}));
  EXPECT_EQ(enumerate_basis(ring_st(), 3).size(), 1u + 2 * 9);
}

// --- properties -------------------------------------------------------------

TEST(FieldAxioms, HoldExactlyOnRandomElements) {
  for (const RingPtr& ring : {ring_t(), ring_st()}) {
    const std::uint32_t degree = ring->size() == 1 ? 4 : 2;
    for_all(11, 60, [&](Sampler& rng, int) {
      const FieldElement a = rng.element(ring, degree);
      const FieldElement b = rng.element(ring, degree);
      const FieldElement c = rng.element(ring, degree);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_TRUE((a - a).is_zero());
      if (!a.is_zero()) {
        EXPECT_TRUE((a * a.inverse()).is_one());
        EXPECT_EQ((b / a) * a, b);
      }
    });
  }
}

TEST(CanonicalForm, IsReducedAndMonic) {
  for_all(12, 60, [](Sampler& rng, int) {
    const FieldElement x = rng.element(ring_st(), 3) * rng.element(ring_st(), 2);
    EXPECT_TRUE(gcd(x.num(), x.den()).is_one());
    EXPECT_TRUE(x.den().leading_coefficient().is_one());
  });
}

TEST(Rendering, ParseOfRenderIsIdentity) {
  for (const RingPtr& ring : {ring_t(), ring_st()}) {
    for_all(13, 100, [&](Sampler& rng, int) {
      const FieldElement x = rng.element(ring, 4);
      EXPECT_EQ(parse_expr(x.to_string(), ring), x) << x.to_string();
    });
  }
}

TEST(EvalNumeric, IsAHomomorphismUpToRounding) {
  const NumericEmbedding e(ring_st(), {{"s", 2.718281828459045}, {"t", 3.141592653589793}});
  for_all(14, 200, [&](Sampler& rng, int) {
    const FieldElement a = rng.element(ring_st(), 3);
    const FieldElement b = rng.element(ring_st(), 3);
    double ea = 0, eb = 0, eab = 0, esum = 0;
    try {
      ea = eval_numeric(a, e);
      eb = eval_numeric(b, e);
      eab = eval_numeric(a * b, e);
      esum = eval_numeric(a + b, e);
    } catch (const PoleError&) {
      return;
    }
    EXPECT_LE(std::abs(eab - ea * eb), 1e-9 * (1 + std::abs(ea * eb)));
    EXPECT_LE(std::abs(esum - (ea + eb)), 1e-9 * (1 + std::abs(ea) + std::abs(eb)));
  });
}

TEST(Sampler, IsDeterministicPerSeed) {
  Sampler a(99), b(99);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(a.element(ring_st()), b.element(ring_st()));
}

TEST(Gcd, DividesBothArguments) {
  for_all(15, 40, [](Sampler& rng, int) {
    const Polynomial common = rng.polynomial(ring_st(), 2);
    const Polynomial a = common * rng.polynomial(ring_st(), 2);
    const Polynomial b = common * rng.polynomial(ring_st(), 2);
    const Polynomial g = gcd(a, b);
    if (a.is_zero() && b.is_zero()) return;
    EXPECT_NO_THROW(exact_divide(a, g));
    EXPECT_NO_THROW(exact_divide(b, g));
    if (!common.is_zero()) EXPECT_NO_THROW(exact_divide(g, common));
  });
}

TEST(Gcd, UnivariateNeedsSeveralPrimes) {
  // The gcd's coefficients exceed any single word-size modulus.
  const std::string big = "(123456789012345678901234567*t^2 - 98765432109876543210987654321*t + 5)";
  const Polynomial a = expr(big + "*(t^3 + 7)").num();
  const Polynomial b = expr(big + "*(2*t - 1/3)^2").num();
  EXPECT_EQ(gcd(a, b), expr(big + "/123456789012345678901234567").num());
  EXPECT_TRUE(gcd(expr("t^5 - 1").num(), expr("t^5 + 1").num()).is_one());
}

TEST(Gcd, UnivariateMatchesConstructedFactor) {
  for_all(17, 60, [](Sampler& rng, int) {
    Polynomial common = rng.polynomial(ring_t(), 4);
    if (common.is_zero()) return;
    const Polynomial a = common * rng.polynomial(ring_t(), 5);
    const Polynomial b = common * common * rng.polynomial(ring_t(), 3);
    if (a.is_zero() || b.is_zero()) return;
    const Polynomial g = gcd(a, b);
    EXPECT_TRUE(g.leading_coefficient().is_one());
    EXPECT_NO_THROW(exact_divide(g, common));
    // Cofactors are coprime once the gcd is removed.
    EXPECT_TRUE(gcd(exact_divide(a, g), exact_divide(b, g)).is_one());
  });
}

TEST(NonzeroElement, NeverZero) {
  for_all(16, 50, [](Sampler& rng, int) { EXPECT_FALSE(nonzero_element(rng, ring_t(), 1).is_zero()); });
}

}  // namespace
}  // namespace leibniz
