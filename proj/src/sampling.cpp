#include "leibniz/sampling.hpp"

#include "leibniz/basis.hpp"

namespace leibniz {

long Sampler::uniform(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(engine_() % span);
}

Rational Sampler::coefficient() {
  const long p = uniform(-9, 9);
  const long q = uniform(1, 9);
  return Rational(mpz_class(p), mpz_class(q));
}

Rational Sampler::nonzero_coefficient() {
  Rational c = coefficient();
  while (c.is_zero()) c = coefficient();
  return c;
}

Polynomial Sampler::polynomial(const RingPtr& ring, std::uint32_t max_degree) {
  const auto degree = static_cast<std::uint32_t>(uniform(0, max_degree));
  Polynomial::Terms terms;
  for (std::uint32_t d = 0; d <= degree; ++d)
    for (const Monomial& m : monomials_of_degree(ring->size(), d)) {
      Rational c = d == degree && terms.empty() ? nonzero_coefficient() : coefficient();
      if (!c.is_zero()) terms.emplace(m, std::move(c));
    }
  return Polynomial(ring, std::move(terms));
}

FieldElement Sampler::element(const RingPtr& ring, std::uint32_t max_degree) {
  Polynomial num = polynomial(ring, max_degree);
  Polynomial den = polynomial(ring, max_degree);
  if (den.is_zero()) den = Polynomial(ring, Rational(1));
  return FieldElement(std::move(num), std::move(den));
}

}  // namespace leibniz
