#include "leibniz/basis.hpp"

namespace leibniz {

namespace {

void fill(std::size_t index, std::uint32_t remaining, std::vector<std::uint32_t>& exps,
          std::vector<Monomial>& out) {
  if (index + 1 == exps.size()) {
    exps[index] = remaining;
    out.emplace_back(exps);
    return;
  }
  for (std::uint32_t e = remaining + 1; e-- > 0;) {
    exps[index] = e;
    fill(index + 1, remaining - e, exps, out);
  }
  exps[index] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t arity, std::uint32_t degree) {
  std::vector<Monomial> out;
  if (arity == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  std::vector<std::uint32_t> exps(arity, 0);
  fill(0, degree, exps, out);
  return out;
}

std::vector<FieldElement> enumerate_basis(const RingPtr& ring, std::uint32_t total_degree_bound) {
  std::vector<FieldElement> out;
  std::vector<Monomial> nonconstant;
  for (std::uint32_t d = 0; d <= total_degree_bound; ++d)
    for (const Monomial& m : monomials_of_degree(ring->size(), d)) {
      out.emplace_back(Polynomial::monomial(ring, m));
      if (d > 0) nonconstant.push_back(m);
    }
  for (const Monomial& m : nonconstant)
    out.emplace_back(Polynomial(ring, Rational(1)), Polynomial::monomial(ring, m));
  return out;
}

}  // namespace leibniz
