#include "leibniz/sequence.hpp"

#include "leibniz/errors.hpp"

namespace leibniz {

GammaVector::GammaVector(std::vector<Rational> values) : values_(std::move(values)) {
  if (values_.empty() || !values_.front().is_one()) throw Error("gamma vector must start with gamma(0) = 1");
  for (std::size_t k = 0; k < values_.size(); ++k)
    if (values_[k].is_zero()) throw Error("gamma(" + std::to_string(k) + ") is zero");
}

GammaVector GammaVector::factorial(int n) {
  std::vector<Rational> values{Rational(1)};
  for (int k = 1; k <= n; ++k) values.push_back(values.back() * Rational(k));
  return GammaVector(std::move(values));
}

FieldElement IterateMap::apply(const FieldElement& x) const {
  if (scale_.is_zero()) return FieldElement(x.ring());
  return iterate(base_, order_, x).scaled(scale_);
}

FieldElement CombinationMap::apply(const FieldElement& x) const {
  FieldElement out(x.ring());
  for (const auto& [c, f] : parts_) {
    if (c.is_zero()) continue;
    out += f->apply(x).scaled(c);
  }
  return out;
}

DerivationSequence::DerivationSequence(RingPtr ring) : ring_(std::move(ring)), terms_{make_identity()} {}

DerivationSequence::DerivationSequence(RingPtr ring, std::vector<MapPtr> higher)
    : DerivationSequence(std::move(ring)) {
  for (auto& f : higher) {
    if (!f) throw Error("null term in derivation sequence");
    terms_.push_back(std::move(f));
  }
}

std::vector<FieldElement> DerivationSequence::images(const FieldElement& x) const {
  std::vector<FieldElement> out;
  out.reserve(terms_.size());
  for (const auto& f : terms_) out.push_back(f->apply(x));
  return out;
}

DerivationSequence DerivationSequence::prefix(int n) const {
  if (n < 0 || n > order()) throw Error("prefix order out of range");
  return DerivationSequence(ring_, std::vector<MapPtr>(terms_.begin() + 1, terms_.begin() + 1 + n));
}

DerivationSequence DerivationSequence::extended(MapPtr next) const {
  std::vector<MapPtr> higher(terms_.begin() + 1, terms_.end());
  higher.push_back(std::move(next));
  return DerivationSequence(ring_, std::move(higher));
}

MapPtr make_identity() {
  static const MapPtr identity = std::make_shared<IdentityMap>();
  return identity;
}

MapPtr make_iterate(Rational scale, unsigned order, DerivationSpec base) {
  return std::make_shared<IterateMap>(std::move(scale), order, std::move(base));
}

DerivationSequence iterate_sequence(const DerivationSpec& d, int n) {
  std::vector<MapPtr> higher;
  for (int k = 1; k <= n; ++k) higher.push_back(make_iterate(Rational(1), static_cast<unsigned>(k), d));
  return DerivationSequence(d.ring(), std::move(higher));
}

DerivationSequence canonical_sequence(const DerivationSpec& d, const GammaVector& gamma) {
  if (gamma.n() < 1) throw Error("canonical_sequence needs gamma up to order at least 1");
  std::vector<MapPtr> higher;
  Rational factorial(1);
  for (int k = 1; k <= gamma.n(); ++k) {
    factorial *= Rational(k);
    higher.push_back(make_iterate(gamma[k] / factorial, static_cast<unsigned>(k), d));
  }
  return DerivationSequence(d.ring(), std::move(higher));
}

}  // namespace leibniz
