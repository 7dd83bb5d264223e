#include "leibniz/derivation.hpp"

#include <algorithm>

#include "leibniz/errors.hpp"

namespace leibniz {

DerivationSpec::DerivationSpec(RingPtr ring, const std::map<std::string, FieldElement>& values)
    : ring_(std::move(ring)) {
  for (const auto& [name, value] : values)
    if (ring_->index_of(name) < 0) throw Error("derivation assigns unknown generator '" + name + "'");
  values_.reserve(ring_->size());
  for (const auto& name : ring_->generators()) {
    const auto it = values.find(name);
    if (it == values.end()) throw Error("derivation has no value for generator '" + name + "'");
    require_same_ring(*ring_, *it->second.ring());
    values_.push_back(it->second);
  }
}

DerivationSpec::DerivationSpec(RingPtr ring, std::vector<FieldElement> values)
    : ring_(std::move(ring)), values_(std::move(values)) {
  if (values_.size() != ring_->size()) throw Error("derivation needs one value per generator");
  for (const auto& v : values_) require_same_ring(*ring_, *v.ring());
}

DerivationSpec DerivationSpec::zero(const RingPtr& ring) {
  return DerivationSpec(ring, std::vector<FieldElement>(ring->size(), FieldElement(ring)));
}

bool DerivationSpec::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const FieldElement& v) { return v.is_zero(); });
}

namespace {

bool polynomial_values(const DerivationSpec& d) {
  return std::all_of(d.values().begin(), d.values().end(),
                     [](const FieldElement& v) { return v.is_polynomial(); });
}

Polynomial apply_polynomial_valued(const DerivationSpec& d, const Polynomial& p) {
  Polynomial out(p.ring());
  for (std::size_t v = 0; v < d.values().size(); ++v) {
    const FieldElement& dv = d.value(v);
    if (dv.is_zero()) continue;
    out += p.partial(v) * dv.num();
  }
  return out;
}

FieldElement apply_polynomial(const DerivationSpec& d, const Polynomial& p) {
  if (polynomial_values(d)) return FieldElement(apply_polynomial_valued(d, p));
  FieldElement out(p.ring());
  for (std::size_t v = 0; v < d.values().size(); ++v) {
    const FieldElement& dv = d.value(v);
    if (dv.is_zero()) continue;
    out += FieldElement(p.partial(v)) * dv;
  }
  return out;
}

}  // namespace

FieldElement apply(const DerivationSpec& d, const FieldElement& x) {
  require_same_ring(*d.ring(), *x.ring());
  if (x.is_polynomial()) return apply_polynomial(d, x.num());
  const Polynomial& p = x.num();
  const Polynomial& q = x.den();
  if (polynomial_values(d)) {
    // Dividing through by g = gcd(q, d(q)) keeps repeated denominator factors
    // from being squared and then cancelled again.
    const Polynomial dq = apply_polynomial_valued(d, q);
    const Polynomial g = gcd(q, dq);
    const Polynomial q1 = exact_divide(q, g);
    Polynomial top = apply_polynomial_valued(d, p) * q1 - p * exact_divide(dq, g);
    if (top.is_zero()) return FieldElement(x.ring());
    // gcd(top, q) = 1 forces gcd(top, q * q1) = 1.
    if (gcd(top, q).is_one()) return FieldElement::from_coprime(std::move(top), q * q1);
    return FieldElement(std::move(top), q * q1);
  }
  const FieldElement dp = apply_polynomial(d, p);
  const FieldElement dq = apply_polynomial(d, q);
  const FieldElement qq(q);
  return (qq * dp - FieldElement(p) * dq) / (qq * qq);
}

FieldElement iterate(const DerivationSpec& d, unsigned k, const FieldElement& x) {
  FieldElement out = x;
  for (unsigned i = 0; i < k; ++i) out = apply(d, out);
  return out;
}

}  // namespace leibniz
