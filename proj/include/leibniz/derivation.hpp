#pragma once

#include <map>
#include <string>
#include <vector>

#include "leibniz/field_element.hpp"

namespace leibniz {

/// A derivation of Q(t_1, ..., t_m), fixed by its values on the generators
/// and extended to the whole field by the Leibniz rule d(xy) = x d(y) + y d(x).
class DerivationSpec {
 public:
  /// Every generator of `ring` must be assigned exactly once.
  DerivationSpec(RingPtr ring, const std::map<std::string, FieldElement>& values);
  DerivationSpec(RingPtr ring, std::vector<FieldElement> values);

  static DerivationSpec zero(const RingPtr& ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<FieldElement>& values() const { return values_; }
  const FieldElement& value(std::size_t index) const { return values_[index]; }
  bool is_zero() const;

  friend bool operator==(const DerivationSpec& a, const DerivationSpec& b) {
    return a.ring_->same_as(*b.ring_) && a.values_ == b.values_;
  }

 private:
  RingPtr ring_;
  std::vector<FieldElement> values_;
};

/// The Leibniz extension of `d` applied to `x`: on polynomials
/// d(p) = sum_v (dp/dt_v) d(t_v), on quotients d(p/q) = (q d(p) - p d(q)) / q^2.
FieldElement apply(const DerivationSpec& d, const FieldElement& x);

/// d^k(x) with d^0 = id.
FieldElement iterate(const DerivationSpec& d, unsigned k, const FieldElement& x);

}  // namespace leibniz
