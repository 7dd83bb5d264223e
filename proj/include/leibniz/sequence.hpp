#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "leibniz/derivation.hpp"
#include "leibniz/gamma_vector.hpp"

namespace leibniz {

/// Q-linear self-map of the field. Implementations are additive and
/// Q-homogeneous by construction.
class AdditiveMap {
 public:
  virtual ~AdditiveMap() = default;
  virtual FieldElement apply(const FieldElement& x) const = 0;
  FieldElement operator()(const FieldElement& x) const { return apply(x); }
};

using MapPtr = std::shared_ptr<const AdditiveMap>;

class IdentityMap final : public AdditiveMap {
 public:
  FieldElement apply(const FieldElement& x) const override { return x; }
};

/// scale * d^order for a base derivation d.
class IterateMap final : public AdditiveMap {
 public:
  IterateMap(Rational scale, unsigned order, DerivationSpec base)
      : scale_(std::move(scale)), order_(order), base_(std::move(base)) {}

  FieldElement apply(const FieldElement& x) const override;

  const Rational& scale() const { return scale_; }
  unsigned order() const { return order_; }
  const DerivationSpec& base() const { return base_; }

 private:
  Rational scale_;
  unsigned order_;
  DerivationSpec base_;
};

/// sum_i c_i * f_i
class CombinationMap final : public AdditiveMap {
 public:
  using Part = std::pair<Rational, MapPtr>;
  explicit CombinationMap(std::vector<Part> parts) : parts_(std::move(parts)) {}

  FieldElement apply(const FieldElement& x) const override;
  const std::vector<Part>& parts() const { return parts_; }

 private:
  std::vector<Part> parts_;
};

/// d_0 = id, d_1, ..., d_n over one ring.
class DerivationSequence {
 public:
  /// The order-0 sequence (id).
  explicit DerivationSequence(RingPtr ring);
  /// id followed by `higher` as d_1, ..., d_n.
  DerivationSequence(RingPtr ring, std::vector<MapPtr> higher);

  const RingPtr& ring() const { return ring_; }
  int order() const { return static_cast<int>(terms_.size()) - 1; }
  const MapPtr& term(int k) const { return terms_.at(static_cast<std::size_t>(k)); }
  const std::vector<MapPtr>& terms() const { return terms_; }

  FieldElement apply(int k, const FieldElement& x) const { return term(k)->apply(x); }
  /// d_0(x), ..., d_n(x)
  std::vector<FieldElement> images(const FieldElement& x) const;

  /// Orders 0..n of this sequence.
  DerivationSequence prefix(int n) const;
  DerivationSequence extended(MapPtr next) const;

 private:
  RingPtr ring_;
  std::vector<MapPtr> terms_;
};

MapPtr make_identity();
MapPtr make_iterate(Rational scale, unsigned order, DerivationSpec base);

/// (id, d, d^2, ..., d^n)
DerivationSequence iterate_sequence(const DerivationSpec& d, int n);

/// e_0 = id, e_k = (gamma(k) / k!) d^k for k = 1..gamma.n(). The result
/// satisfies d_k(xy) = sum_i gamma(k)/(gamma(i) gamma(k-i)) d_i(x) d_{k-i}(y).
DerivationSequence canonical_sequence(const DerivationSpec& d, const GammaVector& gamma);

}  // namespace leibniz
