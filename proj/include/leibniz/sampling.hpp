#pragma once

#include <cstdint>
#include <random>

#include "leibniz/field_element.hpp"

namespace leibniz {

/// Seeded source of random rationals and rational functions. Draws are
/// reduced from mt19937_64 by hand so the stream is identical on every
/// standard library.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi].
  long uniform(long lo, long hi);
  /// p/q with p in [-9, 9] and q in [1, 9].
  Rational coefficient();
  Rational nonzero_coefficient();
  /// Random polynomial of total degree <= max_degree; each monomial gets a
  /// coefficient() draw.
  Polynomial polynomial(const RingPtr& ring, std::uint32_t max_degree);
  /// num/den with both parts drawn by polynomial(); den is never zero.
  FieldElement element(const RingPtr& ring, std::uint32_t max_degree = 4);

 private:
  std::mt19937_64 engine_;
};

}  // namespace leibniz
