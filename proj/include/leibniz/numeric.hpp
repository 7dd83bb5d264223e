#pragma once

#include <map>
#include <string>
#include <vector>

#include "leibniz/field_element.hpp"

namespace leibniz {

/// Real values for every generator of a ring; the numeric stand-in for a
/// point of R. Values are intended to be algebraically independent, which
/// cannot be checked at runtime.
class NumericEmbedding {
 public:
  /// Throws if a generator of `ring` is missing or a value is not finite.
  NumericEmbedding(const RingPtr& ring, const std::map<std::string, double>& assignment);

  const RingPtr& ring() const { return ring_; }
  const std::vector<double>& point() const { return point_; }
  const std::map<std::string, double>& assignment() const { return assignment_; }

 private:
  RingPtr ring_;
  std::map<std::string, double> assignment_;
  std::vector<double> point_;
};

/// Relative tolerance below which a denominator counts as vanishing.
inline constexpr double kPoleTolerance = 1e-12;

/// Floating evaluation of num/den; throws PoleError when |den| is within
/// kPoleTolerance of zero relative to the sum of its term magnitudes.
double eval_numeric(const FieldElement& x, const NumericEmbedding& embedding);

}  // namespace leibniz
