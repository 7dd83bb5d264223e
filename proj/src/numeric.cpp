#include "leibniz/numeric.hpp"

#include <cmath>

#include "leibniz/errors.hpp"

namespace leibniz {

NumericEmbedding::NumericEmbedding(const RingPtr& ring, const std::map<std::string, double>& assignment)
    : ring_(ring), assignment_(assignment) {
  point_.reserve(ring->size());
  for (const auto& name : ring->generators()) {
    const auto it = assignment.find(name);
    if (it == assignment.end()) throw Error("embedding has no value for generator '" + name + "'");
    if (!std::isfinite(it->second)) throw Error("embedding value for '" + name + "' is not finite");
    point_.push_back(it->second);
  }
}

double eval_numeric(const FieldElement& x, const NumericEmbedding& embedding) {
  require_same_ring(*x.ring(), *embedding.ring());
  const auto& point = embedding.point();
  const double den = x.den().evaluate(point);
  const double scale = x.den().evaluate_magnitude(point);
  if (std::fabs(den) <= kPoleTolerance * scale)
    throw PoleError("denominator of " + x.to_string() + " vanishes at the embedding");
  return x.num().evaluate(point) / den;
}

}  // namespace leibniz
