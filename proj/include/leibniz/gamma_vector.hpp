#pragma once

#include <vector>

#include "leibniz/rational.hpp"

namespace leibniz {

/// gamma(0), ..., gamma(n) with gamma(0) = 1 and no zero entries.
class GammaVector {
 public:
  explicit GammaVector(std::vector<Rational> values);

  /// gamma(k) = k!
  static GammaVector factorial(int n);

  int n() const { return static_cast<int>(values_.size()) - 1; }
  const Rational& operator[](int k) const { return values_.at(static_cast<std::size_t>(k)); }
  const std::vector<Rational>& values() const { return values_; }

  friend bool operator==(const GammaVector& a, const GammaVector& b) = default;

 private:
  std::vector<Rational> values_;
};

}  // namespace leibniz
