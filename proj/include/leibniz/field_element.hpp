#pragma once

#include <iosfwd>
#include <string>

#include "leibniz/polynomial.hpp"

namespace leibniz {

/// Element of Q(t_1, ..., t_m) in canonical form: gcd(num, den) = 1 and den
/// has leading coefficient 1 in grlex order. Canonical forms are unique, so
/// equality is structural.
class FieldElement {
 public:
  explicit FieldElement(RingPtr ring) : num_(ring), den_(ring, Rational(1)) {}
  FieldElement(RingPtr ring, const Rational& constant) : num_(ring, constant), den_(ring, Rational(1)) {}
  explicit FieldElement(Polynomial numerator);
  /// Reduces num/den to canonical form; throws DivisionByZero for den = 0.
  FieldElement(Polynomial numerator, Polynomial denominator);

  static FieldElement generator(const RingPtr& ring, std::size_t index);
  /// Skips the gcd; the caller guarantees gcd(num, den) = 1 and den != 0.
  static FieldElement from_coprime(Polynomial numerator, Polynomial denominator) {
    return FieldElement(std::move(numerator), std::move(denominator), Reduced{});
  }

  const RingPtr& ring() const { return num_.ring(); }
  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  Rational constant_value() const { return num_.constant_value(); }

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement& operator/=(const FieldElement& rhs);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  FieldElement scaled(const Rational& factor) const;
  FieldElement inverse() const;
  FieldElement pow(long exponent) const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Canonical printer; output re-parses to the same element.
  std::string to_string() const;

 private:
  struct Reduced {};
  FieldElement(Polynomial numerator, Polynomial denominator, Reduced);
  void normalize_denominator();

  Polynomial num_;
  Polynomial den_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

}  // namespace leibniz
