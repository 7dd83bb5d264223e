#include "leibniz/field_element.hpp"

#include <algorithm>
#include <ostream>

#include "leibniz/errors.hpp"

namespace leibniz {

FieldElement::FieldElement(Polynomial numerator)
    : num_(std::move(numerator)), den_(num_.ring(), Rational(1)) {}

FieldElement::FieldElement(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  require_same_ring(*num_.ring(), *den_.ring());
  if (den_.is_zero()) throw DivisionByZero();
  if (num_.is_zero()) {
    den_ = Polynomial(num_.ring(), Rational(1));
    return;
  }
  if (!den_.is_constant()) {
    const Polynomial g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = exact_divide(num_, g);
      den_ = exact_divide(den_, g);
    }
  }
  normalize_denominator();
}

FieldElement::FieldElement(Polynomial numerator, Polynomial denominator, Reduced)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (num_.is_zero()) den_ = Polynomial(num_.ring(), Rational(1));
  normalize_denominator();
}

void FieldElement::normalize_denominator() {
  const Rational& lead = den_.leading_coefficient();
  if (lead.is_one()) return;
  const Rational inv = lead.inverse();
  num_ = num_.scaled(inv);
  den_ = den_.scaled(inv);
}

FieldElement FieldElement::generator(const RingPtr& ring, std::size_t index) {
  return FieldElement(Polynomial::generator(ring, index));
}

FieldElement FieldElement::operator-() const { return FieldElement(-num_, den_, Reduced{}); }

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  require_same_ring(*ring(), *rhs.ring());
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_ == rhs.den_) {
    if (den_.is_one()) {
      num_ += rhs.num_;
      return *this;
    }
    *this = FieldElement(num_ + rhs.num_, den_);
    return *this;
  }
  // a/b + c/d with g = gcd(b, d): only g can share factors with the new numerator.
  const Polynomial g = gcd(den_, rhs.den_);
  if (g.is_one()) {
    *this = FieldElement(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_, Reduced{});
    return *this;
  }
  const Polynomial b1 = exact_divide(den_, g);
  const Polynomial d1 = exact_divide(rhs.den_, g);
  Polynomial n = num_ * d1 + rhs.num_ * b1;
  if (n.is_zero()) return *this = FieldElement(ring());
  const Polynomial g2 = gcd(n, g);
  Polynomial den = b1 * d1 * g;
  if (!g2.is_one()) {
    n = exact_divide(n, g2);
    den = b1 * d1 * exact_divide(g, g2);
  }
  *this = FieldElement(std::move(n), std::move(den), Reduced{});
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) { return *this += -rhs; }

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  require_same_ring(*ring(), *rhs.ring());
  if (is_zero()) return *this;
  if (rhs.is_zero()) return *this = FieldElement(ring());
  if (den_.is_one() && rhs.den_.is_one()) {
    num_ = num_ * rhs.num_;
    return *this;
  }
  // (a/b)(c/d): cross-cancel gcd(a, d) and gcd(c, b).
  Polynomial a = num_, b = den_, c = rhs.num_, d = rhs.den_;
  if (!d.is_one()) {
    const Polynomial g1 = gcd(a, d);
    if (!g1.is_one()) {
      a = exact_divide(a, g1);
      d = exact_divide(d, g1);
    }
  }
  if (!b.is_one()) {
    const Polynomial g2 = gcd(c, b);
    if (!g2.is_one()) {
      c = exact_divide(c, g2);
      b = exact_divide(b, g2);
    }
  }
  *this = FieldElement(a * c, b * d, Reduced{});
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) { return *this *= rhs.inverse(); }

FieldElement FieldElement::scaled(const Rational& factor) const {
  if (factor.is_zero()) return FieldElement(ring());
  return FieldElement(num_.scaled(factor), den_, Reduced{});
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return FieldElement(den_, num_, Reduced{});
}

FieldElement FieldElement::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  const auto e = static_cast<unsigned>(exponent);
  // Powers of coprime polynomials stay coprime.
  return FieldElement(num_.pow(e), den_.pow(e), Reduced{});
}

std::string FieldElement::to_string() const {
  if (den_.is_one()) return num_.to_string();
  // A lone term needs no parentheses on top; underneath, only a power of a
  // single generator is safe, since "1/s*t" would mean t/s.
  const bool bare_num = num_.terms().size() == 1;
  bool bare_den = false;
  if (den_.terms().size() == 1) {
    const auto& exps = den_.leading_monomial().exponents();
    bare_den = std::count_if(exps.begin(), exps.end(), [](std::uint32_t e) { return e != 0; }) == 1;
  }
  const std::string top = bare_num ? num_.to_string() : "(" + num_.to_string() + ")";
  const std::string bottom = bare_den ? den_.to_string() : "(" + den_.to_string() + ")";
  return top + "/" + bottom;
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_string(); }

}  // namespace leibniz
