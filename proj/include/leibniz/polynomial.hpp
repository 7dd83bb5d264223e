#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "leibniz/errors.hpp"
#include "leibniz/rational.hpp"

namespace leibniz {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Ordered list of generator names t_1, ..., t_m of Q(t_1, ..., t_m).
class Ring {
 public:
  static RingPtr make(std::vector<std::string> generators);

  const std::vector<std::string>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  /// Index of `name`, or -1.
  int index_of(const std::string& name) const;

  bool same_as(const Ring& other) const { return this == &other || generators_ == other.generators_; }

 private:
  explicit Ring(std::vector<std::string> generators) : generators_(std::move(generators)) {}
  std::vector<std::string> generators_;
};

/// Exponent vector of a monomial, one entry per generator.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t arity) : exponents_(arity, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exponents);

  static Monomial unit(std::size_t arity, std::size_t index, std::uint32_t power = 1);

  std::size_t arity() const { return exponents_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exponents_[i]; }
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  const std::vector<std::uint32_t>& exponents() const { return exponents_; }

  void set(std::size_t i, std::uint32_t power);
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

 private:
  std::vector<std::uint32_t> exponents_;
  std::uint32_t degree_ = 0;
};

/// Graded lexicographic order; the first generator is the most significant.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial with rational coefficients. Terms are kept
/// in grlex order with no zero coefficients.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, GrlexLess>;

  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  Polynomial(RingPtr ring, const Rational& constant);
  Polynomial(RingPtr ring, Terms terms);

  static Polynomial generator(const RingPtr& ring, std::size_t index);
  static Polynomial monomial(const RingPtr& ring, const Monomial& m, const Rational& coefficient = Rational(1));

  const RingPtr& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
  bool is_one() const { return is_constant() && !is_zero() && terms_.begin()->second.is_one(); }
  /// Constant term value; only meaningful when is_constant().
  Rational constant_value() const;

  std::uint32_t total_degree() const;
  /// Degree in generator `index`; -1 for the zero polynomial.
  int degree_in(std::size_t index) const;

  /// Requires nonzero.
  const Monomial& leading_monomial() const { return terms_.rbegin()->first; }
  const Rational& leading_coefficient() const { return terms_.rbegin()->second; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Rational& factor) const;
  Polynomial times_monomial(const Monomial& m, const Rational& coefficient) const;
  Polynomial pow(unsigned exponent) const;

  /// Formal partial derivative with respect to generator `index`.
  Polynomial partial(std::size_t index) const;

  /// Exact quotient a / b; throws if b does not divide a.
  friend Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  /// Evaluates at a real point (one value per generator).
  double evaluate(const std::vector<double>& point) const;
  /// Sum of |term| at the point; scale reference for pole detection.
  double evaluate_magnitude(const std::vector<double>& point) const;

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);

  RingPtr ring_;
  Terms terms_;
};

/// Ring-checked helper; throws RingMismatch unless both operands share generators.
void require_same_ring(const Ring& a, const Ring& b);

/// Greatest common divisor in Q[t_1, ..., t_m], normalized to leading coefficient 1
/// (gcd(0, 0) = 0). Content/primitive-part recursion on the last variable with a
/// primitive pseudo-remainder sequence.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace leibniz
