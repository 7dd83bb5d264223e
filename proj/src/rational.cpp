#include "leibniz/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

#include "leibniz/errors.hpp"

namespace leibniz {

Rational::Rational(const mpz_class& num, const mpz_class& den) : value_(num, den) {
  if (den == 0) throw DivisionByZero();
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw DivisionByZero();
  value_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("malformed rational '" + std::string(text) + "'", 0);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (negative) n = -n;
  return Rational(n, d);
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) throw Error("cannot convert a non-finite double to a rational");
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), value);
  return Rational(q);
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return Rational(mpq_class(1) / value_);
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

Rational rational_gcd(const Rational& a, const Rational& b) {
  if (a.is_zero()) return b.abs();
  if (b.is_zero()) return a.abs();
  mpz_class num, den;
  mpz_gcd(num.get_mpz_t(), a.raw().get_num_mpz_t(), b.raw().get_num_mpz_t());
  mpz_lcm(den.get_mpz_t(), a.raw().get_den_mpz_t(), b.raw().get_den_mpz_t());
  return Rational(num, den);
}

Rational best_rational(double value, const mpz_class& max_denominator) {
  if (max_denominator < 1) throw Error("max_denominator must be positive");
  const Rational exact = Rational::from_double(value);
  mpz_class num = exact.numerator(), den = exact.denominator();
  // h1/k1 is the latest convergent, h2/k2 the one before it.
  mpz_class h1 = 1, h2 = 0, k1 = 0, k2 = 1;
  mpz_class best_h = 0, best_k = 1;
  while (den != 0) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    mpz_class h = a * h1 + h2;
    mpz_class k = a * k1 + k2;
    if (k > max_denominator) break;
    best_h = h;
    best_k = k;
    h2 = h1;
    h1 = h;
    k2 = k1;
    k1 = k;
    mpz_class r = num - a * den;
    num = den;
    den = r;
  }
  return Rational(best_h, best_k);
}

}  // namespace leibniz
