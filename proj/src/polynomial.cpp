#include "leibniz/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <sstream>

#include "leibniz/errors.hpp"

namespace leibniz {

RingPtr Ring::make(std::vector<std::string> generators) {
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = i + 1; j < generators.size(); ++j)
      if (generators[i] == generators[j]) throw Error("duplicate generator '" + generators[i] + "'");
  return RingPtr(new Ring(std::move(generators)));
}

int Ring::index_of(const std::string& name) const {
  const auto it = std::find(generators_.begin(), generators_.end(), name);
  return it == generators_.end() ? -1 : static_cast<int>(it - generators_.begin());
}

void require_same_ring(const Ring& a, const Ring& b) {
  if (!a.same_as(b)) throw RingMismatch("operands are defined over different generator lists");
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<std::uint32_t> exponents) : exponents_(std::move(exponents)) {
  degree_ = std::accumulate(exponents_.begin(), exponents_.end(), std::uint32_t{0});
}

Monomial Monomial::unit(std::size_t arity, std::size_t index, std::uint32_t power) {
  Monomial m(arity);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, std::uint32_t power) {
  degree_ = degree_ - exponents_[i] + power;
  exponents_[i] = power;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (exponents_[i] > other.exponents_[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t i = 0; i < out.exponents_.size(); ++i) out.exponents_[i] += b.exponents_[i];
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t i = 0; i < out.exponents_.size(); ++i) out.exponents_[i] -= b.exponents_[i];
  out.degree_ = a.degree_ - b.degree_;
  return out;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.exponents() < b.exponents();
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(RingPtr ring, const Rational& constant) : ring_(std::move(ring)) {
  if (!constant.is_zero()) terms_.emplace(Monomial(ring_->size()), constant);
}

Polynomial::Polynomial(RingPtr ring, Terms terms) : ring_(std::move(ring)) {
  for (auto& [m, c] : terms)
    if (!c.is_zero()) terms_.emplace(m, std::move(c));
}

Polynomial Polynomial::generator(const RingPtr& ring, std::size_t index) {
  return monomial(ring, Monomial::unit(ring->size(), index));
}

Polynomial Polynomial::monomial(const RingPtr& ring, const Monomial& m, const Rational& coefficient) {
  Polynomial p(ring);
  p.add_term(m, coefficient);
  return p;
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  const auto& [m, c] = *terms_.begin();
  return m.is_one() ? c : Rational(0);
}

std::uint32_t Polynomial::total_degree() const { return terms_.empty() ? 0 : leading_monomial().degree(); }

int Polynomial::degree_in(std::size_t index) const {
  int deg = -1;
  for (const auto& [m, c] : terms_) deg = std::max(deg, static_cast<int>(m[index]));
  return deg;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  require_same_ring(*ring_, *rhs.ring_);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  require_same_ring(*ring_, *rhs.ring_);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(*a.ring_, *b.ring_);
  Polynomial out(a.ring_);
  if (a.is_zero() || b.is_zero()) return out;
  if (b.is_constant()) return a.scaled(b.constant_value());
  if (a.is_constant()) return b.scaled(a.constant_value());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial Polynomial::scaled(const Rational& factor) const {
  if (factor.is_zero()) return Polynomial(ring_);
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c *= factor;
  return out;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Rational& coefficient) const {
  Polynomial out(ring_);
  if (coefficient.is_zero()) return out;
  // Multiplying by a monomial preserves the order, so hinted insertion stays linear.
  for (const auto& [mm, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), mm * m, c * coefficient);
  return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result(ring_, Rational(1));
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::partial(std::size_t index) const {
  Polynomial out(ring_);
  for (const auto& [m, c] : terms_) {
    const std::uint32_t e = m[index];
    if (e == 0) continue;
    Monomial lowered = m;
    lowered.set(index, e - 1);
    out.terms_.emplace(lowered, c * Rational(static_cast<long>(e)));
  }
  return out;
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
  require_same_ring(*a.ring_, *b.ring_);
  if (b.is_zero()) throw DivisionByZero();
  if (b.is_constant()) return a.scaled(b.constant_value().inverse());
  Polynomial quotient(a.ring_);
  Polynomial rest = a;
  const Monomial& lead_b = b.leading_monomial();
  const Rational lead_b_inv = b.leading_coefficient().inverse();
  while (!rest.is_zero()) {
    const Monomial& lead_r = rest.leading_monomial();
    if (!lead_b.divides(lead_r)) throw Error("exact_divide: divisor does not divide dividend");
    const Monomial m = lead_r / lead_b;
    const Rational c = rest.leading_coefficient() * lead_b_inv;
    quotient.terms_.emplace(m, c);
    rest -= b.times_monomial(m, c);
  }
  return quotient;
}

double Polynomial::evaluate(const std::vector<double>& point) const {
  double sum = 0.0;
  for (const auto& [m, c] : terms_) {
    double term = c.to_double();
    for (std::size_t i = 0; i < m.arity(); ++i)
      if (m[i] != 0) term *= std::pow(point[i], static_cast<int>(m[i]));
    sum += term;
  }
  return sum;
}

double Polynomial::evaluate_magnitude(const std::vector<double>& point) const {
  double sum = 0.0;
  for (const auto& [m, c] : terms_) {
    double term = std::fabs(c.to_double());
    for (std::size_t i = 0; i < m.arity(); ++i)
      if (m[i] != 0) term *= std::pow(std::fabs(point[i]), static_cast<int>(m[i]));
    sum += term;
  }
  return sum;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c.sign() < 0;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    const Rational magnitude = c.abs();
    bool need_star = false;
    if (m.is_one() || !magnitude.is_one()) {
      os << magnitude.to_string();
      need_star = true;
    }
    for (std::size_t i = 0; i < m.arity(); ++i) {
      if (m[i] == 0) continue;
      if (need_star) os << '*';
      os << ring_->generators()[i];
      if (m[i] > 1) os << '^' << m[i];
      need_star = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// GCD

namespace {

int top_variable(const Polynomial& p) {
  int top = -1;
  for (const auto& [m, c] : p.terms())
    for (int i = static_cast<int>(m.arity()) - 1; i > top; --i)
      if (m[i] != 0) {
        top = i;
        break;
      }
  return top;
}

/// Coefficients of p viewed in Q[others][x_v], keyed by power of x_v.
std::map<std::uint32_t, Polynomial> coefficients_in(const Polynomial& p, std::size_t v) {
  std::map<std::uint32_t, Polynomial> out;
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    rest.set(v, 0);
    auto it = out.try_emplace(m[v], p.ring()).first;
    it->second += Polynomial::monomial(p.ring(), rest, c);
  }
  return out;
}

Polynomial leading_coefficient_in(const Polynomial& p, std::size_t v, std::uint32_t& degree) {
  Polynomial lc(p.ring());
  degree = 0;
  for (const auto& [m, c] : p.terms()) {
    if (m[v] < degree) continue;
    if (m[v] > degree) {
      degree = m[v];
      lc = Polynomial(p.ring());
    }
    Monomial rest = m;
    rest.set(v, 0);
    lc += Polynomial::monomial(p.ring(), rest, c);
  }
  return lc;
}

Polynomial with_positive_lead(Polynomial p) {
  if (!p.is_zero() && p.leading_coefficient().sign() < 0) return -p;
  return p;
}

Polynomial gcd_rec(const Polynomial& a, const Polynomial& b);

Polynomial content_in(const Polynomial& p, std::size_t v) {
  Polynomial g(p.ring());
  for (const auto& [deg, coeff] : coefficients_in(p, v)) g = gcd_rec(g, coeff);
  return g;
}

Polynomial primitive_part(const Polynomial& p, std::size_t v) {
  return with_positive_lead(exact_divide(p, content_in(p, v)));
}

/// Lazy pseudo-remainder of a by b in x_v; a scalar multiple of the true prem.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t v) {
  std::uint32_t db = 0;
  const Polynomial lcb = leading_coefficient_in(b, v, db);
  Polynomial r = a;
  while (!r.is_zero()) {
    std::uint32_t dr = 0;
    const Polynomial lcr = leading_coefficient_in(r, v, dr);
    if (dr < db) break;
    const Monomial shift = Monomial::unit(a.ring()->size(), v, dr - db);
    r = lcb * r - (lcr * b).times_monomial(shift, Rational(1));
  }
  return r;
}

// Arithmetic modulo the Mersenne prime 2^61 - 1 for the coprimality screen.
constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e > 0) {
    if (e & 1U) r = mul_mod(r, a);
    a = mul_mod(a, a);
    e >>= 1U;
  }
  return r;
}

std::uint64_t integer_mod(const mpz_class& z) {
  static const mpz_class prime = [] {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, 61);
    return mpz_class(p - 1);
  }();
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), prime.get_mpz_t());
  return mpz_get_ui(r.get_mpz_t());
}

using ModPoly = std::vector<std::uint64_t>;

void trim(ModPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

/// Degree of gcd of two univariate polynomials over GF(p).
int mod_gcd_degree(ModPoly a, ModPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    const std::uint64_t inv = pow_mod(b.back(), kPrime - 2);
    while (a.size() >= b.size()) {
      const std::uint64_t factor = mul_mod(a.back(), inv);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) {
        const std::uint64_t sub = mul_mod(factor, b[i]);
        a[i + shift] = (a[i + shift] + kPrime - sub) % kPrime;
      }
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

/// Deterministic evaluation point for generator `index`.
std::uint64_t evaluation_point(std::size_t index) {
  std::uint64_t z = 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return (z ^ (z >> 31)) % kPrime;
}

/// Image of p in GF(p)[x_w] after substituting the other generators.
ModPoly specialize(const Polynomial& p, std::size_t w, const mpz_class& scale) {
  ModPoly out(static_cast<std::size_t>(p.degree_in(w)) + 1, 0);
  for (const auto& [m, c] : p.terms()) {
    const mpz_class integer = c.numerator() * (scale / c.denominator());
    std::uint64_t value = integer_mod(integer);
    for (std::size_t i = 0; i < m.arity(); ++i)
      if (i != w && m[i] != 0) value = mul_mod(value, pow_mod(evaluation_point(i), m[i]));
    out[m[w]] = (out[m[w]] + value) % kPrime;
  }
  return out;
}

mpz_class denominator_lcm(const Polynomial& p) {
  mpz_class l = 1;
  for (const auto& [m, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.raw().get_den_mpz_t());
  return l;
}

/// One-sided screen: true proves gcd(a, b) is constant. A common factor of
/// positive degree in x_w survives the specialization whenever the leading
/// coefficient of a in x_w does.
bool provably_coprime(const Polynomial& a, const Polynomial& b) {
  const mpz_class sa = denominator_lcm(a);
  const mpz_class sb = denominator_lcm(b);
  const std::size_t arity = a.ring()->size();
  for (std::size_t w = 0; w < arity; ++w) {
    const int da = a.degree_in(w);
    const int db = b.degree_in(w);
    if (da <= 0 || db <= 0) continue;
    ModPoly ia = specialize(a, w, sa);
    ModPoly ib = specialize(b, w, sb);
    if (ia.back() == 0 && ib.back() == 0) return false;
    if (mod_gcd_degree(std::move(ia), std::move(ib)) != 0) return false;
  }
  return true;
}

// Univariate gcd over Z by the small-primes modular method: gcds modulo
// word-size primes are lifted by Chinese remaindering until the image
// stabilizes, and the candidate is accepted only once it divides both
// inputs exactly.

/// Primes just above 2^62, produced on demand and shared by all threads.
std::uint64_t gcd_prime(std::size_t index) {
  static std::mutex mutex;
  static std::vector<std::uint64_t> primes;
  const std::lock_guard<std::mutex> lock(mutex);
  while (primes.size() <= index) {
    mpz_class p = primes.empty() ? mpz_class(std::uint64_t{1} << 62) : mpz_class(primes.back());
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    primes.push_back(mpz_get_ui(p.get_mpz_t()));
  }
  return primes[index];
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1;
  for (std::uint64_t e = p - 2; e > 0; e >>= 1U) {
    if (e & 1U) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
  }
  return r;
}

/// Monic gcd over GF(p); coefficients constant term first.
ModPoly monic_gcd_mod(ModPoly a, ModPoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    const std::uint64_t inv = inverse_mod(b.back(), p);
    while (a.size() >= b.size()) {
      const std::uint64_t factor = mul_mod(a.back(), inv, p);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) {
        const std::uint64_t sub = mul_mod(factor, b[i], p);
        a[i + shift] = a[i + shift] >= sub ? a[i + shift] - sub : a[i + shift] + (p - sub);
      }
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  const std::uint64_t inv = inverse_mod(a.back(), p);
  for (auto& c : a) c = mul_mod(c, inv, p);
  return a;
}

using IntPoly = std::vector<mpz_class>;

bool depends_only_on(const Polynomial& p, std::size_t v) {
  for (const auto& [m, c] : p.terms())
    if (m.degree() != m[v]) return false;
  return true;
}

/// Primitive integer coefficients of a polynomial in x_v alone.
IntPoly integer_coefficients(const Polynomial& p, std::size_t v) {
  const mpz_class scale = denominator_lcm(p);
  IntPoly out(static_cast<std::size_t>(p.degree_in(v)) + 1, mpz_class(0));
  for (const auto& [m, c] : p.terms()) out[m[v]] = c.numerator() * (scale / c.denominator());
  mpz_class g = 0;
  for (const auto& c : out) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return out;
}

/// Whether primitive `d` divides `a` in Z[x]; by Gauss's lemma the quotient
/// is then integral, so any inexact leading division settles the question.
bool divides_integer(const IntPoly& d, IntPoly a) {
  const mpz_class& lead = d.back();
  mpz_class q;
  while (a.size() >= d.size()) {
    if (a.back() == 0) {
      a.pop_back();
      continue;
    }
    if (!mpz_divisible_p(a.back().get_mpz_t(), lead.get_mpz_t())) return false;
    mpz_divexact(q.get_mpz_t(), a.back().get_mpz_t(), lead.get_mpz_t());
    const std::size_t shift = a.size() - d.size();
    for (std::size_t i = 0; i < d.size(); ++i) a[i + shift] -= q * d[i];
    a.pop_back();
  }
  return std::all_of(a.begin(), a.end(), [](const mpz_class& c) { return c == 0; });
}

Polynomial modular_gcd(const Polynomial& a, const Polynomial& b, std::size_t v) {
  const IntPoly ia = integer_coefficients(a, v);
  const IntPoly ib = integer_coefficients(b, v);
  mpz_class lead_gcd;
  mpz_gcd(lead_gcd.get_mpz_t(), ia.back().get_mpz_t(), ib.back().get_mpz_t());

  const auto to_polynomial = [&](const IntPoly& coeffs) {
    Polynomial::Terms terms;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (coeffs[i] != 0)
        terms.emplace(Monomial::unit(a.ring()->size(), v, static_cast<std::uint32_t>(i)), Rational(coeffs[i]));
    return with_positive_lead(Polynomial(a.ring(), std::move(terms)));
  };

  IntPoly lifted;  // image of lead_gcd * gcd modulo `modulus`, residues in [0, modulus)
  mpz_class modulus = 0;
  IntPoly previous;
  std::size_t degree = std::min(ia.size(), ib.size()) + 1;  // one past any possible image
  for (std::size_t k = 0;; ++k) {
    const std::uint64_t p = gcd_prime(k);
    const std::uint64_t lead_mod = mpz_fdiv_ui(lead_gcd.get_mpz_t(), p);
    if (lead_mod == 0) continue;
    ModPoly ra(ia.size()), rb(ib.size());
    for (std::size_t i = 0; i < ia.size(); ++i) ra[i] = mpz_fdiv_ui(ia[i].get_mpz_t(), p);
    for (std::size_t i = 0; i < ib.size(); ++i) rb[i] = mpz_fdiv_ui(ib[i].get_mpz_t(), p);
    ModPoly g = monic_gcd_mod(std::move(ra), std::move(rb), p);
    // Neither leading coefficient vanishes mod p, so deg gcd mod p bounds the
    // true degree from above; a constant image proves coprimality.
    if (g.size() == 1) return Polynomial(a.ring(), Rational(1));
    if (g.size() > degree) continue;
    for (auto& c : g) c = mul_mod(c, lead_mod, p);
    if (g.size() < degree) {
      degree = g.size();
      lifted.assign(g.begin(), g.end());
      for (std::size_t i = 0; i < g.size(); ++i) lifted[i] = mpz_class(g[i]);
      modulus = mpz_class(p);
      previous.clear();
      continue;
    }
    // Chinese remaindering: x = h + M * ((g - h) * M^-1 mod p).
    const std::uint64_t m_inv = inverse_mod(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
    for (std::size_t i = 0; i < degree; ++i) {
      const std::uint64_t h = mpz_fdiv_ui(lifted[i].get_mpz_t(), p);
      const std::uint64_t diff = g[i] >= h ? g[i] - h : g[i] + (p - h);
      lifted[i] += modulus * mpz_class(mul_mod(diff, m_inv, p));
    }
    modulus *= p;
    const mpz_class half = modulus / 2;
    IntPoly symmetric = lifted;
    for (auto& c : symmetric)
      if (c > half) c -= modulus;
    if (symmetric == previous) {
      mpz_class content = 0;
      for (const auto& c : symmetric) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
      IntPoly candidate = symmetric;
      for (auto& c : candidate) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
      if (divides_integer(candidate, ia) && divides_integer(candidate, ib)) return to_polynomial(candidate);
    }
    previous = std::move(symmetric);
  }
}

Polynomial gcd_rec(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return with_positive_lead(b);
  if (b.is_zero()) return with_positive_lead(a);
  if (a.is_constant() && b.is_constant())
    return Polynomial(a.ring(), rational_gcd(a.constant_value(), b.constant_value()));

  const int top = std::max(top_variable(a), top_variable(b));
  const auto v = static_cast<std::size_t>(top);
  if (a.degree_in(v) == 0) return gcd_rec(a, content_in(b, v));
  if (b.degree_in(v) == 0) return gcd_rec(content_in(a, v), b);

  const Polynomial ca = content_in(a, v);
  const Polynomial cb = content_in(b, v);
  const Polynomial c = gcd_rec(ca, cb);
  Polynomial pa = with_positive_lead(exact_divide(a, ca));
  Polynomial pb = with_positive_lead(exact_divide(b, cb));
  if (depends_only_on(pa, v) && depends_only_on(pb, v)) return c * modular_gcd(pa, pb, v);
  if (provably_coprime(pa, pb)) return c;

  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  Polynomial g(a.ring());
  while (true) {
    const Polynomial r = pseudo_remainder(pa, pb, v);
    if (r.is_zero()) {
      g = pb;
      break;
    }
    if (r.degree_in(v) == 0) {
      g = Polynomial(a.ring(), Rational(1));
      break;
    }
    pa = std::move(pb);
    pb = primitive_part(r, v);
  }
  return c * primitive_part(g, v);
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  require_same_ring(*a.ring(), *b.ring());
  Polynomial g = gcd_rec(a, b);
  if (g.is_zero()) return g;
  return g.scaled(g.leading_coefficient().inverse());
}

}  // namespace leibniz
