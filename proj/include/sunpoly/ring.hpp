#pragma once

// Exact arithmetic kernel: GMP integers and rationals, and dense univariate
// polynomials over a pluggable exact coefficient ring.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

namespace sunpoly {

using Integer = mpz_class;
using Rational = mpq_class;

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown when a divisor's leading coefficient is not invertible in the
/// coefficient ring (only unit-led divisors are supported).
class NonUnitLeadingCoefficient : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class InexactDivision : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

template <class R>
class Poly;

template <class R>
struct RingTraits;

template <>
struct RingTraits<Integer> {
  static Integer one() { return 1; }
  static bool is_zero(const Integer& a) { return sgn(a) == 0; }
  static bool is_unit(const Integer& a) { return a == 1 || a == -1; }
  static Integer unit_inverse(const Integer& a) { return a; }
};

template <>
struct RingTraits<Rational> {
  static Rational one() { return 1; }
  static bool is_zero(const Rational& a) { return sgn(a) == 0; }
  static bool is_unit(const Rational& a) { return sgn(a) != 0; }
  static Rational unit_inverse(const Rational& a) { return Rational(1) / a; }
};

template <class R>
struct RingTraits<Poly<R>> {
  static Poly<R> one() { return Poly<R>::constant(RingTraits<R>::one()); }
  static bool is_zero(const Poly<R>& a) { return a.is_zero(); }
  static bool is_unit(const Poly<R>& a) {
    return a.degree() == 0 && RingTraits<R>::is_unit(a.coeff(0));
  }
  static Poly<R> unit_inverse(const Poly<R>& a) {
    return Poly<R>::constant(RingTraits<R>::unit_inverse(a.coeff(0)));
  }
};

/// Dense polynomial, coeffs()[i] is the coefficient of var^i. The stored
/// vector never ends in a zero coefficient, so equality is structural.
template <class R>
class Poly {
 public:
  using Coeff = R;

  /// Degree reported for the zero polynomial.
  static constexpr std::ptrdiff_t kZeroDegree = std::numeric_limits<std::ptrdiff_t>::min();

  Poly() = default;
  explicit Poly(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<R> coeffs) : coeffs_(coeffs) { trim(); }

  static Poly constant(R c) { return monomial(std::move(c), 0); }

  static Poly monomial(R c, std::size_t exponent) {
    if (RingTraits<R>::is_zero(c)) return Poly();
    std::vector<R> v(exponent + 1);
    v[exponent] = std::move(c);
    Poly p;
    p.coeffs_ = std::move(v);
    return p;
  }

  static Poly variable() { return monomial(RingTraits<R>::one(), 1); }

  std::span<const R> coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  bool is_zero() const { return coeffs_.empty(); }

  std::ptrdiff_t degree() const {
    return coeffs_.empty() ? kZeroDegree : static_cast<std::ptrdiff_t>(coeffs_.size()) - 1;
  }

  const R& coeff(std::size_t i) const {
    static const R zero{};
    return i < coeffs_.size() ? coeffs_[i] : zero;
  }

  const R& leading() const { return coeff(coeffs_.empty() ? 0 : coeffs_.size() - 1); }

  Poly& operator+=(const Poly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
  }

  Poly& operator-=(const Poly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
  }

  Poly& operator*=(const Poly& other);

  Poly& scale(const R& c) {
    if (RingTraits<R>::is_zero(c)) {
      coeffs_.clear();
      return *this;
    }
    for (auto& a : coeffs_) a *= c;
    trim();
    return *this;
  }

  /// Adds c * var^shift * other in place.
  Poly& add_scaled(const Poly& other, const R& c, std::size_t shift = 0) {
    if (other.is_zero() || RingTraits<R>::is_zero(c)) return *this;
    if (other.coeffs_.size() + shift > coeffs_.size()) coeffs_.resize(other.coeffs_.size() + shift);
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i + shift] += c * other.coeffs_[i];
    trim();
    return *this;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& a : r.coeffs_) a = -a;
    return r;
  }

  /// this * var^k
  Poly shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<R> v(coeffs_.size() + k);
    std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + static_cast<std::ptrdiff_t>(k));
    Poly r;
    r.coeffs_ = std::move(v);
    return r;
  }

  /// Substitutes var -> var^k (k >= 1).
  Poly inflated(std::size_t k) const {
    if (k == 1 || is_zero()) return *this;
    if (k == 0) throw std::invalid_argument("inflated: exponent factor must be positive");
    std::vector<R> v((coeffs_.size() - 1) * k + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * k] = coeffs_[i];
    Poly r;
    r.coeffs_ = std::move(v);
    return r;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && RingTraits<R>::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<R> coeffs_;
};

using IntPoly = Poly<Integer>;
using RatPoly = Poly<Rational>;
/// Polynomial in q whose coefficients are integer polynomials in x.
using XQPoly = Poly<IntPoly>;

/// Integer polynomial product. Small operands use the schoolbook method,
/// larger ones Kronecker substitution through a single GMP multiplication.
IntPoly multiply(const IntPoly& a, const IntPoly& b);
IntPoly multiply_schoolbook(const IntPoly& a, const IntPoly& b);

template <class R>
Poly<R> multiply(const Poly<R>& a, const Poly<R>& b) {
  if (a.is_zero() || b.is_zero()) return Poly<R>();
  std::vector<R> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const R& ai = a.coeff(i);
    if (RingTraits<R>::is_zero(ai)) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += ai * b.coeff(j);
  }
  return Poly<R>(std::move(out));
}

template <class R>
Poly<R> operator*(const Poly<R>& a, const Poly<R>& b) {
  return multiply(a, b);
}

template <class R>
Poly<R>& Poly<R>::operator*=(const Poly& other) {
  *this = multiply(*this, other);
  return *this;
}

template <class R>
Poly<R> pow(const Poly<R>& base, unsigned exponent) {
  Poly<R> result = Poly<R>::constant(RingTraits<R>::one());
  Poly<R> b = base;
  while (exponent != 0) {
    if (exponent & 1U) result = result * b;
    exponent >>= 1U;
    if (exponent != 0) b = b * b;
  }
  return result;
}

template <class R>
struct DivRem {
  Poly<R> quotient;
  Poly<R> remainder;
};

/// Long division by a divisor whose leading coefficient is a unit.
/// dividend = divisor * quotient + remainder with deg(remainder) < deg(divisor).
template <class R>
DivRem<R> divrem(const Poly<R>& dividend, const Poly<R>& divisor) {
  if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (!RingTraits<R>::is_unit(divisor.leading()))
    throw NonUnitLeadingCoefficient("divisor leading coefficient is not a unit");
  if (dividend.degree() < divisor.degree()) return {Poly<R>(), dividend};

  const R inverse = RingTraits<R>::unit_inverse(divisor.leading());
  const std::size_t dd = divisor.size() - 1;
  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < dd; ++j)
    if (!RingTraits<R>::is_zero(divisor.coeff(j))) support.push_back(j);

  std::vector<R> rem(dividend.coeffs().begin(), dividend.coeffs().end());
  std::vector<R> quot(rem.size() - dd);
  for (std::size_t i = quot.size(); i-- > 0;) {
    if (RingTraits<R>::is_zero(rem[i + dd])) continue;
    R c = rem[i + dd] * inverse;
    for (std::size_t j : support) rem[i + j] -= c * divisor.coeff(j);
    rem[i + dd] = R();
    quot[i] = std::move(c);
  }
  rem.resize(dd);
  return {Poly<R>(std::move(quot)), Poly<R>(std::move(rem))};
}

template <class R>
Poly<R> exact_quotient(const Poly<R>& dividend, const Poly<R>& divisor) {
  auto [quotient, remainder] = divrem(dividend, divisor);
  if (!remainder.is_zero()) throw InexactDivision("division leaves a nonzero remainder");
  return quotient;
}

/// Horner evaluation.
template <class R>
R evaluate(const Poly<R>& p, const R& point) {
  R acc{};
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = acc * point;
    acc += p.coeff(i);
  }
  return acc;
}

inline Rational evaluate(const IntPoly& p, Rational point) {
  point.canonicalize();
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * point + Rational(p.coeff(i));
  return acc;
}

/// True iff every coefficient is divisible by n, i.e. p/n lies in Z[x].
bool poly_int_divisible(const IntPoly& p, const Integer& n);

/// p/n when every coefficient divides; throws InexactDivision otherwise.
IntPoly divide_coefficients(const IntPoly& p, const Integer& n);

RatPoly to_rational(const IntPoly& p);

/// Slices of a q-outer bivariate polynomial by x-degree: result[j] is the
/// q-polynomial multiplying x^j.
std::vector<IntPoly> x_slices(const XQPoly& p);
XQPoly from_x_slices(std::span<const IntPoly> slices);

/// Specialization q -> value, leaving a polynomial in x.
IntPoly specialize_q(const XQPoly& p, const Integer& value);

/// Remainder in [0, |m|).
Integer mod_floor(const Integer& a, const Integer& m);
bool divides(const Integer& m, const Integer& a);

}  // namespace sunpoly
