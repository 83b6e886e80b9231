#pragma once

// Exact arithmetic over Q and Q(sqrt 5).

#include <optional>
#include <ostream>
#include <string>

#include "bcfib/integer.hpp"

namespace bcfib {

/// Rational number kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error when den == 0.
  Rational(const Integer& num, const Integer& den);

  Integer num() const { return value_.get_num(); }
  Integer den() const { return value_.get_den(); }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  std::string to_string() const { return value_.get_str(10); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.value_ = -a.value_;
    return r;
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}
  mpq_class value_;
};

/// Element p + q*sqrt(5) of the field Q(sqrt 5). The pair (p, q) is unique.
class QuadElem {
 public:
  QuadElem() = default;
  QuadElem(long v) : p_(v) {}  // NOLINT(google-explicit-constructor)
  QuadElem(const Integer& v) : p_(v) {}  // NOLINT(google-explicit-constructor)
  QuadElem(Rational p, Rational q) : p_(std::move(p)), q_(std::move(q)) {}

  const Rational& rational_part() const { return p_; }
  const Rational& sqrt5_part() const { return q_; }
  bool is_zero() const { return p_.is_zero() && q_.is_zero(); }

  /// Field norm p^2 - 5 q^2; zero only for the zero element.
  Rational norm() const { return p_ * p_ - Rational(5) * q_ * q_; }
  QuadElem conjugate() const { return {p_, -q_}; }
  /// Throws ZeroToNegativePower for the zero element.
  QuadElem inverse() const;

  QuadElem& operator+=(const QuadElem& o);
  QuadElem& operator-=(const QuadElem& o);
  QuadElem& operator*=(const QuadElem& o);
  QuadElem& operator/=(const QuadElem& o) { return *this *= o.inverse(); }

  friend QuadElem operator+(QuadElem a, const QuadElem& b) { return a += b; }
  friend QuadElem operator-(QuadElem a, const QuadElem& b) { return a -= b; }
  friend QuadElem operator*(QuadElem a, const QuadElem& b) { return a *= b; }
  friend QuadElem operator/(QuadElem a, const QuadElem& b) { return a /= b; }
  friend QuadElem operator-(const QuadElem& a) { return {-a.p_, -a.q_}; }
  friend bool operator==(const QuadElem& a, const QuadElem& b) {
    return a.p_ == b.p_ && a.q_ == b.q_;
  }

  std::string to_string() const;

 private:
  Rational p_;
  Rational q_;
};

std::ostream& operator<<(std::ostream& os, const QuadElem& x);

/// sqrt(5) as a field element.
QuadElem sqrt5();
/// Golden ratio (1 + sqrt 5) / 2.
QuadElem golden_alpha();
/// Its conjugate (1 - sqrt 5) / 2.
QuadElem golden_beta();

QuadElem qf_add(const QuadElem& a, const QuadElem& b);
QuadElem qf_mul(const QuadElem& a, const QuadElem& b);
/// Exact power for any signed exponent; x = 0 with e < 0 throws ZeroToNegativePower.
QuadElem qf_pow(const QuadElem& x, Index e);
/// The integer value of x if it is one (q = 0 and p integral).
std::optional<Integer> qf_as_integer(const QuadElem& x);

}  // namespace bcfib
