#include "bcfib/exactnum.hpp"

#include <stdexcept>

#include "bcfib/error.hpp"

namespace bcfib {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= o.value_;
  return *this;
}

QuadElem QuadElem::inverse() const {
  if (is_zero()) throw ZeroToNegativePower();
  // 1/(p + q√5) = (p - q√5)/(p² - 5q²)
  const Rational n = norm();
  return {p_ / n, -q_ / n};
}

QuadElem& QuadElem::operator+=(const QuadElem& o) {
  p_ += o.p_;
  q_ += o.q_;
  return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& o) {
  p_ -= o.p_;
  q_ -= o.q_;
  return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& o) {
  Rational p = p_ * o.p_ + Rational(5) * q_ * o.q_;
  Rational q = p_ * o.q_ + q_ * o.p_;
  p_ = std::move(p);
  q_ = std::move(q);
  return *this;
}

std::string QuadElem::to_string() const {
  if (q_.is_zero()) return p_.to_string();
  std::string s = p_.is_zero() ? std::string() : p_.to_string();
  const bool negative = sgn(q_.num()) < 0;
  if (!s.empty()) s += negative ? " - " : " + ";
  else if (negative) s += "-";
  const Rational mag = negative ? -q_ : q_;
  if (!(mag == Rational(1))) s += "(" + mag.to_string() + ")*";
  return s + "sqrt5";
}

std::ostream& operator<<(std::ostream& os, const QuadElem& x) {
  return os << x.to_string();
}

QuadElem sqrt5() { return {Rational(0), Rational(1)}; }

QuadElem golden_alpha() { return {Rational(1, 2), Rational(1, 2)}; }

QuadElem golden_beta() { return {Rational(1, 2), Rational(-1, 2)}; }

QuadElem qf_add(const QuadElem& a, const QuadElem& b) { return a + b; }

QuadElem qf_mul(const QuadElem& a, const QuadElem& b) { return a * b; }

QuadElem qf_pow(const QuadElem& x, Index e) {
  if (e < 0 && x.is_zero()) throw ZeroToNegativePower();
  QuadElem base = e < 0 ? x.inverse() : x;
  // Avoid negating INT64_MIN.
  auto remaining = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1
                         : static_cast<std::uint64_t>(e);
  QuadElem result(1);
  while (remaining != 0) {
    if (remaining & 1u) result *= base;
    remaining >>= 1;
    if (remaining != 0) base *= base;
  }
  return result;
}

std::optional<Integer> qf_as_integer(const QuadElem& x) {
  if (!x.sqrt5_part().is_zero() || !x.rational_part().is_integer()) return std::nullopt;
  return x.rational_part().num();
}

}  // namespace bcfib
