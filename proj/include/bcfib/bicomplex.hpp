#pragma once

// The commutative ring C2 of bicomplex numbers w + x i + y j + z k over a
// commutative scalar ring S, with i^2 = j^2 = -1, k = ij = ji, k^2 = +1,
// jk = kj = -i and ik = ki = -j.

#include <ostream>
#include <string>

#include "bcfib/integer.hpp"

namespace bcfib {

enum class Axis { I, J, K };

inline const char* axis_name(Axis a) {
  switch (a) {
    case Axis::I: return "i";
    case Axis::J: return "j";
    case Axis::K: return "k";
  }
  return "?";
}

template <typename S>
struct ComplexPair;

template <typename S>
class Bicomplex {
 public:
  using scalar_type = S;

  Bicomplex() : w_(0), x_(0), y_(0), z_(0) {}
  Bicomplex(S w, S x, S y, S z)
      : w_(std::move(w)), x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {}
  /// Embeds a scalar as (s, 0, 0, 0).
  static Bicomplex real(S s) { return {std::move(s), S(0), S(0), S(0)}; }
  static Bicomplex unit(Axis a) {
    switch (a) {
      case Axis::I: return {S(0), S(1), S(0), S(0)};
      case Axis::J: return {S(0), S(0), S(1), S(0)};
      case Axis::K: return {S(0), S(0), S(0), S(1)};
    }
    return {};
  }

  const S& re() const { return w_; }
  const S& i() const { return x_; }
  const S& j() const { return y_; }
  const S& k() const { return z_; }

  bool is_zero() const { return w_ == S(0) && x_ == S(0) && y_ == S(0) && z_ == S(0); }

  Bicomplex& operator+=(const Bicomplex& o) {
    w_ += o.w_;
    x_ += o.x_;
    y_ += o.y_;
    z_ += o.z_;
    return *this;
  }
  Bicomplex& operator-=(const Bicomplex& o) {
    w_ -= o.w_;
    x_ -= o.x_;
    y_ -= o.y_;
    z_ -= o.z_;
    return *this;
  }
  Bicomplex& operator*=(const Bicomplex& o) { return *this = *this * o; }

  friend Bicomplex operator+(Bicomplex a, const Bicomplex& b) { return a += b; }
  friend Bicomplex operator-(Bicomplex a, const Bicomplex& b) { return a -= b; }
  friend Bicomplex operator-(const Bicomplex& a) {
    return {S(-a.w_), S(-a.x_), S(-a.y_), S(-a.z_)};
  }

  friend Bicomplex operator*(const Bicomplex& a, const Bicomplex& b) {
    return {S(a.w_ * b.w_ - a.x_ * b.x_ - a.y_ * b.y_ + a.z_ * b.z_),
            S(a.w_ * b.x_ + a.x_ * b.w_ - a.y_ * b.z_ - a.z_ * b.y_),
            S(a.w_ * b.y_ + a.y_ * b.w_ - a.x_ * b.z_ - a.z_ * b.x_),
            S(a.w_ * b.z_ + a.z_ * b.w_ + a.x_ * b.y_ + a.y_ * b.x_)};
  }

  friend bool operator==(const Bicomplex& a, const Bicomplex& b) {
    return a.w_ == b.w_ && a.x_ == b.x_ && a.y_ == b.y_ && a.z_ == b.z_;
  }
  friend bool operator!=(const Bicomplex& a, const Bicomplex& b) { return !(a == b); }

 private:
  S w_, x_, y_, z_;
};

using BicomplexZ = Bicomplex<Integer>;

template <typename S>
Bicomplex<S> scale(const S& lambda, const Bicomplex<S>& v) {
  return {S(lambda * v.re()), S(lambda * v.i()), S(lambda * v.j()), S(lambda * v.k())};
}

/// Exponentiation by squaring, e >= 0.
template <typename S>
Bicomplex<S> pow(Bicomplex<S> base, std::uint64_t e) {
  Bicomplex<S> result = Bicomplex<S>::real(S(1));
  while (e != 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

/// I: (w,-x,y,-z)   J: (w,x,-y,-z)   K: (w,-x,-y,z)
template <typename S>
Bicomplex<S> conj(Axis axis, const Bicomplex<S>& v) {
  switch (axis) {
    case Axis::I: return {v.re(), S(-v.i()), v.j(), S(-v.k())};
    case Axis::J: return {v.re(), v.i(), S(-v.j()), S(-v.k())};
    case Axis::K: return {v.re(), S(-v.i()), S(-v.j()), v.k()};
  }
  return v;
}

/// v times its conjugate along `axis`. Only two components can be nonzero:
/// (re, j) for I, (re, i) for J, (re, k) for K.
template <typename S>
Bicomplex<S> self_product(Axis axis, const Bicomplex<S>& v) {
  return v * conj(axis, v);
}

/// Radicand of the real modulus: w^2 + x^2 + y^2 + z^2.
template <typename S>
S real_norm_sq(const Bicomplex<S>& v) {
  return S(v.re() * v.re() + v.i() * v.i() + v.j() * v.j() + v.k() * v.k());
}

/// The z1 + z2 j view with z1 = w + x i and z2 = y + z i.
template <typename S>
struct ComplexPair {
  S z1_re, z1_im, z2_re, z2_im;
  friend bool operator==(const ComplexPair&, const ComplexPair&) = default;
};

template <typename S>
ComplexPair<S> to_complex_pair(const Bicomplex<S>& v) {
  return {v.re(), v.i(), v.j(), v.k()};
}

template <typename S>
Bicomplex<S> from_complex_pair(const ComplexPair<S>& p) {
  return {p.z1_re, p.z1_im, p.z2_re, p.z2_im};
}

/// "3 - 6i - 4j + 5k"; a purely real value prints as its real part alone.
inline std::string to_string(const BicomplexZ& v) {
  if (v.i() == 0 && v.j() == 0 && v.k() == 0) return to_decimal(v.re());
  std::string s = to_decimal(v.re());
  auto term = [&s](const Integer& c, const char* unit) {
    s += sgn(c) < 0 ? " - " : " + ";
    s += to_decimal(Integer(abs(c)));
    s += unit;
  };
  term(v.i(), "i");
  term(v.j(), "j");
  term(v.k(), "k");
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const BicomplexZ& v) {
  return os << to_string(v);
}

}  // namespace bcfib
