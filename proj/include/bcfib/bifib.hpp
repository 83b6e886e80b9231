#pragma once

// Bicomplex Fibonacci and Lucas numbers
//   BF_n = F_n + F_{n+1} i + F_{n+2} j + F_{n+3} k
//   BL_n = L_n + L_{n+1} i + L_{n+2} j + L_{n+3} k
// defined for every signed n.

#include <optional>

#include "bcfib/bicomplex.hpp"
#include "bcfib/exactnum.hpp"

namespace bcfib {

using BicomplexQ = Bicomplex<QuadElem>;

struct BinetConstants {
  QuadElem alpha;
  QuadElem beta;
  BicomplexQ alpha_bar;  ///< 1 + alpha i + alpha^2 j + alpha^3 k
  BicomplexQ beta_bar;   ///< 1 + beta i + beta^2 j + beta^3 k
  QuadElem sqrt5;        ///< alpha - beta

  static const BinetConstants& get();
};

BicomplexZ bf(Index n);
BicomplexZ bl(Index n);

/// (alpha_bar alpha^n - beta_bar beta^n) / (alpha - beta), exactly.
BicomplexQ bf_binet(Index n);
/// alpha_bar alpha^n + beta_bar beta^n, exactly.
BicomplexQ bl_binet(Index n);

/// Componentwise qf_as_integer; empty if any component is not an integer.
std::optional<BicomplexZ> as_integer(const BicomplexQ& v);

BicomplexZ bf_conj(Axis axis, Index n);

/// F_n^2 + F_{n+1}^2 + F_{n+2}^2 + F_{n+3}^2, the real part of BF_n times its k-conjugate.
Integer bf_real_radicand(Index n);

}  // namespace bcfib
