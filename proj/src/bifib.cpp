#include "bcfib/bifib.hpp"

#include "bcfib/sequences.hpp"

namespace bcfib {

const BinetConstants& BinetConstants::get() {
  static const BinetConstants constants = [] {
    BinetConstants c;
    c.alpha = golden_alpha();
    c.beta = golden_beta();
    c.alpha_bar = {QuadElem(1), c.alpha, qf_pow(c.alpha, 2), qf_pow(c.alpha, 3)};
    c.beta_bar = {QuadElem(1), c.beta, qf_pow(c.beta, 2), qf_pow(c.beta, 3)};
    c.sqrt5 = c.alpha - c.beta;
    return c;
  }();
  return constants;
}

BicomplexZ bf(Index n) {
  auto [f0, f1] = fib_pair(n);
  Integer f2 = f0 + f1;
  Integer f3 = f1 + f2;
  return {std::move(f0), std::move(f1), std::move(f2), std::move(f3)};
}

BicomplexZ bl(Index n) {
  // L_n = 2 F_{n+1} - F_n, then the recurrence.
  auto [f0, f1] = fib_pair(n);
  Integer l0 = 2 * f1 - f0;
  Integer l1 = 2 * f0 + f1;  // 2 F_{n+2} - F_{n+1}
  Integer l2 = l0 + l1;
  Integer l3 = l1 + l2;
  return {std::move(l0), std::move(l1), std::move(l2), std::move(l3)};
}

BicomplexQ bf_binet(Index n) {
  const auto& c = BinetConstants::get();
  BicomplexQ num = scale(qf_pow(c.alpha, n), c.alpha_bar) - scale(qf_pow(c.beta, n), c.beta_bar);
  return scale(c.sqrt5.inverse(), num);
}

BicomplexQ bl_binet(Index n) {
  const auto& c = BinetConstants::get();
  return scale(qf_pow(c.alpha, n), c.alpha_bar) + scale(qf_pow(c.beta, n), c.beta_bar);
}

std::optional<BicomplexZ> as_integer(const BicomplexQ& v) {
  auto w = qf_as_integer(v.re());
  auto x = qf_as_integer(v.i());
  auto y = qf_as_integer(v.j());
  auto z = qf_as_integer(v.k());
  if (!w || !x || !y || !z) return std::nullopt;
  return BicomplexZ{std::move(*w), std::move(*x), std::move(*y), std::move(*z)};
}

BicomplexZ bf_conj(Axis axis, Index n) { return conj(axis, bf(n)); }

Integer bf_real_radicand(Index n) { return self_product(Axis::K, bf(n)).re(); }

}  // namespace bcfib
