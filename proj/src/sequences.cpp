#include "bcfib/sequences.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "bcfib/error.hpp"

namespace bcfib {
namespace {

std::uint64_t magnitude(Index n) {
  return n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
}

// Processes the bits of m from the top:
//   F_{2k}   = F_k (2 F_{k+1} - F_k)
//   F_{2k+1} = F_k^2 + F_{k+1}^2
std::pair<Integer, Integer> doubling(std::uint64_t m) {
  Integer a = 0;  // F_k
  Integer b = 1;  // F_{k+1}
  Integer c, d;
  for (int bit = std::bit_width(m) - 1; bit >= 0; --bit) {
    c = a * (2 * b - a);
    d = a * a + b * b;
    if ((m >> bit) & 1u) {
      a = d;
      b = c + d;
    } else {
      a = std::move(c);
      b = std::move(d);
    }
  }
  return {std::move(a), std::move(b)};
}

Integer negate_if(Integer v, bool flip) {
  if (flip) v = -v;
  return v;
}

}  // namespace

std::pair<Integer, Integer> fib_pair(Index n) {
  if (n >= 0) return doubling(static_cast<std::uint64_t>(n));
  // n = -m with m >= 1: (F_{-m}, F_{-m+1}) from (F_{m-1}, F_m).
  const std::uint64_t m = magnitude(n);
  auto [prev, cur] = doubling(m - 1);  // F_{m-1}, F_m
  // F_{-m} = (-1)^{m+1} F_m, F_{-(m-1)} = (-1)^m F_{m-1}
  const bool m_even = (m % 2 == 0);
  Integer first = negate_if(std::move(cur), m_even);
  Integer second = negate_if(std::move(prev), !m_even);
  return {std::move(first), std::move(second)};
}

Integer fib(Index n) { return fib_pair(n).first; }

Integer lucas(Index n) {
  // L_n = 2 F_{n+1} - F_n
  auto [f, g] = fib_pair(n);
  return Integer(2 * g - f);
}

std::pair<Integer, Integer> fib_pair_oracle(Index n) {
  if (n < 0) throw NegativeIndex("fib_pair_oracle requires n >= 0, got " + std::to_string(n));
  Integer a = 0;
  Integer b = 1;
  for (Index step = 0; step < n; ++step) {
    Integer next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return {std::move(a), std::move(b)};
}

}  // namespace bcfib
