#pragma once

#include <utility>

#include "bcfib/integer.hpp"

namespace bcfib {

/// F_n for any signed n, by fast doubling on |n| and F_{-n} = (-1)^{n+1} F_n.
Integer fib(Index n);

/// L_n for any signed n.
Integer lucas(Index n);

/// (F_n, F_{n+1}) for any signed n.
std::pair<Integer, Integer> fib_pair(Index n);

/// (F_n, F_{n+1}) by plain iteration from (0, 1). Throws NegativeIndex for n < 0.
std::pair<Integer, Integer> fib_pair_oracle(Index n);

}  // namespace bcfib
