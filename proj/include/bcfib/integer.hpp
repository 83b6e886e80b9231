#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace bcfib {

/// Arbitrary-precision signed integer.
using Integer = mpz_class;

/// Signed sequence index (F_n, L_n, BF_n, BL_n all accept negative n).
using Index = std::int64_t;

inline std::string to_decimal(const Integer& z) { return z.get_str(10); }

/// (-1)^e for any signed e.
inline int parity_sign(Index e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace bcfib
