#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace lucaskit {

/// Sequence position. Positions are machine words; values are arbitrary
/// precision. Index arithmetic is checked, never wrapped.
using Index = std::uint64_t;

/// Arbitrary-precision non-negative integer. Big-integer arithmetic,
/// including the squaring fast path, is provided by GMP.
using Natural = mpz_class;

/// Floor of the exact integer square root: the r with r^2 <= x < (r+1)^2.
Natural isqrt(const Natural& x);

/// Bits in the binary representation of x; 1 for x == 0.
std::size_t bit_length(const Natural& x);

/// Exact digit count of x in the given radix (10 or 16); 1 for x == 0.
std::size_t digit_count(const Natural& x, int radix);

/// Digits of x in the given radix. Hex is lowercase, no prefix.
std::string to_string(const Natural& x, int radix = 10);

}  // namespace lucaskit
