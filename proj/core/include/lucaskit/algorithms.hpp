#pragma once

#include "lucaskit/natural.hpp"
#include "lucaskit/op_counts.hpp"

#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

// Doubling kernels, generic over the integer payload. The public API in
// sequences.hpp instantiates them on Natural; the test suites additionally
// instantiate them on std::uint64_t, where every operation acts mod 2^64 and
// control flow (hence every op count) is identical, to sweep op-count
// invariants over index ranges that would be pointlessly slow at full
// precision.

namespace lucaskit {

/// Floor of lg n. Requires n >= 1.
inline std::size_t floor_log2(Index n) {
    return static_cast<std::size_t>(std::bit_width(n)) - 1;
}

/// The bits of n below its leading one, most-significant first: flag(j)
/// holds bit number depth-j of n, so flag(1) is the bit just below the
/// leading one and flag(depth) is the least-significant bit. The leading
/// one itself is not stored.
struct MarkOddPath {
    std::size_t depth = 0;            // floor(lg n)
    std::vector<std::uint8_t> flags;  // length == depth, 1-based via flag()

    bool flag(std::size_t j) const { return flags[j - 1] != 0; }
};

/// Records odd(i) at positions depth..1 while halving i from n down to its
/// leading one. Requires n >= 2.
inline MarkOddPath mark_odd_bits(Index n) {
    if (n < 2) throw std::invalid_argument("mark_odd_bits: n must be >= 2");
    MarkOddPath path;
    path.depth = floor_log2(n);
    path.flags.assign(path.depth, 0);
    Index i = n;
    for (std::size_t j = path.depth; j > 0; --j) {
        if (i % 2 == 1) path.flags[j - 1] = 1;
        i /= 2;
    }
    // i == 1 here: the leading bit is implicit
    return path;
}

/// Inverse of mark_odd_bits: m = 1, then m <- 2m + flag(j) for j = 1..depth.
/// Throws std::overflow_error if the index cannot fit a machine word.
inline Index reconstruct_index(const MarkOddPath& path) {
    Index m = 1;
    for (std::size_t j = 1; j <= path.depth; ++j) {
        if (m > (std::numeric_limits<Index>::max() - 1) / 2)
            throw std::overflow_error("reconstruct_index: index overflows the machine word");
        m = 2 * m + (path.flag(j) ? 1 : 0);
    }
    return m;
}

/// Three adjacent Lucas values (L_{2m}, L_{2m+1}, L_{2m+2}) for the current
/// prefix m of the target index's bits.
template <class Int>
struct LucasTriple {
    Int low;
    Int mid;
    Int high;

    /// Adjacency of three consecutive sequence values.
    bool adjacent() const { return high == low + mid; }
};

/// The triple for prefix m = 1: (L_2, L_3, L_4).
template <class Int>
LucasTriple<Int> middle_seed() {
    return {Int(3), Int(4), Int(7)};
}

/// One iteration of the middle walk: consumes the next bit of the target
/// index, moving the prefix from m to 2m+bit. An odd bit shifts the window
/// up one position first and flips the correction sign. Exactly two
/// squarings and three additions.
template <class Int>
void middle_step(LucasTriple<Int>& triple, bool odd_bit, OpCounts& counts) {
    long sign = 1;
    if (odd_bit) {
        triple.low = std::move(triple.mid);
        triple.mid = std::move(triple.high);
        sign = -1;
    }
    triple.low = counted_offset(counted_square(triple.low, counts), -2 * sign, counts);
    triple.high = counted_offset(counted_square(triple.mid, counts), 2 * sign, counts);
    triple.mid = counted_sub(triple.high, triple.low, counts);
}

/// L_n (n >= 2) by the iterative doubling walk over the bits of n below its
/// leading one, finishing with the odd correction for the final bit.
template <class Int>
Int middle_kernel(Index n, OpCounts& counts) {
    if (n < 2) throw std::invalid_argument("middle_kernel: n must be >= 2");
    const MarkOddPath path = mark_odd_bits(n);
    LucasTriple<Int> triple = middle_seed<Int>();
    for (std::size_t j = 1; j < path.depth; ++j) middle_step(triple, path.flag(j), counts);
    return path.flag(path.depth) ? std::move(triple.mid) : std::move(triple.low);
}

/// L_n (n >= 2) by direct recursion: one sub-call for even n, two for odd n,
/// with duplicate sub-calls re-evaluated. The call count therefore grows
/// with lg^2 n; ripple_memo_kernel is the O(lg n) variant.
template <class Int>
Int ripple_kernel(Index n, OpCounts& counts) {
    if (n < 2) throw std::invalid_argument("ripple_kernel: n must be >= 2");
    ++counts.recursive_calls;
    if (n == 2) return Int(3);
    if (n == 3) return Int(4);
    if (n == 4) return Int(7);
    const Index half = n / 2;
    const long sign = half % 2 == 0 ? 1 : -1;
    Int low = ripple_kernel<Int>(half, counts);
    if (n % 2 == 0) return counted_offset(counted_square(low, counts), -2 * sign, counts);
    Int high = ripple_kernel<Int>(half + 1, counts);
    return counted_offset(
        counted_sub(counted_square(high, counts), counted_square(low, counts), counts),
        4 * sign, counts);
}

namespace detail {

template <class Int>
Int ripple_memo_eval(Index n, OpCounts& counts, std::unordered_map<Index, Int>& memo) {
    ++counts.recursive_calls;
    if (auto it = memo.find(n); it != memo.end()) {
        ++counts.memo_hits;
        return it->second;
    }
    Int value;
    if (n == 2) {
        value = Int(3);
    } else if (n == 3) {
        value = Int(4);
    } else if (n == 4) {
        value = Int(7);
    } else {
        const Index half = n / 2;
        const long sign = half % 2 == 0 ? 1 : -1;
        Int low = ripple_memo_eval(half, counts, memo);
        if (n % 2 == 0) {
            value = counted_offset(counted_square(low, counts), -2 * sign, counts);
        } else {
            Int high = ripple_memo_eval(half + 1, counts, memo);
            value = counted_offset(
                counted_sub(counted_square(high, counts), counted_square(low, counts), counts),
                4 * sign, counts);
        }
    }
    memo.emplace(n, value);
    return value;
}

}  // namespace detail

/// Same recursion as ripple_kernel with duplicate calls answered from a
/// per-invocation memo table. The indices evaluated at each depth form an
/// adjacent pair {k, k+1}, so fresh evaluations stay within 2*floor(lg n)+1.
template <class Int>
Int ripple_memo_kernel(Index n, OpCounts& counts) {
    if (n < 2) throw std::invalid_argument("ripple_memo_kernel: n must be >= 2");
    std::unordered_map<Index, Int> memo;
    return detail::ripple_memo_eval(n, counts, memo);
}

/// (F_n, F_{n+1}) by fast doubling over the bits of n, most-significant
/// first, via F_{2k} = F_k*(2F_{k+1} - F_k) and F_{2k+1} = F_k^2 + F_{k+1}^2.
/// One general multiplication and two squarings per bit — the baseline the
/// squarings-only Lucas kernels are measured against.
template <class Int>
std::pair<Int, Int> doubling_kernel(Index n, OpCounts& counts) {
    Int a(0), b(1);  // (F_0, F_1)
    if (n == 0) return {std::move(a), std::move(b)};
    for (std::size_t shift = floor_log2(n) + 1; shift-- > 0;) {
        // (a, b) = (F_k, F_{k+1}); double k, then absorb the next bit of n
        Int even_term = counted_mul(a, counted_sub(Int(b + b), a, counts), counts);
        Int odd_term =
            counted_add(counted_square(a, counts), counted_square(b, counts), counts);
        if ((n >> shift) & 1) {
            b = counted_add(even_term, odd_term, counts);
            a = std::move(odd_term);
        } else {
            a = std::move(even_term);
            b = std::move(odd_term);
        }
    }
    return {std::move(a), std::move(b)};
}

}  // namespace lucaskit
