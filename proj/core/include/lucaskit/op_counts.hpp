#pragma once

#include "lucaskit/natural.hpp"

#include <cstdint>
#include <string>

namespace lucaskit {

/// Tallies of the representation-level operations one algorithm invocation
/// performed. Squarings and general multiplications are counted separately:
/// multiplying a value by itself admits a faster routine than multiplying two
/// distinct values, and the algorithms here differ in exactly that respect.
/// Multiplication by the small constants (2, 4) and halving are shifts and
/// are not tallied.
///
/// An OpCounts is owned by a single invocation; nothing here is global, so
/// concurrent invocations with separate counters never race.
struct OpCounts {
    std::uint64_t squarings = 0;
    std::uint64_t general_mults = 0;
    std::uint64_t add_subs = 0;
    std::uint64_t recursive_calls = 0;
    std::uint64_t memo_hits = 0;

    /// Big multiplications of either flavor.
    std::uint64_t big_mults() const { return squarings + general_mults; }

    /// Calls that were actually evaluated rather than answered from a memo.
    std::uint64_t fresh_evaluations() const { return recursive_calls - memo_hits; }

    friend bool operator==(const OpCounts&, const OpCounts&) = default;
};

/// Single line of key=value pairs, e.g. "squarings=4 mults=0 adds=6 ...".
std::string format_stats(const OpCounts& counts);

/// x*x, tallied as a squaring.
template <class Int>
Int counted_square(const Int& x, OpCounts& counts) {
    ++counts.squarings;
    return Int(x * x);
}

/// x*y, tallied as a general multiplication even when x == y: routing a
/// product through here rather than counted_square is the caller's
/// declaration of which primitive it uses.
template <class Int>
Int counted_mul(const Int& x, const Int& y, OpCounts& counts) {
    ++counts.general_mults;
    return Int(x * y);
}

template <class Int>
Int counted_add(const Int& x, const Int& y, OpCounts& counts) {
    ++counts.add_subs;
    return Int(x + y);
}

template <class Int>
Int counted_sub(const Int& x, const Int& y, OpCounts& counts) {
    ++counts.add_subs;
    return Int(x - y);
}

/// x + offset for the small signed corrections (+-2, +-4): one addition or
/// subtraction depending on the sign.
template <class Int>
Int counted_offset(const Int& x, long offset, OpCounts& counts) {
    ++counts.add_subs;
    return Int(x + offset);
}

/// Calls the naive recursive algorithm makes for index n, predicted by the
/// recurrence f(2)=f(3)=f(4)=1, f(2k)=1+f(k), f(2k+1)=1+f(k)+f(k+1).
/// Grows with lg^2 n; an independent check on the instrumented runs.
std::uint64_t ripple_call_count(Index n);

}  // namespace lucaskit
