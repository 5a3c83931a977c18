#include "lucaskit/sequences.hpp"

#include "lucaskit/algorithms.hpp"

#include <stdexcept>
#include <string>

namespace lucaskit {

std::string_view algo_name(Algo algo) {
    switch (algo) {
        case Algo::linear: return "linear";
        case Algo::middle: return "middle";
        case Algo::ripple: return "ripple";
        case Algo::ripple_memo: return "ripple-memo";
        case Algo::via_fib: return "via-fib";
        case Algo::doubling: return "doubling";
    }
    throw std::invalid_argument("algo_name: unknown selector");
}

std::string_view kind_name(Kind kind) {
    return kind == Kind::lucas ? "lucas" : "fib";
}

std::optional<Algo> parse_algo(std::string_view name) {
    std::string canonical(name);
    for (char& c : canonical)
        if (c == '_') c = '-';
    if (canonical == "linear") return Algo::linear;
    if (canonical == "middle") return Algo::middle;
    if (canonical == "ripple") return Algo::ripple;
    if (canonical == "ripple-memo") return Algo::ripple_memo;
    if (canonical == "via-fib") return Algo::via_fib;
    if (canonical == "doubling") return Algo::doubling;
    return std::nullopt;
}

std::optional<Kind> parse_kind(std::string_view name) {
    if (name == "lucas") return Kind::lucas;
    if (name == "fib") return Kind::fib;
    return std::nullopt;
}

bool algo_supported(Kind kind, Algo algo) {
    return kind == Kind::fib || algo != Algo::doubling;
}

Natural lucas_linear(Index n) {
    Natural below(2), at(1);  // L_0, L_1
    if (n == 0) return below;
    for (Index i = 1; i < n; ++i) {
        Natural next = below + at;
        below = std::move(at);
        at = std::move(next);
    }
    return at;
}

Natural fib_linear(Index n) {
    Natural below(0), at(1);  // F_0, F_1
    if (n == 0) return below;
    for (Index i = 1; i < n; ++i) {
        Natural next = below + at;
        below = std::move(at);
        at = std::move(next);
    }
    return at;
}

Natural lucas_middle(Index n, OpCounts& counts) {
    return middle_kernel<Natural>(n, counts);
}

Natural lucas_ripple(Index n, OpCounts& counts) {
    return ripple_kernel<Natural>(n, counts);
}

Natural lucas_ripple_memo(Index n, OpCounts& counts) {
    return ripple_memo_kernel<Natural>(n, counts);
}

std::pair<Natural, Natural> fib_fast_doubling(Index n, OpCounts& counts) {
    return doubling_kernel<Natural>(n, counts);
}

Natural fib_from_lucas(Index n, const Natural& lucas_value) {
    OpCounts scratch;
    return fib_from_lucas(n, lucas_value, scratch);
}

Natural fib_from_lucas(Index n, const Natural& lucas_value, OpCounts& counts) {
    const long sign = n % 2 == 0 ? 1 : -1;
    // 5*F_n^2 = L_n^2 - 4*(-1)^n
    const Natural five_fib_squared =
        counted_offset(counted_square(lucas_value, counts), -4 * sign, counts);
    if (sgn(five_fib_squared) < 0 ||
        !mpz_divisible_ui_p(five_fib_squared.get_mpz_t(), 5))
        throw std::invalid_argument(
            "fib_from_lucas: input is not a Lucas value for this index parity");
    const Natural fib_squared = five_fib_squared / 5;
    Natural root = isqrt(fib_squared);
    if (root * root != fib_squared)
        throw std::invalid_argument(
            "fib_from_lucas: input is not a Lucas value for this index parity");
    return root;
}

Natural lucas_from_fib(Index n) {
    OpCounts scratch;
    return lucas_from_fib(n, scratch);
}

Natural lucas_from_fib(Index n, OpCounts& counts) {
    if (n < 1)
        throw std::invalid_argument("lucas_from_fib: n must be >= 1 (F_{-1} is not modeled)");
    auto [below, at] = doubling_kernel<Natural>(n - 1, counts);  // (F_{n-1}, F_n)
    const Natural above = counted_add(below, at, counts);        // F_{n+1}
    return counted_add(below, above, counts);
}

Natural lucas(Index n, Algo algo) {
    OpCounts scratch;
    return lucas(n, algo, scratch);
}

Natural lucas(Index n, Algo algo, OpCounts& counts) {
    if (algo == Algo::doubling)
        throw std::invalid_argument("lucas: 'doubling' computes Fibonacci; pick a Lucas selector");
    if (n == 0) return Natural(2);
    if (n == 1) return Natural(1);
    switch (algo) {
        case Algo::linear: return lucas_linear(n);
        case Algo::middle: return lucas_middle(n, counts);
        case Algo::ripple: return lucas_ripple(n, counts);
        case Algo::ripple_memo: return lucas_ripple_memo(n, counts);
        case Algo::via_fib: return lucas_from_fib(n, counts);
        default: throw std::invalid_argument("lucas: unknown selector");
    }
}

Natural fib(Index n, Algo algo) {
    OpCounts scratch;
    return fib(n, algo, scratch);
}

Natural fib(Index n, Algo algo, OpCounts& counts) {
    if (algo == Algo::doubling) return doubling_kernel<Natural>(n, counts).first;
    const Natural lucas_value = lucas(n, algo, counts);
    return fib_from_lucas(n, lucas_value, counts);
}

Natural compute(Kind kind, Algo algo, Index n, OpCounts& counts) {
    if (!algo_supported(kind, algo))
        throw std::invalid_argument(std::string("selector '") + std::string(algo_name(algo)) +
                                    "' is not valid for kind '" +
                                    std::string(kind_name(kind)) + "'");
    return kind == Kind::lucas ? lucas(n, algo, counts) : fib(n, algo, counts);
}

}  // namespace lucaskit
