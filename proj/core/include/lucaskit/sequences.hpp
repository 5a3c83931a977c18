#pragma once

#include "lucaskit/natural.hpp"
#include "lucaskit/op_counts.hpp"

#include <optional>
#include <string_view>
#include <utility>

namespace lucaskit {

/// Algorithm selectors on the public surface. All but `doubling` compute
/// Lucas numbers (Fibonacci requests route through the exact conversion);
/// `doubling` computes Fibonacci directly and is only valid for Kind::fib.
enum class Algo { linear, middle, ripple, ripple_memo, via_fib, doubling };

enum class Kind { lucas, fib };

std::string_view algo_name(Algo algo);
std::string_view kind_name(Kind kind);

/// Accepts both "ripple-memo" and "ripple_memo" spellings.
std::optional<Algo> parse_algo(std::string_view name);
std::optional<Kind> parse_kind(std::string_view name);

/// Whether the selector makes sense for the kind (doubling is fib-only).
bool algo_supported(Kind kind, Algo algo);

/// L_n by n-1 additions. The ground-truth oracle for everything else here.
Natural lucas_linear(Index n);

/// F_n by n-1 additions (F_0 = 0, F_1 = 1).
Natural fib_linear(Index n);

/// L_n (n >= 2) by the iterative doubling walk: exactly two squarings and
/// three additions per bit of n below the leading one, no general
/// multiplications. Indices 0 and 1 are handled by lucas().
Natural lucas_middle(Index n, OpCounts& counts);

/// L_n (n >= 2) by the direct recursion, duplicate sub-calls included.
Natural lucas_ripple(Index n, OpCounts& counts);

/// L_n (n >= 2) by the recursion with a per-invocation memo table.
Natural lucas_ripple_memo(Index n, OpCounts& counts);

/// (F_n, F_{n+1}) by fast doubling; the general-multiplication baseline.
std::pair<Natural, Natural> fib_fast_doubling(Index n, OpCounts& counts);

/// F_n from L_n via the exact identity 5*F_n^2 = L_n^2 - 4*(-1)^n, valid for
/// every n >= 0 (unlike rounding L_n/sqrt(5) in floating point, which is
/// already wrong at n = 1). Throws std::invalid_argument when lucas_value
/// cannot be L_n for any index of n's parity.
Natural fib_from_lucas(Index n, const Natural& lucas_value);
Natural fib_from_lucas(Index n, const Natural& lucas_value, OpCounts& counts);

/// L_n = F_{n-1} + F_{n+1} (n >= 1) on top of fast doubling; the
/// Fibonacci-based route used as an independent cross-check.
Natural lucas_from_fib(Index n);
Natural lucas_from_fib(Index n, OpCounts& counts);

/// L_n for any n >= 0: n = 0 -> 2 and n = 1 -> 1 from the base table, the
/// selected algorithm otherwise. Every selector agrees on every input.
Natural lucas(Index n, Algo algo);
Natural lucas(Index n, Algo algo, OpCounts& counts);

/// F_n for any n >= 0: the selected Lucas algorithm plus exact conversion,
/// or direct fast doubling for Algo::doubling.
Natural fib(Index n, Algo algo);
Natural fib(Index n, Algo algo, OpCounts& counts);

/// Uniform entry point for the CLI and the bench harness.
Natural compute(Kind kind, Algo algo, Index n, OpCounts& counts);

}  // namespace lucaskit
