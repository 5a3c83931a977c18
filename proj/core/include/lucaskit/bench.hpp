#pragma once

#include "lucaskit/natural.hpp"
#include "lucaskit/op_counts.hpp"
#include "lucaskit/sequences.hpp"

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace lucaskit {

/// One benchmark observation: a single timed trial of one algorithm at one
/// index, with the op counts it accumulated and the bit length of its result.
struct BenchRecord {
    Index n = 0;
    Kind kind = Kind::lucas;
    Algo algo = Algo::middle;
    std::uint32_t rep = 0;
    std::int64_t elapsed_ns = 0;
    OpCounts ops;
    std::uint64_t result_bits = 0;
};

struct BenchPlan {
    std::vector<Index> indices;  // non-empty, strictly increasing
    std::vector<Algo> algos;
    Kind kind = Kind::lucas;
    std::uint32_t reps = 1;
    std::uint32_t warmup = 0;

    /// Throws std::invalid_argument on a malformed plan.
    void validate() const;
};

/// Two algorithms disagreed on a result value. That is a correctness bug,
/// not a bench artifact, so the run aborts.
class MismatchError : public std::runtime_error {
  public:
    MismatchError(Index n, Algo first, Algo second);

    Index index() const { return n_; }
    Algo first_algo() const { return first_; }
    Algo second_algo() const { return second_; }

  private:
    Index n_;
    Algo first_;
    Algo second_;
};

namespace detail {
/// Aborts with MismatchError unless all values are equal. values[i] is the
/// result produced by algos[i].
void check_agreement(Index n, const std::vector<Algo>& algos,
                     const std::vector<Natural>& values);
}  // namespace detail

/// Runs the plan single-threaded: for each index, each algorithm gets
/// `warmup` untimed rounds then `reps` timed trials, each trial with fresh
/// OpCounts and the timer wrapped around the algorithm call only. All
/// algorithms must agree on the value before an index's records are emitted.
/// Record order is n-major, algo-minor, rep-minor.
std::vector<BenchRecord> run_bench(const BenchPlan& plan);

inline constexpr std::string_view csv_header =
    "n,kind,algo,rep,elapsed_ns,squarings,mults,adds,calls,memo_hits,result_bits";

/// Header plus one row per record: decimal integers, comma-separated,
/// newline-terminated.
void write_csv(const std::vector<BenchRecord>& records, std::ostream& out);

/// Rounded geometric series from lo to hi (lo >= 1) with roughly `steps`
/// points: endpoints always included, duplicates collapsed, ascending.
std::vector<Index> geometric_indices(Index lo, Index hi, std::size_t steps);

}  // namespace lucaskit
