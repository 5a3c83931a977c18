#include "lucaskit/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>

namespace lucaskit {

void BenchPlan::validate() const {
    if (indices.empty()) throw std::invalid_argument("bench plan: index list is empty");
    for (std::size_t i = 1; i < indices.size(); ++i)
        if (indices[i] <= indices[i - 1])
            throw std::invalid_argument("bench plan: indices must be strictly increasing");
    if (algos.empty()) throw std::invalid_argument("bench plan: no algorithms selected");
    if (reps < 1) throw std::invalid_argument("bench plan: reps must be >= 1");
    for (Algo algo : algos)
        if (!algo_supported(kind, algo))
            throw std::invalid_argument(std::string("bench plan: selector '") +
                                        std::string(algo_name(algo)) + "' is not valid for kind '" +
                                        std::string(kind_name(kind)) + "'");
}

namespace {

std::string mismatch_message(Index n, Algo first, Algo second) {
    std::ostringstream out;
    out << "result mismatch at n=" << n << ": " << algo_name(first) << " and "
        << algo_name(second) << " disagree";
    return out.str();
}

}  // namespace

MismatchError::MismatchError(Index n, Algo first, Algo second)
    : std::runtime_error(mismatch_message(n, first, second)),
      n_(n),
      first_(first),
      second_(second) {}

namespace detail {

void check_agreement(Index n, const std::vector<Algo>& algos,
                     const std::vector<Natural>& values) {
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i] != values[0]) throw MismatchError(n, algos[0], algos[i]);
}

}  // namespace detail

std::vector<BenchRecord> run_bench(const BenchPlan& plan) {
    plan.validate();
    std::vector<BenchRecord> records;
    records.reserve(plan.indices.size() * plan.algos.size() * plan.reps);

    for (Index n : plan.indices) {
        std::vector<BenchRecord> pending;
        pending.reserve(plan.algos.size() * plan.reps);
        std::vector<Natural> values(plan.algos.size());

        for (std::size_t ai = 0; ai < plan.algos.size(); ++ai) {
            const Algo algo = plan.algos[ai];
            for (std::uint32_t round = 0; round < plan.warmup; ++round) {
                OpCounts scratch;
                compute(plan.kind, algo, n, scratch);
            }
            for (std::uint32_t rep = 0; rep < plan.reps; ++rep) {
                OpCounts counts;
                const auto start = std::chrono::steady_clock::now();
                Natural value = compute(plan.kind, algo, n, counts);
                const auto stop = std::chrono::steady_clock::now();

                BenchRecord record;
                record.n = n;
                record.kind = plan.kind;
                record.algo = algo;
                record.rep = rep;
                record.elapsed_ns =
                    std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
                record.ops = counts;
                record.result_bits = bit_length(value);
                pending.push_back(std::move(record));
                values[ai] = std::move(value);
            }
        }

        detail::check_agreement(n, plan.algos, values);
        for (BenchRecord& record : pending) records.push_back(std::move(record));
    }
    return records;
}

void write_csv(const std::vector<BenchRecord>& records, std::ostream& out) {
    out << csv_header << '\n';
    for (const BenchRecord& r : records) {
        out << r.n << ',' << kind_name(r.kind) << ',' << algo_name(r.algo) << ',' << r.rep
            << ',' << r.elapsed_ns << ',' << r.ops.squarings << ',' << r.ops.general_mults
            << ',' << r.ops.add_subs << ',' << r.ops.recursive_calls << ','
            << r.ops.memo_hits << ',' << r.result_bits << '\n';
    }
}

std::vector<Index> geometric_indices(Index lo, Index hi, std::size_t steps) {
    if (lo < 1) throw std::invalid_argument("geometric series: lower endpoint must be >= 1");
    if (hi < lo) throw std::invalid_argument("geometric series: upper endpoint below lower");
    if (steps < 1) throw std::invalid_argument("geometric series: need at least one point");

    std::set<Index> points{lo, hi};
    const long double ratio = static_cast<long double>(hi) / static_cast<long double>(lo);
    for (std::size_t i = 1; i + 1 < steps; ++i) {
        const long double exponent =
            static_cast<long double>(i) / static_cast<long double>(steps - 1);
        const long double value =
            static_cast<long double>(lo) * std::pow(ratio, exponent) + 0.5L;
        if (value >= static_cast<long double>(std::numeric_limits<Index>::max()))
            throw std::overflow_error("geometric series: index overflows the machine word");
        const Index rounded = static_cast<Index>(value);
        points.insert(std::clamp<Index>(rounded, lo, hi));
    }
    return {points.begin(), points.end()};
}

}  // namespace lucaskit
