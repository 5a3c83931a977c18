// Command-line surface: compute individual Lucas/Fibonacci numbers, verify
// all algorithms against the linear oracle, or run the benchmark harness.
//
// Exit codes: 0 success, 1 verification/mismatch failure, 2 usage or I/O
// error.

#include "lucaskit/bench.hpp"
#include "lucaskit/natural.hpp"
#include "lucaskit/op_counts.hpp"
#include "lucaskit/sequences.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using lucaskit::Algo;
using lucaskit::Index;
using lucaskit::Kind;
using lucaskit::Natural;
using lucaskit::OpCounts;

struct ComputeOptions {
    std::string kind = "lucas";
    std::string algo = "middle";
    Index n = 0;
    int radix = 10;
    bool stats = false;
    bool length_only = false;
};

struct VerifyOptions {
    Index max = 1024;
};

struct BenchOptions {
    std::string indices;
    std::string geometric;
    std::string algos;
    std::string kind = "lucas";
    std::uint32_t reps = 1;
    std::uint32_t warmup = 0;
    std::string csv_path;
};

Index parse_index(std::string_view text) {
    Index value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc::result_out_of_range)
        throw std::overflow_error("index '" + std::string(text) + "' overflows the machine word");
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw std::invalid_argument("bad index '" + std::string(text) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t begin = 0;
    while (true) {
        const std::size_t end = text.find(sep, begin);
        parts.push_back(text.substr(begin, end - begin));
        if (end == std::string_view::npos) break;
        begin = end + 1;
    }
    return parts;
}

Kind require_kind(const std::string& name) {
    const auto kind = lucaskit::parse_kind(name);
    if (!kind) throw std::invalid_argument("unknown kind '" + name + "'");
    return *kind;
}

Algo require_algo(const std::string& name, Kind kind) {
    const auto algo = lucaskit::parse_algo(name);
    if (!algo || !lucaskit::algo_supported(kind, *algo))
        throw std::invalid_argument("unknown algorithm '" + name + "' for kind '" +
                                    std::string(lucaskit::kind_name(kind)) + "'");
    return *algo;
}

int run_compute(const ComputeOptions& opt) {
    const Kind kind = require_kind(opt.kind);
    const Algo algo = require_algo(opt.algo, kind);
    OpCounts counts;
    const Natural value = lucaskit::compute(kind, algo, opt.n, counts);
    if (opt.length_only)
        std::cout << lucaskit::digit_count(value, opt.radix) << '\n';
    else
        std::cout << lucaskit::to_string(value, opt.radix) << '\n';
    if (opt.stats) std::cerr << lucaskit::format_stats(counts) << '\n';
    return 0;
}

int run_verify(const VerifyOptions& opt) {
    static constexpr Algo selectors[] = {Algo::middle, Algo::ripple, Algo::ripple_memo,
                                         Algo::via_fib, Algo::linear};
    Natural below(2), at(1);  // incremental oracle: L_{n-1}, L_n
    for (Index n = 0; n <= opt.max; ++n) {
        Natural expected;
        if (n == 0) {
            expected = below;
        } else if (n == 1) {
            expected = at;
        } else {
            expected = below + at;
            below = std::move(at);
            at = expected;
        }
        for (const Algo algo : selectors) {
            OpCounts counts;
            const Natural got = lucaskit::lucas(n, algo, counts);
            if (got != expected) {
                std::cout << "mismatch: n=" << n << " algo=" << lucaskit::algo_name(algo)
                          << " expected=" << expected.get_str() << " got=" << got.get_str()
                          << '\n';
                return 1;
            }
        }
    }
    std::cout << "verified n=0.." << opt.max
              << ": middle, ripple, ripple-memo, via-fib and linear all match the oracle\n";
    return 0;
}

int run_bench_cmd(const BenchOptions& opt) {
    if (opt.indices.empty() == opt.geometric.empty()) {
        std::cerr << "error: pass exactly one of --indices or --geometric\n";
        return 2;
    }

    lucaskit::BenchPlan plan;
    plan.kind = require_kind(opt.kind);
    for (const auto part : split(opt.algos, ','))
        plan.algos.push_back(require_algo(std::string(part), plan.kind));
    if (!opt.indices.empty()) {
        for (const auto part : split(opt.indices, ',')) plan.indices.push_back(parse_index(part));
    } else {
        const auto parts = split(opt.geometric, ':');
        if (parts.size() != 3)
            throw std::invalid_argument("--geometric expects min:max:steps");
        plan.indices = lucaskit::geometric_indices(
            parse_index(parts[0]), parse_index(parts[1]),
            static_cast<std::size_t>(parse_index(parts[2])));
    }
    plan.reps = opt.reps;
    plan.warmup = opt.warmup;

    const auto records = lucaskit::run_bench(plan);

    if (opt.csv_path.empty()) {
        lucaskit::write_csv(records, std::cout);
        return 0;
    }
    std::ofstream out(opt.csv_path);
    if (!out) {
        std::cerr << "error: cannot open '" << opt.csv_path << "' for writing\n";
        return 2;
    }
    lucaskit::write_csv(records, out);
    out.flush();
    if (!out) {
        std::cerr << "error: write to '" << opt.csv_path << "' failed\n";
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Individual Lucas and Fibonacci numbers in O(lg n) big-integer operations"};
    app.require_subcommand(1);

    ComputeOptions compute_opt;
    CLI::App* compute_cmd =
        app.add_subcommand("compute", "Print one sequence value");
    compute_cmd->add_option("-n,--index", compute_opt.n, "Sequence position")->required();
    compute_cmd->add_option("--kind", compute_opt.kind, "lucas or fib")
        ->check(CLI::IsMember({"lucas", "fib"}));
    compute_cmd->add_option("--algo", compute_opt.algo,
                            "linear, middle, ripple, ripple-memo, via-fib or doubling");
    compute_cmd->add_option("--radix", compute_opt.radix, "Output radix")
        ->check(CLI::IsMember({10, 16}));
    compute_cmd->add_flag("--stats", compute_opt.stats,
                          "Print an op-count summary to standard error");
    compute_cmd->add_flag("--length-only", compute_opt.length_only,
                          "Print the digit count instead of the digits");

    VerifyOptions verify_opt;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "Check every algorithm against the linear oracle");
    verify_cmd->add_option("--max", verify_opt.max, "Verify n = 0..max");

    BenchOptions bench_opt;
    CLI::App* bench_cmd = app.add_subcommand("bench", "Run timed trials and write CSV");
    bench_cmd->add_option("--indices", bench_opt.indices, "Comma-separated index list");
    bench_cmd->add_option("--geometric", bench_opt.geometric,
                          "Geometric index series min:max:steps");
    bench_cmd->add_option("--algos", bench_opt.algos, "Comma-separated selectors")->required();
    bench_cmd->add_option("--kind", bench_opt.kind, "lucas or fib")
        ->check(CLI::IsMember({"lucas", "fib"}));
    bench_cmd->add_option("--reps", bench_opt.reps, "Timed trials per point");
    bench_cmd->add_option("--warmup", bench_opt.warmup, "Untimed trials per point");
    bench_cmd->add_option("--csv", bench_opt.csv_path, "Output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compute_cmd->parsed()) return run_compute(compute_opt);
        if (verify_cmd->parsed()) return run_verify(verify_opt);
        return run_bench_cmd(bench_opt);
    } catch (const lucaskit::MismatchError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
