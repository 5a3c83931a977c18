// Acceptance suite: every release-gating property of the library and the
// CLI, one pass/fail line per criterion, exit code = number of failures.
//
// Op-count criteria quantify over wide index ranges. Those sweeps run the
// instrumented kernels instantiated on std::uint64_t (values then live mod
// 2^64 and are cross-checked against an addition-only table; control flow
// and therefore every op count depends only on the bits of n), plus the
// full-precision Natural instantiation over narrower ranges and sampled
// large indices. Values, identities and the scale check always run at full
// precision.

#include "lucaskit/algorithms.hpp"
#include "lucaskit/bench.hpp"
#include "lucaskit/natural.hpp"
#include "lucaskit/op_counts.hpp"
#include "lucaskit/sequences.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

using namespace lucaskit;

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

constexpr Algo kLucasSelectors[] = {Algo::middle, Algo::ripple, Algo::ripple_memo,
                                    Algo::via_fib, Algo::linear};

// ---- CLI helpers -----------------------------------------------------

std::string cli_path() {
    if (const char* env = std::getenv("LUCASKIT_CLI")) return env;
#ifdef LUCASKIT_CLI_PATH
    return LUCASKIT_CLI_PATH;
#else
    return "lucaskit";
#endif
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

RunResult run_cli(const std::string& args) {
    static int sequence = 0;
    const fs::path out_path = fs::temp_directory_path() /
                              ("lucaskit_acceptance_" + std::to_string(::getpid()) + "_" +
                               std::to_string(sequence++));
    const int status =
        std::system((cli_path() + " " + args + " >" + out_path.string() + " 2>/dev/null").c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(out_path);
    fs::remove(out_path);
    return result;
}

std::size_t count_lines(const std::string& text) {
    std::size_t lines = 0;
    for (const char c : text)
        if (c == '\n') ++lines;
    return lines;
}

// ---- criteria --------------------------------------------------------

bool base_values(std::string& detail) {
    const long expected[] = {2, 1, 3, 4, 7};
    for (const Algo algo : kLucasSelectors)
        for (Index n = 0; n <= 4; ++n)
            if (lucas(n, algo) != expected[n]) {
                detail = "algo " + std::string(algo_name(algo)) + " wrong at n=" +
                         std::to_string(n);
                return false;
            }
    return true;
}

bool oracle_equivalence(std::string& detail) {
    const auto start = Clock::now();
    const auto table = testutil::lucas_table(4096);
    for (Index n = 0; n <= 4096; ++n)
        for (const Algo algo : kLucasSelectors) {
            OpCounts counts;
            if (lucas(n, algo, counts) != table[n]) {
                detail = "algo " + std::string(algo_name(algo)) + " wrong at n=" +
                         std::to_string(n);
                return false;
            }
        }
    const double elapsed = seconds_since(start);
    std::ostringstream note;
    note.precision(2);
    note << std::fixed << elapsed << "s";
    detail = note.str();
    return elapsed < 30.0;
}

bool identity_suite(std::string& detail) {
    const auto lucas_values = testutil::lucas_table(2001);
    const auto fib_values = testutil::fib_table(2002);
    for (Index n = 1; n <= 1000; ++n) {
        const long sign = n % 2 == 0 ? 1 : -1;
        const bool ok =
            lucas_values[n] == fib_values[n - 1] + fib_values[n + 1] &&
            5 * fib_values[n] * fib_values[n] ==
                lucas_values[n] * lucas_values[n] - 4 * sign &&
            lucas_values[2 * n] == lucas_values[n] * lucas_values[n] - 2 * sign &&
            fib_values[2 * n] == fib_values[n] * lucas_values[n] &&
            fib_values[n + 1] * fib_values[n - 1] == fib_values[n] * fib_values[n] + sign;
        if (!ok) {
            detail = "identity failed at n=" + std::to_string(n);
            return false;
        }
    }
    return true;
}

bool middle_op_counts(std::string& detail) {
    const Index max = Index(1) << 20;
    const auto table = testutil::lucas_table_u64(max);
    for (Index n = 4; n <= max; ++n) {
        OpCounts counts;
        const std::uint64_t value = middle_kernel<std::uint64_t>(n, counts);
        const std::uint64_t iterations = floor_log2(n) - 1;
        if (counts.squarings != 2 * iterations || counts.add_subs != 3 * iterations ||
            counts.general_mults != 0 || value != table[n]) {
            detail = "count formula or value broke at n=" + std::to_string(n);
            return false;
        }
    }
    // the full-precision instantiation counts identically
    for (Index n = 4; n <= (Index(1) << 12); ++n) {
        OpCounts counts;
        lucas_middle(n, counts);
        const std::uint64_t iterations = floor_log2(n) - 1;
        if (counts.squarings != 2 * iterations || counts.add_subs != 3 * iterations ||
            counts.general_mults != 0) {
            detail = "full-precision counts broke at n=" + std::to_string(n);
            return false;
        }
    }
    for (const Index n : {(Index(1) << 17) + 9, (Index(1) << 19) + 12345, max - 1, max}) {
        OpCounts counts;
        lucas_middle(n, counts);
        const std::uint64_t iterations = floor_log2(n) - 1;
        if (counts.squarings != 2 * iterations || counts.add_subs != 3 * iterations ||
            counts.general_mults != 0) {
            detail = "full-precision counts broke at n=" + std::to_string(n);
            return false;
        }
    }
    return true;
}

bool ripple_call_growth(std::string& detail) {
    for (Index n = 2; n <= (Index(1) << 16); ++n) {
        OpCounts counts;
        ripple_kernel<std::uint64_t>(n, counts);
        if (counts.recursive_calls != ripple_call_count(n)) {
            detail = "instrumented calls diverged at n=" + std::to_string(n);
            return false;
        }
    }
    for (std::uint64_t k = 2; k <= 20; ++k) {
        const Index n = (Index(1) << k) - 1;
        OpCounts counts;
        ripple_kernel<std::uint64_t>(n, counts);
        if (counts.recursive_calls != k * (k - 1) / 2 ||
            ripple_call_count(n) != k * (k - 1) / 2) {
            detail = "triangular closed form broke at k=" + std::to_string(k);
            return false;
        }
    }
    for (Index n = 2; n <= (Index(1) << 10); ++n) {
        OpCounts counts;
        lucas_ripple(n, counts);
        if (counts.recursive_calls != ripple_call_count(n)) {
            detail = "full-precision calls diverged at n=" + std::to_string(n);
            return false;
        }
    }
    return true;
}

bool memo_fresh_bound(std::string& detail) {
    const Index max = Index(1) << 20;
    const auto table = testutil::lucas_table_u64(max);
    for (Index n = 2; n <= max; ++n) {
        OpCounts counts;
        const std::uint64_t value = ripple_memo_kernel<std::uint64_t>(n, counts);
        if (counts.fresh_evaluations() > 2 * floor_log2(n) + 1 || value != table[n]) {
            detail = "bound or value broke at n=" + std::to_string(n);
            return false;
        }
    }
    for (Index n = 2; n <= (Index(1) << 10); ++n) {
        OpCounts counts;
        lucas_ripple_memo(n, counts);
        if (counts.fresh_evaluations() > 2 * floor_log2(n) + 1) {
            detail = "full-precision bound broke at n=" + std::to_string(n);
            return false;
        }
    }
    return true;
}

bool multiplication_dominance(std::string& detail) {
    for (Index n = 16; n <= (Index(1) << 16); ++n) {
        OpCounts middle_counts, doubling_counts;
        middle_kernel<std::uint64_t>(n, middle_counts);
        doubling_kernel<std::uint64_t>(n, doubling_counts);
        if (middle_counts.big_mults() > doubling_counts.big_mults()) {
            detail = "baseline won at n=" + std::to_string(n);
            return false;
        }
    }
    for (const Index n : {Index(16), Index(1000), Index(1) << 12, Index(1) << 16}) {
        OpCounts middle_counts, doubling_counts;
        lucas_middle(n, middle_counts);
        fib_fast_doubling(n, doubling_counts);
        if (middle_counts.big_mults() > doubling_counts.big_mults()) {
            detail = "full-precision baseline won at n=" + std::to_string(n);
            return false;
        }
    }
    return true;
}

bool scale_check(std::string& detail) {
    constexpr Index n = 1000000;
    constexpr std::uint64_t modulus = 1000000007;
    const auto start = Clock::now();
    OpCounts counts;
    const Natural value = lucas_middle(n, counts);
    const double elapsed = seconds_since(start);

    const std::size_t digits = digit_count(value, 10);
    if (digits != 208988) {
        detail = "digit count " + std::to_string(digits) + " != 208988";
        return false;
    }
    const std::uint64_t expected_mod = testutil::lucas_mod(n, modulus);
    const std::uint64_t actual_mod = mpz_fdiv_ui(value.get_mpz_t(), modulus);
    if (actual_mod != expected_mod) {
        detail = "modular oracle mismatch";
        return false;
    }
    std::ostringstream note;
    note.precision(2);
    note << std::fixed << elapsed << "s, 208988 digits, mod-oracle ok";
    detail = note.str();
    return elapsed < 10.0;
}

bool conversion_deviation(std::string& detail) {
    const auto lucas_values = testutil::lucas_table(70);
    const double root5 = std::sqrt(5.0);
    for (Index n = 2; n <= 70; ++n) {
        const Natural exact = fib_from_lucas(n, lucas_values[n]);
        const double rounded = std::ceil(lucas_values[n].get_d() / root5 - 0.5);
        if (Natural(rounded) != exact) {
            detail = "rounding formula diverged at n=" + std::to_string(n);
            return false;
        }
    }
    const double at_one = std::ceil(1.0 / root5 - 0.5);
    const Natural exact_one = fib_from_lucas(1, Natural(1));
    if (Natural(at_one) == exact_one) {
        detail = "expected the rounding formula to miss F_1";
        return false;
    }
    return at_one == 0.0 && exact_one == 1;
}

bool cli_contract(std::string& detail) {
    const auto lucas10 = run_cli("compute --kind lucas --algo middle -n 10");
    if (lucas10.exit_code != 0 || lucas10.out != "123\n") {
        detail = "compute lucas middle 10";
        return false;
    }
    const auto ripple4 = run_cli("compute --kind lucas --algo ripple -n 4");
    if (ripple4.exit_code != 0 || ripple4.out != "7\n") {
        detail = "compute lucas ripple 4";
        return false;
    }
    const auto fib10 = run_cli("compute --kind fib --algo middle -n 10");
    if (fib10.exit_code != 0 || fib10.out != "55\n") {
        detail = "compute fib middle 10";
        return false;
    }
    const auto verify512 = run_cli("verify --max 512");
    if (verify512.exit_code != 0 || count_lines(verify512.out) != 1) {
        detail = "verify --max 512";
        return false;
    }
    const auto verify1 = run_cli("verify --max 1");
    if (verify1.exit_code != 0 || count_lines(verify1.out) != 1) {
        detail = "verify --max 1";
        return false;
    }

    const fs::path csv = fs::temp_directory_path() /
                         ("lucaskit_acceptance_csv_" + std::to_string(::getpid()));
    const auto bench_file =
        run_cli("bench --indices 1024,4096 --algos middle,ripple-memo --reps 2 --csv " +
                csv.string());
    const std::string csv_content = slurp(csv);
    fs::remove(csv);
    if (bench_file.exit_code != 0 || count_lines(csv_content) != 9) {
        detail = "bench to csv row count";
        return false;
    }
    const auto geometric = run_cli("bench --geometric 2:1048576:11 --algos middle --reps 1");
    if (geometric.exit_code != 0 || count_lines(geometric.out) != 12) {
        detail = "bench geometric row count";
        return false;
    }
    const auto bits = run_cli("bench --indices 10 --algos middle,linear --kind lucas --reps 1");
    if (bits.exit_code != 0 || count_lines(bits.out) != 3) {
        detail = "bench result_bits row count";
        return false;
    }
    std::istringstream rows(bits.out);
    std::string line;
    std::getline(rows, line);
    while (std::getline(rows, line))
        if (line.substr(line.rfind(',') + 1) != "7") {
            detail = "result_bits should be 7 for L_10";
            return false;
        }
    return true;
}

struct Criterion {
    std::string title;
    std::function<bool(std::string&)> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"base values L_0..L_4 are 2,1,3,4,7 across every selector", base_values},
        {"all selectors equal the linear oracle on [0,4096] within 30s", oracle_equivalence},
        {"five Lucas/Fibonacci identities hold exactly on [1,1000]", identity_suite},
        {"middle does 2(lg n - 1) squarings, 3(lg n - 1) adds, 0 mults on [4,2^20]",
         middle_op_counts},
        {"naive ripple calls equal the recurrence on [2,2^16], triangular at 2^k-1",
         ripple_call_growth},
        {"memoized ripple fresh evaluations <= 2 lg n + 1 on [2,2^20]", memo_fresh_bound},
        {"middle total big mults <= fast-doubling baseline on [16,2^16]",
         multiplication_dominance},
        {"L_1000000 in <10s with 208988 digits, matching the modular oracle", scale_check},
        {"double-precision rounding agrees on [2,70] and misses n=1", conversion_deviation},
        {"CLI compute/verify/bench contract, byte-exact", cli_contract},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[i].run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (!ok) ++failures;
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << i + 1 << ": "
                  << criteria[i].title;
        if (!detail.empty()) std::cout << " (" << detail << ")";
        std::cout << '\n';
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size()
              << " acceptance criteria passed\n";
    return failures;
}
