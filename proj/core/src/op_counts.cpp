#include "lucaskit/op_counts.hpp"

#include <sstream>
#include <stdexcept>

namespace lucaskit {

std::string format_stats(const OpCounts& counts) {
    std::ostringstream out;
    out << "squarings=" << counts.squarings << " mults=" << counts.general_mults
        << " adds=" << counts.add_subs << " calls=" << counts.recursive_calls
        << " memo_hits=" << counts.memo_hits;
    return out.str();
}

std::uint64_t ripple_call_count(Index n) {
    if (n < 2) throw std::invalid_argument("ripple_call_count: n must be >= 2");
    if (n <= 4) return 1;
    if (n % 2 == 0) return 1 + ripple_call_count(n / 2);
    return 1 + ripple_call_count(n / 2) + ripple_call_count(n / 2 + 1);
}

}  // namespace lucaskit
