#include "lucaskit/natural.hpp"

#include <stdexcept>

namespace lucaskit {

namespace {

void require_radix(int radix) {
    if (radix != 10 && radix != 16)
        throw std::invalid_argument("radix must be 10 or 16");
}

}  // namespace

Natural isqrt(const Natural& x) {
    if (sgn(x) < 0) throw std::domain_error("isqrt: negative input");
    Natural root;
    mpz_sqrt(root.get_mpz_t(), x.get_mpz_t());
    return root;
}

std::size_t bit_length(const Natural& x) {
    return mpz_sizeinbase(x.get_mpz_t(), 2);
}

std::size_t digit_count(const Natural& x, int radix) {
    require_radix(radix);
    if (sgn(x) == 0) return 1;
    const std::size_t estimate = mpz_sizeinbase(x.get_mpz_t(), radix);
    if (radix == 16) return estimate;  // exact for power-of-two bases
    // for base 10 the estimate may be one too big
    Natural bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), 10, estimate - 1);
    return x < bound ? estimate - 1 : estimate;
}

std::string to_string(const Natural& x, int radix) {
    require_radix(radix);
    return x.get_str(radix);
}

}  // namespace lucaskit
