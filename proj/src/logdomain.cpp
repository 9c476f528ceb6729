#include "logdomain.hpp"

namespace propb {

namespace {
using u128 = unsigned __int128;

// e^4 = 54.598150033144239078110261202860878... bracketed by
// E4_LO/10^17 < e^4 < E4_HI/10^17.
constexpr std::uint64_t kE4Lo = 5459815003314423907ULL;
constexpr std::uint64_t kE4Hi = 5459815003314423908ULL;
constexpr u128 kPow10_17 = static_cast<u128>(100000000000000000ULL);
} // namespace

std::optional<std::uint64_t> exact_floor_div_16e4(u128 a) {
    // floor(a / (16 e^4)) = floor(a * 10^17 / (16 * E4)). Needs a*10^17 to
    // fit in 128 bits.
    const u128 max128 = ~static_cast<u128>(0);
    if (a != 0 && a > max128 / kPow10_17) return std::nullopt;
    const u128 scaled = a * kPow10_17;
    const u128 lo = scaled / (static_cast<u128>(16) * kE4Hi);
    const u128 hi = scaled / (static_cast<u128>(16) * kE4Lo);
    if (lo != hi) return std::nullopt; // bracketing disagrees, cannot certify
    if (lo > static_cast<u128>(UINT64_MAX)) return std::nullopt;
    return static_cast<std::uint64_t>(lo);
}

std::optional<u128> checked_pow_mul(std::uint64_t factor, std::uint64_t base,
                                    std::uint64_t exponent) {
    const u128 max128 = ~static_cast<u128>(0);
    u128 acc = factor;
    for (std::uint64_t i = 0; i < exponent; ++i) {
        if (base != 0 && acc > max128 / base) return std::nullopt;
        acc *= base;
    }
    return acc;
}

} // namespace propb
