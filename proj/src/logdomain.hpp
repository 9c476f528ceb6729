#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>

namespace propb {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();
inline constexpr double kPosInf = std::numeric_limits<double>::infinity();

// ln(2e), appears throughout as the (2e)^4 constant: 4 * ln(2e).
inline const double kLn2e = std::log(2.0) + 1.0;

inline double log_add(double a, double b) {
    if (a == kNegInf) return b;
    if (b == kNegInf) return a;
    if (a == kPosInf || b == kPosInf) return kPosInf;
    const double m = a > b ? a : b;
    return m + std::log1p(std::exp((a < b ? a : b) - m));
}

// log C(n, k) via log-gamma; n may be any nonnegative real, k integral.
inline double log_binomial(double n, std::int64_t k) {
    if (k < 0 || static_cast<double>(k) > n) return kNegInf;
    if (k == 0 || static_cast<double>(k) == n) return 0.0;
    return std::lgamma(n + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
           std::lgamma(n - static_cast<double>(k) + 1.0);
}

// floor(a / (16 e^4)) for exact integer a, with rigorous rounding: the result
// is reported only when the bracketing rationals for e^4 agree. Used to
// cross-check the log-domain path of the degree thresholds.
std::optional<std::uint64_t> exact_floor_div_16e4(unsigned __int128 a);

// a = num * r^e capped multiplication helper: returns nullopt on overflow of
// unsigned __int128.
std::optional<unsigned __int128> checked_pow_mul(std::uint64_t factor,
                                                 std::uint64_t base,
                                                 std::uint64_t exponent);

} // namespace propb
