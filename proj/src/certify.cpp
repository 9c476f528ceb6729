#include "certify.hpp"

#include <cmath>
#include <sstream>

#include "errors.hpp"
#include "io.hpp"

namespace propb {

namespace {

constexpr double kRelStop = 1e-30; // series truncation: term/sum below this

double ln(double x) { return std::log(x); }

std::int64_t default_threshold_k(std::int64_t n) {
    const double k = std::ceil(20.0 * std::exp(1.0) * ln(static_cast<double>(n)));
    return std::max<std::int64_t>(1, static_cast<std::int64_t>(k));
}

std::int64_t t_cap(std::int64_t n) {
    const double lnn = ln(static_cast<double>(n));
    return static_cast<std::int64_t>(std::floor(30.0 * std::exp(1.0) * lnn * lnn));
}

} // namespace

CertificateParams CertificateParams::with_defaults(std::int64_t n, std::int32_t r,
                                                   std::int32_t b,
                                                   double log_delta) {
    CertificateParams params;
    params.n = n;
    params.r = r;
    params.b = b;
    params.log_delta = log_delta;
    params.tau0 = 1.0 / (static_cast<double>(n) + 1.0);
    params.p = std::min(1.0, 5.0 * ln(static_cast<double>(n)) / static_cast<double>(n));
    params.degenerate_threshold = default_threshold_k(n);
    return params;
}

void validate_params(const CertificateParams& params) {
    if (params.r < 2) fail(ErrorCode::InvalidArgument, "certificate requires r >= 2");
    if (params.b < 1) fail(ErrorCode::InvalidArgument, "certificate requires b >= 1");
    if (params.n <= params.b) {
        fail(ErrorCode::InvalidArgument, "certificate requires n > b");
    }
    if (!(params.tau0 > 0.0 && params.tau0 < 1.0)) {
        fail(ErrorCode::InvalidArgument, "certificate requires tau0 in (0,1)");
    }
    if (!(params.p >= 0.0 && params.p <= 1.0)) {
        fail(ErrorCode::InvalidArgument, "certificate requires p in [0,1]");
    }
    if (params.degenerate_threshold < 1) {
        fail(ErrorCode::InvalidArgument, "certificate requires K >= 1");
    }
}

LogThreshold theorem_threshold(std::int64_t n, std::int32_t r, std::int32_t b) {
    if (r < 2 || b < 1 || n <= b) {
        fail(ErrorCode::InvalidArgument, "threshold requires r >= 2, b >= 1, n > b");
    }
    LogThreshold out;
    out.log_value = ln(static_cast<double>(n)) +
                    static_cast<double>(n - b) * ln(static_cast<double>(r)) -
                    4.0 * kLn2e;
    if (const auto a = checked_pow_mul(static_cast<std::uint64_t>(n),
                                       static_cast<std::uint64_t>(r),
                                       static_cast<std::uint64_t>(n - b))) {
        out.floor_exact = exact_floor_div_16e4(*a);
    }
    return out;
}

LogThreshold vertex_degree_bound(std::int64_t n, std::int32_t r, std::int32_t b) {
    if (r < 2 || b < 1 || n < b) {
        fail(ErrorCode::InvalidArgument, "bound requires r >= 2, b >= 1, n >= b");
    }
    LogThreshold out;
    out.log_value =
        static_cast<double>(n - b) * ln(static_cast<double>(r)) - 4.0 * kLn2e;
    if (const auto a = checked_pow_mul(1, static_cast<std::uint64_t>(r),
                                       static_cast<std::uint64_t>(n - b))) {
        out.floor_exact = exact_floor_div_16e4(*a);
    }
    return out;
}

B1Tail exact_b1_tail(std::int64_t n, std::int32_t r, double p, std::int64_t K) {
    if (n < 1 || r < 2 || p < 0.0) {
        fail(ErrorCode::InvalidArgument, "exact_b1_tail requires n >= 1, r >= 2, p >= 0");
    }
    B1Tail out;
    out.is_probability = 2.0 * p <= 1.0;
    const double base = (1.0 - static_cast<double>(n)) * ln(static_cast<double>(r));
    if (K > n) {
        out.log_value = kNegInf;
        return out;
    }
    const std::int64_t k0 = std::max<std::int64_t>(K, 0);
    if (p == 0.0) {
        out.log_value = k0 == 0 ? base : kNegInf;
        return out;
    }
    const double l2p = ln(2.0 * p);
    const double dn = static_cast<double>(n);
    double sum = kNegInf;
    for (std::int64_t k = k0; k <= n; ++k) {
        const double term = log_binomial(dn, k) + static_cast<double>(k) * l2p;
        sum = log_add(sum, term);
        // stop once the remaining tail is negligible: terms decrease past the
        // mode and the next-term ratio keeps shrinking
        if (k > k0 && k < n) {
            const double next =
                log_binomial(dn, k + 1) + static_cast<double>(k + 1) * l2p;
            if (next < term && next < sum + ln(kRelStop)) break;
        }
    }
    out.log_value = base + sum;
    return out;
}

double w1_bound(const CertificateParams& params) {
    validate_params(params);
    if (params.log_delta == kNegInf) return kNegInf;
    const auto tail = exact_b1_tail(params.n, params.r, params.p,
                                    params.degenerate_threshold);
    return ln(2.0) + params.log_delta + 1.0 + tail.log_value;
}

namespace {

// Shared accumulation for w2/w3: terms
//   2 (4 Delta e)^t r^{1-n-(n-b)(t-1)} (n-K-b)^{-(t-1)} [(1-p)^{n-K-b}]
// summed from t_start. The term ratio is constant, so divergence is a single
// comparison.
SeriesBound w23_series(const CertificateParams& params, bool with_free_factor,
                       std::int64_t t_start) {
    validate_params(params);
    const std::int64_t nkb =
        params.n - params.degenerate_threshold - params.b;
    if (nkb < 1) {
        fail(ErrorCode::Precondition, "series bound requires n - K - b >= 1");
    }
    SeriesBound out;
    if (params.log_delta == kNegInf) return out; // every term vanishes

    const double lr = ln(static_cast<double>(params.r));
    const double lnb = static_cast<double>(params.n - params.b);
    const double per_t = ln(4.0) + params.log_delta + 1.0; // log(4 Delta e)
    const double ratio = per_t - lnb * lr - ln(static_cast<double>(nkb));
    if (ratio >= 0.0) {
        out.divergent = true;
        out.log_value = kPosInf;
        return out;
    }

    double free_factor = 0.0;
    if (with_free_factor) {
        if (params.p >= 1.0) {
            out.log_value = kNegInf; // (1-p)^{n-K-b} = 0
            return out;
        }
        free_factor = static_cast<double>(nkb) * std::log1p(-params.p);
    }

    double sum = kNegInf;
    for (std::int64_t t = t_start;; ++t) {
        const double term =
            ln(2.0) + static_cast<double>(t) * per_t +
            (1.0 - static_cast<double>(params.n) -
             lnb * static_cast<double>(t - 1)) * lr -
            static_cast<double>(t - 1) * ln(static_cast<double>(nkb)) +
            free_factor;
        sum = log_add(sum, term);
        if (t > t_start && term < sum + ln(kRelStop)) break;
        if (t - t_start > 10'000'000) break; // ratio < 1 converges far sooner
    }
    out.log_value = sum;
    return out;
}

} // namespace

SeriesBound w2_bound(const CertificateParams& params) {
    return w23_series(params, true, 1);
}

SeriesBound w3_bound(const CertificateParams& params) {
    const auto t_start = static_cast<std::int64_t>(
        std::ceil(ln(static_cast<double>(params.n))));
    return w23_series(params, false, std::max<std::int64_t>(1, t_start));
}

double w4_bound(const CertificateParams& params) {
    validate_params(params);
    const std::int64_t cap = std::max<std::int64_t>(1, t_cap(params.n));
    const double lr = ln(static_cast<double>(params.r));
    const double dn = static_cast<double>(params.n);
    double sum = kNegInf;
    for (std::int64_t t = 1; t <= cap; ++t) {
        const double dt = static_cast<double>(t);
        double term = ln(4.0) + dt * ln(4.0) + 2.0 * ln(dt) +
                      log_binomial(dn * dt, params.b + 1) +
                      (1.0 - dt * (dn - static_cast<double>(params.b) * dt)) * lr +
                      dt;
        if (t > 1) {
            if (params.log_delta == kNegInf) continue; // Delta^{t-1} = 0
            term += (dt - 1.0) * params.log_delta;
        }
        sum = log_add(sum, term);
    }
    return sum;
}

double w1_bound_loosened(std::int64_t n, std::int32_t r, std::int32_t b) {
    // (1 / (4 e^3)) r^{1-b} n^{-9}
    return -ln(4.0) - 3.0 +
           (1.0 - static_cast<double>(b)) * ln(static_cast<double>(r)) -
           9.0 * ln(static_cast<double>(n));
}

CertificateReport certify(const CertificateParams& params) {
    validate_params(params);
    CertificateReport report;
    report.params = params;

    const std::int64_t nkb = params.n - params.degenerate_threshold - params.b;
    report.side.tau0_in_unit_interval = params.tau0 > 0.0 && params.tau0 < 1.0;
    report.side.p_le_one = params.p <= 1.0;
    report.side.two_p_le_one = 2.0 * params.p <= 1.0;
    report.side.n_minus_k_minus_b_ge_one = nkb >= 1;
    report.side.k_plus_b_below_half_n =
        static_cast<double>(params.degenerate_threshold + params.b) <
        static_cast<double>(params.n) / 2.0;
    report.side.t_cap_ge_one = t_cap(params.n) >= 1;

    report.log_w1 = w1_bound(params);
    if (report.side.n_minus_k_minus_b_ge_one) {
        const auto s2 = w2_bound(params);
        const auto s3 = w3_bound(params);
        report.log_w2 = s2.log_value;
        report.log_w3 = s3.log_value;
        report.side.series_ratio_below_one = !s2.divergent && !s3.divergent;
    } else {
        report.log_w2 = kPosInf;
        report.log_w3 = kPosInf;
        report.side.series_ratio_below_one = false;
    }
    report.log_w4 = w4_bound(params);

    report.log_total = log_add(log_add(report.log_w1, report.log_w2),
                               log_add(report.log_w3, report.log_w4));

    const double per_bound_cap = -ln(10.0 * (static_cast<double>(params.n) + 1.0));
    const double logs[4] = {report.log_w1, report.log_w2, report.log_w3,
                            report.log_w4};
    for (int i = 0; i < 4; ++i) report.per_bound_ok[i] = logs[i] <= per_bound_cap;
    report.total_ok = report.log_total <= ln(params.tau0);
    report.verdict = report.side.all() && report.total_ok;
    return report;
}

std::optional<std::int64_t> find_min_certified_n(std::int32_t r, std::int32_t b,
                                                 std::int64_t n_cap) {
    const auto verdict_at = [&](std::int64_t n) {
        const auto params = CertificateParams::with_defaults(
            n, r, b, theorem_threshold(n, r, b).log_value);
        return certify(params).verdict;
    };
    std::int64_t lo = std::max<std::int64_t>(b + 1, 2); // certify(lo) assumed false
    if (verdict_at(lo)) return lo;
    std::int64_t hi = -1;
    for (std::int64_t n = std::max<std::int64_t>(2 * lo, 16); n <= n_cap; n *= 2) {
        if (verdict_at(n)) {
            hi = n;
            break;
        }
        lo = n;
    }
    if (hi < 0) return std::nullopt;
    while (hi - lo > 1) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        if (verdict_at(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

EdgeCountBound m_lower_bound(std::int64_t n, std::int32_t r, std::int32_t b) {
    if (r < 2 || b < 1 || n <= 2 * b) {
        fail(ErrorCode::InvalidArgument, "m_lower_bound requires n > 2b");
    }
    EdgeCountBound out;
    const double log_d =
        static_cast<double>(n - 2 * b) * ln(static_cast<double>(r)) - 4.0 * kLn2e;
    // m = ceil(d^{1/b}); taken exactly while it fits a double, otherwise the
    // ceiling and the (1 - i/m) factors of the falling factorial are far
    // below double resolution and drop out
    const double log_m_real = log_d / static_cast<double>(b);
    double log_m;
    double term2; // log C(m, b+1)
    if (log_m_real < 40.0) {
        const double m_exact = std::max(1.0, std::ceil(std::exp(log_m_real)));
        log_m = ln(m_exact);
        term2 = log_binomial(m_exact, b + 1);
    } else {
        log_m = log_m_real;
        term2 = static_cast<double>(b + 1) * log_m -
                std::lgamma(static_cast<double>(b) + 2.0);
    }
    const double term1 = log_d + log_m; // d * m
    if (term2 >= term1) {
        out.chain_positive = false;
        out.log_value = kNegInf;
        return out;
    }
    out.chain_positive = true;
    out.log_value = term1 + std::log1p(-std::exp(term2 - term1)) -
                    ln(static_cast<double>(b));
    return out;
}

std::string emit_certificate_json(const CertificateReport& report) {
    const auto num = [](double v) -> std::string {
        if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
        if (std::isnan(v)) return "\"nan\"";
        return format_g17(v);
    };
    const auto flag = [](bool v) { return v ? "true" : "false"; };
    std::ostringstream out;
    out << "{\"params\":{\"n\":" << report.params.n << ",\"r\":" << report.params.r
        << ",\"b\":" << report.params.b
        << ",\"log_delta\":" << num(report.params.log_delta)
        << ",\"tau0\":" << format_g17(report.params.tau0)
        << ",\"p\":" << format_g17(report.params.p)
        << ",\"K\":" << report.params.degenerate_threshold << "}"
        << ",\"log_w1\":" << num(report.log_w1)
        << ",\"log_w2\":" << num(report.log_w2)
        << ",\"log_w3\":" << num(report.log_w3)
        << ",\"log_w4\":" << num(report.log_w4)
        << ",\"log_total\":" << num(report.log_total) << ",\"per_bound_ok\":["
        << flag(report.per_bound_ok[0]) << ',' << flag(report.per_bound_ok[1])
        << ',' << flag(report.per_bound_ok[2]) << ',' << flag(report.per_bound_ok[3])
        << "],\"side_conditions\":{"
        << "\"tau0_in_unit_interval\":" << flag(report.side.tau0_in_unit_interval)
        << ",\"p_le_one\":" << flag(report.side.p_le_one)
        << ",\"two_p_le_one\":" << flag(report.side.two_p_le_one)
        << ",\"n_minus_k_minus_b_ge_one\":"
        << flag(report.side.n_minus_k_minus_b_ge_one)
        << ",\"k_plus_b_below_half_n\":" << flag(report.side.k_plus_b_below_half_n)
        << ",\"series_ratio_below_one\":" << flag(report.side.series_ratio_below_one)
        << ",\"t_cap_ge_one\":" << flag(report.side.t_cap_ge_one) << "}"
        << ",\"total_ok\":" << flag(report.total_ok)
        << ",\"verdict\":" << flag(report.verdict) << "}";
    return out.str();
}

} // namespace propb
