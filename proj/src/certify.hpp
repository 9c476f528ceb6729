#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "logdomain.hpp"

namespace propb {

// Parameters of the local-polynomial certificate. delta is carried in log
// domain (kNegInf encodes delta = 0); tau0/p/K fall back to their canonical
// defaults 1/(n+1), min(1, 5 ln n / n), ceil(20 e ln n) when unset.
struct CertificateParams {
    std::int64_t n = 0;
    std::int32_t r = 0;
    std::int32_t b = 0;
    double log_delta = kNegInf;
    double tau0 = 0.0;
    double p = 0.0;
    std::int64_t degenerate_threshold = 0; // K

    static CertificateParams with_defaults(std::int64_t n, std::int32_t r,
                                           std::int32_t b, double log_delta);
};

void validate_params(const CertificateParams& params);

struct LogThreshold {
    double log_value = kNegInf;
    std::optional<std::uint64_t> floor_exact; // rigorous floor, when it fits
};

// n r^{n-b} / (2e)^4, the edge-degree threshold of the colorability theorem.
LogThreshold theorem_threshold(std::int64_t n, std::int32_t r, std::int32_t b);

// r^{n-b} / (2e)^4, the vertex-degree corollary bound.
LogThreshold vertex_degree_bound(std::int64_t n, std::int32_t r, std::int32_t b);

struct B1Tail {
    double log_value = kNegInf;
    bool is_probability = true; // false when 2p > 1
};

// r^{1-n} sum_{k=K..n} C(n,k) (2p)^k, summed with log-add; exact up to the
// documented 1e-30 relative truncation of a decreasing tail.
B1Tail exact_b1_tail(std::int64_t n, std::int32_t r, double p, std::int64_t K);

struct SeriesBound {
    double log_value = kNegInf;
    bool divergent = false; // term ratio >= 1; log_value = +inf then
};

// w^1..w^4 at z = 1/(1-tau0), each in log domain.
double w1_bound(const CertificateParams& params);
SeriesBound w2_bound(const CertificateParams& params);
SeriesBound w3_bound(const CertificateParams& params);
double w4_bound(const CertificateParams& params);

// The final lines of the published chains (valid at delta <= threshold and
// large n); exposed for cross-checks against the sharper forms above.
double w1_bound_loosened(std::int64_t n, std::int32_t r, std::int32_t b);

struct SideConditions {
    bool tau0_in_unit_interval = false;
    bool p_le_one = false;
    bool two_p_le_one = false;          // B1 tail is a probability
    bool n_minus_k_minus_b_ge_one = false;
    bool k_plus_b_below_half_n = false;
    bool series_ratio_below_one = false;
    bool t_cap_ge_one = false;

    bool all() const {
        return tau0_in_unit_interval && p_le_one && two_p_le_one &&
               n_minus_k_minus_b_ge_one && k_plus_b_below_half_n &&
               series_ratio_below_one && t_cap_ge_one;
    }
};

struct CertificateReport {
    CertificateParams params;
    double log_w1 = kNegInf;
    double log_w2 = kNegInf;
    double log_w3 = kNegInf;
    double log_w4 = kNegInf;
    double log_total = kNegInf;
    bool per_bound_ok[4] = {false, false, false, false}; // each <= 1/(10(n+1))
    bool total_ok = false;                               // sum <= tau0
    SideConditions side;
    bool verdict = false; // side.all() && total_ok
};

CertificateReport certify(const CertificateParams& params);

// Least n with a true verdict at delta = theorem_threshold(n, r, b), located
// by doubling + bisection; nullopt if none exists below n_cap.
std::optional<std::int64_t> find_min_certified_n(std::int32_t r, std::int32_t b,
                                                 std::int64_t n_cap = (1LL << 42));

struct EdgeCountBound {
    double log_value = kNegInf;
    bool chain_positive = false;
};

// Lower bound on the number of edges of a non-r-colorable b-simple instance,
// evaluated along the trimming chain: d = r^{n-2b}/(2e)^4, m = ceil(d^{1/b}),
// bound = (d m - C(m, b+1)) / b. Requires n > 2b.
EdgeCountBound m_lower_bound(std::int64_t n, std::int32_t r, std::int32_t b);

// Report serialization: log values as JSON numbers at 17 significant digits,
// non-finite ones as the strings "inf"/"-inf".
std::string emit_certificate_json(const CertificateReport& report);

} // namespace propb
