#pragma once

#include <cstdint>

#include "hypergraph.hpp"

namespace propb {

struct GenSpec {
    std::int32_t uniformity = 3;        // n
    std::int64_t vertex_count = 0;      // N
    std::int64_t edge_count = 0;        // m
    std::int32_t max_intersection = 1;  // b
    std::uint64_t seed = 0;
    std::uint64_t max_rejections = 1'000'000;
};

// Rejection sampling: proposes uniform n-subsets and accepts one iff it
// shares at most b vertices with every accepted edge. Deterministic for a
// fixed seed; throws Infeasible after max_rejections consecutive rejections.
Hypergraph gen_bsimple(const GenSpec& spec);

// All C(N, n) n-subsets as edges; refuses more than 10^6 edges.
Hypergraph complete(std::int32_t n, std::int64_t vertex_count);

// The 7-point, 7-line projective plane of order 2.
Hypergraph fano();

} // namespace propb
