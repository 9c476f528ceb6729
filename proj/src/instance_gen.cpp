#include "instance_gen.hpp"

#include <string>

#include "errors.hpp"
#include "rng.hpp"

namespace propb {

Hypergraph gen_bsimple(const GenSpec& spec) {
    if (spec.uniformity < 1 || spec.uniformity > spec.vertex_count) {
        fail(ErrorCode::InvalidArgument, "gen_bsimple requires 1 <= n <= N");
    }
    if (spec.max_intersection < 0 || spec.max_intersection > spec.uniformity - 1) {
        fail(ErrorCode::InvalidArgument, "gen_bsimple requires 0 <= b <= n-1");
    }
    if (spec.edge_count < 0) {
        fail(ErrorCode::InvalidArgument, "gen_bsimple requires m >= 0");
    }

    Hypergraph h;
    h.vertex_count = spec.vertex_count;
    h.uniformity = spec.uniformity;

    // Greedy acceptance can paint itself into a corner on tight specs (no
    // feasible next edge even though the target is reachable), so a long
    // stall discards the partial edge set and keeps drawing from the same
    // stream. Only the total rejection budget ends the search.
    const std::uint64_t stall_window =
        std::max<std::uint64_t>(1000, spec.max_rejections / 100);

    Rng rng(spec.seed);
    std::uint64_t rejections_total = 0;
    std::uint64_t stall = 0;
    while (h.edge_count() < spec.edge_count) {
        Edge candidate = rng.sample_subset(
            static_cast<std::uint64_t>(spec.vertex_count),
            static_cast<std::size_t>(spec.uniformity));
        bool ok = true;
        for (const Edge& e : h.edges) {
            if (intersection_size(candidate, e) > spec.max_intersection) {
                ok = false;
                break;
            }
        }
        if (ok) {
            h.edges.push_back(std::move(candidate));
            stall = 0;
            continue;
        }
        if (++rejections_total >= spec.max_rejections) {
            fail(ErrorCode::Infeasible,
                 "rejection budget (" + std::to_string(spec.max_rejections) +
                     ") exhausted with " + std::to_string(h.edge_count()) + "/" +
                     std::to_string(spec.edge_count) + " edges placed");
        }
        if (++stall >= stall_window) {
            h.edges.clear();
            stall = 0;
        }
    }
    return h;
}

Hypergraph complete(std::int32_t n, std::int64_t vertex_count) {
    if (n < 1 || n > vertex_count) {
        fail(ErrorCode::InvalidArgument, "complete requires 1 <= n <= N");
    }
    // C(N, n) with an early bail-out above the guard
    constexpr std::int64_t kMaxEdges = 1'000'000;
    double count = 1.0;
    for (std::int32_t i = 0; i < n; ++i) {
        count *= static_cast<double>(vertex_count - i) / (i + 1);
        if (count > 2.0 * kMaxEdges) break;
    }
    if (count > static_cast<double>(kMaxEdges)) {
        fail(ErrorCode::LimitExceeded, "complete hypergraph would exceed 10^6 edges");
    }

    Hypergraph h;
    h.vertex_count = vertex_count;
    h.uniformity = n;
    Edge cur(n);
    for (std::int32_t i = 0; i < n; ++i) cur[i] = i;
    for (;;) {
        h.edges.push_back(cur);
        std::int32_t i = n - 1;
        while (i >= 0 && cur[i] == vertex_count - n + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (std::int32_t j = i + 1; j < n; ++j) cur[j] = cur[j - 1] + 1;
    }
    return h;
}

Hypergraph fano() {
    Hypergraph h;
    h.vertex_count = 7;
    h.uniformity = 3;
    h.edges = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5},
               {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
    return h;
}

} // namespace propb
