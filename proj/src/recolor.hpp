#pragma once

#include <cstdint>
#include <vector>

#include "hypergraph.hpp"

namespace propb {

struct RecolorEvent {
    std::int64_t step = 0;
    Vertex vertex = 0;
    EdgeIndex blamed_edge = 0;
    Color old_color = 0;
    Color new_color = 0; // always (old_color + 1) mod r
};

// One full run of the recoloring process, replayable from (f, sigma).
struct Trace {
    std::int32_t r = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    std::vector<Color> initial;      // f
    std::vector<double> sigma;       // vertex weights
    std::vector<RecolorEvent> events;
    std::vector<Color> final;
    bool success = false;
    std::vector<EdgeIndex> failure_edges; // monochromatic in final, ascending
};

// Which monochromatic edge fires when several qualify.
enum class SelectionRule {
    LowestEdgeIndex,   // default: reproducible canonical order
    LeastTriggerWeight // experiment variant: smallest trigger sigma first
};

// min(1, 5 ln n / n); requires n >= 2.
double default_p(std::int32_t n);

// Samples f uniformly over {0..r-1}^N and sigma i.i.d. uniform [0,1), then
// repeatedly recolors the least-weight non-recolored vertex of a qualifying
// monochromatic edge (+1 mod r) until no edge qualifies. Deterministic for a
// fixed seed. Weight ties break by vertex id.
Trace run(const Hypergraph& h, std::int32_t r, double p, std::uint64_t seed,
          SelectionRule rule = SelectionRule::LowestEdgeIndex);

struct RestartResult {
    Trace trace; // first successful trace, or the last attempt
    bool success = false;
    std::uint64_t attempts = 0;
};

// Attempt 0 uses `seed` itself (so max_restarts=1 is exactly run); later
// attempts use seeds derived from (seed, restart tag, attempt).
RestartResult run_with_restarts(const Hypergraph& h, std::int32_t r, double p,
                                std::uint64_t seed, std::uint64_t max_restarts,
                                SelectionRule rule = SelectionRule::LowestEdgeIndex);

struct MonteCarloStats {
    std::uint64_t successes = 0;
    std::uint64_t failures = 0;
    std::uint64_t total_events = 0;
    double mean_events = 0.0;
};

// Aggregates independent trials; trial i runs with derive_seed(seed, trial
// tag, i), so totals are identical for any thread count.
MonteCarloStats monte_carlo(const Hypergraph& h, std::int32_t r, double p,
                            std::uint64_t trials, std::uint64_t seed,
                            std::int32_t threads = 1,
                            SelectionRule rule = SelectionRule::LowestEdgeIndex);

} // namespace propb
