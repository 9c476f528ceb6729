#include "recolor.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <thread>

#include "errors.hpp"
#include "rng.hpp"

namespace propb {

double default_p(std::int32_t n) {
    if (n < 2) fail(ErrorCode::InvalidArgument, "default_p requires n >= 2");
    return std::min(1.0, 5.0 * std::log(static_cast<double>(n)) / n);
}

namespace {

bool edge_monochromatic(const Edge& e, const std::vector<Color>& colors) {
    for (std::size_t j = 1; j < e.size(); ++j) {
        if (colors[e[j]] != colors[e[0]]) return false;
    }
    return true;
}

// Least-sigma non-recolored vertex of e, ties by vertex id; -1 if all
// vertices are recolored.
Vertex trigger_vertex(const Edge& e, const std::vector<double>& sigma,
                      const std::vector<char>& recolored) {
    Vertex best = -1;
    for (Vertex v : e) {
        if (recolored[v]) continue;
        if (best < 0 || sigma[v] < sigma[best] ||
            (sigma[v] == sigma[best] && v < best)) {
            best = v;
        }
    }
    return best;
}

} // namespace

Trace run(const Hypergraph& h, std::int32_t r, double p, std::uint64_t seed,
          SelectionRule rule) {
    if (r < 2) fail(ErrorCode::InvalidArgument, "run requires r >= 2");
    if (!(p >= 0.0 && p <= 1.0)) {
        fail(ErrorCode::InvalidArgument, "run requires p in [0,1]");
    }

    Trace t;
    t.r = r;
    t.p = p;
    t.seed = seed;

    Rng rng(seed);
    t.initial.resize(h.vertex_count);
    for (auto& c : t.initial) c = static_cast<Color>(rng.next_below(r));
    t.sigma.resize(h.vertex_count);
    for (auto& s : t.sigma) s = rng.next_unit();

    std::vector<Color> colors = t.initial;
    std::vector<char> recolored(h.vertex_count, 0);
    const auto inc = incidence_lists(h);

    std::set<EdgeIndex> mono;
    for (EdgeIndex i = 0; i < h.edge_count(); ++i) {
        if (edge_monochromatic(h.edges[i], colors)) mono.insert(i);
    }

    std::int64_t step = 0;
    for (;;) {
        EdgeIndex chosen = -1;
        Vertex chosen_v = -1;
        for (EdgeIndex i : mono) {
            const Vertex v = trigger_vertex(h.edges[i], t.sigma, recolored);
            if (v < 0 || t.sigma[v] > p) continue;
            if (rule == SelectionRule::LowestEdgeIndex) {
                chosen = i;
                chosen_v = v;
                break;
            }
            if (chosen < 0 || t.sigma[v] < t.sigma[chosen_v] ||
                (t.sigma[v] == t.sigma[chosen_v] && i < chosen)) {
                chosen = i;
                chosen_v = v;
            }
        }
        if (chosen < 0) break;

        const Color old_color = colors[chosen_v];
        const Color new_color = static_cast<Color>((old_color + 1) % r);
        t.events.push_back({step++, chosen_v, chosen, old_color, new_color});
        colors[chosen_v] = new_color;
        recolored[chosen_v] = 1;
        for (EdgeIndex j : inc[chosen_v]) {
            if (edge_monochromatic(h.edges[j], colors)) {
                mono.insert(j);
            } else {
                mono.erase(j);
            }
        }
    }

    t.final = std::move(colors);
    t.failure_edges.assign(mono.begin(), mono.end());
    t.success = t.failure_edges.empty();
    return t;
}

RestartResult run_with_restarts(const Hypergraph& h, std::int32_t r, double p,
                                std::uint64_t seed, std::uint64_t max_restarts,
                                SelectionRule rule) {
    if (max_restarts < 1) {
        fail(ErrorCode::InvalidArgument, "max_restarts must be >= 1");
    }
    RestartResult result;
    for (std::uint64_t attempt = 0; attempt < max_restarts; ++attempt) {
        const std::uint64_t s =
            attempt == 0 ? seed : derive_seed(seed, stream::kRestart, attempt);
        result.trace = run(h, r, p, s, rule);
        result.attempts = attempt + 1;
        if (result.trace.success) {
            result.success = true;
            return result;
        }
    }
    result.success = false;
    return result;
}

MonteCarloStats monte_carlo(const Hypergraph& h, std::int32_t r, double p,
                            std::uint64_t trials, std::uint64_t seed,
                            std::int32_t threads, SelectionRule rule) {
    if (trials < 1) fail(ErrorCode::InvalidArgument, "trials must be >= 1");
    if (threads < 1) threads = 1;

    const auto worker = [&](std::uint64_t begin, std::uint64_t end,
                            MonteCarloStats& out) {
        for (std::uint64_t i = begin; i < end; ++i) {
            const Trace t = run(h, r, p, derive_seed(seed, stream::kTrial, i), rule);
            if (t.success) {
                ++out.successes;
            } else {
                ++out.failures;
            }
            out.total_events += t.events.size();
        }
    };

    MonteCarloStats stats;
    if (threads == 1 || trials < 2) {
        worker(0, trials, stats);
    } else {
        const auto nthreads =
            static_cast<std::uint64_t>(std::min<std::uint64_t>(threads, trials));
        std::vector<MonteCarloStats> partial(nthreads);
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        const std::uint64_t chunk = (trials + nthreads - 1) / nthreads;
        for (std::uint64_t k = 0; k < nthreads; ++k) {
            const std::uint64_t begin = k * chunk;
            const std::uint64_t end = std::min(trials, begin + chunk);
            pool.emplace_back(worker, begin, end, std::ref(partial[k]));
        }
        for (auto& th : pool) th.join();
        for (const auto& s : partial) {
            stats.successes += s.successes;
            stats.failures += s.failures;
            stats.total_events += s.total_events;
        }
    }
    stats.mean_events =
        static_cast<double>(stats.total_events) / static_cast<double>(trials);
    return stats;
}

} // namespace propb
