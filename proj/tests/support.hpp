#pragma once

// Shared helpers for the test suites: independent re-implementations used as
// oracles, small fixtures, and fuzz drivers. Everything here is deliberately
// written in the most literal way possible, not via the library's own
// machinery, so that the two paths stay independent.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "hypergraph.hpp"
#include "instance_gen.hpp"
#include "recolor.hpp"
#include "rng.hpp"
#include "witness.hpp"

namespace propb::testing {

// O(m^2) pairwise edge degree straight from the definition.
inline std::int64_t pairwise_max_edge_degree(const Hypergraph& h) {
    std::int64_t best = 0;
    for (std::int64_t i = 0; i < h.edge_count(); ++i) {
        std::int64_t deg = 0;
        for (std::int64_t j = 0; j < h.edge_count(); ++j) {
            if (i != j && intersection_size(h.edges[i], h.edges[j]) > 0) ++deg;
        }
        best = std::max(best, deg);
    }
    return best;
}

// Inverted-index simplicity: counts common vertices per edge pair through
// the vertex -> edges map.
inline std::int32_t inverted_index_simplicity(const Hypergraph& h) {
    std::vector<std::vector<EdgeIndex>> inc(h.vertex_count);
    for (EdgeIndex i = 0; i < h.edge_count(); ++i) {
        for (Vertex v : h.edges[i]) inc[v].push_back(i);
    }
    std::int32_t best = 0;
    std::vector<std::vector<std::int32_t>> shared(h.edge_count());
    for (auto& row : shared) row.assign(h.edge_count(), 0);
    for (Vertex v = 0; v < h.vertex_count; ++v) {
        for (std::size_t a = 0; a < inc[v].size(); ++a) {
            for (std::size_t b = a + 1; b < inc[v].size(); ++b) {
                const auto s = ++shared[inc[v][a]][inc[v][b]];
                best = std::max(best, s);
            }
        }
    }
    return h.edge_count() >= 2 ? best : 0;
}

// Exhaustive r-colorability by enumerating all r^N colorings; N small.
inline bool brute_force_colorable(const Hypergraph& h, std::int32_t r) {
    std::vector<Color> colors(h.vertex_count, 0);
    for (;;) {
        bool proper = true;
        for (const Edge& e : h.edges) {
            bool mono = true;
            for (std::size_t j = 1; j < e.size(); ++j) {
                if (colors[e[j]] != colors[e[0]]) mono = false;
            }
            if (mono) {
                proper = false;
                break;
            }
        }
        if (proper) return true;
        std::int64_t i = 0;
        while (i < h.vertex_count && colors[i] == r - 1) colors[i++] = 0;
        if (i == h.vertex_count) return false;
        ++colors[i];
    }
}

// Literal step-by-step replay of the recoloring rule on given (f, sigma):
// full rescan every step, no incremental bookkeeping.
inline std::vector<RecolorEvent> replay_events(const Hypergraph& h, std::int32_t r,
                                               double p,
                                               const std::vector<Color>& f,
                                               const std::vector<double>& sigma) {
    std::vector<Color> colors = f;
    std::vector<char> recolored(h.vertex_count, 0);
    std::vector<RecolorEvent> events;
    for (;;) {
        EdgeIndex chosen = -1;
        Vertex trigger = -1;
        for (EdgeIndex i = 0; i < h.edge_count(); ++i) {
            bool mono = true;
            for (Vertex v : h.edges[i]) {
                if (colors[v] != colors[h.edges[i][0]]) mono = false;
            }
            if (!mono) continue;
            Vertex least = -1;
            for (Vertex v : h.edges[i]) {
                if (recolored[v]) continue;
                if (least < 0 || sigma[v] < sigma[least]) least = v;
            }
            if (least < 0 || sigma[least] > p) continue;
            chosen = i;
            trigger = least;
            break;
        }
        if (chosen < 0) break;
        events.push_back({static_cast<std::int64_t>(events.size()), trigger,
                          chosen, colors[trigger],
                          static_cast<Color>((colors[trigger] + 1) % r)});
        colors[trigger] = static_cast<Color>((colors[trigger] + 1) % r);
        recolored[trigger] = 1;
    }
    return events;
}

// Checks every Trace invariant by replaying the events from f.
inline bool trace_invariants_hold(const Hypergraph& h, const Trace& t,
                                  std::string* why = nullptr) {
    const auto complain = [&](const char* msg) {
        if (why) *why = msg;
        return false;
    };
    std::set<Vertex> seen_vertices;
    std::set<EdgeIndex> seen_edges;
    std::vector<Color> colors = t.initial;
    for (const auto& e : t.events) {
        if (!seen_vertices.insert(e.vertex).second) {
            return complain("vertex recolored twice");
        }
        if (!seen_edges.insert(e.blamed_edge).second) {
            return complain("edge blamed twice");
        }
        if (t.sigma[e.vertex] > t.p) return complain("non-free vertex recolored");
        if (e.new_color != (e.old_color + 1) % t.r) {
            return complain("new color is not old+1 mod r");
        }
        if (colors[e.vertex] != e.old_color) {
            return complain("old color does not match replay");
        }
        // blamed edge must be monochromatic now, with this vertex as its
        // sigma-least non-recolored vertex
        const Edge& edge = h.edges[e.blamed_edge];
        for (Vertex v : edge) {
            if (colors[v] != colors[edge[0]]) return complain("blamed edge not monochromatic");
        }
        Vertex least = -1;
        for (Vertex v : edge) {
            const bool recolored_before = seen_vertices.count(v) > 0 && v != e.vertex;
            if (recolored_before) continue;
            if (least < 0 || t.sigma[v] < t.sigma[least]) least = v;
        }
        if (least != e.vertex) return complain("recolored vertex is not the least-weight trigger");
        colors[e.vertex] = e.new_color;
    }
    if (colors != t.final) return complain("replay does not reach final coloring");
    const auto check = is_proper(h, t.final);
    if (t.success != check.proper) return complain("outcome disagrees with is_proper");
    for (EdgeIndex i : t.failure_edges) {
        const Edge& edge = h.edges[i];
        for (Vertex v : edge) {
            if (t.final[v] != t.final[edge[0]]) return complain("failure edge not monochromatic");
        }
    }
    return true;
}

// ---- B1-style event on a single edge ---------------------------------------
//
// Event: some alpha exists with every vertex colored alpha or alpha-1,
// every alpha-1 vertex free, and at least K free vertices. The exact value
// enumerates compositions of n over the 2r (color, free) cells; the sampler
// draws (f, sigma) directly.

inline bool b1_event_holds(std::int32_t r, std::int64_t K,
                           const std::vector<std::int64_t>& nonfree,
                           const std::vector<std::int64_t>& free_count) {
    std::int64_t total_free = 0;
    for (auto c : free_count) total_free += c;
    if (total_free < K) return false;
    for (std::int32_t a = 0; a < r; ++a) {
        const std::int32_t am = static_cast<std::int32_t>((a - 1 + r) % r);
        bool ok = true;
        for (std::int32_t c = 0; c < r && ok; ++c) {
            if (c == a || c == am) continue;
            if (nonfree[c] != 0 || free_count[c] != 0) ok = false;
        }
        if (ok && (am == a || nonfree[am] == 0)) return true;
    }
    return false;
}

inline double b1_event_exact(std::int32_t n, std::int32_t r, double p,
                             std::int64_t K) {
    std::vector<std::int64_t> cells(2 * r, 0);
    double total = 0.0;
    const auto cell_logp = [&](std::int64_t count, double prob) -> double {
        if (count == 0) return 0.0;
        if (prob <= 0.0) return -std::numeric_limits<double>::infinity();
        return static_cast<double>(count) * std::log(prob);
    };
    const std::function<void(std::int32_t, std::int64_t)> rec =
        [&](std::int32_t cell, std::int64_t left) {
            if (cell == 2 * r - 1) {
                cells[cell] = left;
                std::vector<std::int64_t> nonfree(r), freec(r);
                for (std::int32_t c = 0; c < r; ++c) {
                    nonfree[c] = cells[2 * c];
                    freec[c] = cells[2 * c + 1];
                }
                if (b1_event_holds(r, K, nonfree, freec)) {
                    double lp = std::lgamma(n + 1.0);
                    for (std::int32_t c = 0; c < r; ++c) {
                        lp += cell_logp(nonfree[c], (1.0 - p) / r) +
                              cell_logp(freec[c], p / r) -
                              std::lgamma(static_cast<double>(nonfree[c]) + 1.0) -
                              std::lgamma(static_cast<double>(freec[c]) + 1.0);
                    }
                    if (lp > -std::numeric_limits<double>::infinity()) {
                        total += std::exp(lp);
                    }
                }
                return;
            }
            for (std::int64_t x = 0; x <= left; ++x) {
                cells[cell] = x;
                rec(cell + 1, left - x);
            }
        };
    rec(0, n);
    return std::min(1.0, std::max(0.0, total)); // guard accumulation error
}

inline double b1_event_mc(std::int32_t n, std::int32_t r, double p, std::int64_t K,
                          std::uint64_t samples, std::uint64_t seed) {
    Rng rng(seed);
    std::uint64_t hits = 0;
    std::vector<std::int64_t> nonfree(r), freec(r);
    for (std::uint64_t s = 0; s < samples; ++s) {
        std::fill(nonfree.begin(), nonfree.end(), 0);
        std::fill(freec.begin(), freec.end(), 0);
        for (std::int32_t v = 0; v < n; ++v) {
            const auto color = static_cast<std::int32_t>(rng.next_below(r));
            if (rng.next_unit() <= p) {
                ++freec[color];
            } else {
                ++nonfree[color];
            }
        }
        if (b1_event_holds(r, K, nonfree, freec)) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(samples);
}

// ---- recoloring-soundness fuzz campaign ------------------------------------
//
// Shared by the witness unit tests (small counts) and the acceptance suite
// (10^4 runs): generates b-simple instances across n in {5..10}, b in {1,2},
// r in {2,3} and a spread of p values, runs the recoloring engine, checks
// every trace invariant, and pushes every failed trace through the full
// witness pipeline.

struct WitnessFuzzOutcome {
    std::int64_t runs = 0;
    std::int64_t failed_runs = 0;
    std::int64_t trees = 0;
    std::int64_t multi_node_trees = 0;
    std::int64_t degenerate_trees = 0;
    std::int64_t reconstruction_checked = 0;
    std::int64_t bdisjoint_trees = 0;
    std::int64_t rsets_checked = 0;
    std::int64_t max_tree_size = 0;
    std::int64_t violations = 0;
    std::string first_violation;

    void violate(const std::string& what) {
        ++violations;
        if (first_violation.empty()) first_violation = what;
    }
};

inline WitnessFuzzOutcome fuzz_witness_campaign(std::int64_t target_runs,
                                                std::uint64_t master_seed) {
    WitnessFuzzOutcome out;
    static constexpr double kPs[] = {0.0, 0.1, 0.2, 0.3, 0.45, 1.0};
    const auto choose = [](double a, std::int32_t k) {
        double c = 1.0;
        for (std::int32_t j = 0; j < k; ++j) c *= (a - j) / (j + 1);
        return c;
    };
    for (std::int64_t i = 0; i < target_runs; ++i) {
        Rng rng(derive_seed(master_seed, 0xf122, static_cast<std::uint64_t>(i)));
        GenSpec spec;
        std::int32_t r;
        double p;
        if (i % 3 == 2) {
            // dense stratum: small n, b = 2, edge count near the packing
            // bound, p in the band where failures carry deep blame trees
            spec.uniformity = 5 + static_cast<std::int32_t>((i / 3) % 2);
            spec.max_intersection = 2;
            spec.vertex_count = 3 * spec.uniformity + 2;
            const double pack =
                choose(static_cast<double>(spec.vertex_count), 3) /
                choose(static_cast<double>(spec.uniformity), 3);
            spec.edge_count = static_cast<std::int64_t>(0.2 * pack) +
                              static_cast<std::int64_t>(
                                  rng.next_below(static_cast<std::uint64_t>(
                                      std::max(1.0, 0.15 * pack))));
            r = 2;
            p = 0.1 + 0.1 * static_cast<double>((i / 6) % 3);
        } else {
            // full matrix stratum: n in {5..10}, b in {1,2}, r in {2,3}
            spec.uniformity = 5 + static_cast<std::int32_t>(i % 6);
            spec.max_intersection = 1 + static_cast<std::int32_t>((i / 6) % 2);
            spec.vertex_count = spec.uniformity + 2 +
                                static_cast<std::int64_t>(rng.next_below(
                                    3 * static_cast<std::uint64_t>(spec.uniformity)));
            const double pack =
                choose(static_cast<double>(spec.vertex_count),
                       spec.max_intersection + 1) /
                choose(static_cast<double>(spec.uniformity),
                       spec.max_intersection + 1);
            const auto m_cap = static_cast<std::uint64_t>(std::max(
                2.0, std::min(4.0 * static_cast<double>(spec.vertex_count),
                              0.5 * pack)));
            spec.edge_count = 2 + static_cast<std::int64_t>(rng.next_below(m_cap));
            r = (i / 12) % 4 == 3 ? 3 : 2;
            p = kPs[rng.next_below(6)];
        }
        spec.seed = rng.next_u64();
        spec.max_rejections = 10'000;
        Hypergraph h;
        for (;;) {
            try {
                h = gen_bsimple(spec);
                break;
            } catch (const Error&) {
                if (spec.edge_count <= 1) break;
                spec.edge_count /= 2; // too dense, thin out
            }
        }
        if (h.edge_count() == 0 && spec.edge_count > 0) continue;
        const Trace trace = run(h, r, p, rng.next_u64());
        ++out.runs;

        std::string why;
        if (!trace_invariants_hold(h, trace, &why)) {
            out.violate("trace invariant: " + why);
            continue;
        }
        if (trace.success) continue;

        ++out.failed_runs;
        const auto threshold = default_degenerate_threshold(spec.uniformity);
        std::vector<WitnessReport> reports;
        try {
            reports = analyze_failure(h, trace, spec.max_intersection, threshold);
        } catch (const Error& e) {
            out.violate(std::string("analyze_failure threw: ") + e.what());
            continue;
        }
        for (const auto& rep : reports) {
            ++out.trees;
            out.max_tree_size = std::max(out.max_tree_size, rep.tree.size());
            if (rep.tree.size() > 1) ++out.multi_node_trees;
            if (rep.proper_tree.size() > rep.tree.size()) {
                out.violate("coinciding-label removal grew the tree");
            }
            const auto again = remove_coinciding(rep.proper_tree);
            if (again.size() != rep.proper_tree.size()) {
                out.violate("coinciding-label removal is not idempotent");
            }
            if (rep.checks.degenerate_present) ++out.degenerate_trees;
            if (rep.checks.reconstruction_checked) ++out.reconstruction_checked;
            if (rep.checks.rsets_checked) ++out.rsets_checked;
            if (!rep.checks.all_ok()) {
                out.violate("witness check: " + rep.checks.violation);
            }
            if (rep.classification.verdict == DisjointnessVerdict::BDisjoint) {
                ++out.bdisjoint_trees;
            }
        }
    }
    return out;
}

} // namespace propb::testing
