#include "hypergraph.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "errors.hpp"

namespace propb {

void validate(const Hypergraph& h) {
    if (h.vertex_count < 0) {
        fail(ErrorCode::InvalidHypergraph, "vertex_count must be nonnegative");
    }
    if (h.uniformity <= 0) {
        fail(ErrorCode::InvalidHypergraph, "uniformity must be positive");
    }
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
        const Edge& e = h.edges[i];
        if (static_cast<std::int32_t>(e.size()) != h.uniformity) {
            fail(ErrorCode::InvalidHypergraph,
                 "edge " + std::to_string(i) + " has size " +
                     std::to_string(e.size()) + ", expected " +
                     std::to_string(h.uniformity));
        }
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] < 0 || e[j] >= h.vertex_count) {
                fail(ErrorCode::InvalidHypergraph,
                     "edge " + std::to_string(i) + " has out-of-range vertex " +
                         std::to_string(e[j]));
            }
            if (j > 0 && e[j] == e[j - 1]) {
                fail(ErrorCode::InvalidHypergraph,
                     "edge " + std::to_string(i) + " has duplicate vertex " +
                         std::to_string(e[j]));
            }
            if (j > 0 && e[j] < e[j - 1]) {
                fail(ErrorCode::InvalidHypergraph,
                     "edge " + std::to_string(i) + " is not sorted ascending");
            }
        }
    }
    std::map<Edge, std::size_t> seen;
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
        auto [it, inserted] = seen.emplace(h.edges[i], i);
        if (!inserted) {
            fail(ErrorCode::InvalidHypergraph,
                 "duplicate edge: indices " + std::to_string(it->second) +
                     " and " + std::to_string(i));
        }
    }
}

std::int32_t intersection_size(const Edge& a, const Edge& b) {
    std::int32_t count = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            ++i;
        } else if (a[i] > b[j]) {
            ++j;
        } else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

SimplicityProfile simplicity(const Hypergraph& h) {
    SimplicityProfile profile;
    const std::int64_t m = h.edge_count();
    for (std::int64_t i = 0; i < m; ++i) {
        for (std::int64_t j = i + 1; j < m; ++j) {
            const std::int32_t s = intersection_size(h.edges[i], h.edges[j]);
            if (!profile.witness_pair || s > profile.max_pair_intersection) {
                profile.max_pair_intersection = s;
                profile.witness_pair = {i, j};
            }
        }
    }
    return profile;
}

std::vector<std::vector<EdgeIndex>> incidence_lists(const Hypergraph& h) {
    std::vector<std::vector<EdgeIndex>> inc(h.vertex_count);
    for (std::int64_t i = 0; i < h.edge_count(); ++i) {
        for (Vertex v : h.edges[i]) inc[v].push_back(i);
    }
    return inc;
}

std::int64_t max_edge_degree(const Hypergraph& h) {
    const std::int64_t m = h.edge_count();
    if (m <= 1) return 0;
    const auto inc = incidence_lists(h);
    std::vector<EdgeIndex> stamp(m, -1);
    std::int64_t best = 0;
    for (std::int64_t i = 0; i < m; ++i) {
        std::int64_t deg = 0;
        for (Vertex v : h.edges[i]) {
            for (EdgeIndex j : inc[v]) {
                if (j != i && stamp[j] != i) {
                    stamp[j] = i;
                    ++deg;
                }
            }
        }
        best = std::max(best, deg);
    }
    return best;
}

std::vector<std::int64_t> vertex_degrees(const Hypergraph& h) {
    std::vector<std::int64_t> deg(h.vertex_count, 0);
    for (const Edge& e : h.edges) {
        for (Vertex v : e) ++deg[v];
    }
    return deg;
}

std::int64_t max_vertex_degree(const Hypergraph& h) {
    std::int64_t best = 0;
    for (std::int64_t d : vertex_degrees(h)) best = std::max(best, d);
    return best;
}

ProperCheck is_proper(const Hypergraph& h, const std::vector<Color>& colors) {
    if (static_cast<std::int64_t>(colors.size()) != h.vertex_count) {
        fail(ErrorCode::InvalidArgument,
             "coloring has " + std::to_string(colors.size()) +
                 " entries, hypergraph has " + std::to_string(h.vertex_count) +
                 " vertices");
    }
    for (std::int64_t i = 0; i < h.edge_count(); ++i) {
        const Edge& e = h.edges[i];
        bool mono = true;
        for (std::size_t j = 1; j < e.size(); ++j) {
            if (colors[e[j]] != colors[e[0]]) {
                mono = false;
                break;
            }
        }
        if (mono && !e.empty()) return {false, i};
    }
    return {true, std::nullopt};
}

Hypergraph trim(const Hypergraph& h) {
    if (h.uniformity < 2) {
        fail(ErrorCode::Precondition, "trim requires uniformity >= 2");
    }
    const auto deg = vertex_degrees(h);
    Hypergraph out;
    out.vertex_count = h.vertex_count;
    out.uniformity = h.uniformity - 1;
    out.edges.reserve(h.edges.size());
    std::map<Edge, std::size_t> seen;
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
        const Edge& e = h.edges[i];
        // max-degree vertex of the edge, smallest id on ties (edges are
        // ascending, so the first maximum wins)
        std::size_t drop = 0;
        for (std::size_t j = 1; j < e.size(); ++j) {
            if (deg[e[j]] > deg[e[drop]]) drop = j;
        }
        Edge trimmed;
        trimmed.reserve(e.size() - 1);
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (j != drop) trimmed.push_back(e[j]);
        }
        auto [it, inserted] = seen.emplace(trimmed, i);
        if (!inserted) {
            fail(ErrorCode::TrimCollision,
                 "trim collision: edges " + std::to_string(it->second) +
                     " and " + std::to_string(i) + " coincide after trimming");
        }
        out.edges.push_back(std::move(trimmed));
    }
    return out;
}

Hypergraph trim_k(const Hypergraph& h, std::int32_t k) {
    if (k < 0) fail(ErrorCode::InvalidArgument, "trim_k requires k >= 0");
    if (k >= h.uniformity) {
        fail(ErrorCode::Precondition, "trim_k requires uniformity > k");
    }
    Hypergraph current = h;
    for (std::int32_t i = 0; i < k; ++i) current = trim(current);
    return current;
}

} // namespace propb
