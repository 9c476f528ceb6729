#include "oracle.hpp"

#include <algorithm>
#include <numeric>

#include "errors.hpp"

namespace propb {

namespace {

struct Search {
    const Hypergraph& h;
    std::int32_t r;
    std::uint64_t budget;
    std::vector<std::vector<EdgeIndex>> inc;
    std::vector<Vertex> order;      // assignment order (descending degree)
    std::vector<Color> color;       // -1 = unassigned
    std::uint64_t nodes = 0;

    explicit Search(const Hypergraph& hg, std::int32_t rr, std::uint64_t b)
        : h(hg), r(rr), budget(b), inc(incidence_lists(hg)),
          color(hg.vertex_count, -1) {
        const auto deg = vertex_degrees(h);
        order.resize(h.vertex_count);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b2) {
            return deg[a] > deg[b2];
        });
    }

    bool consistent(Vertex v) const {
        for (EdgeIndex i : inc[v]) {
            bool mono = true;
            for (Vertex u : h.edges[i]) {
                if (color[u] != color[v]) {
                    mono = false;
                    break;
                }
            }
            if (mono) return false;
        }
        return true;
    }

    bool solve(std::size_t idx) {
        if (idx == order.size()) return true;
        const Vertex v = order[idx];
        if (color[v] >= 0) return solve(idx + 1); // pre-assigned (symmetry break)
        for (Color c = 0; c < r; ++c) {
            if (++nodes > budget) {
                fail(ErrorCode::BudgetExceeded,
                     "oracle exceeded the node budget");
            }
            color[v] = c;
            if (consistent(v) && solve(idx + 1)) return true;
            color[v] = -1;
        }
        return false;
    }
};

} // namespace

OracleResult is_r_colorable(const Hypergraph& h, std::int32_t r,
                            const OracleOptions& opts) {
    if (r < 1) fail(ErrorCode::InvalidArgument, "is_r_colorable requires r >= 1");
    OracleResult result;
    Search search(h, r, opts.node_budget);
    if (opts.symmetry_break && h.vertex_count >= 1 && r >= 2) {
        search.color[0] = 0;
        if (!search.consistent(0)) { // single self-edge of size 1
            result.colorable = false;
            result.nodes_explored = search.nodes;
            return result;
        }
    }
    result.colorable = search.solve(0);
    result.nodes_explored = search.nodes;
    if (result.colorable) {
        // unassigned vertices (possible when symmetry breaking pre-assigns
        // nothing else) default to color 0
        Coloring witness;
        witness.color_count = r;
        witness.colors.resize(h.vertex_count);
        for (Vertex v = 0; v < h.vertex_count; ++v) {
            witness.colors[v] = std::max<Color>(search.color[v], 0);
        }
        result.witness = std::move(witness);
    }
    return result;
}

std::int32_t chromatic_number(const Hypergraph& h, const OracleOptions& opts,
                              std::uint64_t* nodes_out) {
    if (nodes_out) *nodes_out = 0;
    if (h.edge_count() == 0) return 1;
    for (const Edge& e : h.edges) {
        if (e.size() < 2) {
            fail(ErrorCode::Uncolorable,
                 "an edge of size 1 admits no proper coloring");
        }
    }
    for (std::int32_t r = 1;; ++r) {
        const auto result = is_r_colorable(h, r, opts);
        if (nodes_out) *nodes_out += result.nodes_explored;
        if (result.colorable) return r;
        if (r > h.vertex_count) {
            fail(ErrorCode::StructuralViolation,
                 "chromatic number above vertex count"); // unreachable for n >= 2
        }
    }
}

} // namespace propb
