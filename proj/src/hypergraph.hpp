#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace propb {

using Vertex = std::int32_t;
using EdgeIndex = std::int64_t;
using Color = std::int32_t;

// Edge = ascending sequence of distinct vertex ids (canonical form).
using Edge = std::vector<Vertex>;

// n-uniform hypergraph over vertex ids [0, vertex_count). Immutable by
// convention after construction; all operations below are pure.
struct Hypergraph {
    std::int64_t vertex_count = 0;
    std::int32_t uniformity = 0;
    std::vector<Edge> edges;

    std::int64_t edge_count() const { return static_cast<std::int64_t>(edges.size()); }
};

struct SimplicityProfile {
    std::int32_t max_pair_intersection = 0; // b-hat
    std::optional<std::pair<EdgeIndex, EdgeIndex>> witness_pair;
};

struct Coloring {
    std::vector<Color> colors; // one per vertex
    std::int32_t color_count = 0;
};

struct ProperCheck {
    bool proper = true;
    std::optional<EdgeIndex> monochromatic_edge; // lowest index when not proper
};

// Throws Error(InvalidHypergraph) naming the first violated invariant:
// wrong edge size, unsorted/duplicate vertex in an edge, out-of-range id,
// duplicate edge.
void validate(const Hypergraph& h);

// |A ∩ B| for canonical (sorted) edges.
std::int32_t intersection_size(const Edge& a, const Edge& b);

// Max pairwise edge intersection over unordered pairs; 0 for <= 1 edge.
SimplicityProfile simplicity(const Hypergraph& h);

// Max over edges A of the number of other edges meeting A.
std::int64_t max_edge_degree(const Hypergraph& h);

// Max over vertices of the number of edges containing it.
std::int64_t max_vertex_degree(const Hypergraph& h);

// Per-vertex edge counts, length vertex_count.
std::vector<std::int64_t> vertex_degrees(const Hypergraph& h);

// vertex -> indices of incident edges, in ascending edge order.
std::vector<std::vector<EdgeIndex>> incidence_lists(const Hypergraph& h);

// True iff no edge is monochromatic; otherwise reports the lowest-index
// monochromatic edge. Throws on coloring length mismatch.
ProperCheck is_proper(const Hypergraph& h, const std::vector<Color>& colors);

// Removes from every edge one vertex of maximum degree (ties: smallest id);
// degrees are those of the input hypergraph. Result is (n-1)-uniform over the
// same vertex set. Throws TrimCollision if two trimmed edges coincide.
Hypergraph trim(const Hypergraph& h);

// trim applied k times, recomputing degrees each round. Requires n > k.
Hypergraph trim_k(const Hypergraph& h, std::int32_t k);

} // namespace propb
