#pragma once

#include <cstdint>
#include <optional>

#include "hypergraph.hpp"

namespace propb {

struct OracleResult {
    bool colorable = false;
    std::optional<Coloring> witness; // present iff colorable
    std::uint64_t nodes_explored = 0;
};

struct OracleOptions {
    std::uint64_t node_budget = 100'000'000;
    bool symmetry_break = true; // fix color(vertex 0) = 0
};

// Exhaustive backtracking over colorings, vertices ordered by descending
// degree, pruning on fully-colored monochromatic edges. Exact true/false;
// throws BudgetExceeded, never returns a wrong answer.
OracleResult is_r_colorable(const Hypergraph& h, std::int32_t r,
                            const OracleOptions& opts = {});

// Least r such that is_r_colorable holds; 1 for an edgeless hypergraph.
// Throws Uncolorable for edges of size 1. nodes_out, when given, receives the
// total nodes explored across the inner searches.
std::int32_t chromatic_number(const Hypergraph& h, const OracleOptions& opts = {},
                              std::uint64_t* nodes_out = nullptr);

} // namespace propb
