#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypergraph.hpp"
#include "recolor.hpp"

namespace propb {

struct HTreeNode {
    EdgeIndex label = -1;            // edge index in the hypergraph
    std::int32_t parent = -1;        // node id; -1 for the root
    std::vector<std::int32_t> children;
    Color dominating_color = 0;
    Vertex blaming_vertex = -1;      // -1 for the root
    std::int32_t depth = 0;
};

// Rooted labelled witness tree. nodes[0] is the root and parents always
// precede their children. Trees produced by remove_coinciding additionally
// store nodes in zeta order (depth-major, then edge order, then parent
// position), which reconstruct_colors and build_rsets rely on.
struct HTree {
    std::vector<HTreeNode> nodes;

    std::int64_t size() const { return static_cast<std::int64_t>(nodes.size()); }
};

enum class DisjointnessVerdict {
    BDisjoint,
    NotBDisjointPathCondition,
    NotBDisjointIncomparableBadNodes,
};

struct DisjointnessReport {
    std::vector<std::int32_t> bad_nodes;     // ascending node ids
    std::vector<std::int32_t> straight_path; // deepest-first, ends at root; empty
                                             // only for the incomparable verdict
    bool path_condition_ok = true;
    DisjointnessVerdict verdict = DisjointnessVerdict::BDisjoint;
};

struct RSets {
    // node_order[i] is a node id of the proper tree; sets[i] is its R-set.
    // Order: straight path root-first, then remaining nodes by depth.
    std::vector<std::int32_t> node_order;
    std::vector<std::vector<Vertex>> sets;
    std::vector<Vertex> recolored; // R(T1): recolored trace vertices inside the labels
};

// ceil(20 e ln n), at least 1.
std::int64_t default_degenerate_threshold(std::int32_t n);

// Edges with at least K of their vertices recolored by the trace.
std::vector<EdgeIndex> degenerate_labels(const Hypergraph& h, const Trace& trace,
                                         std::int64_t threshold);

// Builds the blame tree rooted at root_edge: the root carries the edge's
// final color; children of a node with dominating color beta are the edges
// blamed by its vertices of initial color beta-1. Requires a failed trace
// with root_edge monochromatic in the final coloring.
HTree extract(const Hypergraph& h, const Trace& trace, EdgeIndex root_edge);

// Removal of coinciding labels: scanning nodes in zeta order, every later
// copy of the current node's label is removed together with its subtree.
// The result has pairwise distinct labels and its nodes are stored in zeta
// order. edge_rank reorders edges for the zeta comparison; empty = edge
// index order.
HTree remove_coinciding(const HTree& tree,
                        const std::vector<std::int64_t>& edge_rank = {});

// Bad nodes and the straight-path condition for a proper tree.
DisjointnessReport classify(const HTree& proper, const Hypergraph& h,
                            std::int32_t b);

// Recovers the initial colors of every vertex covered by the proper tree's
// labels from the tree alone. When trace is given, the result is checked
// against trace.initial and a mismatch throws StructuralViolation. Returned
// as a dense vector with -1 for vertices outside the labels.
std::vector<Color> reconstruct_colors(const HTree& proper, const Hypergraph& h,
                                      const Trace* trace);

// R-sets of a b-disjoint proper tree without degenerate labels; validates
// size / disjointness / color / sigma-least properties and throws
// StructuralViolation naming the first violated one.
RSets build_rsets(const HTree& proper, const Hypergraph& h, const Trace& trace,
                  std::int32_t b, std::int64_t threshold);

struct SubtreeScan {
    std::optional<HTree> subtree;   // smallest Y with remove_coinciding(Y) not b-disjoint
    std::int32_t root_node = -1;    // its root in the scanned tree
    std::int64_t subtree_size = 0;  // |Y|
    std::int64_t proper_size = 0;   // |O(Y)|
    double size_cap = 0.0;          // 30 e (ln n)^2
    bool size_bound_ok = true;      // |O(Y)| <= size_cap (meaningful without degenerate labels)
};

// Exhaustive scan over all rooted subtrees; absent when every one is
// b-disjoint after coinciding-label removal.
SubtreeScan smallest_non_bdisjoint_subtree(const HTree& tree, const Hypergraph& h,
                                           std::int32_t b,
                                           const std::vector<std::int64_t>& edge_rank = {});

// --- aggregate failure analysis (drives the CLI `color --checks` report) ---

struct WitnessChecks {
    bool root_monochromatic_final = false;
    bool leaves_monochromatic_initial = false;
    bool dominating_chain = false;
    bool blaming_membership = false;
    bool blaming_bijection = false;      // within every child list
    bool proper_labels_distinct = false;
    bool degenerate_present = false;     // some tree label is degenerate
    // The remaining guarantees hold for trees without degenerate labels;
    // their *_checked flags record whether the precondition was met.
    bool reconstruction_checked = false;
    bool reconstruction_matches = false;
    bool vertex_count_checked = false;   // needs b-disjoint as well
    bool vertex_count_bound = false;
    bool rsets_checked = false;
    bool rsets_ok = false;
    std::string skipped;                 // why conditional checks were skipped
    std::string violation;               // first failed check, empty when clean

    bool all_ok() const { return violation.empty(); }
};

struct WitnessReport {
    EdgeIndex root_edge = -1;
    HTree tree;
    HTree proper_tree;
    std::vector<EdgeIndex> degenerate;
    DisjointnessReport classification;
    SubtreeScan scan;
    WitnessChecks checks;
};

// One report per monochromatic edge of the failed trace.
std::vector<WitnessReport> analyze_failure(const Hypergraph& h, const Trace& trace,
                                           std::int32_t b, std::int64_t threshold);

} // namespace propb
