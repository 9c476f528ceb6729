#include "witness.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "errors.hpp"

namespace propb {

namespace {

constexpr std::int64_t kMaxWitnessNodes = 1 << 20;

Color mod_color(std::int64_t c, std::int32_t r) {
    return static_cast<Color>(((c % r) + r) % r);
}

bool edge_mono_under(const Edge& e, const std::vector<Color>& colors) {
    for (std::size_t j = 1; j < e.size(); ++j) {
        if (colors[e[j]] != colors[e[0]]) return false;
    }
    return true;
}

// zeta: depth-major, then edge order of the label, then parent position in
// zeta, then node id (stable fallback for synthetic trees).
std::vector<std::int32_t> zeta_order(const HTree& tree,
                                     const std::vector<std::int64_t>& edge_rank) {
    const auto rank = [&](EdgeIndex e) -> std::int64_t {
        if (edge_rank.empty()) return e;
        return edge_rank[static_cast<std::size_t>(e)];
    };
    const std::size_t t = tree.nodes.size();
    std::vector<std::vector<std::int32_t>> by_depth;
    for (std::size_t i = 0; i < t; ++i) {
        const auto d = static_cast<std::size_t>(tree.nodes[i].depth);
        if (by_depth.size() <= d) by_depth.resize(d + 1);
        by_depth[d].push_back(static_cast<std::int32_t>(i));
    }
    std::vector<std::int32_t> pos(t, -1);
    std::vector<std::int32_t> order;
    order.reserve(t);
    for (auto& level : by_depth) {
        std::sort(level.begin(), level.end(), [&](std::int32_t a, std::int32_t b) {
            const auto ra = rank(tree.nodes[a].label);
            const auto rb = rank(tree.nodes[b].label);
            if (ra != rb) return ra < rb;
            const auto pa = tree.nodes[a].parent < 0 ? -1 : pos[tree.nodes[a].parent];
            const auto pb = tree.nodes[b].parent < 0 ? -1 : pos[tree.nodes[b].parent];
            if (pa != pb) return pa < pb;
            return a < b;
        });
        for (std::int32_t id : level) {
            pos[id] = static_cast<std::int32_t>(order.size());
            order.push_back(id);
        }
    }
    return order;
}

// node ids of N(c): c together with all descendants.
std::vector<std::int32_t> subtree_members(const HTree& tree, std::int32_t c) {
    std::vector<std::int32_t> out;
    std::vector<std::int32_t> stack{c};
    while (!stack.empty()) {
        const std::int32_t u = stack.back();
        stack.pop_back();
        out.push_back(u);
        for (std::int32_t ch : tree.nodes[u].children) stack.push_back(ch);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Rebuilds a tree from kept node ids (which must be closed under parents and
// contain the new root first).
HTree rebuild(const HTree& tree, const std::vector<std::int32_t>& kept) {
    std::vector<std::int32_t> remap(tree.nodes.size(), -1);
    for (std::size_t i = 0; i < kept.size(); ++i) {
        remap[kept[i]] = static_cast<std::int32_t>(i);
    }
    HTree out;
    out.nodes.reserve(kept.size());
    const std::int32_t root_depth = tree.nodes[kept.front()].depth;
    for (std::int32_t id : kept) {
        HTreeNode n = tree.nodes[id];
        n.children.clear();
        n.depth -= root_depth;
        if (id == kept.front()) {
            n.parent = -1;
            n.blaming_vertex = -1;
        } else {
            n.parent = remap[n.parent];
        }
        out.nodes.push_back(std::move(n));
    }
    for (std::size_t i = 1; i < out.nodes.size(); ++i) {
        out.nodes[out.nodes[i].parent].children.push_back(
            static_cast<std::int32_t>(i));
    }
    return out;
}

} // namespace

std::int64_t default_degenerate_threshold(std::int32_t n) {
    if (n < 1) fail(ErrorCode::InvalidArgument, "threshold requires n >= 1");
    const double k = std::ceil(20.0 * std::exp(1.0) * std::log(static_cast<double>(n)));
    // Capped at n: a non-degenerate label must keep at least one vertex
    // unrecolored. A fully recolored root edge reappears as a label below
    // the root, and the proper tree then underdetermines the initial colors.
    const auto capped = std::min<std::int64_t>(static_cast<std::int64_t>(k), n);
    return std::max<std::int64_t>(1, capped);
}

std::vector<EdgeIndex> degenerate_labels(const Hypergraph& h, const Trace& trace,
                                         std::int64_t threshold) {
    std::vector<char> recolored(h.vertex_count, 0);
    for (const auto& ev : trace.events) recolored[ev.vertex] = 1;
    std::vector<EdgeIndex> out;
    for (EdgeIndex i = 0; i < h.edge_count(); ++i) {
        std::int64_t count = 0;
        for (Vertex v : h.edges[i]) count += recolored[v];
        if (count >= threshold) out.push_back(i);
    }
    return out;
}

HTree extract(const Hypergraph& h, const Trace& trace, EdgeIndex root_edge) {
    if (trace.success) {
        fail(ErrorCode::NoWitness, "trace succeeded; no witness tree exists");
    }
    if (root_edge < 0 || root_edge >= h.edge_count()) {
        fail(ErrorCode::InvalidArgument, "root_edge out of range");
    }
    if (!edge_mono_under(h.edges[root_edge], trace.final)) {
        fail(ErrorCode::Precondition,
             "root edge is not monochromatic in the final coloring");
    }

    std::vector<std::int64_t> event_of(h.vertex_count, -1);
    for (std::size_t i = 0; i < trace.events.size(); ++i) {
        event_of[trace.events[i].vertex] = static_cast<std::int64_t>(i);
    }

    HTree tree;
    tree.nodes.push_back(HTreeNode{
        root_edge, -1, {}, trace.final[h.edges[root_edge][0]], -1, 0});

    // BFS: children of a node with dominating color beta are the blamed
    // edges of its initial-color beta-1 vertices.
    for (std::size_t qi = 0; qi < tree.nodes.size(); ++qi) {
        const EdgeIndex label = tree.nodes[qi].label;
        const Color beta = tree.nodes[qi].dominating_color;
        const Color prev = mod_color(beta - 1, trace.r);
        for (Vertex v : h.edges[label]) {
            const Color fv = trace.initial[v];
            if (fv == beta) continue;
            if (fv != prev) {
                fail(ErrorCode::StructuralViolation,
                     "vertex " + std::to_string(v) + " of edge " +
                         std::to_string(label) +
                         " has initial color outside {beta, beta-1}");
            }
            const std::int64_t ev = event_of[v];
            if (ev < 0) {
                fail(ErrorCode::StructuralViolation,
                     "vertex " + std::to_string(v) +
                         " should have been recolored but has no event");
            }
            if (tree.size() >= kMaxWitnessNodes) {
                fail(ErrorCode::LimitExceeded, "witness tree exceeds node cap");
            }
            tree.nodes[qi].children.push_back(static_cast<std::int32_t>(tree.size()));
            tree.nodes.push_back(HTreeNode{trace.events[ev].blamed_edge,
                                           static_cast<std::int32_t>(qi),
                                           {},
                                           prev,
                                           v,
                                           tree.nodes[qi].depth + 1});
        }
    }
    return tree;
}

HTree remove_coinciding(const HTree& tree,
                        const std::vector<std::int64_t>& edge_rank) {
    if (tree.nodes.empty()) return tree;
    const auto zeta = zeta_order(tree, edge_rank);

    std::vector<char> alive(tree.nodes.size(), 1);
    const auto kill_subtree = [&](std::int32_t c) {
        for (std::int32_t id : subtree_members(tree, c)) alive[id] = 0;
    };
    for (std::size_t i = 0; i < zeta.size(); ++i) {
        const std::int32_t c = zeta[i];
        if (!alive[c]) continue;
        for (std::size_t j = i + 1; j < zeta.size(); ++j) {
            const std::int32_t d = zeta[j];
            if (alive[d] && tree.nodes[d].label == tree.nodes[c].label) {
                kill_subtree(d);
            }
        }
    }

    std::vector<std::int32_t> kept;
    for (std::int32_t id : zeta) {
        if (alive[id]) kept.push_back(id);
    }
    return rebuild(tree, kept);
}

DisjointnessReport classify(const HTree& proper, const Hypergraph& h,
                            std::int32_t b) {
    {
        std::set<EdgeIndex> labels;
        for (const auto& n : proper.nodes) labels.insert(n.label);
        if (labels.size() != proper.nodes.size()) {
            fail(ErrorCode::Precondition, "classify requires distinct labels");
        }
    }
    DisjointnessReport report;
    const std::size_t t = proper.nodes.size();

    std::vector<char> mark(h.vertex_count, 0);
    std::vector<char> in_subtree(t, 0);
    for (std::size_t c = 0; c < t; ++c) {
        std::fill(in_subtree.begin(), in_subtree.end(), 0);
        for (std::int32_t id : subtree_members(proper, static_cast<std::int32_t>(c))) {
            in_subtree[id] = 1;
        }
        std::fill(mark.begin(), mark.end(), 0);
        for (std::size_t o = 0; o < t; ++o) {
            if (in_subtree[o]) continue;
            for (Vertex v : h.edges[proper.nodes[o].label]) mark[v] = 1;
        }
        std::int32_t shared = 0;
        for (Vertex v : h.edges[proper.nodes[c].label]) shared += mark[v];
        if (shared >= b + 1) {
            report.bad_nodes.push_back(static_cast<std::int32_t>(c));
        }
    }

    // Straight path: from the deepest bad node to the root; just the root
    // when there are no bad nodes.
    std::int32_t deepest = 0;
    for (std::int32_t id : report.bad_nodes) {
        if (proper.nodes[id].depth > proper.nodes[deepest].depth) deepest = id;
    }
    for (std::int32_t id : report.bad_nodes) {
        if (id != deepest && proper.nodes[id].depth == proper.nodes[deepest].depth) {
            report.verdict = DisjointnessVerdict::NotBDisjointIncomparableBadNodes;
            report.path_condition_ok = false;
            return report;
        }
    }
    std::vector<std::int32_t> path; // deepest-first
    for (std::int32_t u = deepest; u >= 0; u = proper.nodes[u].parent) {
        path.push_back(u);
    }
    for (std::int32_t id : report.bad_nodes) {
        if (std::find(path.begin(), path.end(), id) == path.end()) {
            report.verdict = DisjointnessVerdict::NotBDisjointIncomparableBadNodes;
            report.path_condition_ok = false;
            return report;
        }
    }
    report.straight_path = path;

    // Condition along the path: each node shares at most b vertices with the
    // union of the deeper path labels.
    std::fill(mark.begin(), mark.end(), 0);
    bool ok = true;
    for (std::size_t i = 0; i + 1 < path.size() && ok; ++i) {
        for (Vertex v : h.edges[proper.nodes[path[i]].label]) mark[v] = 1;
        std::int32_t shared = 0;
        for (Vertex v : h.edges[proper.nodes[path[i + 1]].label]) shared += mark[v];
        if (shared > b) ok = false;
    }
    report.path_condition_ok = ok;
    report.verdict = ok ? DisjointnessVerdict::BDisjoint
                        : DisjointnessVerdict::NotBDisjointPathCondition;
    return report;
}

std::vector<Color> reconstruct_colors(const HTree& proper, const Hypergraph& h,
                                      const Trace* trace) {
    std::vector<Color> colors(h.vertex_count, -1);
    std::vector<char> in_rset(h.vertex_count, 0);

    // Nodes are stored in zeta order (parents first); process each node by
    // fixing its children's blaming vertices to the child dominating color,
    // then defaulting the untouched label vertices to the node's color.
    for (const auto& node : proper.nodes) {
        const Color beta = node.dominating_color;
        for (std::int32_t ch : node.children) {
            const Vertex v = proper.nodes[ch].blaming_vertex;
            const Color col = proper.nodes[ch].dominating_color;
            if (colors[v] >= 0 && colors[v] != col) {
                fail(ErrorCode::StructuralViolation,
                     "reconstruction conflict at blaming vertex " +
                         std::to_string(v));
            }
            colors[v] = col;
            in_rset[v] = 1;
        }
        for (Vertex v : h.edges[node.label]) {
            if (colors[v] < 0) {
                colors[v] = beta;
            } else if (!in_rset[v] && colors[v] != beta) {
                fail(ErrorCode::StructuralViolation,
                     "reconstruction conflict at vertex " + std::to_string(v) +
                         " of edge " + std::to_string(node.label));
            }
        }
    }
    if (trace != nullptr) {
        for (Vertex v = 0; v < h.vertex_count; ++v) {
            if (colors[v] >= 0 && colors[v] != trace->initial[v]) {
                fail(ErrorCode::StructuralViolation,
                     "reconstructed color of vertex " + std::to_string(v) +
                         " does not match the initial coloring");
            }
        }
    }
    return colors;
}

RSets build_rsets(const HTree& proper, const Hypergraph& h, const Trace& trace,
                  std::int32_t b, std::int64_t threshold) {
    const auto report = classify(proper, h, b);
    if (report.verdict != DisjointnessVerdict::BDisjoint) {
        fail(ErrorCode::Precondition, "build_rsets requires a b-disjoint tree");
    }
    {
        const auto degen = degenerate_labels(h, trace, threshold);
        for (const auto& node : proper.nodes) {
            if (std::binary_search(degen.begin(), degen.end(), node.label)) {
                fail(ErrorCode::Precondition,
                     "build_rsets requires no degenerate labels");
            }
        }
    }

    RSets rsets;
    std::vector<char> in_labels(h.vertex_count, 0);
    for (const auto& node : proper.nodes) {
        for (Vertex v : h.edges[node.label]) in_labels[v] = 1;
    }
    std::vector<char> recolored(h.vertex_count, 0);
    for (const auto& ev : trace.events) {
        if (in_labels[ev.vertex]) {
            recolored[ev.vertex] = 1;
            rsets.recolored.push_back(ev.vertex);
        }
    }
    std::sort(rsets.recolored.begin(), rsets.recolored.end());

    // Path nodes root-first, then the rest in stored (depth-major) order.
    std::vector<std::int32_t> path(report.straight_path.rbegin(),
                                   report.straight_path.rend());
    std::vector<char> on_path(proper.nodes.size(), 0);
    for (std::int32_t id : path) on_path[id] = 1;
    rsets.node_order = path;
    for (std::size_t i = 0; i < proper.nodes.size(); ++i) {
        if (!on_path[i]) rsets.node_order.push_back(static_cast<std::int32_t>(i));
    }

    std::vector<char> excluded(h.vertex_count, 0);
    const std::size_t m = path.size();
    for (std::size_t oi = 0; oi < rsets.node_order.size(); ++oi) {
        const std::int32_t id = rsets.node_order[oi];
        const auto& node = proper.nodes[id];
        std::fill(excluded.begin(), excluded.end(), 0);
        if (oi < m) {
            // path form: subtract labels of the deeper path nodes
            for (std::size_t j = oi + 1; j < m; ++j) {
                for (Vertex v : h.edges[proper.nodes[path[j]].label]) excluded[v] = 1;
            }
        } else {
            // general form: subtract every label outside N(node)
            std::vector<char> inside(proper.nodes.size(), 0);
            for (std::int32_t s : subtree_members(proper, id)) inside[s] = 1;
            for (std::size_t o = 0; o < proper.nodes.size(); ++o) {
                if (inside[o]) continue;
                for (Vertex v : h.edges[proper.nodes[o].label]) excluded[v] = 1;
            }
        }
        std::vector<Vertex> set;
        for (Vertex v : h.edges[node.label]) {
            if (!recolored[v] && !excluded[v]) set.push_back(v);
        }
        if (node.blaming_vertex >= 0) {
            set.push_back(node.blaming_vertex);
            std::sort(set.begin(), set.end());
            set.erase(std::unique(set.begin(), set.end()), set.end());
        }
        rsets.sets.push_back(std::move(set));
    }

    // R-set property checks.
    const std::int64_t min_size = h.uniformity - threshold - b;
    std::vector<char> seen(h.vertex_count, 0);
    for (std::size_t oi = 0; oi < rsets.node_order.size(); ++oi) {
        const auto& node = proper.nodes[rsets.node_order[oi]];
        const auto& set = rsets.sets[oi];
        if (static_cast<std::int64_t>(set.size()) < min_size) {
            fail(ErrorCode::StructuralViolation,
                 "R-set size below n-K-b at node " +
                     std::to_string(rsets.node_order[oi]));
        }
        for (Vertex v : set) {
            if (seen[v]) {
                fail(ErrorCode::StructuralViolation,
                     "R-sets are not pairwise disjoint at vertex " +
                         std::to_string(v));
            }
            seen[v] = 1;
            if (trace.initial[v] != node.dominating_color) {
                fail(ErrorCode::StructuralViolation,
                     "R-set vertex " + std::to_string(v) +
                         " not colored with the dominating color");
            }
        }
        if (node.blaming_vertex >= 0) {
            const Vertex bv = node.blaming_vertex;
            for (Vertex v : set) {
                if (v == bv) continue;
                if (trace.sigma[v] < trace.sigma[bv] ||
                    (trace.sigma[v] == trace.sigma[bv] && v < bv)) {
                    fail(ErrorCode::StructuralViolation,
                         "blaming vertex is not sigma-least in its R-set at node " +
                             std::to_string(rsets.node_order[oi]));
                }
            }
        }
    }
    return rsets;
}

SubtreeScan smallest_non_bdisjoint_subtree(const HTree& tree, const Hypergraph& h,
                                           std::int32_t b,
                                           const std::vector<std::int64_t>& edge_rank) {
    SubtreeScan scan;
    scan.size_cap = 30.0 * std::exp(1.0) *
                    std::pow(std::log(static_cast<double>(h.uniformity)), 2.0);
    std::int64_t best_size = -1;
    std::int32_t best_root = -1;
    HTree best_subtree;
    HTree best_proper;
    for (std::size_t c = 0; c < tree.nodes.size(); ++c) {
        auto members = subtree_members(tree, static_cast<std::int32_t>(c));
        // rebuild wants the subtree root first
        auto it = std::find(members.begin(), members.end(), static_cast<std::int32_t>(c));
        std::iter_swap(members.begin(), it);
        HTree y = rebuild(tree, members);
        HTree y1 = remove_coinciding(y, edge_rank);
        if (classify(y1, h, b).verdict == DisjointnessVerdict::BDisjoint) continue;
        const auto size = static_cast<std::int64_t>(members.size());
        if (best_size < 0 || size < best_size ||
            (size == best_size && static_cast<std::int32_t>(c) < best_root)) {
            best_size = size;
            best_root = static_cast<std::int32_t>(c);
            best_subtree = std::move(y);
            best_proper = std::move(y1);
        }
    }
    if (best_size < 0) return scan;
    scan.subtree = std::move(best_subtree);
    scan.root_node = best_root;
    scan.subtree_size = best_size;
    scan.proper_size = best_proper.size();
    scan.size_bound_ok =
        static_cast<double>(scan.proper_size) <= scan.size_cap;
    return scan;
}

namespace {

// Structural invariants of an extracted tree against its trace.
void verify_tree(const HTree& tree, const Hypergraph& h, const Trace& trace,
                 WitnessChecks& checks) {
    checks.root_monochromatic_final =
        edge_mono_under(h.edges[tree.nodes[0].label], trace.final) &&
        trace.final[h.edges[tree.nodes[0].label][0]] ==
            tree.nodes[0].dominating_color;

    checks.leaves_monochromatic_initial = true;
    checks.dominating_chain = true;
    checks.blaming_membership = true;
    checks.blaming_bijection = true;
    for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
        const auto& node = tree.nodes[i];
        if (node.children.empty()) {
            if (!edge_mono_under(h.edges[node.label], trace.initial) ||
                trace.initial[h.edges[node.label][0]] != node.dominating_color) {
                checks.leaves_monochromatic_initial = false;
            }
        }
        std::set<EdgeIndex> child_labels;
        std::set<Vertex> child_vertices;
        for (std::int32_t ch : node.children) {
            const auto& child = tree.nodes[ch];
            if (child.dominating_color !=
                mod_color(node.dominating_color - 1, trace.r)) {
                checks.dominating_chain = false;
            }
            const auto& le = h.edges[child.label];
            const auto& pe = h.edges[node.label];
            const Vertex v = child.blaming_vertex;
            if (!std::binary_search(le.begin(), le.end(), v) ||
                !std::binary_search(pe.begin(), pe.end(), v)) {
                checks.blaming_membership = false;
            }
            child_labels.insert(child.label);
            child_vertices.insert(v);
        }
        if (child_labels.size() != node.children.size() ||
            child_vertices.size() != node.children.size()) {
            checks.blaming_bijection = false;
        }
    }
}

} // namespace

std::vector<WitnessReport> analyze_failure(const Hypergraph& h, const Trace& trace,
                                           std::int32_t b, std::int64_t threshold) {
    if (trace.success) {
        fail(ErrorCode::NoWitness, "trace succeeded; nothing to analyze");
    }
    std::vector<WitnessReport> reports;
    for (EdgeIndex root : trace.failure_edges) {
        WitnessReport rep;
        rep.root_edge = root;
        rep.tree = extract(h, trace, root);
        rep.degenerate = degenerate_labels(h, trace, threshold);
        rep.proper_tree = remove_coinciding(rep.tree);
        verify_tree(rep.tree, h, trace, rep.checks);

        std::set<EdgeIndex> labels;
        for (const auto& n : rep.proper_tree.nodes) labels.insert(n.label);
        rep.checks.proper_labels_distinct =
            labels.size() == rep.proper_tree.nodes.size();

        for (const auto& n : rep.tree.nodes) {
            if (std::binary_search(rep.degenerate.begin(), rep.degenerate.end(),
                                   n.label)) {
                rep.checks.degenerate_present = true;
            }
        }

        // Reconstruction and the R-set properties require a tree without
        // degenerate labels. At the capped threshold this covers a fully
        // recolored root, whose initial colors the proper tree cannot
        // determine.
        if (!rep.checks.degenerate_present) {
            rep.checks.reconstruction_checked = true;
            try {
                reconstruct_colors(rep.proper_tree, h, &trace);
                rep.checks.reconstruction_matches = true;
            } catch (const Error&) {
                rep.checks.reconstruction_matches = false;
            }
        } else {
            rep.checks.skipped = "degenerate labels present";
        }

        rep.classification = classify(rep.proper_tree, h, b);
        rep.scan = smallest_non_bdisjoint_subtree(rep.tree, h, b);

        if (rep.classification.verdict == DisjointnessVerdict::BDisjoint) {
            // covered-vertex bound: |union of labels| >= n + (n-b)(t-1);
            // holds for any b-disjoint proper tree
            std::set<Vertex> cover;
            for (const auto& n : rep.proper_tree.nodes) {
                cover.insert(h.edges[n.label].begin(), h.edges[n.label].end());
            }
            const std::int64_t t = rep.proper_tree.size();
            rep.checks.vertex_count_checked = true;
            rep.checks.vertex_count_bound =
                static_cast<std::int64_t>(cover.size()) >=
                h.uniformity + static_cast<std::int64_t>(h.uniformity - b) * (t - 1);
            if (!rep.checks.degenerate_present) {
                rep.checks.rsets_checked = true;
                try {
                    build_rsets(rep.proper_tree, h, trace, b, threshold);
                    rep.checks.rsets_ok = true;
                } catch (const Error& e) {
                    rep.checks.rsets_ok = false;
                    rep.checks.violation = e.what();
                }
            }
        } else if (rep.checks.skipped.empty()) {
            rep.checks.skipped = "tree is not b-disjoint";
        }

        if (rep.checks.violation.empty()) {
            if (!rep.checks.root_monochromatic_final)
                rep.checks.violation = "root not monochromatic in final coloring";
            else if (!rep.checks.leaves_monochromatic_initial)
                rep.checks.violation = "leaf not monochromatic in initial coloring";
            else if (!rep.checks.dominating_chain)
                rep.checks.violation = "dominating color chain broken";
            else if (!rep.checks.blaming_membership)
                rep.checks.violation = "blaming vertex outside label intersection";
            else if (!rep.checks.blaming_bijection)
                rep.checks.violation = "blaming correspondence not one-to-one";
            else if (!rep.checks.proper_labels_distinct)
                rep.checks.violation = "coinciding labels survived removal";
            else if (rep.checks.reconstruction_checked &&
                     !rep.checks.reconstruction_matches)
                rep.checks.violation = "color reconstruction mismatch";
            else if (rep.checks.vertex_count_checked &&
                     !rep.checks.vertex_count_bound)
                rep.checks.violation = "vertex count below n+(n-b)(t-1)";
            else if (rep.checks.rsets_checked && !rep.checks.rsets_ok)
                rep.checks.violation = "R-set property violated";
        }
        reports.push_back(std::move(rep));
    }
    return reports;
}

} // namespace propb
