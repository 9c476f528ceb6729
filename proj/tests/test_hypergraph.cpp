#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "errors.hpp"
#include "hypergraph.hpp"
#include "instance_gen.hpp"
#include "io.hpp"
#include "oracle.hpp"
#include "rng.hpp"
#include "support.hpp"

using namespace propb;

namespace {

Hypergraph make(std::int64_t n_vertices, std::int32_t n, std::vector<Edge> edges) {
    Hypergraph h;
    h.vertex_count = n_vertices;
    h.uniformity = n;
    h.edges = std::move(edges);
    return h;
}

} // namespace

TEST_CASE("validate accepts well-formed hypergraphs") {
    CHECK_NOTHROW(validate(make(4, 3, {{0, 1, 2}, {1, 2, 3}})));
    CHECK_NOTHROW(validate(make(0, 1, {})));
    CHECK_NOTHROW(validate(make(10, 4, {})));
}

TEST_CASE("validate rejects duplicate vertices, duplicate edges, bad ids") {
    CHECK_THROWS_WITH_AS(validate(make(3, 3, {{0, 1, 1}})),
                         doctest::Contains("duplicate vertex"), Error);
    CHECK_THROWS_WITH_AS(validate(make(3, 3, {{0, 1, 2}, {0, 1, 2}})),
                         doctest::Contains("duplicate edge"), Error);
    CHECK_THROWS_WITH_AS(validate(make(3, 3, {{0, 1, 5}})),
                         doctest::Contains("out-of-range"), Error);
    CHECK_THROWS_WITH_AS(validate(make(3, 2, {{0, 1, 2}})),
                         doctest::Contains("size"), Error);
    CHECK_THROWS_WITH_AS(validate(make(3, 3, {{2, 1, 0}})),
                         doctest::Contains("sorted"), Error);
}

TEST_CASE("simplicity from the definition") {
    CHECK(simplicity(make(6, 3, {{0, 1, 2}, {3, 4, 5}})).max_pair_intersection == 0);
    CHECK(simplicity(complete(3, 4)).max_pair_intersection == 2);
    CHECK(simplicity(make(3, 3, {{0, 1, 2}})).max_pair_intersection == 0);
    CHECK(simplicity(make(0, 3, {})).max_pair_intersection == 0);

    const auto profile = simplicity(fano());
    CHECK(profile.max_pair_intersection == 1);
    REQUIRE(profile.witness_pair.has_value());
    CHECK(intersection_size(fano().edges[profile.witness_pair->first],
                            fano().edges[profile.witness_pair->second]) == 1);
}

TEST_CASE("edge and vertex degrees") {
    CHECK(max_edge_degree(make(3, 3, {{0, 1, 2}})) == 0);
    CHECK(max_edge_degree(complete(2, 3)) == 2); // triangle
    CHECK(max_edge_degree(fano()) == 6);

    CHECK(max_vertex_degree(make(3, 3, {{0, 1, 2}})) == 1);
    CHECK(max_vertex_degree(fano()) == 3);
    CHECK(max_vertex_degree(complete(3, 4)) == 3);
    CHECK(max_vertex_degree(make(5, 2, {})) == 0);
}

TEST_CASE("pairwise vs inverted-index degree routes agree on random instances") {
    Rng rng(20240401);
    for (int i = 0; i < 1000; ++i) {
        GenSpec spec;
        spec.uniformity = 2 + static_cast<std::int32_t>(rng.next_below(4));
        spec.vertex_count = spec.uniformity + 1 + static_cast<std::int64_t>(rng.next_below(10));
        spec.max_intersection = spec.uniformity - 1;
        spec.edge_count = static_cast<std::int64_t>(rng.next_below(12));
        spec.seed = rng.next_u64();
        spec.max_rejections = 2000;
        Hypergraph h;
        try {
            h = gen_bsimple(spec);
        } catch (const Error&) {
            continue; // spec too dense, skip
        }
        CHECK(max_edge_degree(h) == testing::pairwise_max_edge_degree(h));
        CHECK(simplicity(h).max_pair_intersection ==
              testing::inverted_index_simplicity(h));
    }
}

TEST_CASE("is_proper basics and the independent scan") {
    const auto h = make(3, 3, {{0, 1, 2}});
    CHECK(is_proper(h, {0, 0, 1}).proper);
    const auto bad = is_proper(h, {1, 1, 1});
    CHECK_FALSE(bad.proper);
    CHECK(*bad.monochromatic_edge == 0);
    CHECK_THROWS_AS((void)is_proper(h, {0, 0}), Error);

    // Fano is not 2-colorable: every one of the 2^7 colorings has a
    // monochromatic line.
    const auto f = fano();
    for (int mask = 0; mask < (1 << 7); ++mask) {
        std::vector<Color> colors(7);
        for (int v = 0; v < 7; ++v) colors[v] = (mask >> v) & 1;
        CHECK_FALSE(is_proper(f, colors).proper);
    }
}

TEST_CASE("is_proper agrees with an independent monochromatic scan") {
    Rng rng(1999);
    for (int i = 0; i < 200; ++i) {
        GenSpec spec;
        spec.uniformity = 2 + static_cast<std::int32_t>(rng.next_below(3));
        spec.vertex_count =
            spec.uniformity + static_cast<std::int64_t>(rng.next_below(8));
        spec.max_intersection = spec.uniformity - 1;
        spec.edge_count = static_cast<std::int64_t>(rng.next_below(8));
        spec.seed = rng.next_u64();
        spec.max_rejections = 2000;
        Hypergraph h;
        try {
            h = gen_bsimple(spec);
        } catch (const Error&) {
            continue;
        }
        std::vector<Color> colors(h.vertex_count);
        for (auto& c : colors) c = static_cast<Color>(rng.next_below(3));
        bool any_mono = false;
        for (const Edge& e : h.edges) {
            bool mono = true;
            for (Vertex v : e) mono = mono && colors[v] == colors[e[0]];
            any_mono = any_mono || mono;
        }
        CHECK(is_proper(h, colors).proper == !any_mono);
    }
}

TEST_CASE("trim: single edge, collision case, fano") {
    const auto single = trim(make(3, 3, {{0, 1, 2}}));
    CHECK(single.uniformity == 2);
    CHECK(single.edges == std::vector<Edge>{{1, 2}});
    CHECK(single.vertex_count == 3);

    // triangle: all degrees equal, min-id removal collides on {2}
    CHECK_THROWS_WITH_AS(trim(make(3, 2, {{0, 1}, {1, 2}, {0, 2}})),
                         doctest::Contains("collision"), Error);

    // fano: all degrees are 3, so each line loses its smallest point
    const auto trimmed = trim(fano());
    CHECK(trimmed.uniformity == 2);
    REQUIRE(trimmed.edge_count() == 7);
    const auto f = fano();
    for (std::size_t i = 0; i < 7; ++i) {
        CHECK(trimmed.edges[i] == Edge{f.edges[i][1], f.edges[i][2]});
    }
    CHECK_NOTHROW(validate(trimmed));
}

TEST_CASE("trim uses degrees, not just ids") {
    // vertex 3 has degree 2 and is the max-degree vertex of both edges
    const auto h = make(6, 3, {{0, 1, 3}, {2, 3, 4}});
    const auto t = trim(h);
    CHECK(t.edges == std::vector<Edge>{{0, 1}, {2, 4}});
}

TEST_CASE("trim_k") {
    const auto h = make(4, 4, {{0, 1, 2, 3}});
    CHECK(trim_k(h, 0).edges == h.edges);
    CHECK(trim_k(h, 2).edges == std::vector<Edge>{{2, 3}});
    CHECK(trim_k(fano(), 1).edges == trim(fano()).edges);
    CHECK_THROWS_AS(trim_k(h, 4), Error);
}

TEST_CASE("trim output shape: n-1 uniform subsets of the source edges") {
    Rng rng(777);
    int done = 0;
    while (done < 50) {
        GenSpec spec;
        spec.uniformity = 4;
        spec.vertex_count = 6 + static_cast<std::int64_t>(rng.next_below(5));
        spec.max_intersection = 2;
        spec.edge_count = 1 + static_cast<std::int64_t>(rng.next_below(8));
        spec.seed = rng.next_u64();
        spec.max_rejections = 5000;
        Hypergraph h, t;
        try {
            h = gen_bsimple(spec);
            t = trim(h);
        } catch (const Error&) {
            continue;
        }
        REQUIRE(t.uniformity == 3);
        for (std::int64_t i = 0; i < h.edge_count(); ++i) {
            CHECK(std::includes(h.edges[i].begin(), h.edges[i].end(),
                                t.edges[i].begin(), t.edges[i].end()));
            CHECK(t.edges[i].size() + 1 == h.edges[i].size());
        }
        ++done;
    }
}

TEST_CASE("chromatic number never drops under trim (exact oracle)") {
    Rng rng(4242);
    int done = 0;
    while (done < 50) {
        GenSpec spec;
        spec.uniformity = 4;
        spec.vertex_count = 5 + static_cast<std::int64_t>(rng.next_below(6));
        spec.max_intersection = 3;
        spec.edge_count = 1 + static_cast<std::int64_t>(rng.next_below(12));
        spec.seed = rng.next_u64();
        spec.max_rejections = 5000;
        Hypergraph h, t;
        try {
            h = gen_bsimple(spec);
            t = trim(h);
        } catch (const Error&) {
            continue;
        }
        CHECK(chromatic_number(t) >= chromatic_number(h));
        ++done;
    }
}

TEST_CASE("text format round-trips bit-exactly") {
    const auto h = make(7, 3, fano().edges);
    const auto text = emit_hypergraph_text(h);
    CHECK(text.substr(0, 6) == "7 7 3\n");
    const auto back = parse_hypergraph_text(text);
    CHECK(back.vertex_count == h.vertex_count);
    CHECK(back.uniformity == h.uniformity);
    CHECK(back.edges == h.edges);
    CHECK(emit_hypergraph_text(back) == text);

    CHECK(emit_hypergraph_text(make(5, 3, {})) == "5 0 3\n");
    CHECK_THROWS_AS(parse_hypergraph_text("3 1 3\n0 1\n"), Error);
    CHECK_THROWS_AS(parse_hypergraph_text("3 1 3\n0 1 2\nextra\n"), Error);
}

TEST_CASE("json format round-trips bit-exactly") {
    const auto h = fano();
    const auto text = emit_hypergraph_json(h);
    const auto back = parse_hypergraph_json(text);
    CHECK(back.edges == h.edges);
    CHECK(emit_hypergraph_json(back) == text);
    // auto-detection
    CHECK(parse_hypergraph(text).edges == h.edges);
    CHECK(parse_hypergraph(emit_hypergraph_text(h)).edges == h.edges);
    CHECK_THROWS_AS(parse_hypergraph_json("{\"vertex_count\":3}"), Error);
}
