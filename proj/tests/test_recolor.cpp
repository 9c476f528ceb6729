#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "errors.hpp"
#include "instance_gen.hpp"
#include "io.hpp"
#include "recolor.hpp"
#include "rng.hpp"
#include "support.hpp"

using namespace propb;

namespace {

Hypergraph single_edge(std::int32_t n) {
    Hypergraph h;
    h.vertex_count = n;
    h.uniformity = n;
    Edge e(n);
    for (std::int32_t i = 0; i < n; ++i) e[i] = i;
    h.edges = {e};
    return h;
}

} // namespace

TEST_CASE("default_p") {
    CHECK(default_p(2) == 1.0); // 5 ln2 / 2 > 1, clamped
    CHECK(default_p(12) == 1.0);
    CHECK(default_p(13) == doctest::Approx(5.0 * std::log(13.0) / 13.0).epsilon(1e-15));
    CHECK(default_p(148) == doctest::Approx(0.16882473897851740).epsilon(1e-14));
    // monotone decreasing past the clamp
    double prev = default_p(13);
    for (std::int32_t n = 14; n < 200; ++n) {
        const double cur = default_p(n);
        CHECK(cur < prev);
        prev = cur;
    }
    CHECK_THROWS_AS(default_p(1), Error);
}

TEST_CASE("run on a single edge: immediate outcomes") {
    const auto h = single_edge(4);
    int zero_event_successes = 0;
    int blocked_failures = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        // p = 0: nothing is free, so there are never any events
        const auto t = run(h, 2, 0.0, seed);
        CHECK(t.events.empty());
        if (t.success) {
            ++zero_event_successes;
            CHECK(is_proper(h, t.final).proper);
        } else {
            ++blocked_failures;
            CHECK(t.failure_edges == std::vector<EdgeIndex>{0});
        }
    }
    CHECK(zero_event_successes > 0);
    CHECK(blocked_failures > 0);
}

TEST_CASE("run matches the literal replay simulator on fuzzed instances") {
    Rng rng(90210);
    int done = 0;
    while (done < 300) {
        GenSpec spec;
        spec.uniformity = 2 + static_cast<std::int32_t>(rng.next_below(4));
        spec.vertex_count =
            spec.uniformity + static_cast<std::int64_t>(rng.next_below(12));
        spec.max_intersection = spec.uniformity - 1;
        spec.edge_count = static_cast<std::int64_t>(rng.next_below(10));
        spec.seed = rng.next_u64();
        spec.max_rejections = 2000;
        Hypergraph h;
        try {
            h = gen_bsimple(spec);
        } catch (const Error&) {
            continue;
        }
        const std::int32_t r = 2 + static_cast<std::int32_t>(rng.next_below(2));
        const double p = rng.next_unit();
        const auto t = run(h, r, p, rng.next_u64());

        const auto replay = testing::replay_events(h, r, p, t.initial, t.sigma);
        REQUIRE(replay.size() == t.events.size());
        for (std::size_t i = 0; i < replay.size(); ++i) {
            CHECK(replay[i].vertex == t.events[i].vertex);
            CHECK(replay[i].blamed_edge == t.events[i].blamed_edge);
            CHECK(replay[i].old_color == t.events[i].old_color);
        }
        std::string why;
        CHECK_MESSAGE(testing::trace_invariants_hold(h, t, &why), why);
        ++done;
    }
}

TEST_CASE("least-trigger-weight rule also yields valid traces") {
    Rng rng(5150);
    for (int i = 0; i < 50; ++i) {
        GenSpec spec;
        spec.uniformity = 3;
        spec.vertex_count = 9;
        spec.max_intersection = 2;
        spec.edge_count = 6;
        spec.seed = rng.next_u64();
        const auto h = gen_bsimple(spec);
        const auto t = run(h, 2, 0.7, rng.next_u64(),
                           SelectionRule::LeastTriggerWeight);
        std::set<Vertex> seen;
        for (const auto& e : t.events) {
            CHECK(seen.insert(e.vertex).second);
            CHECK(t.sigma[e.vertex] <= 0.7);
        }
        CHECK(is_proper(h, t.final).proper == t.success);
    }
}

TEST_CASE("run_with_restarts") {
    const auto f = fano();
    // colorable at r=3; generous restarts should succeed
    const auto ok = run_with_restarts(f, 3, default_p(3), 7, 200);
    CHECK(ok.success);
    CHECK(is_proper(f, ok.trace.final).proper);

    // not 2-colorable: never succeeds
    const auto bad = run_with_restarts(f, 2, default_p(3), 7, 50);
    CHECK_FALSE(bad.success);
    CHECK(bad.attempts == 50);

    // max_restarts = 1 is exactly run
    const auto one = run_with_restarts(f, 2, 0.5, 99, 1);
    const auto direct = run(f, 2, 0.5, 99);
    CHECK(one.trace.initial == direct.initial);
    CHECK(one.trace.sigma == direct.sigma);
    CHECK(one.trace.events.size() == direct.events.size());
    CHECK(one.trace.final == direct.final);
}

TEST_CASE("monte_carlo: single-edge failure rate at p=0 is 2^{1-n}") {
    const std::int32_t n = 10;
    const auto h = single_edge(n);
    const std::uint64_t trials = 200'000;
    const auto stats = monte_carlo(h, 2, 0.0, trials, 1234);
    CHECK(stats.successes + stats.failures == trials);
    CHECK(stats.total_events == 0);
    const double q = std::pow(2.0, 1.0 - n);
    const double se = std::sqrt(q * (1.0 - q) / static_cast<double>(trials));
    const double freq = static_cast<double>(stats.failures) / trials;
    CHECK(std::abs(freq - q) <= 4.0 * se);
}

TEST_CASE("monte_carlo: disjoint edges fail independently at p=0") {
    Hypergraph h;
    h.uniformity = 5;
    h.vertex_count = 15;
    h.edges = {{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}, {10, 11, 12, 13, 14}};
    const std::uint64_t trials = 200'000;
    const auto stats = monte_carlo(h, 2, 0.0, trials, 99);
    const double per_edge = std::pow(2.0, 1.0 - 5);
    const double q = 1.0 - std::pow(1.0 - per_edge, 3);
    const double se = std::sqrt(q * (1.0 - q) / static_cast<double>(trials));
    const double freq = static_cast<double>(stats.failures) / trials;
    CHECK(std::abs(freq - q) <= 4.0 * se);
}

TEST_CASE("monte_carlo: totals independent of thread count, trials=1 sums to 1") {
    const auto h = single_edge(6);
    const auto one = monte_carlo(h, 2, 0.3, 1, 5);
    CHECK(one.successes + one.failures == 1);

    const auto serial = monte_carlo(h, 2, 0.3, 20'000, 42, 1);
    const auto parallel = monte_carlo(h, 2, 0.3, 20'000, 42, 4);
    CHECK(serial.successes == parallel.successes);
    CHECK(serial.failures == parallel.failures);
    CHECK(serial.total_events == parallel.total_events);
}

TEST_CASE("trace serialization round-trips bit-exactly") {
    GenSpec spec;
    spec.uniformity = 3;
    spec.vertex_count = 9;
    spec.max_intersection = 1;
    spec.edge_count = 5;
    spec.seed = 31;
    const auto h = gen_bsimple(spec);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto t = run(h, 2, 0.4, seed);
        const auto text = emit_trace_json(t);
        const auto back = parse_trace_json(text, h);
        CHECK(back.r == t.r);
        CHECK(back.p == t.p);
        CHECK(back.seed == t.seed);
        CHECK(back.initial == t.initial);
        CHECK(back.sigma == t.sigma); // 17 significant digits: exact doubles
        CHECK(back.final == t.final);
        CHECK(back.success == t.success);
        CHECK(back.failure_edges == t.failure_edges);
        REQUIRE(back.events.size() == t.events.size());
        CHECK(emit_trace_json(back) == text);
    }
}

TEST_CASE("identical seeds produce byte-identical traces") {
    GenSpec spec;
    spec.uniformity = 4;
    spec.vertex_count = 12;
    spec.max_intersection = 2;
    spec.edge_count = 8;
    spec.seed = 7;
    const auto h = gen_bsimple(spec);
    const auto a = emit_trace_json(run(h, 3, 0.5, 111));
    const auto b = emit_trace_json(run(h, 3, 0.5, 111));
    const auto c = emit_trace_json(run(h, 3, 0.5, 112));
    CHECK(a == b);
    CHECK(a != c);
}
