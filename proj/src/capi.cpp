#include "propb.h"

#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "certify.hpp"
#include "errors.hpp"
#include "hypergraph.hpp"
#include "instance_gen.hpp"
#include "io.hpp"
#include "oracle.hpp"
#include "recolor.hpp"
#include "witness.hpp"

struct propb_hypergraph {
    std::shared_ptr<const propb::Hypergraph> impl;
};

struct propb_trace {
    std::shared_ptr<const propb::Hypergraph> hypergraph;
    propb::Trace impl;
};

namespace {

thread_local std::string g_last_error;

propb_status to_status(propb::ErrorCode code) {
    switch (code) {
        case propb::ErrorCode::InvalidArgument: return PROPB_ERR_INVALID_ARGUMENT;
        case propb::ErrorCode::InvalidHypergraph: return PROPB_ERR_INVALID_HYPERGRAPH;
        case propb::ErrorCode::TrimCollision: return PROPB_ERR_TRIM_COLLISION;
        case propb::ErrorCode::Infeasible: return PROPB_ERR_INFEASIBLE;
        case propb::ErrorCode::BudgetExceeded: return PROPB_ERR_BUDGET_EXCEEDED;
        case propb::ErrorCode::Io: return PROPB_ERR_IO;
        case propb::ErrorCode::Parse: return PROPB_ERR_PARSE;
        case propb::ErrorCode::Precondition: return PROPB_ERR_PRECONDITION;
        case propb::ErrorCode::StructuralViolation:
            return PROPB_ERR_STRUCTURAL_VIOLATION;
        case propb::ErrorCode::NoWitness: return PROPB_ERR_NO_WITNESS;
        case propb::ErrorCode::Uncolorable: return PROPB_ERR_UNCOLORABLE;
        case propb::ErrorCode::LimitExceeded: return PROPB_ERR_LIMIT_EXCEEDED;
    }
    return PROPB_ERR_INTERNAL;
}

template <typename Fn>
propb_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return PROPB_OK;
    } catch (const propb::Error& e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return PROPB_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return PROPB_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(::operator new(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

propb_status require(bool ok, const char* what) {
    if (ok) return PROPB_OK;
    g_last_error = what;
    return PROPB_ERR_INVALID_ARGUMENT;
}

propb::SelectionRule to_rule(int rule) {
    return rule == PROPB_RULE_LEAST_TRIGGER_WEIGHT
               ? propb::SelectionRule::LeastTriggerWeight
               : propb::SelectionRule::LowestEdgeIndex;
}

} // namespace

extern "C" {

const char* propb_version(void) { return "0.1.0"; }

const char* propb_status_name(propb_status status) {
    switch (status) {
        case PROPB_OK: return "ok";
        case PROPB_ERR_INVALID_ARGUMENT: return "invalid-argument";
        case PROPB_ERR_INVALID_HYPERGRAPH: return "invalid-hypergraph";
        case PROPB_ERR_TRIM_COLLISION: return "trim-collision";
        case PROPB_ERR_INFEASIBLE: return "infeasible";
        case PROPB_ERR_BUDGET_EXCEEDED: return "budget-exceeded";
        case PROPB_ERR_IO: return "io";
        case PROPB_ERR_PARSE: return "parse";
        case PROPB_ERR_PRECONDITION: return "precondition";
        case PROPB_ERR_STRUCTURAL_VIOLATION: return "structural-violation";
        case PROPB_ERR_NO_WITNESS: return "no-witness";
        case PROPB_ERR_UNCOLORABLE: return "uncolorable";
        case PROPB_ERR_LIMIT_EXCEEDED: return "limit-exceeded";
        case PROPB_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* propb_last_error(void) { return g_last_error.c_str(); }

void propb_string_free(char* s) { ::operator delete(s); }

/* ---- hypergraphs -------------------------------------------------------- */

propb_status propb_hypergraph_create(int64_t vertex_count, int32_t uniformity,
                                     const int32_t* edges, int64_t edge_count,
                                     propb_hypergraph** out) {
    if (auto s = require(out && (edges || edge_count == 0), "null argument")) return s;
    return guarded([&] {
        propb::Hypergraph h;
        h.vertex_count = vertex_count;
        h.uniformity = uniformity;
        h.edges.resize(edge_count);
        for (int64_t i = 0; i < edge_count; ++i) {
            h.edges[i].assign(edges + i * uniformity, edges + (i + 1) * uniformity);
        }
        propb::validate(h);
        *out = new propb_hypergraph{
            std::make_shared<const propb::Hypergraph>(std::move(h))};
    });
}

void propb_hypergraph_free(propb_hypergraph* h) { delete h; }

propb_status propb_hypergraph_parse(const char* bytes, size_t len,
                                    propb_hypergraph** out) {
    if (auto s = require(bytes && out, "null argument")) return s;
    return guarded([&] {
        auto h = propb::parse_hypergraph(std::string_view(bytes, len));
        *out = new propb_hypergraph{
            std::make_shared<const propb::Hypergraph>(std::move(h))};
    });
}

propb_status propb_hypergraph_read_file(const char* path, propb_hypergraph** out) {
    if (auto s = require(path && out, "null argument")) return s;
    return guarded([&] {
        auto h = propb::parse_hypergraph(propb::read_file(path));
        *out = new propb_hypergraph{
            std::make_shared<const propb::Hypergraph>(std::move(h))};
    });
}

propb_status propb_hypergraph_emit(const propb_hypergraph* h, int format,
                                   char** out) {
    if (auto s = require(h && out, "null argument")) return s;
    return guarded([&] {
        *out = dup_string(format == 1 ? propb::emit_hypergraph_json(*h->impl)
                                      : propb::emit_hypergraph_text(*h->impl));
    });
}

int64_t propb_hypergraph_vertex_count(const propb_hypergraph* h) {
    return h ? h->impl->vertex_count : -1;
}

int32_t propb_hypergraph_uniformity(const propb_hypergraph* h) {
    return h ? h->impl->uniformity : -1;
}

int64_t propb_hypergraph_edge_count(const propb_hypergraph* h) {
    return h ? h->impl->edge_count() : -1;
}

propb_status propb_hypergraph_edge(const propb_hypergraph* h, int64_t index,
                                   int32_t* out) {
    if (auto s = require(h && out, "null argument")) return s;
    if (auto s = require(index >= 0 && index < h->impl->edge_count(),
                         "edge index out of range")) {
        return s;
    }
    const auto& e = h->impl->edges[static_cast<size_t>(index)];
    std::memcpy(out, e.data(), e.size() * sizeof(int32_t));
    return PROPB_OK;
}

propb_status propb_hypergraph_validate(const propb_hypergraph* h) {
    if (auto s = require(h != nullptr, "null argument")) return s;
    return guarded([&] { propb::validate(*h->impl); });
}

propb_status propb_hypergraph_simplicity(const propb_hypergraph* h,
                                         int32_t* max_intersection,
                                         int64_t* witness_a, int64_t* witness_b) {
    if (auto s = require(h && max_intersection, "null argument")) return s;
    return guarded([&] {
        const auto profile = propb::simplicity(*h->impl);
        *max_intersection = profile.max_pair_intersection;
        if (witness_a) {
            *witness_a = profile.witness_pair ? profile.witness_pair->first : -1;
        }
        if (witness_b) {
            *witness_b = profile.witness_pair ? profile.witness_pair->second : -1;
        }
    });
}

propb_status propb_hypergraph_max_edge_degree(const propb_hypergraph* h,
                                              int64_t* out) {
    if (auto s = require(h && out, "null argument")) return s;
    return guarded([&] { *out = propb::max_edge_degree(*h->impl); });
}

propb_status propb_hypergraph_max_vertex_degree(const propb_hypergraph* h,
                                                int64_t* out) {
    if (auto s = require(h && out, "null argument")) return s;
    return guarded([&] { *out = propb::max_vertex_degree(*h->impl); });
}

propb_status propb_hypergraph_is_proper(const propb_hypergraph* h,
                                        const int32_t* colors, int64_t len,
                                        int* proper, int64_t* monochromatic_edge) {
    if (auto s = require(h && colors && proper, "null argument")) return s;
    return guarded([&] {
        const std::vector<propb::Color> c(colors, colors + len);
        const auto check = propb::is_proper(*h->impl, c);
        *proper = check.proper ? 1 : 0;
        if (monochromatic_edge) {
            *monochromatic_edge =
                check.monochromatic_edge ? *check.monochromatic_edge : -1;
        }
    });
}

propb_status propb_hypergraph_trim(const propb_hypergraph* h,
                                   propb_hypergraph** out) {
    if (auto s = require(h && out, "null argument")) return s;
    return guarded([&] {
        *out = new propb_hypergraph{
            std::make_shared<const propb::Hypergraph>(propb::trim(*h->impl))};
    });
}

propb_status propb_hypergraph_trim_k(const propb_hypergraph* h, int32_t k,
                                     propb_hypergraph** out) {
    if (auto s = require(h && out, "null argument")) return s;
    return guarded([&] {
        *out = new propb_hypergraph{
            std::make_shared<const propb::Hypergraph>(propb::trim_k(*h->impl, k))};
    });
}

/* ---- generators --------------------------------------------------------- */

propb_status propb_gen_bsimple(int32_t uniformity, int64_t vertex_count,
                               int64_t edge_count, int32_t max_intersection,
                               uint64_t seed, uint64_t max_rejections,
                               propb_hypergraph** out) {
    if (auto s = require(out != nullptr, "null argument")) return s;
    return guarded([&] {
        propb::GenSpec spec;
        spec.uniformity = uniformity;
        spec.vertex_count = vertex_count;
        spec.edge_count = edge_count;
        spec.max_intersection = max_intersection;
        spec.seed = seed;
        if (max_rejections > 0) spec.max_rejections = max_rejections;
        *out = new propb_hypergraph{std::make_shared<const propb::Hypergraph>(
            propb::gen_bsimple(spec))};
    });
}

propb_status propb_gen_complete(int32_t uniformity, int64_t vertex_count,
                                propb_hypergraph** out) {
    if (auto s = require(out != nullptr, "null argument")) return s;
    return guarded([&] {
        *out = new propb_hypergraph{std::make_shared<const propb::Hypergraph>(
            propb::complete(uniformity, vertex_count))};
    });
}

propb_status propb_gen_fano(propb_hypergraph** out) {
    if (auto s = require(out != nullptr, "null argument")) return s;
    return guarded([&] {
        *out = new propb_hypergraph{
            std::make_shared<const propb::Hypergraph>(propb::fano())};
    });
}

/* ---- recoloring runs ---------------------------------------------------- */

double propb_default_p(int32_t n) {
    if (n < 2) return static_cast<double>(NAN);
    return propb::default_p(n);
}

propb_status propb_run(const propb_hypergraph* h, int32_t r, double p,
                       uint64_t seed, int rule, propb_trace** out) {
    if (auto s = require(h && out, "null argument")) return s;
    return guarded([&] {
        *out = new propb_trace{h->impl,
                               propb::run(*h->impl, r, p, seed, to_rule(rule))};
    });
}

propb_status propb_run_with_restarts(const propb_hypergraph* h, int32_t r,
                                     double p, uint64_t seed,
                                     uint64_t max_restarts, int rule,
                                     propb_trace** out, int* success,
                                     uint64_t* attempts) {
    if (auto s = require(h && out && success, "null argument")) return s;
    return guarded([&] {
        auto result = propb::run_with_restarts(*h->impl, r, p, seed, max_restarts,
                                               to_rule(rule));
        *success = result.success ? 1 : 0;
        if (attempts) *attempts = result.attempts;
        *out = new propb_trace{h->impl, std::move(result.trace)};
    });
}

propb_status propb_monte_carlo(const propb_hypergraph* h, int32_t r, double p,
                               uint64_t trials, uint64_t seed, int32_t threads,
                               int rule, propb_mc_stats* out) {
    if (auto s = require(h && out, "null argument")) return s;
    return guarded([&] {
        const auto stats =
            propb::monte_carlo(*h->impl, r, p, trials, seed, threads, to_rule(rule));
        out->successes = stats.successes;
        out->failures = stats.failures;
        out->total_events = stats.total_events;
        out->mean_events = stats.mean_events;
    });
}

void propb_trace_free(propb_trace* t) { delete t; }

int propb_trace_success(const propb_trace* t) {
    return t && t->impl.success ? 1 : 0;
}

int64_t propb_trace_event_count(const propb_trace* t) {
    return t ? static_cast<int64_t>(t->impl.events.size()) : -1;
}

int64_t propb_trace_failure_edge_count(const propb_trace* t) {
    return t ? static_cast<int64_t>(t->impl.failure_edges.size()) : -1;
}

propb_status propb_trace_failure_edges(const propb_trace* t, int64_t* out) {
    if (auto s = require(t && out, "null argument")) return s;
    if (!t->impl.failure_edges.empty()) {
        std::memcpy(out, t->impl.failure_edges.data(),
                    t->impl.failure_edges.size() * sizeof(int64_t));
    }
    return PROPB_OK;
}

propb_status propb_trace_final_coloring(const propb_trace* t, int32_t* out) {
    if (auto s = require(t && out, "null argument")) return s;
    if (!t->impl.final.empty()) {
        std::memcpy(out, t->impl.final.data(),
                    t->impl.final.size() * sizeof(int32_t));
    }
    return PROPB_OK;
}

propb_status propb_trace_emit(const propb_trace* t, char** out) {
    if (auto s = require(t && out, "null argument")) return s;
    return guarded([&] { *out = dup_string(propb::emit_trace_json(t->impl)); });
}

propb_status propb_trace_parse(const char* bytes, size_t len,
                               const propb_hypergraph* h, propb_trace** out) {
    if (auto s = require(bytes && h && out, "null argument")) return s;
    return guarded([&] {
        *out = new propb_trace{
            h->impl,
            propb::parse_trace_json(std::string_view(bytes, len), *h->impl)};
    });
}

/* ---- witness trees ------------------------------------------------------ */

propb_status propb_htree_extract(const propb_trace* t, int64_t root_edge,
                                 char** json_out) {
    if (auto s = require(t && json_out, "null argument")) return s;
    return guarded([&] {
        const auto tree = propb::extract(*t->hypergraph, t->impl, root_edge);
        *json_out = dup_string(propb::emit_htree_json(tree));
    });
}

propb_status propb_trace_witness_report(const propb_trace* t, int32_t b,
                                        int64_t threshold, char** json_out,
                                        int* all_ok) {
    if (auto s = require(t && json_out, "null argument")) return s;
    return guarded([&] {
        const std::int64_t k =
            threshold > 0 ? threshold
                          : propb::default_degenerate_threshold(
                                t->hypergraph->uniformity);
        const auto reports = propb::analyze_failure(*t->hypergraph, t->impl, b, k);
        *json_out = dup_string(propb::emit_witness_reports_json(reports));
        if (all_ok) {
            bool ok = true;
            for (const auto& r : reports) ok = ok && r.checks.all_ok();
            *all_ok = ok ? 1 : 0;
        }
    });
}

/* ---- exact oracle ------------------------------------------------------- */

propb_status propb_oracle_colorable(const propb_hypergraph* h, int32_t r,
                                    uint64_t budget, int* colorable,
                                    int32_t* witness, uint64_t* nodes_explored) {
    if (auto s = require(h && colorable, "null argument")) return s;
    return guarded([&] {
        propb::OracleOptions opts;
        if (budget > 0) opts.node_budget = budget;
        const auto result = propb::is_r_colorable(*h->impl, r, opts);
        *colorable = result.colorable ? 1 : 0;
        if (witness && result.witness && !result.witness->colors.empty()) {
            std::memcpy(witness, result.witness->colors.data(),
                        result.witness->colors.size() * sizeof(int32_t));
        }
        if (nodes_explored) *nodes_explored = result.nodes_explored;
    });
}

propb_status propb_oracle_chromatic(const propb_hypergraph* h, uint64_t budget,
                                    int32_t* chromatic, uint64_t* nodes_explored) {
    if (auto s = require(h && chromatic, "null argument")) return s;
    return guarded([&] {
        propb::OracleOptions opts;
        if (budget > 0) opts.node_budget = budget;
        std::uint64_t nodes = 0;
        *chromatic = propb::chromatic_number(*h->impl, opts, &nodes);
        if (nodes_explored) *nodes_explored = nodes;
    });
}

/* ---- certificates ------------------------------------------------------- */

namespace {

propb_status emit_threshold(propb::LogThreshold (*fn)(std::int64_t, std::int32_t,
                                                      std::int32_t),
                            int64_t n, int32_t r, int32_t b, double* log_value,
                            uint64_t* floor_value, int* floor_valid) {
    if (auto s = require(log_value != nullptr, "null argument")) return s;
    return guarded([&] {
        const auto out = fn(n, r, b);
        *log_value = out.log_value;
        if (floor_valid) *floor_valid = out.floor_exact ? 1 : 0;
        if (floor_value) *floor_value = out.floor_exact.value_or(0);
    });
}

} // namespace

propb_status propb_theorem_threshold(int64_t n, int32_t r, int32_t b,
                                     double* log_value, uint64_t* floor_value,
                                     int* floor_valid) {
    return emit_threshold(propb::theorem_threshold, n, r, b, log_value,
                          floor_value, floor_valid);
}

propb_status propb_vertex_degree_bound(int64_t n, int32_t r, int32_t b,
                                       double* log_value, uint64_t* floor_value,
                                       int* floor_valid) {
    return emit_threshold(propb::vertex_degree_bound, n, r, b, log_value,
                          floor_value, floor_valid);
}

propb_status propb_exact_b1_tail(int64_t n, int32_t r, double p, int64_t K,
                                 double* log_value, int* is_probability) {
    if (auto s = require(log_value != nullptr, "null argument")) return s;
    return guarded([&] {
        const auto tail = propb::exact_b1_tail(n, r, p, K);
        *log_value = tail.log_value;
        if (is_probability) *is_probability = tail.is_probability ? 1 : 0;
    });
}

propb_status propb_m_lower_bound(int64_t n, int32_t r, int32_t b,
                                 double* log_value, int* chain_positive) {
    if (auto s = require(log_value != nullptr, "null argument")) return s;
    return guarded([&] {
        const auto bound = propb::m_lower_bound(n, r, b);
        *log_value = bound.log_value;
        if (chain_positive) *chain_positive = bound.chain_positive ? 1 : 0;
    });
}

propb_status propb_certify(int64_t n, int32_t r, int32_t b, double log_delta,
                           int use_threshold, double tau0, double p, int64_t K,
                           char** report_json, int* verdict) {
    if (auto s = require(verdict != nullptr, "null argument")) return s;
    return guarded([&] {
        const double ld = use_threshold
                              ? propb::theorem_threshold(n, r, b).log_value
                              : log_delta;
        auto params = propb::CertificateParams::with_defaults(n, r, b, ld);
        if (tau0 > 0.0) params.tau0 = tau0;
        if (p >= 0.0) params.p = p;
        if (K > 0) params.degenerate_threshold = K;
        const auto report = propb::certify(params);
        *verdict = report.verdict ? 1 : 0;
        if (report_json) {
            *report_json = dup_string(propb::emit_certificate_json(report));
        }
    });
}

propb_status propb_certify_find_min_n(int32_t r, int32_t b, int64_t* n_star) {
    if (auto s = require(n_star != nullptr, "null argument")) return s;
    return guarded([&] {
        const auto n = propb::find_min_certified_n(r, b);
        if (!n) {
            propb::fail(propb::ErrorCode::Infeasible,
                        "no certifiable n found below the search cap");
        }
        *n_star = *n;
    });
}

} /* extern "C" */
