// propb command-line tool. Links the C API only; everything below is
// argument handling and presentation.

#include <propb.h>

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

// One master --seed drives everything; per-instance streams are derived with
// the splitmix64 finalizer over (seed, tag, index). Documented in the README.
std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t derive(std::uint64_t seed, std::uint64_t tag, std::uint64_t index) {
    std::uint64_t s = mix64(seed ^ 0xa0761d6478bd642fULL);
    s = mix64(s ^ tag);
    return mix64(s ^ index);
}

constexpr std::uint64_t kTagGen = 0x67656eULL;
constexpr std::uint64_t kTagRun = 0x72756eULL;

struct CString {
    char* value = nullptr;
    ~CString() { propb_string_free(value); }
};

struct Hypergraph {
    propb_hypergraph* h = nullptr;
    ~Hypergraph() { propb_hypergraph_free(h); }
};

struct TraceHolder {
    propb_trace* t = nullptr;
    ~TraceHolder() { propb_trace_free(t); }
};

int complain(propb_status status, const std::string& context) {
    std::cerr << "propb: " << context << ": " << propb_status_name(status)
              << " (" << propb_last_error() << ")\n";
    return kExitError;
}

void write_output(const std::string& path, const std::string& bytes) {
    if (path.empty() || path == "-") {
        std::cout << bytes;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CLI::RuntimeError("cannot open " + path, kExitError);
    out << bytes;
}

std::string read_all(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CLI::RuntimeError("cannot open " + path, kExitError);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string int_array(const std::vector<std::int64_t>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out + "]";
}

std::string color_array(const std::vector<std::int32_t>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out + "]";
}

int default_threads() {
    if (const char* env = std::getenv("PROPB_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    return 1;
}

// ---- gen --------------------------------------------------------------

struct GenArgs {
    std::int32_t n = 3;
    std::int64_t vertices = 0;
    std::int64_t edges = 0;
    std::int32_t b = 1;
    std::uint64_t seed = 1;
    std::uint64_t max_rejections = 0;
    bool json = false;
    std::string output;
};

int run_gen(const GenArgs& args) {
    Hypergraph h;
    const auto status =
        propb_gen_bsimple(args.n, args.vertices, args.edges, args.b, args.seed,
                          args.max_rejections, &h.h);
    if (status != PROPB_OK) return complain(status, "gen");
    CString text;
    propb_hypergraph_emit(h.h, args.json ? 1 : 0, &text.value);
    write_output(args.output, text.value);
    return kExitOk;
}

// ---- oracle -----------------------------------------------------------

struct OracleArgs {
    std::string input;
    std::int32_t r = 2;
    std::uint64_t budget = 0;
    bool chromatic = false;
    std::string output;
};

int run_oracle(const OracleArgs& args) {
    Hypergraph h;
    auto status = propb_hypergraph_read_file(args.input.c_str(), &h.h);
    if (status != PROPB_OK) return complain(status, "oracle: " + args.input);

    std::ostringstream out;
    if (args.chromatic) {
        std::int32_t chi;
        status = propb_oracle_chromatic(h.h, args.budget, &chi, nullptr);
        if (status != PROPB_OK) return complain(status, "oracle");
        out << "{\"chromatic_number\":" << chi << "}\n";
        write_output(args.output, out.str());
        return kExitOk;
    }
    int colorable;
    std::vector<std::int32_t> witness(propb_hypergraph_vertex_count(h.h));
    std::uint64_t nodes;
    status = propb_oracle_colorable(h.h, args.r, args.budget, &colorable,
                                    witness.data(), &nodes);
    if (status != PROPB_OK) return complain(status, "oracle");
    if (colorable) {
        int proper = 0;
        std::int64_t mono;
        propb_hypergraph_is_proper(h.h, witness.data(),
                                   static_cast<std::int64_t>(witness.size()),
                                   &proper, &mono);
        if (!proper) {
            std::cerr << "propb: oracle: witness failed re-verification\n";
            return kExitError;
        }
    }
    out << "{\"r\":" << args.r << ",\"colorable\":"
        << (colorable ? "true" : "false") << ",\"nodes_explored\":" << nodes;
    if (colorable) out << ",\"coloring\":" << color_array(witness);
    out << "}\n";
    write_output(args.output, out.str());
    return colorable ? kExitOk : kExitNegative;
}

// ---- certify ----------------------------------------------------------

struct CertifyArgs {
    std::int64_t n = 0;
    std::int32_t r = 2;
    std::int32_t b = 1;
    std::optional<double> delta;
    std::optional<double> log_delta;
    bool at_threshold = false;
    bool find_min_n = false;
    double tau0 = -1.0;
    double p = -1.0;
    std::int64_t K = -1;
    std::string format = "json";
    std::string output;
};

std::string human_certificate(const std::string& json);

int run_certify(const CertifyArgs& args) {
    if (args.find_min_n) {
        std::int64_t n_star;
        const auto status = propb_certify_find_min_n(args.r, args.b, &n_star);
        if (status != PROPB_OK) return complain(status, "certify --find-min-n");
        std::ostringstream out;
        out << "{\"r\":" << args.r << ",\"b\":" << args.b
            << ",\"n_star\":" << n_star << "}\n";
        write_output(args.output, out.str());
        return kExitOk;
    }
    double log_delta = -HUGE_VAL;
    int use_threshold = 0;
    if (args.at_threshold) {
        use_threshold = 1;
    } else if (args.log_delta) {
        log_delta = *args.log_delta;
    } else if (args.delta) {
        if (*args.delta < 0) {
            std::cerr << "propb: certify: --delta must be >= 0\n";
            return kExitError;
        }
        log_delta = *args.delta == 0 ? -HUGE_VAL : std::log(*args.delta);
    } else {
        std::cerr << "propb: certify: pass --delta, --log-delta or --at-threshold\n";
        return kExitError;
    }
    CString report;
    int verdict;
    const auto status = propb_certify(args.n, args.r, args.b, log_delta,
                                      use_threshold, args.tau0, args.p, args.K,
                                      &report.value, &verdict);
    if (status != PROPB_OK) return complain(status, "certify");
    if (args.format == "text") {
        write_output(args.output, human_certificate(report.value));
    } else {
        write_output(args.output, std::string(report.value) + "\n");
    }
    return verdict ? kExitOk : kExitNegative;
}

// Minimal scanner for the flat report JSON; keeps the CLI free of a parser
// dependency for its own output.
std::string json_field(const std::string& json, const std::string& key) {
    const auto at = json.find("\"" + key + "\":");
    if (at == std::string::npos) return "?";
    auto from = at + key.size() + 3;
    auto depth = 0;
    std::string out;
    for (std::size_t i = from; i < json.size(); ++i) {
        const char c = json[i];
        if (c == '{' || c == '[') ++depth;
        if (c == '}' || c == ']') {
            if (depth == 0) break;
            --depth;
        }
        if (c == ',' && depth == 0) break;
        out += c;
    }
    return out;
}

std::string human_certificate(const std::string& json) {
    std::ostringstream out;
    out << "certificate report\n";
    for (const char* key : {"log_w1", "log_w2", "log_w3", "log_w4", "log_total"}) {
        out << "  " << key << " = " << json_field(json, key) << "\n";
    }
    out << "  per_bound_ok = " << json_field(json, "per_bound_ok") << "\n";
    out << "  side_conditions = " << json_field(json, "side_conditions") << "\n";
    out << "  total_ok = " << json_field(json, "total_ok") << "\n";
    out << "  verdict = " << json_field(json, "verdict") << "\n";
    return out.str();
}

// ---- color ------------------------------------------------------------

struct ColorArgs {
    std::string input;
    std::int32_t r = 2;
    double p = -1.0;
    std::uint64_t seed = 1;
    std::uint64_t restarts = 1;
    std::uint64_t trials = 1;
    std::int32_t b = 0; // 0: use measured simplicity
    std::int64_t K = -1;
    bool checks = false;
    bool weight_rule = false;
    std::string emit_trace;
    std::string output;
};

int run_color(const ColorArgs& args) {
    Hypergraph h;
    auto status = propb_hypergraph_read_file(args.input.c_str(), &h.h);
    if (status != PROPB_OK) return complain(status, "color: " + args.input);
    const std::int32_t n = propb_hypergraph_uniformity(h.h);
    const double p = args.p >= 0 ? args.p : propb_default_p(n);
    const int rule =
        args.weight_rule ? PROPB_RULE_LEAST_TRIGGER_WEIGHT : PROPB_RULE_LOWEST_EDGE;

    if (args.trials > 1) {
        propb_mc_stats stats;
        status = propb_monte_carlo(h.h, args.r, p, args.trials, args.seed,
                                   default_threads(), rule, &stats);
        if (status != PROPB_OK) return complain(status, "color --trials");
        char mean[64];
        std::snprintf(mean, sizeof(mean), "%.17g", stats.mean_events);
        std::ostringstream out;
        out << "{\"trials\":" << args.trials << ",\"successes\":" << stats.successes
            << ",\"failures\":" << stats.failures << ",\"mean_events\":" << mean
            << "}\n";
        write_output(args.output, out.str());
        return kExitOk;
    }

    TraceHolder trace;
    int success;
    std::uint64_t attempts;
    status = propb_run_with_restarts(h.h, args.r, p, args.seed, args.restarts,
                                     rule, &trace.t, &success, &attempts);
    if (status != PROPB_OK) return complain(status, "color");

    if (!args.emit_trace.empty()) {
        CString json;
        propb_trace_emit(trace.t, &json.value);
        write_output(args.emit_trace, json.value);
    }

    std::ostringstream out;
    if (success) {
        std::vector<std::int32_t> final(propb_hypergraph_vertex_count(h.h));
        propb_trace_final_coloring(trace.t, final.data());
        int proper;
        std::int64_t mono;
        status = propb_hypergraph_is_proper(h.h, final.data(),
                                            static_cast<std::int64_t>(final.size()),
                                            &proper, &mono);
        if (status != PROPB_OK || !proper) {
            std::cerr << "propb: color: emitted coloring failed re-verification\n";
            return kExitError;
        }
        out << "{\"outcome\":\"success\",\"attempts\":" << attempts
            << ",\"events\":" << propb_trace_event_count(trace.t)
            << ",\"coloring\":" << color_array(final) << "}\n";
        write_output(args.output, out.str());
        return kExitOk;
    }

    std::vector<std::int64_t> roots(propb_trace_failure_edge_count(trace.t));
    propb_trace_failure_edges(trace.t, roots.data());
    out << "{\"outcome\":\"failure\",\"attempts\":" << attempts
        << ",\"events\":" << propb_trace_event_count(trace.t)
        << ",\"failure_edges\":" << int_array(roots);
    if (args.checks) {
        std::int32_t b = args.b;
        if (b <= 0) {
            propb_hypergraph_simplicity(h.h, &b, nullptr, nullptr);
            if (b < 1) b = 1;
        }
        CString report;
        int all_ok;
        status = propb_trace_witness_report(trace.t, b, args.K, &report.value,
                                            &all_ok);
        if (status != PROPB_OK) return complain(status, "color --checks");
        out << ",\"checks_ok\":" << (all_ok ? "true" : "false")
            << ",\"witnesses\":" << report.value;
    }
    out << "}\n";
    write_output(args.output, out.str());
    return kExitNegative;
}

// ---- htree ------------------------------------------------------------

struct HtreeArgs {
    std::string input;
    std::string trace;
    std::int64_t root = -1;
    std::int32_t b = 0;
    std::int64_t K = -1;
    std::string output;
};

int run_htree(const HtreeArgs& args) {
    Hypergraph h;
    auto status = propb_hypergraph_read_file(args.input.c_str(), &h.h);
    if (status != PROPB_OK) return complain(status, "htree: " + args.input);
    const std::string trace_bytes = read_all(args.trace);
    TraceHolder trace;
    status = propb_trace_parse(trace_bytes.data(), trace_bytes.size(), h.h,
                               &trace.t);
    if (status != PROPB_OK) return complain(status, "htree: " + args.trace);

    if (args.root >= 0) {
        CString json;
        status = propb_htree_extract(trace.t, args.root, &json.value);
        if (status == PROPB_ERR_NO_WITNESS) {
            std::cerr << "propb: htree: trace succeeded, no witness\n";
            return kExitNegative;
        }
        if (status != PROPB_OK) return complain(status, "htree");
        write_output(args.output, std::string(json.value) + "\n");
        return kExitOk;
    }
    std::int32_t b = args.b;
    if (b <= 0) {
        propb_hypergraph_simplicity(h.h, &b, nullptr, nullptr);
        if (b < 1) b = 1;
    }
    CString report;
    int all_ok;
    status = propb_trace_witness_report(trace.t, b, args.K, &report.value,
                                        &all_ok);
    if (status == PROPB_ERR_NO_WITNESS) {
        std::cerr << "propb: htree: trace succeeded, no witness\n";
        return kExitNegative;
    }
    if (status != PROPB_OK) return complain(status, "htree");
    write_output(args.output, std::string(report.value) + "\n");
    return all_ok ? kExitOk : kExitNegative;
}

// ---- experiment -------------------------------------------------------

struct ExperimentArgs {
    std::int64_t count = 1;
    std::int32_t n = 3;
    std::int64_t vertices = 0;
    std::int64_t edges = 0;
    std::int32_t b = 1;
    std::int32_t r = 2;
    double p = -1.0;
    std::uint64_t restarts = 1;
    std::uint64_t seed = 1;
    bool checks = false;
    int threads = 0;
    std::string output;
};

int run_experiment(const ExperimentArgs& args) {
    const int threads = args.threads > 0 ? args.threads : default_threads();
    std::vector<std::string> rows(static_cast<std::size_t>(args.count));
    std::vector<int> row_status(static_cast<std::size_t>(args.count), kExitOk);
    std::vector<std::string> row_error(static_cast<std::size_t>(args.count));

    const auto work = [&](std::int64_t begin, std::int64_t end) {
        for (std::int64_t i = begin; i < end; ++i) {
            const std::uint64_t gen_seed = derive(args.seed, kTagGen,
                                                  static_cast<std::uint64_t>(i));
            const std::uint64_t run_seed = derive(args.seed, kTagRun,
                                                  static_cast<std::uint64_t>(i));
            Hypergraph h;
            auto status = propb_gen_bsimple(args.n, args.vertices, args.edges,
                                            args.b, gen_seed, 0, &h.h);
            if (status != PROPB_OK) {
                row_status[i] = kExitError;
                row_error[i] = propb_last_error();
                continue;
            }
            std::int64_t delta;
            std::int32_t b_hat;
            propb_hypergraph_max_edge_degree(h.h, &delta);
            propb_hypergraph_simplicity(h.h, &b_hat, nullptr, nullptr);
            const double p =
                args.p >= 0 ? args.p : propb_default_p(args.n);
            TraceHolder trace;
            int success;
            std::uint64_t attempts;
            status = propb_run_with_restarts(h.h, args.r, p, run_seed,
                                             args.restarts, PROPB_RULE_LOWEST_EDGE,
                                             &trace.t, &success, &attempts);
            if (status != PROPB_OK) {
                row_status[i] = kExitError;
                row_error[i] = propb_last_error();
                continue;
            }
            if (args.checks && !success) {
                const std::int32_t b_check = b_hat >= 1 ? b_hat : 1;
                CString report;
                int all_ok = 1;
                status = propb_trace_witness_report(trace.t, b_check, -1,
                                                    &report.value, &all_ok);
                if (status != PROPB_OK || !all_ok) {
                    row_status[i] = kExitNegative;
                    row_error[i] = status == PROPB_OK
                                       ? "structural check failed"
                                       : propb_last_error();
                }
            }
            std::ostringstream row;
            row << run_seed << ',' << delta << ',' << b_hat << ','
                << (success ? 1 : 0) << ',' << propb_trace_event_count(trace.t)
                << ',' << attempts << '\n';
            rows[i] = row.str();
        }
    };

    if (threads <= 1 || args.count < 2) {
        work(0, args.count);
    } else {
        std::vector<std::thread> pool;
        const std::int64_t chunk = (args.count + threads - 1) / threads;
        for (int k = 0; k < threads; ++k) {
            const std::int64_t begin = k * chunk;
            const std::int64_t end = std::min<std::int64_t>(args.count, begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(work, begin, end);
        }
        for (auto& th : pool) th.join();
    }

    int worst = kExitOk;
    std::ostringstream out;
    out << "seed,delta,b_hat,success,events,restarts\n";
    for (std::int64_t i = 0; i < args.count; ++i) {
        if (row_status[i] == kExitError) {
            std::cerr << "propb: experiment: instance " << i << ": "
                      << row_error[i] << "\n";
            return kExitError;
        }
        if (row_status[i] != kExitOk) {
            std::cerr << "propb: experiment: instance " << i << ": "
                      << row_error[i] << "\n";
            worst = std::max(worst, row_status[i]);
        }
        out << rows[i];
    }
    write_output(args.output, out.str());
    return worst;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"randomized recoloring, witness trees, and local-lemma "
                 "certificates for b-simple hypergraphs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(propb_version()));

    GenArgs gen;
    auto* cmd_gen = app.add_subcommand("gen", "generate a b-simple instance");
    cmd_gen->add_option("--n", gen.n, "edge size (uniformity)")->required();
    cmd_gen->add_option("--N", gen.vertices, "vertex count")->required();
    cmd_gen->add_option("--m", gen.edges, "edge count")->required();
    cmd_gen->add_option("--b", gen.b, "max pairwise intersection");
    cmd_gen->add_option("--seed", gen.seed, "generator seed");
    cmd_gen->add_option("--max-rejections", gen.max_rejections,
                        "total rejection budget (default 10^6)");
    cmd_gen->add_flag("--json", gen.json, "emit the JSON format");
    cmd_gen->add_option("-o,--output", gen.output, "output file (default stdout)");

    OracleArgs oracle;
    auto* cmd_oracle = app.add_subcommand("oracle", "exact colorability");
    cmd_oracle->add_option("--input,-i", oracle.input, "instance file")->required();
    cmd_oracle->add_option("--r", oracle.r, "number of colors");
    cmd_oracle->add_option("--budget", oracle.budget, "search node budget");
    cmd_oracle->add_flag("--chromatic", oracle.chromatic,
                         "compute the chromatic number instead");
    cmd_oracle->add_option("-o,--output", oracle.output, "output file");

    CertifyArgs certify;
    auto* cmd_certify =
        app.add_subcommand("certify", "evaluate the local-lemma certificate");
    cmd_certify->add_option("--n", certify.n, "uniformity");
    cmd_certify->add_option("--r", certify.r, "number of colors");
    cmd_certify->add_option("--b", certify.b, "simplicity parameter");
    cmd_certify->add_option("--delta", certify.delta, "edge-degree bound");
    cmd_certify->add_option("--log-delta", certify.log_delta,
                            "edge-degree bound, natural log");
    cmd_certify->add_flag("--at-threshold", certify.at_threshold,
                          "use the theorem threshold n r^{n-b}/(2e)^4");
    cmd_certify->add_flag("--find-min-n", certify.find_min_n,
                          "bisect for the least certified n");
    cmd_certify->add_option("--tau0", certify.tau0, "override tau0 (default 1/(n+1))");
    cmd_certify->add_option("--p", certify.p, "override p (default min(1,5 ln n/n))");
    cmd_certify->add_option("--K", certify.K,
                            "override the degenerate threshold (default ceil(20 e ln n))");
    cmd_certify->add_option("--format", certify.format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd_certify->add_option("-o,--output", certify.output, "output file");

    ColorArgs color;
    auto* cmd_color = app.add_subcommand("color", "run the recoloring algorithm");
    cmd_color->add_option("--input,-i", color.input, "instance file")->required();
    cmd_color->add_option("--r", color.r, "number of colors");
    cmd_color->add_option("--p", color.p, "free threshold (default min(1,5 ln n/n))");
    cmd_color->add_option("--seed", color.seed, "run seed");
    cmd_color->add_option("--restarts", color.restarts, "max restarts");
    cmd_color->add_option("--trials", color.trials,
                          "aggregate over this many independent trials");
    cmd_color->add_option("--b", color.b,
                          "simplicity parameter for checks (default: measured)");
    cmd_color->add_option("--K", color.K, "degenerate threshold for checks");
    cmd_color->add_flag("--checks", color.checks,
                        "validate witness trees on failure");
    cmd_color->add_flag("--weight-rule", color.weight_rule,
                        "pick candidate edges by least trigger weight");
    cmd_color->add_option("--emit-trace", color.emit_trace, "write the trace JSON");
    cmd_color->add_option("-o,--output", color.output, "output file");

    HtreeArgs htree;
    auto* cmd_htree = app.add_subcommand("htree", "extract witness trees");
    cmd_htree->add_option("--input,-i", htree.input, "instance file")->required();
    cmd_htree->add_option("--trace", htree.trace, "trace JSON file")->required();
    cmd_htree->add_option("--root", htree.root, "extract a single tree at this edge");
    cmd_htree->add_option("--b", htree.b, "simplicity parameter (default: measured)");
    cmd_htree->add_option("--K", htree.K, "degenerate threshold");
    cmd_htree->add_option("-o,--output", htree.output, "output file");

    ExperimentArgs experiment;
    auto* cmd_exp = app.add_subcommand("experiment", "batch gen+color runs, CSV out");
    cmd_exp->add_option("--count", experiment.count, "number of instances")->required();
    cmd_exp->add_option("--n", experiment.n, "uniformity")->required();
    cmd_exp->add_option("--N", experiment.vertices, "vertex count")->required();
    cmd_exp->add_option("--m", experiment.edges, "edge count")->required();
    cmd_exp->add_option("--b", experiment.b, "max pairwise intersection");
    cmd_exp->add_option("--r", experiment.r, "number of colors");
    cmd_exp->add_option("--p", experiment.p, "free threshold");
    cmd_exp->add_option("--restarts", experiment.restarts, "max restarts per instance");
    cmd_exp->add_option("--seed", experiment.seed, "master seed");
    cmd_exp->add_flag("--checks", experiment.checks, "validate witnesses on failures");
    cmd_exp->add_option("--threads", experiment.threads,
                        "worker threads (or PROPB_THREADS)");
    cmd_exp->add_option("-o,--output", experiment.output, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    try {
        if (cmd_gen->parsed()) return run_gen(gen);
        if (cmd_oracle->parsed()) return run_oracle(oracle);
        if (cmd_certify->parsed()) return run_certify(certify);
        if (cmd_color->parsed()) return run_color(color);
        if (cmd_htree->parsed()) return run_htree(htree);
        if (cmd_exp->parsed()) return run_experiment(experiment);
    } catch (const CLI::RuntimeError& e) {
        std::cerr << "propb: " << e.what() << "\n";
        return e.get_exit_code();
    } catch (const std::exception& e) {
        std::cerr << "propb: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
