#include "io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "errors.hpp"
#include "recolor.hpp"
#include "witness.hpp"

namespace propb {

using nlohmann::json;

std::string format_g17(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string emit_hypergraph_text(const Hypergraph& h) {
    std::ostringstream out;
    out << h.vertex_count << ' ' << h.edge_count() << ' ' << h.uniformity << '\n';
    for (const Edge& e : h.edges) {
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (j) out << ' ';
            out << e[j];
        }
        out << '\n';
    }
    return out.str();
}

Hypergraph parse_hypergraph_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    Hypergraph h;
    std::int64_t m = 0;
    if (!(in >> h.vertex_count >> m >> h.uniformity)) {
        fail(ErrorCode::Parse, "bad hypergraph header (expected \"N M n\")");
    }
    if (m < 0) fail(ErrorCode::Parse, "negative edge count");
    h.edges.resize(m);
    for (std::int64_t i = 0; i < m; ++i) {
        h.edges[i].resize(h.uniformity);
        for (std::int32_t j = 0; j < h.uniformity; ++j) {
            if (!(in >> h.edges[i][j])) {
                fail(ErrorCode::Parse,
                     "truncated edge list at edge " + std::to_string(i));
            }
        }
    }
    std::string rest;
    if (in >> rest) fail(ErrorCode::Parse, "trailing content after edge list");
    validate(h);
    return h;
}

std::string emit_hypergraph_json(const Hypergraph& h) {
    std::ostringstream out;
    out << "{\"vertex_count\":" << h.vertex_count
        << ",\"uniformity\":" << h.uniformity << ",\"edges\":[";
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
        if (i) out << ',';
        out << '[';
        for (std::size_t j = 0; j < h.edges[i].size(); ++j) {
            if (j) out << ',';
            out << h.edges[i][j];
        }
        out << ']';
    }
    out << "]}";
    return out.str();
}

Hypergraph parse_hypergraph_json(std::string_view text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(ErrorCode::Parse, "invalid JSON");
    Hypergraph h;
    try {
        h.vertex_count = j.at("vertex_count").get<std::int64_t>();
        h.uniformity = j.at("uniformity").get<std::int32_t>();
        for (const auto& je : j.at("edges")) {
            h.edges.push_back(je.get<Edge>());
        }
    } catch (const json::exception& e) {
        fail(ErrorCode::Parse, std::string("bad hypergraph JSON: ") + e.what());
    }
    validate(h);
    return h;
}

Hypergraph parse_hypergraph(std::string_view text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        if (c == '{') return parse_hypergraph_json(text);
        break;
    }
    return parse_hypergraph_text(text);
}

std::string emit_trace_json(const Trace& t) {
    std::ostringstream out;
    out << "{\"r\":" << t.r << ",\"p\":" << format_g17(t.p)
        << ",\"seed\":" << t.seed << ",\"f\":[";
    for (std::size_t i = 0; i < t.initial.size(); ++i) {
        if (i) out << ',';
        out << t.initial[i];
    }
    out << "],\"sigma\":[";
    for (std::size_t i = 0; i < t.sigma.size(); ++i) {
        if (i) out << ',';
        out << format_g17(t.sigma[i]);
    }
    out << "],\"events\":[";
    for (std::size_t i = 0; i < t.events.size(); ++i) {
        const auto& e = t.events[i];
        if (i) out << ',';
        out << '[' << e.step << ',' << e.vertex << ',' << e.blamed_edge << ','
            << e.old_color << ',' << e.new_color << ']';
    }
    out << "],\"final\":[";
    for (std::size_t i = 0; i < t.final.size(); ++i) {
        if (i) out << ',';
        out << t.final[i];
    }
    out << "],\"outcome\":\"" << (t.success ? "success" : "failure")
        << "\",\"failure_edges\":[";
    for (std::size_t i = 0; i < t.failure_edges.size(); ++i) {
        if (i) out << ',';
        out << t.failure_edges[i];
    }
    out << "]}";
    return out.str();
}

Trace parse_trace_json(std::string_view text, const Hypergraph& h) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(ErrorCode::Parse, "invalid JSON");
    Trace t;
    try {
        t.r = j.at("r").get<std::int32_t>();
        t.p = j.at("p").get<double>();
        t.seed = j.at("seed").get<std::uint64_t>();
        t.initial = j.at("f").get<std::vector<Color>>();
        t.sigma = j.at("sigma").get<std::vector<double>>();
        for (const auto& je : j.at("events")) {
            if (!je.is_array() || je.size() != 5) {
                fail(ErrorCode::Parse, "event must be [step,vertex,edge,old,new]");
            }
            t.events.push_back({je[0].get<std::int64_t>(), je[1].get<Vertex>(),
                                je[2].get<EdgeIndex>(), je[3].get<Color>(),
                                je[4].get<Color>()});
        }
        t.final = j.at("final").get<std::vector<Color>>();
        t.success = j.at("outcome").get<std::string>() == "success";
        t.failure_edges = j.at("failure_edges").get<std::vector<EdgeIndex>>();
    } catch (const json::exception& e) {
        fail(ErrorCode::Parse, std::string("bad trace JSON: ") + e.what());
    }
    if (static_cast<std::int64_t>(t.initial.size()) != h.vertex_count ||
        static_cast<std::int64_t>(t.final.size()) != h.vertex_count ||
        static_cast<std::int64_t>(t.sigma.size()) != h.vertex_count) {
        fail(ErrorCode::Parse, "trace arrays do not match the hypergraph size");
    }
    for (const auto& e : t.events) {
        if (e.vertex < 0 || e.vertex >= h.vertex_count || e.blamed_edge < 0 ||
            e.blamed_edge >= h.edge_count()) {
            fail(ErrorCode::Parse, "trace event references unknown vertex/edge");
        }
    }
    return t;
}

std::string emit_htree_json(const HTree& tree) {
    std::ostringstream out;
    out << "{\"root_edge\":" << (tree.nodes.empty() ? -1 : tree.nodes[0].label)
        << ",\"nodes\":[";
    for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
        const auto& n = tree.nodes[i];
        if (i) out << ',';
        out << "{\"label\":" << n.label << ",\"parent\":" << n.parent
            << ",\"dominating_color\":" << n.dominating_color
            << ",\"blaming_vertex\":" << n.blaming_vertex << '}';
    }
    out << "]}";
    return out.str();
}

namespace {

const char* verdict_name(DisjointnessVerdict v) {
    switch (v) {
        case DisjointnessVerdict::BDisjoint:
            return "b_disjoint";
        case DisjointnessVerdict::NotBDisjointPathCondition:
            return "not_b_disjoint:path_condition";
        case DisjointnessVerdict::NotBDisjointIncomparableBadNodes:
            return "not_b_disjoint:two_incomparable_bad_nodes";
    }
    return "?";
}

void emit_id_array(std::ostringstream& out, const std::vector<std::int32_t>& v) {
    out << '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ',';
        out << v[i];
    }
    out << ']';
}

} // namespace

std::string emit_witness_report_json(const WitnessReport& rep) {
    std::ostringstream out;
    out << "{\"root_edge\":" << rep.root_edge << ",\"tree\":"
        << emit_htree_json(rep.tree) << ",\"proper_tree\":"
        << emit_htree_json(rep.proper_tree) << ",\"degenerate_labels\":[";
    for (std::size_t i = 0; i < rep.degenerate.size(); ++i) {
        if (i) out << ',';
        out << rep.degenerate[i];
    }
    out << "],\"classification\":{\"verdict\":\""
        << verdict_name(rep.classification.verdict) << "\",\"bad_nodes\":";
    emit_id_array(out, rep.classification.bad_nodes);
    out << ",\"straight_path\":";
    emit_id_array(out, rep.classification.straight_path);
    out << ",\"path_condition_ok\":"
        << (rep.classification.path_condition_ok ? "true" : "false") << '}';
    out << ",\"smallest_violating_subtree\":";
    if (rep.scan.subtree) {
        out << "{\"root_node\":" << rep.scan.root_node
            << ",\"size\":" << rep.scan.subtree_size
            << ",\"proper_size\":" << rep.scan.proper_size
            << ",\"size_cap\":" << format_g17(rep.scan.size_cap)
            << ",\"size_bound_ok\":" << (rep.scan.size_bound_ok ? "true" : "false")
            << '}';
    } else {
        out << "null";
    }
    const auto flag = [](bool v) { return v ? "true" : "false"; };
    const auto tristate = [&](bool checked, bool ok) {
        return checked ? (ok ? "\"ok\"" : "\"failed\"") : "\"skipped\"";
    };
    out << ",\"checks\":{\"root_monochromatic_final\":"
        << flag(rep.checks.root_monochromatic_final)
        << ",\"leaves_monochromatic_initial\":"
        << flag(rep.checks.leaves_monochromatic_initial)
        << ",\"dominating_chain\":" << flag(rep.checks.dominating_chain)
        << ",\"blaming_membership\":" << flag(rep.checks.blaming_membership)
        << ",\"blaming_bijection\":" << flag(rep.checks.blaming_bijection)
        << ",\"proper_labels_distinct\":" << flag(rep.checks.proper_labels_distinct)
        << ",\"degenerate_present\":" << flag(rep.checks.degenerate_present)
        << ",\"reconstruction\":"
        << tristate(rep.checks.reconstruction_checked,
                    rep.checks.reconstruction_matches)
        << ",\"vertex_count_bound\":"
        << tristate(rep.checks.vertex_count_checked, rep.checks.vertex_count_bound)
        << ",\"rsets\":" << tristate(rep.checks.rsets_checked, rep.checks.rsets_ok)
        << ",\"skipped\":\"" << rep.checks.skipped << '"'
        << ",\"violation\":\"" << rep.checks.violation << "\"}}";
    return out.str();
}

std::string emit_witness_reports_json(const std::vector<WitnessReport>& reports) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < reports.size(); ++i) {
        if (i) out << ',';
        out << emit_witness_report_json(reports[i]);
    }
    out << ']';
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::Io, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (!in.good() && !in.eof()) fail(ErrorCode::Io, "read error on " + path);
    return buf.str();
}

void write_file(const std::string& path, std::string_view bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorCode::Io, "cannot open " + path + " for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out.good()) fail(ErrorCode::Io, "write error on " + path);
}

} // namespace propb
