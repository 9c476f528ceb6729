#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hypergraph.hpp"

namespace propb {

struct Trace; // recolor.hpp
struct HTree; // witness.hpp

// Formats a double with 17 significant digits ("%.17g"); round-trips any
// finite double exactly. Non-finite values become "inf"/"-inf"/"nan".
std::string format_g17(double value);

// Hypergraph text format: header line "N M n", then M lines of n ascending
// vertex ids. Canonical emission ends every line with '\n'.
std::string emit_hypergraph_text(const Hypergraph& h);
Hypergraph parse_hypergraph_text(std::string_view text);

// Hypergraph JSON: {"vertex_count":N,"uniformity":n,"edges":[[..],..]}.
std::string emit_hypergraph_json(const Hypergraph& h);
Hypergraph parse_hypergraph_json(std::string_view text);

// Detects the format from the first non-space byte ('{' = JSON).
Hypergraph parse_hypergraph(std::string_view text);

// Trace JSON with fixed field order; p and sigma entries at 17 significant
// digits. parse(emit(t)) == t and emit(parse(s)) == s for canonical s.
std::string emit_trace_json(const Trace& t);
Trace parse_trace_json(std::string_view text, const Hypergraph& h);

// HTree JSON: {"root_edge":E,"nodes":[{"label":..,"parent":..,
// "dominating_color":..,"blaming_vertex":..},..]}; parent/blaming_vertex are
// -1 at the root.
std::string emit_htree_json(const HTree& tree);

struct WitnessReport; // witness.hpp
std::string emit_witness_report_json(const WitnessReport& report);
std::string emit_witness_reports_json(const std::vector<WitnessReport>& reports);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view bytes);

} // namespace propb
