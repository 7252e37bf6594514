#ifndef KEMPE_JSON_IO_HPP
#define KEMPE_JSON_IO_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "kempe/checkers.hpp"
#include "kempe/verify.hpp"

namespace kempe {

// Wire formats:
//   graph:    {"n": 5, "edges": [[0,1], ...]}
//   lists:    {"lists": {"0": [1,2,3], ...}}
//   coloring: {"colors": {"0": 2, ...}}
//   move:     {"pair": [a,b], "chain": [v,...]}

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json lists_to_json(const ListAssignment& L);
ListAssignment lists_from_json(const nlohmann::json& j);

nlohmann::json coloring_to_json(const Coloring& c);
Coloring coloring_from_json(const nlohmann::json& j);

nlohmann::json move_to_json(const KempeMove& m);
KempeMove move_from_json(const nlohmann::json& j);

nlohmann::json class_report_to_json(const KempeClassReport& report,
                                    bool include_witnesses = false);

nlohmann::json verdict_to_json(const Verdict& v);

nlohmann::json verification_report_to_json(const VerificationReport& report,
                                           bool include_timing = false);

/// FNV-1a 64-bit digest, rendered as 16 hex digits.
std::string fnv1a_hex(std::string_view data);

/// CLI ingestion: if `arg` names a file, load it (JSON object or graph6
/// line); otherwise treat arg itself as a graph6 literal.
Graph load_graph(const std::string& arg);
ListAssignment load_lists(const std::string& path);
Coloring load_coloring(const std::string& path);

}  // namespace kempe

#endif
