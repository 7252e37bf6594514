#include "kempe/json_io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "kempe/errors.hpp"
#include "kempe/graph6.hpp"

namespace kempe {

using nlohmann::json;

namespace {

json require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw std::invalid_argument(std::string("json: missing key \"") + key + "\"");
    return j.at(key);
}

int key_to_vertex(const std::string& key) {
    std::size_t used = 0;
    int v = std::stoi(key, &used);
    if (used != key.size() || v < 0)
        throw std::invalid_argument("json: bad vertex key \"" + key + "\"");
    return v;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int w : g.neighbors(v))
            if (v < w) edges.push_back(json::array({v, w}));
    return json{{"n", g.vertex_count()}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
    int n = require(j, "n").get<int>();
    if (n < 0) throw std::invalid_argument("json: negative vertex count");
    Graph g(n);
    for (const auto& e : require(j, "edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("json: each edge must be a pair [u,v]");
        g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    }
    return g;
}

json lists_to_json(const ListAssignment& L) {
    json lists = json::object();
    for (int v = 0; v < L.size(); ++v) lists[std::to_string(v)] = L.at(v);
    return json{{"lists", lists}};
}

ListAssignment lists_from_json(const json& j) {
    json lists = require(j, "lists");
    if (!lists.is_object()) throw std::invalid_argument("json: \"lists\" must be an object");
    int max_vertex = -1;
    for (const auto& [key, value] : lists.items()) {
        (void)value;
        max_vertex = std::max(max_vertex, key_to_vertex(key));
    }
    std::vector<std::vector<int>> out(max_vertex + 1);
    for (const auto& [key, value] : lists.items()) {
        if (!value.is_array()) throw std::invalid_argument("json: each list must be an array");
        out[key_to_vertex(key)] = value.get<std::vector<int>>();
    }
    return ListAssignment(std::move(out));
}

json coloring_to_json(const Coloring& c) {
    json colors = json::object();
    for (int v = 0; v < c.size(); ++v) colors[std::to_string(v)] = c.at(v);
    return json{{"colors", colors}};
}

Coloring coloring_from_json(const json& j) {
    json colors = require(j, "colors");
    if (!colors.is_object()) throw std::invalid_argument("json: \"colors\" must be an object");
    int max_vertex = -1;
    for (const auto& [key, value] : colors.items()) {
        (void)value;
        max_vertex = std::max(max_vertex, key_to_vertex(key));
    }
    Coloring c;
    c.colors.assign(max_vertex + 1, 0);
    std::vector<char> present(max_vertex + 1, 0);
    for (const auto& [key, value] : colors.items()) {
        int v = key_to_vertex(key);
        c.colors[v] = value.get<int>();
        present[v] = 1;
    }
    for (int v = 0; v <= max_vertex; ++v)
        if (!present[v])
            throw std::invalid_argument("json: coloring is missing vertex " + std::to_string(v));
    return c;
}

json move_to_json(const KempeMove& m) {
    return json{{"pair", json::array({m.color_pair.first, m.color_pair.second})},
                {"chain", m.chain}};
}

KempeMove move_from_json(const json& j) {
    json pair = require(j, "pair");
    if (!pair.is_array() || pair.size() != 2)
        throw std::invalid_argument("json: \"pair\" must hold two colors");
    KempeMove m;
    int a = pair.at(0).get<int>(), b = pair.at(1).get<int>();
    if (a == b) throw std::invalid_argument("json: pair colors must differ");
    m.color_pair = std::minmax(a, b);
    m.chain = require(j, "chain").get<std::vector<int>>();
    std::sort(m.chain.begin(), m.chain.end());
    return m;
}

json class_report_to_json(const KempeClassReport& report, bool include_witnesses) {
    json out{{"classCount", report.class_count}, {"classSizes", report.class_sizes}};
    if (include_witnesses) {
        json colorings = json::array();
        for (const auto& w : report.witnesses) colorings.push_back(w.colors);
        out["colorings"] = colorings;
    }
    return out;
}

json verdict_to_json(const Verdict& v) {
    return json{{"check", v.check},
                {"status", verdict_status_name(v.status)},
                {"hypothesisHeld", v.hypothesis_held},
                {"detail", v.detail}};
}

json verification_report_to_json(const VerificationReport& report, bool include_timing) {
    json violations = json::array();
    for (const auto& v : report.violations) {
        violations.push_back(json{{"assignmentIndex", v.assignment_index},
                                  {"lists", lists_to_json(v.lists)},
                                  {"classCount", v.class_count},
                                  {"classSizes", v.class_sizes},
                                  {"note", v.note}});
    }
    json out{{"tool", "kempe-cli"},
             {"version", kToolVersion},
             {"graph", report.graph_id},
             {"graphDigest", fnv1a_hex(report.graph_id)},
             {"mode", report.mode},
             {"paletteCap", report.palette_cap},
             {"seed", report.seed},
             {"samples", report.samples},
             {"assignmentsTested", report.assignments_tested},
             {"colorableCount", report.colorable_count},
             {"violationCount", report.violations.size()},
             {"violations", violations},
             {"ok", report.ok()}};
    if (include_timing) out["wallClockSeconds"] = report.wall_clock_seconds;
    return out;
}

std::string fnv1a_hex(std::string_view data) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 0xF];
        h >>= 4;
    }
    return out;
}

Graph load_graph(const std::string& arg) {
    std::string text;
    if (std::filesystem::exists(arg))
        text = read_file(arg);
    else
        text = arg;
    // JSON object or graph6 line
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return graph_from_json(json::parse(text));
    auto graphs = parse_graph6_lines(text);
    if (graphs.empty()) throw std::invalid_argument("no graph found in input: " + arg);
    return graphs.front();
}

ListAssignment load_lists(const std::string& path) {
    return lists_from_json(json::parse(read_file(path)));
}

Coloring load_coloring(const std::string& path) {
    return coloring_from_json(json::parse(read_file(path)));
}

}  // namespace kempe
