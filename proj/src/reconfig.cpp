#include "kempe/reconfig.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "kempe/errors.hpp"

namespace kempe {

std::optional<int> ReconfigGraph::node_index(const Coloring& c) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), c);
    if (it == nodes.end() || !(*it == c)) return std::nullopt;
    return static_cast<int>(it - nodes.begin());
}

ReconfigGraph build_reconfig_graph(const Graph& g, const ListAssignment& L,
                                   std::size_t node_cap) {
    ReconfigGraph rg;
    rg.nodes = enumerate_L_colorings(g, L, node_cap);
    rg.adjacency.resize(rg.nodes.size());

    for (int i = 0; i < static_cast<int>(rg.nodes.size()); ++i) {
        for (const KempeMove& m : valid_moves(g, L, rg.nodes[i])) {
            Coloring next = apply_move(g, rg.nodes[i], m);
            auto j = rg.node_index(next);
            // a valid move always lands on another L-coloring
            assert(j.has_value());
            if (!j) throw std::logic_error("reconfig: move target missing from node set");
            if (i < *j) {
                int edge_idx = static_cast<int>(rg.edges.size());
                rg.edges.push_back({i, *j, m});
                rg.adjacency[i].emplace_back(*j, edge_idx);
                rg.adjacency[*j].emplace_back(i, edge_idx);
            }
        }
    }
    for (auto& adj : rg.adjacency) std::sort(adj.begin(), adj.end());
    return rg;
}

KempeClassReport kempe_classes(const ReconfigGraph& rg) {
    KempeClassReport report;
    const int n = static_cast<int>(rg.nodes.size());
    std::vector<int> comp(n, -1);
    for (int start = 0; start < n; ++start) {
        if (comp[start] >= 0) continue;
        int id = report.class_count++;
        std::vector<int> members;
        std::deque<int> q{start};
        comp[start] = id;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            members.push_back(u);
            for (auto [w, e] : rg.adjacency[u]) {
                (void)e;
                if (comp[w] < 0) {
                    comp[w] = id;
                    q.push_back(w);
                }
            }
        }
        std::sort(members.begin(), members.end());
        report.class_sizes.push_back(static_cast<int>(members.size()));
        report.witnesses.push_back(rg.nodes[members.front()]);
        report.classes.push_back(std::move(members));
    }
    return report;
}

std::optional<std::vector<KempeMove>> find_path(const ReconfigGraph& rg,
                                                const Coloring& from, const Coloring& to) {
    auto s = rg.node_index(from);
    auto t = rg.node_index(to);
    if (!s || !t)
        throw std::invalid_argument("find_path: coloring is not a node of the graph");
    if (*s == *t) return std::vector<KempeMove>{};

    const int n = static_cast<int>(rg.nodes.size());
    std::vector<int> parent(n, -1), via_edge(n, -1);
    std::deque<int> q{*s};
    parent[*s] = *s;
    while (!q.empty() && parent[*t] < 0) {
        int u = q.front();
        q.pop_front();
        for (auto [w, e] : rg.adjacency[u]) {
            if (parent[w] < 0) {
                parent[w] = u;
                via_edge[w] = e;
                q.push_back(w);
            }
        }
    }
    if (parent[*t] < 0) return std::nullopt;

    std::vector<KempeMove> path;
    for (int u = *t; u != *s; u = parent[u]) path.push_back(rg.edges[via_edge[u]].move);
    std::reverse(path.begin(), path.end());
    return path;
}

bool is_all_equivalent(const Graph& g, const ListAssignment& L, std::size_t node_cap) {
    ReconfigGraph rg = build_reconfig_graph(g, L, node_cap);
    if (rg.nodes.size() <= 1) return true;
    return kempe_classes(rg).class_count <= 1;
}

std::string to_dot(const ReconfigGraph& rg) {
    std::ostringstream out;
    out << "graph kempe_reconfig {\n";
    for (std::size_t i = 0; i < rg.nodes.size(); ++i) {
        out << "  n" << i << " [label=\"";
        const auto& cs = rg.nodes[i].colors;
        for (std::size_t k = 0; k < cs.size(); ++k) out << (k ? "," : "") << cs[k];
        out << "\"];\n";
    }
    for (const auto& e : rg.edges)
        out << "  n" << e.u << " -- n" << e.v << " [label=\"{" << e.move.color_pair.first << ","
            << e.move.color_pair.second << "}\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace kempe
