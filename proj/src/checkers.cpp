#include "kempe/checkers.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "kempe/errors.hpp"

namespace kempe {

const char* verdict_status_name(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::pass: return "pass";
        case VerdictStatus::fail: return "fail";
        case VerdictStatus::skipped: return "skipped";
    }
    return "skipped";
}

namespace {

Verdict skipped(std::string check, std::string reason) {
    return {std::move(check), VerdictStatus::skipped, false, std::move(reason)};
}

Verdict outcome(std::string check, bool passed, std::string detail) {
    return {std::move(check), passed ? VerdictStatus::pass : VerdictStatus::fail, true,
            std::move(detail)};
}

bool vertex_in_range(const Graph& g, int v) { return v >= 0 && v < g.vertex_count(); }

// special color a of x via at least one neighbor
bool is_special_pair(const Graph& g, const ListAssignment& L, int x, int a) {
    if (!L.contains(x, a)) return false;
    for (int u : g.neighbors(x))
        if (!L.contains(u, a)) return true;
    return false;
}

int smallest_special_neighbor(const Graph& g, const ListAssignment& L, int x, int a) {
    for (int u : g.neighbors(x))
        if (!L.contains(u, a)) return u;
    return -1;
}

std::vector<int> class_ids(const ReconfigGraph& rg, const KempeClassReport& report) {
    std::vector<int> id(rg.nodes.size(), -1);
    for (int k = 0; k < report.class_count; ++k)
        for (int node : report.classes[k]) id[node] = k;
    return id;
}

std::string describe_classes(const KempeClassReport& r) {
    std::ostringstream s;
    s << r.class_count << " class(es), sizes [";
    for (std::size_t i = 0; i < r.class_sizes.size(); ++i) s << (i ? "," : "") << r.class_sizes[i];
    s << "]";
    return s.str();
}

}  // namespace

Verdict check_lemma3(const Graph& g, const ListAssignment& L, std::size_t node_cap) {
    const std::string check = "lemma3";
    if (!is_connected(g)) return skipped(check, "graph is disconnected");
    if (!is_degree_assignment(g, L)) return skipped(check, "L is not a degree-assignment");

    bool characterized = is_L_colorable_characterized(g, L);
    bool enumerated = !enumerate_L_colorings(g, L, node_cap).empty();
    std::ostringstream detail;
    detail << "characterized=" << (characterized ? "colorable" : "not-colorable")
           << " enumeration=" << (enumerated ? "nonempty" : "empty");
    return outcome(check, characterized == enumerated, detail.str());
}

Verdict check_lemma4(const Graph& g, const ListAssignment& L, std::size_t node_cap) {
    const std::string check = "lemma4";
    if (!is_connected(g)) return skipped(check, "graph is disconnected");
    if (!is_degree_assignment(g, L)) return skipped(check, "L is not a degree-assignment");
    bool surplus = false;
    for (int v = 0; v < g.vertex_count() && !surplus; ++v)
        if (static_cast<int>(L.at(v).size()) > g.degree(v)) surplus = true;
    if (!surplus) return skipped(check, "no vertex has |L(v)| > d(v)");

    ReconfigGraph rg = build_reconfig_graph(g, L, node_cap);
    auto report = kempe_classes(rg);
    return outcome(check, report.class_count <= 1,
                   std::to_string(rg.nodes.size()) + " coloring(s), " + describe_classes(report));
}

Verdict check_lemma5(const Graph& g, const ListAssignment& L, int x, int a,
                     std::size_t node_cap) {
    const std::string check = "lemma5";
    if (!vertex_in_range(g, x)) return skipped(check, "vertex x out of range");
    if (!is_connected(g)) return skipped(check, "graph is disconnected");
    if (!is_degree_assignment(g, L)) return skipped(check, "L is not a degree-assignment");
    if (vertex_connectivity(g) < 2) return skipped(check, "graph is not 2-connected");
    if (!is_special_pair(g, L, x, a))
        return skipped(check, "color " + std::to_string(a) + " is not special for vertex " +
                                  std::to_string(x));

    ReconfigGraph rg = build_reconfig_graph(g, L, node_cap);
    auto report = kempe_classes(rg);
    auto ids = class_ids(rg, report);
    std::set<int> seen;
    std::size_t hits = 0;
    for (std::size_t i = 0; i < rg.nodes.size(); ++i) {
        if (rg.nodes[i].at(x) == a) {
            seen.insert(ids[i]);
            ++hits;
        }
    }
    std::ostringstream detail;
    detail << hits << " coloring(s) with x=" << a << " spread over " << seen.size()
           << " class(es)";
    return outcome(check, seen.size() <= 1, detail.str());
}

Verdict check_lemma6(const Graph& g, const ListAssignment& L, int x, int y, int a, int b,
                     std::size_t node_cap) {
    const std::string check = "lemma6";
    if (!vertex_in_range(g, x) || !vertex_in_range(g, y) || x == y)
        return skipped(check, "need two distinct in-range vertices");
    if (!is_connected(g)) return skipped(check, "graph is disconnected");
    if (!is_degree_assignment(g, L)) return skipped(check, "L is not a degree-assignment");
    if (g.has_edge(x, y)) return skipped(check, "x and y are adjacent");
    if (vertex_connectivity(g) < 3) return skipped(check, "graph is not 3-connected");
    if (!is_special_pair(g, L, x, a)) return skipped(check, "a is not special for x");
    if (!is_special_pair(g, L, y, b)) return skipped(check, "b is not special for y");

    ReconfigGraph rg = build_reconfig_graph(g, L, node_cap);
    auto report = kempe_classes(rg);
    auto ids = class_ids(rg, report);
    std::set<int> seen;
    std::size_t members = 0;
    for (std::size_t i = 0; i < rg.nodes.size(); ++i) {
        if (rg.nodes[i].at(x) == a || rg.nodes[i].at(y) == b) {
            seen.insert(ids[i]);
            ++members;
        }
    }
    if (seen.size() > 1)
        return outcome(check, false,
                       "the union {x=a} + {y=b} spans " + std::to_string(seen.size()) +
                           " classes");

    // replay the constructive route: reduce on g-{x,y} and color greedily by
    // decreasing distance from a special neighbor z of x
    int z = smallest_special_neighbor(g, L, x, a);
    std::map<int, std::vector<int>> forbid;
    for (int w : g.neighbors(x)) forbid[w].push_back(a);
    for (int w : g.neighbors(y)) forbid[w].push_back(b);
    ReducedAssignment reduced = derive_reduced_assignment(g, L, {x, y}, forbid);
    if (!is_degree_assignment(reduced.graph, reduced.lists))
        return outcome(check, false, "reduced assignment is not a degree-assignment");
    int rz = reduced.reduced_index[z];
    if (static_cast<int>(reduced.lists.at(rz).size()) <= reduced.graph.degree(rz))
        return outcome(check, false, "no list surplus at the special neighbor after reduction");

    Coloring sub = greedy_extend(reduced.graph, reduced.lists,
                                 spanning_order(reduced.graph, rz));
    Coloring full;
    full.colors.assign(g.vertex_count(), 0);
    for (std::size_t i = 0; i < reduced.original_vertex.size(); ++i)
        full.colors[reduced.original_vertex[i]] = sub.colors[i];
    full.colors[x] = a;
    full.colors[y] = b;
    if (!is_L_coloring(g, L, full))
        return outcome(check, false, "constructed coloring is not an L-coloring");
    auto idx = rg.node_index(full);
    if (!idx) return outcome(check, false, "constructed coloring missing from the oracle");
    if (!seen.empty() && !seen.count(ids[*idx]))
        return outcome(check, false, "constructed coloring lies outside the union's class");

    std::ostringstream detail;
    detail << members << " coloring(s) in {x=a} + {y=b}, one class; construction lands in both sets";
    return outcome(check, true, detail.str());
}

namespace {

// N^1_x(c(x), c): chain neighbors of x whose list lacks c(x). A neighbor u in
// the chain is necessarily colored c, so this reduces to a direct scan.
std::vector<int> n1_at(const Graph& g, const ListAssignment& L, const Coloring& col,
                       int x, int c) {
    std::vector<int> out;
    for (int u : g.neighbors(x))
        if (col.at(u) == c && !L.contains(u, col.at(x))) out.push_back(u);
    return out;
}

bool exist_nonadjacent_specials_sharing(const Graph& g, const ListAssignment& L, int color) {
    auto report = special_vertices(g, L);
    std::vector<int> holders;
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto colors = report.special_colors(v);
        if (std::binary_search(colors.begin(), colors.end(), color)) holders.push_back(v);
    }
    for (std::size_t i = 0; i < holders.size(); ++i)
        for (std::size_t j = i + 1; j < holders.size(); ++j)
            if (!g.has_edge(holders[i], holders[j])) return true;
    return false;
}

}  // namespace

Verdict check_claim1(const Graph& g, const ListAssignment& L, const Coloring& psi,
                     int x, int c, std::size_t node_cap) {
    const std::string check = "claim1";
    if (!vertex_in_range(g, x)) return skipped(check, "vertex x out of range");
    if (!is_degree_assignment(g, L)) return skipped(check, "L is not a degree-assignment");
    if (!is_L_coloring(g, L, psi)) return skipped(check, "psi is not an L-coloring");
    if (vertex_connectivity(g) < 4) return skipped(check, "graph is not 4-connected");
    if (c == psi.at(x)) return skipped(check, "c equals psi(x)");

    bool hyp_i = g.degree(x) == g.max_degree();
    bool hyp_ii = false;
    auto report = special_vertices(g, L);
    for (int y = 0; y < g.vertex_count() && !hyp_ii; ++y) {
        if (y == x || g.has_edge(x, y)) continue;
        auto colors = report.special_colors(y);
        if (std::binary_search(colors.begin(), colors.end(), c)) hyp_ii = true;
    }
    if (!hyp_i && !hyp_ii)
        return skipped(check, "neither d(x)=Delta nor a non-adjacent special with color c");

    ReconfigGraph rg = build_reconfig_graph(g, L, node_cap);
    auto classes = kempe_classes(rg);
    auto ids = class_ids(rg, classes);
    int psi_class = ids[*rg.node_index(psi)];
    for (int node : classes.classes[psi_class]) {
        const Coloring& phi = rg.nodes[node];
        if (phi.at(x) == psi.at(x) && n1_at(g, L, phi, x, c).empty())
            return outcome(check, true,
                           std::string(hyp_i ? "(i)" : "(ii)") +
                               " holds; class contains a coloring clearing N1 at x");
    }
    return outcome(check, false, "no coloring in psi's class keeps psi(x) and clears N1");
}

Verdict check_claim2(const Graph& g, const ListAssignment& L, const Coloring& phi,
                     int v, int a, std::size_t node_cap) {
    const std::string check = "claim2";
    if (!vertex_in_range(g, v)) return skipped(check, "vertex v out of range");
    if (!is_degree_assignment(g, L)) return skipped(check, "L is not a degree-assignment");
    if (!is_L_coloring(g, L, phi)) return skipped(check, "phi is not an L-coloring");
    if (vertex_connectivity(g) < 4) return skipped(check, "graph is not 4-connected");
    if (g.degree(v) != g.max_degree()) return skipped(check, "v does not have maximum degree");
    if (a == phi.at(v)) return skipped(check, "a equals phi(v)");
    if (!is_special_pair(g, L, v, a)) return skipped(check, "a is not special for v");
    BoundarySets bounds = boundary_sets(g, L, phi, v, a);
    if (!bounds.n1.empty()) return skipped(check, "N1 boundary is nonempty");
    if (bounds.n2.empty()) return skipped(check, "N2 boundary is empty");

    if (exist_nonadjacent_specials_sharing(g, L, a))
        return outcome(check, true, "non-adjacent special vertices share special color a");

    ReconfigGraph rg = build_reconfig_graph(g, L, node_cap);
    auto classes = kempe_classes(rg);
    auto ids = class_ids(rg, classes);
    int phi_class = ids[*rg.node_index(phi)];
    for (int node : classes.classes[phi_class]) {
        const Coloring& cand = rg.nodes[node];
        if (cand.at(v) != phi.at(v)) continue;
        BoundarySets bs = boundary_sets(g, L, cand, v, a);
        if (bs.n1.empty() && bs.n2.empty())
            return outcome(check, true, "class contains a coloring clearing N1 and N2 at v");
    }
    return outcome(check, false,
                   "no same-class coloring clears N1 and N2, and no special pair shares a");
}

Verdict check_claim3(const Graph& g, const ListAssignment& L, int x, int y, int c,
                     std::size_t node_cap) {
    const std::string check = "claim3";
    if (!vertex_in_range(g, x) || !vertex_in_range(g, y) || x == y)
        return skipped(check, "need two distinct in-range vertices");
    if (!is_degree_assignment(g, L)) return skipped(check, "L is not a degree-assignment");
    if (vertex_connectivity(g) < 4) return skipped(check, "graph is not 4-connected");
    if (g.has_edge(x, y)) return skipped(check, "x and y are adjacent");
    if (!is_special_pair(g, L, x, c)) return skipped(check, "c is not special for x");
    if (!is_special_pair(g, L, y, c)) return skipped(check, "c is not special for y");

    ReconfigGraph rg = build_reconfig_graph(g, L, node_cap);
    auto report = kempe_classes(rg);
    return outcome(check, report.class_count <= 1,
                   std::to_string(rg.nodes.size()) + " coloring(s), " + describe_classes(report));
}

}  // namespace kempe
