#include "support.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace support {

using kempe::Coloring;
using kempe::Graph;
using kempe::ListAssignment;

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

Graph prism_graph() {
    return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5},
                                 {0, 3}, {1, 4}, {2, 5}});
}

Graph octahedron_graph() {
    // parts {0,1}, {2,3}, {4,5}
    Graph g(6);
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            if (u / 2 != v / 2) g.add_edge(u, v);
    return g;
}

Graph two_triangles_shared_vertex() {
    return Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
}

Graph cube_graph() {
    Graph g(8);
    for (int u = 0; u < 8; ++u)
        for (int b = 0; b < 3; ++b)
            if (int v = u ^ (1 << b); u < v) g.add_edge(u, v);
    return g;
}

Graph circulant(int n, const std::vector<int>& offsets) {
    Graph g(n);
    for (int v = 0; v < n; ++v)
        for (int o : offsets) g.add_edge(v, (v + o) % n);
    return g;
}

namespace {

std::vector<int> canonical_bits(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best;
    do {
        std::vector<int> bits;
        bits.reserve(n * (n - 1) / 2);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) bits.push_back(g.has_edge(perm[i], perm[j]) ? 1 : 0);
        if (best.empty() || bits < best) best = std::move(bits);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace

std::vector<Graph> connected_graphs_up_to_iso(int n) {
    if (n < 1 || n > 7) throw std::invalid_argument("corpus limited to 1..7 vertices");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    std::set<std::vector<int>> seen;
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (1ULL << pairs.size()); ++mask) {
        Graph g(n);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1) g.add_edge(pairs[i].first, pairs[i].second);
        if (!kempe::is_connected(g)) continue;
        if (seen.insert(canonical_bits(g)).second) out.push_back(std::move(g));
    }
    return out;
}

std::vector<Coloring> naive_all_L_colorings(const Graph& g, const ListAssignment& L) {
    const int n = g.vertex_count();
    std::vector<Coloring> out;
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        Coloring c;
        c.colors.resize(n);
        for (int v = 0; v < n; ++v) c.colors[v] = L.at(v)[idx[v]];
        bool proper = true;
        for (int v = 0; v < n && proper; ++v)
            for (int w : g.neighbors(v))
                if (w > v && c.colors[v] == c.colors[w]) {
                    proper = false;
                    break;
                }
        if (proper) out.push_back(std::move(c));
        // odometer
        int v = n - 1;
        while (v >= 0 && ++idx[v] == L.at(v).size()) idx[v--] = 0;
        if (v < 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool naive_one_move_apart(const Graph& g, const ListAssignment& L,
                          const Coloring& c1, const Coloring& c2) {
    const int n = g.vertex_count();
    std::vector<int> diff;
    for (int v = 0; v < n; ++v)
        if (c1.at(v) != c2.at(v)) diff.push_back(v);
    if (diff.empty()) return false;

    // the two colors involved must be the same unordered pair everywhere
    std::set<int> colors;
    for (int v : diff) {
        colors.insert(c1.at(v));
        colors.insert(c2.at(v));
    }
    if (colors.size() != 2) return false;
    int a = *colors.begin(), b = *colors.rbegin();
    for (int v : diff) {
        int expect = c1.at(v) == a ? b : a;
        if (c1.at(v) != a && c1.at(v) != b) return false;
        if (c2.at(v) != expect) return false;
    }

    // diff must be one connected component of the {a,b}-induced subgraph of c1
    std::set<int> diff_set(diff.begin(), diff.end());
    std::vector<int> stack{diff[0]};
    std::set<int> seen{diff[0]};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(u)) {
            if (seen.count(w)) continue;
            if (c1.at(w) == a || c1.at(w) == b) {
                seen.insert(w);
                stack.push_back(w);
            }
        }
    }
    if (seen != diff_set) return false;  // not connected or not maximal

    // both endpoints must be L-colorings
    for (int v = 0; v < n; ++v)
        if (!L.contains(v, c1.at(v)) || !L.contains(v, c2.at(v))) return false;
    return true;
}

int naive_class_count(const Graph& g, const ListAssignment& L) {
    auto nodes = naive_all_L_colorings(g, L);
    const int m = static_cast<int>(nodes.size());
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (naive_one_move_apart(g, L, nodes[i], nodes[j])) parent[find(i)] = find(j);
    std::set<int> roots;
    for (int i = 0; i < m; ++i) roots.insert(find(i));
    return static_cast<int>(roots.size());
}

std::uint64_t Rng::next() {
    // xorshift64*
    state ^= state >> 12;
    state ^= state << 25;
    state ^= state >> 27;
    return state * 0x2545F4914F6CDD1DULL;
}

std::uint64_t Rng::below(std::uint64_t bound) {
    return (static_cast<unsigned __int128>(next()) * bound) >> 64;
}

bool Rng::chance(double p) { return next() < static_cast<std::uint64_t>(p * 18446744073709551615.0); }

Graph random_connected_graph(int n, double p, Rng& rng) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, static_cast<int>(rng.below(v)));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v) && rng.chance(p)) g.add_edge(u, v);
    return g;
}

ListAssignment random_tight_lists(const Graph& g, int palette, Rng& rng) {
    const int n = g.vertex_count();
    ListAssignment L;
    L.lists.resize(n);
    std::vector<int> pool(palette);
    for (int v = 0; v < n; ++v) {
        std::iota(pool.begin(), pool.end(), 1);
        const int d = std::max(1, g.degree(v));
        for (int i = 0; i < d; ++i)
            std::swap(pool[i], pool[i + static_cast<int>(rng.below(palette - i))]);
        L.lists[v].assign(pool.begin(), pool.begin() + d);
        std::sort(L.lists[v].begin(), L.lists[v].end());
    }
    return L;
}

std::vector<std::vector<int>> all_simple_cycles(const Graph& g) {
    const int n = g.vertex_count();
    std::set<std::vector<int>> cycles;
    // DFS paths from each start vertex; close a cycle when the start is
    // adjacent to the path end and the path has length >= 3
    std::vector<int> path;
    std::vector<char> used(n, 0);
    std::function<void(int, int)> extend = [&](int start, int u) {
        for (int w : g.neighbors(u)) {
            if (w == start && path.size() >= 3) {
                std::vector<int> cyc = path;
                std::sort(cyc.begin(), cyc.end());
                cycles.insert(cyc);
            }
            if (w > start && !used[w]) {
                used[w] = 1;
                path.push_back(w);
                extend(start, w);
                path.pop_back();
                used[w] = 0;
            }
        }
    };
    for (int start = 0; start < n; ++start) {
        path = {start};
        std::fill(used.begin(), used.end(), 0);
        used[start] = 1;
        extend(start, start);
    }
    return {cycles.begin(), cycles.end()};
}

}  // namespace support
