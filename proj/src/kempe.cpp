#include "kempe/kempe.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace kempe {

int swapped_color(const KempeMove& m, int current) {
    if (current == m.color_pair.first) return m.color_pair.second;
    if (current == m.color_pair.second) return m.color_pair.first;
    throw std::invalid_argument("swapped_color: color " + std::to_string(current) +
                                " is not in the move's pair");
}

KempeMove kempe_chain(const Graph& g, const Coloring& c, int v, int b) {
    if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("kempe_chain: vertex out of range");
    const int a = c.at(v);
    if (a == b) throw std::invalid_argument("kempe_chain: b must differ from c(v)");

    KempeMove m;
    m.color_pair = std::minmax(a, b);
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<int> stack{v};
    seen[v] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        m.chain.push_back(u);
        for (int w : g.neighbors(u)) {
            if (!seen[w] && (c.at(w) == a || c.at(w) == b)) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    std::sort(m.chain.begin(), m.chain.end());
    return m;
}

bool is_genuine_chain(const Graph& g, const Coloring& c, const KempeMove& m) {
    if (m.chain.empty() || m.color_pair.first >= m.color_pair.second) return false;
    for (int u : m.chain) {
        if (u < 0 || u >= g.vertex_count()) return false;
        if (c.at(u) != m.color_pair.first && c.at(u) != m.color_pair.second) return false;
    }
    int anchor = m.chain.front();
    int other = c.at(anchor) == m.color_pair.first ? m.color_pair.second : m.color_pair.first;
    return kempe_chain(g, c, anchor, other) == m;
}

Coloring apply_move(const Graph& g, const Coloring& c, const KempeMove& m) {
    if (!is_genuine_chain(g, c, m))
        throw std::invalid_argument("apply_move: move is not a Kempe chain of this coloring");
    Coloring out = c;
    for (int u : m.chain) out.colors[u] = swapped_color(m, c.at(u));
    return out;
}

bool is_L_valid(const ListAssignment& L, const Coloring& c, const KempeMove& m) {
    for (int u : m.chain)
        if (!L.contains(u, swapped_color(m, c.at(u)))) return false;
    return true;
}

std::vector<KempeMove> valid_moves(const Graph& g, const ListAssignment& L, const Coloring& c) {
    const int n = g.vertex_count();
    std::vector<KempeMove> out;
    const std::vector<int> palette = L.palette();
    std::vector<char> in_pair(n, 0);

    for (std::size_t i = 0; i < palette.size(); ++i) {
        for (std::size_t j = i + 1; j < palette.size(); ++j) {
            const int a = palette[i], b = palette[j];
            for (int v = 0; v < n; ++v) in_pair[v] = (c.at(v) == a || c.at(v) == b);
            std::vector<char> seen(n, 0);
            for (int v = 0; v < n; ++v) {
                if (!in_pair[v] || seen[v]) continue;
                KempeMove m;
                m.color_pair = {a, b};
                std::vector<int> stack{v};
                seen[v] = 1;
                while (!stack.empty()) {
                    int u = stack.back();
                    stack.pop_back();
                    m.chain.push_back(u);
                    for (int w : g.neighbors(u)) {
                        if (in_pair[w] && !seen[w]) {
                            seen[w] = 1;
                            stack.push_back(w);
                        }
                    }
                }
                std::sort(m.chain.begin(), m.chain.end());
                if (is_L_valid(L, c, m)) out.push_back(std::move(m));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

BoundarySets boundary_sets(const Graph& g, const ListAssignment& L, const Coloring& c,
                           int v, int a) {
    if (a == c.at(v)) throw std::invalid_argument("boundary_sets: a must differ from c(v)");
    const int fv = c.at(v);
    KempeMove m = kempe_chain(g, c, v, a);
    std::vector<int> dist = bfs_distances(g, v);

    BoundarySets out;
    for (int u : m.chain) {
        if (u == v) continue;
        if (dist[u] == 1) {
            if (!L.contains(u, fv)) out.n1.push_back(u);
        } else if (dist[u] == 2) {
            if (!L.contains(u, a)) out.n2.push_back(u);
        } else if (dist[u] >= 3) {
            if (!L.contains(u, fv) || !L.contains(u, a)) out.n3plus.push_back(u);
        }
    }
    return out;
}

}  // namespace kempe
