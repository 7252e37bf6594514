#include "kempe/list_coloring.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>

#include "kempe/errors.hpp"

namespace kempe {

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

void ensure_lists_cover(const Graph& g, const ListAssignment& L, const char* who) {
    if (L.size() != g.vertex_count())
        throw std::invalid_argument(std::string(who) + ": assignment covers " +
                                    std::to_string(L.size()) + " vertices, graph has " +
                                    std::to_string(g.vertex_count()));
    for (int v = 0; v < L.size(); ++v)
        if (L.at(v).empty())
            throw std::invalid_argument(std::string(who) + ": empty list at vertex " +
                                        std::to_string(v));
}

void ensure_coloring_covers(const Graph& g, const Coloring& c, const char* who) {
    if (c.size() != g.vertex_count())
        throw std::invalid_argument(std::string(who) + ": coloring covers " +
                                    std::to_string(c.size()) + " vertices, graph has " +
                                    std::to_string(g.vertex_count()));
}

}  // namespace

ListAssignment::ListAssignment(std::vector<std::vector<int>> ls) : lists(std::move(ls)) {
    for (auto& l : lists) l = sorted_unique(std::move(l));
}

ListAssignment ListAssignment::uniform(int n, std::vector<int> colors) {
    colors = sorted_unique(std::move(colors));
    ListAssignment L;
    L.lists.assign(n, colors);
    return L;
}

ListAssignment ListAssignment::identical_range(int n, int k) {
    std::vector<int> colors(k);
    for (int i = 0; i < k; ++i) colors[i] = i + 1;
    return uniform(n, std::move(colors));
}

bool ListAssignment::contains(int v, int color) const {
    const auto& l = lists.at(v);
    return std::binary_search(l.begin(), l.end(), color);
}

std::vector<int> ListAssignment::palette() const {
    std::vector<int> all;
    for (const auto& l : lists) all.insert(all.end(), l.begin(), l.end());
    return sorted_unique(std::move(all));
}

bool SpecialReport::is_special(int v) const {
    return std::any_of(entries.begin(), entries.end(),
                       [v](const SpecialEntry& e) { return e.vertex == v; });
}

std::vector<int> SpecialReport::special_colors(int v) const {
    std::vector<int> out;
    for (const auto& e : entries)
        if (e.vertex == v) out.insert(out.end(), e.colors.begin(), e.colors.end());
    return sorted_unique(std::move(out));
}

std::vector<int> SpecialReport::special_neighbors_for(int v, int color) const {
    std::vector<int> out;
    for (const auto& e : entries)
        if (e.vertex == v && std::binary_search(e.colors.begin(), e.colors.end(), color))
            out.push_back(e.neighbor);
    return out;
}

bool is_degree_assignment(const Graph& g, const ListAssignment& L) {
    ensure_lists_cover(g, L, "is_degree_assignment");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (static_cast<int>(L.at(v).size()) < g.degree(v)) return false;
    return true;
}

bool is_proper(const Graph& g, const Coloring& c) {
    ensure_coloring_covers(g, c, "is_proper");
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int w : g.neighbors(v))
            if (w > v && c.at(v) == c.at(w)) return false;
    return true;
}

bool is_L_coloring(const Graph& g, const ListAssignment& L, const Coloring& c) {
    ensure_lists_cover(g, L, "is_L_coloring");
    ensure_coloring_covers(g, c, "is_L_coloring");
    if (!is_proper(g, c)) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!L.contains(v, c.at(v))) return false;
    return true;
}

Coloring greedy_extend(const Graph& g, const ListAssignment& L, const VertexOrder& order) {
    ensure_lists_cover(g, L, "greedy_extend");
    const int n = g.vertex_count();
    if (static_cast<int>(order.order.size()) != n)
        throw std::invalid_argument("greedy_extend: order must cover every vertex");
    std::vector<char> in_order(n, 0);
    for (int v : order.order) {
        if (v < 0 || v >= n || in_order[v])
            throw std::invalid_argument("greedy_extend: order is not a permutation");
        in_order[v] = 1;
    }

    Coloring c;
    c.colors.assign(n, 0);
    std::vector<char> colored(n, 0);
    for (int v : order.order) {
        std::set<int> used;
        for (int w : g.neighbors(v))
            if (colored[w]) used.insert(c.colors[w]);
        int picked = 0;
        for (int col : L.at(v)) {
            if (!used.count(col)) {
                picked = col;
                break;
            }
        }
        if (picked == 0)
            throw GreedyFailure("greedy_extend: no available color at vertex " + std::to_string(v),
                                v);
        c.colors[v] = picked;
        colored[v] = 1;
    }
    return c;
}

std::vector<Coloring> enumerate_L_colorings(const Graph& g, const ListAssignment& L,
                                            std::size_t cap) {
    ensure_lists_cover(g, L, "enumerate_L_colorings");
    const int n = g.vertex_count();
    std::vector<Coloring> out;
    if (n == 0) {
        out.push_back(Coloring{});
        return out;
    }
    std::vector<int> partial(n, 0);
    // ascending vertex order with smallest-color-first branching yields
    // lexicographic output directly
    auto conflict = [&](int v, int col) {
        for (int w : g.neighbors(v))
            if (w < v && partial[w] == col) return true;
        return false;
    };
    std::vector<std::size_t> choice(n, 0);
    int v = 0;
    while (v >= 0) {
        if (v == n) {
            if (out.size() >= cap) throw ResourceCapError(cap);
            out.push_back(Coloring{partial});
            --v;
            continue;
        }
        const auto& list = L.at(v);
        bool advanced = false;
        while (choice[v] < list.size()) {
            int col = list[choice[v]++];
            if (!conflict(v, col)) {
                partial[v] = col;
                ++v;
                advanced = true;
                break;
            }
        }
        if (!advanced) {
            choice[v] = 0;
            --v;
        }
    }
    return out;
}

namespace {

enum class BlockType { clique, odd_cycle, neither };

BlockType classify_block(const Graph& g, const std::vector<int>& block) {
    bool clique = true;
    for (std::size_t i = 0; i < block.size() && clique; ++i)
        for (std::size_t j = i + 1; j < block.size() && clique; ++j)
            if (!g.has_edge(block[i], block[j])) clique = false;
    if (clique) return BlockType::clique;
    if (block.size() >= 3 && block.size() % 2 == 1) {
        bool two_regular = true;
        for (int v : block) {
            int d = 0;
            for (int w : g.neighbors(v))
                if (std::binary_search(block.begin(), block.end(), w)) ++d;
            if (d != 2) two_regular = false;
        }
        if (two_regular) return BlockType::odd_cycle;
    }
    return BlockType::neither;
}

void subsets_of_size(const std::vector<int>& pool, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < pool.size(); ++i) {
            if (pool.size() - i < static_cast<std::size_t>(k) - cur.size()) break;
            cur.push_back(pool[i]);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

}  // namespace

bool verify_blockwise_witness(const Graph& g, const ListAssignment& L,
                              const BlockwiseWitness& w) {
    auto decomp = biconnected_blocks(g);
    const auto& blocks = decomp.blocks;
    if (w.sets.size() != blocks.size()) return false;

    for (std::size_t i = 0; i < blocks.size(); ++i) {
        switch (classify_block(g, blocks[i])) {
            case BlockType::clique:
                if (w.sets[i].size() != blocks[i].size() - 1) return false;
                break;
            case BlockType::odd_cycle:
                if (w.sets[i].size() != 2) return false;
                break;
            case BlockType::neither:
                return false;
        }
    }
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        for (std::size_t j = i + 1; j < blocks.size(); ++j) {
            std::vector<int> shared;
            std::set_intersection(blocks[i].begin(), blocks[i].end(), blocks[j].begin(),
                                  blocks[j].end(), std::back_inserter(shared));
            if (shared.empty()) continue;
            std::vector<int> common;
            std::set_intersection(w.sets[i].begin(), w.sets[i].end(), w.sets[j].begin(),
                                  w.sets[j].end(), std::back_inserter(common));
            if (!common.empty()) return false;
        }
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> expected;
        for (std::size_t i = 0; i < blocks.size(); ++i)
            if (std::binary_search(blocks[i].begin(), blocks[i].end(), v))
                expected.insert(expected.end(), w.sets[i].begin(), w.sets[i].end());
        std::sort(expected.begin(), expected.end());
        expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
        if (expected != L.at(v)) return false;
    }
    return true;
}

std::optional<BlockwiseWitness> is_blockwise_uniform(const Graph& g, const ListAssignment& L) {
    if (g.vertex_count() == 0 || !is_connected(g)) return std::nullopt;
    ensure_lists_cover(g, L, "is_blockwise_uniform");
    auto decomp = biconnected_blocks(g);
    const auto& blocks = decomp.blocks;
    if (blocks.empty()) return std::nullopt;  // single vertex: empty union can't equal L(v)

    const std::size_t k = blocks.size();
    std::vector<int> required_size(k);
    for (std::size_t i = 0; i < k; ++i) {
        switch (classify_block(g, blocks[i])) {
            case BlockType::clique:
                required_size[i] = static_cast<int>(blocks[i].size()) - 1;
                break;
            case BlockType::odd_cycle:
                required_size[i] = 2;
                break;
            case BlockType::neither:
                return std::nullopt;  // not a Gallai tree
        }
    }

    std::vector<char> is_cut(g.vertex_count(), 0);
    for (int v : decomp.cut_vertices) is_cut[v] = 1;

    // a non-cut vertex lies in exactly one block, so its whole list is forced
    // to be that block's set
    std::vector<std::vector<int>> sets(k);
    std::vector<char> forced(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        for (int v : blocks[i]) {
            if (is_cut[v]) continue;
            if (!forced[i]) {
                sets[i] = L.at(v);
                forced[i] = 1;
            } else if (sets[i] != L.at(v)) {
                return std::nullopt;
            }
        }
        if (forced[i] && static_cast<int>(sets[i].size()) != required_size[i]) return std::nullopt;
    }

    // remaining blocks consist purely of cut vertices; backtrack over
    // candidate subsets of the members' common colors
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < k; ++i)
        if (!forced[i]) open.push_back(i);

    std::vector<std::vector<std::vector<int>>> candidates(open.size());
    for (std::size_t oi = 0; oi < open.size(); ++oi) {
        std::size_t i = open[oi];
        std::vector<int> common = L.at(blocks[i][0]);
        for (int v : blocks[i]) {
            std::vector<int> next;
            std::set_intersection(common.begin(), common.end(), L.at(v).begin(), L.at(v).end(),
                                  std::back_inserter(next));
            common = std::move(next);
        }
        if (static_cast<int>(common.size()) < required_size[i]) return std::nullopt;
        subsets_of_size(common, required_size[i], candidates[oi]);
    }

    BlockwiseWitness witness;
    std::function<bool(std::size_t)> search = [&](std::size_t oi) -> bool {
        if (oi == open.size()) {
            witness.sets = sets;
            return verify_blockwise_witness(g, L, witness);
        }
        for (const auto& cand : candidates[oi]) {
            sets[open[oi]] = cand;
            if (search(oi + 1)) return true;
        }
        sets[open[oi]].clear();
        return false;
    };
    if (!search(0)) {
        // even with no open blocks the forced sets still need the full check
        return std::nullopt;
    }
    return witness;
}

bool is_L_colorable_characterized(const Graph& g, const ListAssignment& L) {
    if (!is_connected(g))
        throw std::invalid_argument("is_L_colorable_characterized: graph must be connected");
    if (!is_degree_assignment(g, L))
        throw std::invalid_argument(
            "is_L_colorable_characterized: L must be a degree-assignment");
    if (g.vertex_count() == 1) return true;  // nonempty list suffices
    return !(is_gallai_tree(g) && is_blockwise_uniform(g, L).has_value());
}

SpecialReport special_vertices(const Graph& g, const ListAssignment& L) {
    ensure_lists_cover(g, L, "special_vertices");
    SpecialReport report;
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (int u : g.neighbors(v)) {
            std::vector<int> diff;
            std::set_difference(L.at(v).begin(), L.at(v).end(), L.at(u).begin(), L.at(u).end(),
                                std::back_inserter(diff));
            if (!diff.empty()) report.entries.push_back({v, u, std::move(diff)});
        }
    }
    return report;
}

ReducedAssignment derive_reduced_assignment(const Graph& g, const ListAssignment& L,
                                            const std::vector<int>& removed,
                                            const std::map<int, std::vector<int>>& forbid) {
    ensure_lists_cover(g, L, "derive_reduced_assignment");
    std::vector<char> gone(g.vertex_count(), 0);
    for (int v : removed) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("derive_reduced_assignment: removed vertex out of range");
        gone[v] = 1;
    }
    for (const auto& [v, colors] : forbid) {
        (void)colors;
        if (v < 0 || v >= g.vertex_count() || gone[v])
            throw std::invalid_argument(
                "derive_reduced_assignment: forbid names removed or invalid vertex " +
                std::to_string(v));
    }

    auto sub = remove_vertices(g, removed);
    ReducedAssignment out;
    out.graph = std::move(sub.graph);
    out.original_vertex = std::move(sub.original_vertex);
    out.reduced_index = std::move(sub.reduced_index);

    out.lists.lists.resize(out.original_vertex.size());
    for (std::size_t i = 0; i < out.original_vertex.size(); ++i) {
        int old = out.original_vertex[i];
        std::vector<int> list = L.at(old);
        auto it = forbid.find(old);
        if (it != forbid.end()) {
            std::vector<int> banned = sorted_unique(it->second);
            std::vector<int> kept;
            std::set_difference(list.begin(), list.end(), banned.begin(), banned.end(),
                                std::back_inserter(kept));
            list = std::move(kept);
        }
        if (list.empty())
            throw std::runtime_error("derive_reduced_assignment: list emptied at vertex " +
                                     std::to_string(old));
        out.lists.lists[i] = std::move(list);
    }
    return out;
}

}  // namespace kempe
