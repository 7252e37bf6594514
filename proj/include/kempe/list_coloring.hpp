#ifndef KEMPE_LIST_COLORING_HPP
#define KEMPE_LIST_COLORING_HPP

#include <compare>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "kempe/graph.hpp"

namespace kempe {

/// Per-vertex color lists over positive integer colors. Lists are stored
/// sorted ascending without duplicates; the palette is the union of all
/// lists.
struct ListAssignment {
    std::vector<std::vector<int>> lists;

    ListAssignment() = default;
    explicit ListAssignment(std::vector<std::vector<int>> ls);

    /// Same list at every vertex.
    static ListAssignment uniform(int n, std::vector<int> colors);
    /// The identical assignment {1..k} everywhere.
    static ListAssignment identical_range(int n, int k);

    int size() const { return static_cast<int>(lists.size()); }
    const std::vector<int>& at(int v) const { return lists.at(v); }
    bool contains(int v, int color) const;
    std::vector<int> palette() const;

    bool operator==(const ListAssignment&) const = default;
};

/// Total map vertex -> color.
struct Coloring {
    std::vector<int> colors;

    int at(int v) const { return colors.at(v); }
    int size() const { return static_cast<int>(colors.size()); }

    auto operator<=>(const Coloring&) const = default;
};

/// Per-block color sets S_1..S_k certifying that an assignment is blockwise
/// uniform; aligned with BlockDecomposition::blocks order.
struct BlockwiseWitness {
    std::vector<std::vector<int>> sets;
};

/// One row per (special vertex, special neighbor) pair: the colors in
/// L(vertex) \ L(neighbor).
struct SpecialEntry {
    int vertex;
    int neighbor;
    std::vector<int> colors;

    bool operator==(const SpecialEntry&) const = default;
};

struct SpecialReport {
    std::vector<SpecialEntry> entries;  // sorted by (vertex, neighbor)

    bool is_special(int v) const;
    /// Union of special colors of v over all its special neighbors.
    std::vector<int> special_colors(int v) const;
    /// Neighbors u of v with `color` in L(v) \ L(u).
    std::vector<int> special_neighbors_for(int v, int color) const;
};

/// L' on g minus some vertices, reindexed densely alongside the subgraph.
struct ReducedAssignment {
    Graph graph;
    ListAssignment lists;
    std::vector<int> original_vertex;  // new -> old
    std::vector<int> reduced_index;    // old -> new, -1 if removed
};

bool is_degree_assignment(const Graph& g, const ListAssignment& L);
bool is_proper(const Graph& g, const Coloring& c);
bool is_L_coloring(const Graph& g, const ListAssignment& L, const Coloring& c);

/// Color the vertices in `order` greedily with the smallest list color not
/// used on an already-colored neighbor. The order must cover all of g.
/// Throws GreedyFailure naming the stuck vertex if some list is exhausted.
Coloring greedy_extend(const Graph& g, const ListAssignment& L, const VertexOrder& order);

inline constexpr std::size_t kNoCap = std::numeric_limits<std::size_t>::max();

/// All L-colorings in lexicographic order of the color vector.
/// Throws ResourceCapError once more than `cap` colorings exist.
std::vector<Coloring> enumerate_L_colorings(const Graph& g, const ListAssignment& L,
                                            std::size_t cap = kNoCap);

/// Witness sets if L is blockwise uniform on the Gallai tree g, absent
/// otherwise (also absent when g is disconnected, not a Gallai tree, or has
/// no blocks at all). Non-cut vertices force their block's set; only blocks
/// consisting purely of cut vertices are searched.
std::optional<BlockwiseWitness> is_blockwise_uniform(const Graph& g, const ListAssignment& L);

/// Independent re-check of the three defining witness constraints.
bool verify_blockwise_witness(const Graph& g, const ListAssignment& L,
                              const BlockwiseWitness& w);

/// Colorability for connected g and degree-assignment L, decided without
/// enumeration: colorable iff NOT (Gallai tree with blockwise uniform L).
/// Throws std::invalid_argument if the preconditions fail.
bool is_L_colorable_characterized(const Graph& g, const ListAssignment& L);

SpecialReport special_vertices(const Graph& g, const ListAssignment& L);

/// L'(w) = L(w) \ forbid(w) on g - removed. forbid may only name vertices
/// outside `removed`; an emptied list is an error naming the vertex.
ReducedAssignment derive_reduced_assignment(const Graph& g, const ListAssignment& L,
                                            const std::vector<int>& removed,
                                            const std::map<int, std::vector<int>>& forbid);

}  // namespace kempe

#endif
