#ifndef KEMPE_RECONFIG_HPP
#define KEMPE_RECONFIG_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kempe/kempe.hpp"

namespace kempe {

inline constexpr std::size_t kDefaultNodeCap = 1'000'000;

/// The reconfiguration graph: every L-coloring as a node, one edge per
/// L-valid Kempe change between two of them.
struct ReconfigGraph {
    struct Edge {
        int u;
        int v;  // u < v
        KempeMove move;
    };

    std::vector<Coloring> nodes;  // lexicographically sorted
    std::vector<Edge> edges;
    // adjacency[i] = (neighbor node, edge index), sorted by neighbor
    std::vector<std::vector<std::pair<int, int>>> adjacency;

    std::optional<int> node_index(const Coloring& c) const;
};

/// Connected components of the reconfiguration graph, ordered by smallest
/// node index; the witness of a class is its smallest node.
struct KempeClassReport {
    int class_count = 0;
    std::vector<std::vector<int>> classes;
    std::vector<int> class_sizes;
    std::vector<Coloring> witnesses;
};

/// Materialize the full reconfiguration graph. Throws ResourceCapError when
/// the number of L-colorings exceeds node_cap.
ReconfigGraph build_reconfig_graph(const Graph& g, const ListAssignment& L,
                                   std::size_t node_cap = kDefaultNodeCap);

KempeClassReport kempe_classes(const ReconfigGraph& rg);

/// A shortest move sequence transforming `from` into `to`, or absent when
/// they lie in different Kempe classes. Both colorings must be nodes.
std::optional<std::vector<KempeMove>> find_path(const ReconfigGraph& rg,
                                                const Coloring& from, const Coloring& to);

/// True iff the reconfiguration graph has at most one component. Zero or one
/// colorings count as all-equivalent (the statement is universally
/// quantified).
bool is_all_equivalent(const Graph& g, const ListAssignment& L,
                       std::size_t node_cap = kDefaultNodeCap);

/// DOT rendering: node label = color vector, edge label = color pair.
std::string to_dot(const ReconfigGraph& rg);

}  // namespace kempe

#endif
