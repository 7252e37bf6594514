#ifndef KEMPE_GRAPH_HPP
#define KEMPE_GRAPH_HPP

#include <optional>
#include <utility>
#include <vector>

namespace kempe {

/// Undirected simple graph over dense vertex indices 0..n-1.
/// Neighbor lists are kept sorted ascending; there are no self-loops and
/// adjacency is symmetric by construction.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n >= 0 ? static_cast<std::size_t>(n) : 0) {}

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const;

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;

    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    int max_degree() const;
    int min_degree() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::vector<int>> adj_;
    void check_vertex(int v) const;
};

/// BFS layers from a vertex: layers[k-1] holds the vertices at distance
/// exactly k. Vertices the BFS never reaches are listed separately.
struct DistanceLayers {
    std::vector<std::vector<int>> layers;
    std::vector<int> unreachable;
};

/// Maximal 2-connected blocks plus the cut vertices joining them. Bridges
/// appear as 2-vertex blocks; an isolated vertex yields no block.
struct BlockDecomposition {
    std::vector<std::vector<int>> blocks;
    std::vector<int> cut_vertices;
};

/// A vertex ordering used to drive greedy coloring: optional pinned vertex
/// first, then non-increasing BFS distance from the root, root last.
struct VertexOrder {
    std::vector<int> order;
    int root = -1;
    std::optional<int> pinned_first;
};

enum class GraphClass { complete, triangular_prism, odd_cycle, none };

bool is_connected(const Graph& g);

/// Distances from v, -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int v);

DistanceLayers distance_layers(const Graph& g, int v);

/// Minimum vertex cut size, with the convention kappa(K_n) = n-1.
/// Dispatches to subset brute force for small n and a max-flow method above;
/// both are exposed so tests can compare them on the overlap.
int vertex_connectivity(const Graph& g);
int vertex_connectivity_bruteforce(const Graph& g);
int vertex_connectivity_flow(const Graph& g);

BlockDecomposition biconnected_blocks(const Graph& g);

/// True iff every block is a clique (any size) or an odd cycle.
bool is_gallai_tree(const Graph& g);

GraphClass classify_exception(const Graph& g);
const char* graph_class_name(GraphClass c);

VertexOrder spanning_order(const Graph& g, int root,
                           std::optional<int> pinned_first = std::nullopt);

/// Subgraph induced by all vertices except `removed`, reindexed densely.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> original_vertex;  // new index -> old index, ascending
    std::vector<int> reduced_index;    // old index -> new index, -1 if removed
};

InducedSubgraph remove_vertices(const Graph& g, const std::vector<int>& removed);

}  // namespace kempe

#endif
