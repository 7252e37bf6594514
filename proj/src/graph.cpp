#include "kempe/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

namespace kempe {

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= vertex_count())
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0, " +
                                    std::to_string(vertex_count()) + ")");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    auto insert_sorted = [](std::vector<int>& vec, int x) {
        auto it = std::lower_bound(vec.begin(), vec.end(), x);
        if (it == vec.end() || *it != x) vec.insert(it, x);
    };
    insert_sorted(adj_[u], v);
    insert_sorted(adj_[v], u);
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

int Graph::edge_count() const {
    std::size_t total = 0;
    for (const auto& nb : adj_) total += nb.size();
    return static_cast<int>(total / 2);
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
    return d;
}

int Graph::min_degree() const {
    if (adj_.empty()) return 0;
    int d = vertex_count();
    for (const auto& nb : adj_) d = std::min(d, static_cast<int>(nb.size()));
    return d;
}

std::vector<int> bfs_distances(const Graph& g, int v) {
    const int n = g.vertex_count();
    if (v < 0 || v >= n) throw std::invalid_argument("bfs_distances: vertex out of range");
    std::vector<int> dist(n, -1);
    std::queue<int> q;
    dist[v] = 0;
    q.push(v);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

DistanceLayers distance_layers(const Graph& g, int v) {
    auto dist = bfs_distances(g, v);
    DistanceLayers out;
    int max_dist = *std::max_element(dist.begin(), dist.end());
    out.layers.resize(std::max(0, max_dist));
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (dist[u] < 0)
            out.unreachable.push_back(u);
        else if (dist[u] > 0)
            out.layers[dist[u] - 1].push_back(u);
    }
    return out;
}

namespace {

bool is_complete_graph(const Graph& g) {
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != n - 1) return false;
    return true;
}

// Connectivity of g minus the vertex set encoded in `removed` (true = gone).
bool connected_after_removal(const Graph& g, const std::vector<char>& removed) {
    const int n = g.vertex_count();
    int start = -1, kept = 0;
    for (int v = 0; v < n; ++v) {
        if (!removed[v]) {
            if (start < 0) start = v;
            ++kept;
        }
    }
    if (kept <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(u)) {
            if (!removed[w] && !seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == kept;
}

// Unit-capacity max flow on the vertex-split digraph; counts internally
// vertex-disjoint s-t paths for non-adjacent s,t.
class SplitFlow {
public:
    explicit SplitFlow(const Graph& g) : g_(g), n_(g.vertex_count()) {
        // node 2v = v_in, 2v+1 = v_out
        head_.resize(2 * n_);
        for (int v = 0; v < n_; ++v) add_arc(2 * v, 2 * v + 1, 1);
        for (int u = 0; u < n_; ++u)
            for (int w : g_.neighbors(u))
                add_arc(2 * u + 1, 2 * w, n_);  // n_ acts as infinity
    }

    int max_flow(int s, int t) {
        cap_ = base_cap_;
        int source = 2 * s + 1, sink = 2 * t;
        int flow = 0;
        while (true) {
            std::vector<int> pred_arc(2 * n_, -1);
            std::queue<int> q;
            q.push(source);
            pred_arc[source] = -2;
            while (!q.empty() && pred_arc[sink] == -1) {
                int u = q.front();
                q.pop();
                for (int a : head_[u]) {
                    int w = to_[a];
                    if (cap_[a] > 0 && pred_arc[w] == -1) {
                        pred_arc[w] = a;
                        q.push(w);
                    }
                }
            }
            if (pred_arc[sink] == -1) break;
            for (int u = sink; u != source;) {
                int a = pred_arc[u];
                --cap_[a];
                ++cap_[a ^ 1];
                u = from_[a];
            }
            ++flow;
        }
        return flow;
    }

private:
    void add_arc(int u, int w, int c) {
        head_[u].push_back(static_cast<int>(to_.size()));
        from_.push_back(u);
        to_.push_back(w);
        base_cap_.push_back(c);
        cap_.push_back(c);
        head_[w].push_back(static_cast<int>(to_.size()));
        from_.push_back(w);
        to_.push_back(u);
        base_cap_.push_back(0);
        cap_.push_back(0);
    }

    const Graph& g_;
    int n_;
    std::vector<std::vector<int>> head_;
    std::vector<int> from_, to_, base_cap_, cap_;
};

}  // namespace

int vertex_connectivity_bruteforce(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("vertex_connectivity: need at least 2 vertices");
    if (n > 20) throw std::invalid_argument("vertex_connectivity_bruteforce: graph too large");
    // smallest k such that some k-subset disconnects; complete graphs have none
    for (int k = 0; k <= n - 2; ++k) {
        std::vector<char> removed(n, 0);
        std::vector<int> pick(k);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            std::fill(removed.begin(), removed.end(), 0);
            for (int v : pick) removed[v] = 1;
            if (!connected_after_removal(g, removed)) return k;
            // next k-combination of 0..n-1
            int i = k - 1;
            while (i >= 0 && pick[i] == n - k + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return n - 1;
}

int vertex_connectivity_flow(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("vertex_connectivity: need at least 2 vertices");
    if (!is_connected(g)) return 0;
    if (is_complete_graph(g)) return n - 1;

    int v0 = 0;
    for (int v = 1; v < n; ++v)
        if (g.degree(v) < g.degree(v0)) v0 = v;

    SplitFlow flow(g);
    int kappa = g.degree(v0);
    for (int t = 0; t < n; ++t) {
        if (t == v0 || g.has_edge(v0, t)) continue;
        kappa = std::min(kappa, flow.max_flow(v0, t));
    }
    // a minimum cut containing v0 separates two of its neighbors
    const auto& nb = g.neighbors(v0);
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
            if (!g.has_edge(nb[i], nb[j]))
                kappa = std::min(kappa, flow.max_flow(nb[i], nb[j]));
    return kappa;
}

int vertex_connectivity(const Graph& g) {
    if (g.vertex_count() <= 12) return vertex_connectivity_bruteforce(g);
    return vertex_connectivity_flow(g);
}

BlockDecomposition biconnected_blocks(const Graph& g) {
    const int n = g.vertex_count();
    if (!is_connected(g)) throw std::invalid_argument("biconnected_blocks: graph is disconnected");

    BlockDecomposition out;
    if (n == 0) return out;

    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<char> is_cut(n, 0);
    std::vector<std::pair<int, int>> edge_stack;
    int timer = 0;

    std::function<void(int, int)> dfs = [&](int u, int parent) {
        disc[u] = low[u] = timer++;
        int children = 0;
        for (int w : g.neighbors(u)) {
            if (disc[w] < 0) {
                ++children;
                edge_stack.emplace_back(u, w);
                dfs(w, u);
                low[u] = std::min(low[u], low[w]);
                if (low[w] >= disc[u]) {
                    if (parent >= 0 || children > 1) is_cut[u] = 1;
                    // pop the block's edges and collect its vertex set
                    std::vector<int> verts;
                    std::pair<int, int> e;
                    do {
                        e = edge_stack.back();
                        edge_stack.pop_back();
                        verts.push_back(e.first);
                        verts.push_back(e.second);
                    } while (e != std::make_pair(u, w));
                    std::sort(verts.begin(), verts.end());
                    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
                    out.blocks.push_back(std::move(verts));
                }
            } else if (w != parent && disc[w] < disc[u]) {
                edge_stack.emplace_back(u, w);
                low[u] = std::min(low[u], disc[w]);
            }
        }
    };
    dfs(0, -1);

    for (int v = 0; v < n; ++v)
        if (is_cut[v]) out.cut_vertices.push_back(v);
    // deterministic block order regardless of DFS discovery
    std::sort(out.blocks.begin(), out.blocks.end());
    return out;
}

namespace {

bool block_is_clique(const Graph& g, const std::vector<int>& block) {
    for (std::size_t i = 0; i < block.size(); ++i)
        for (std::size_t j = i + 1; j < block.size(); ++j)
            if (!g.has_edge(block[i], block[j])) return false;
    return true;
}

bool block_is_odd_cycle(const Graph& g, const std::vector<int>& block) {
    if (block.size() < 3 || block.size() % 2 == 0) return false;
    for (int v : block) {
        int deg_in_block = 0;
        for (int w : g.neighbors(v))
            if (std::binary_search(block.begin(), block.end(), w)) ++deg_in_block;
        if (deg_in_block != 2) return false;
    }
    return true;  // blocks are 2-connected, so 2-regular means a single cycle
}

}  // namespace

bool is_gallai_tree(const Graph& g) {
    auto decomp = biconnected_blocks(g);
    for (const auto& block : decomp.blocks)
        if (!block_is_clique(g, block) && !block_is_odd_cycle(g, block)) return false;
    return true;
}

namespace {

Graph reference_prism() {
    return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5},
                                 {0, 3}, {1, 4}, {2, 5}});
}

bool isomorphic_to_prism(const Graph& g) {
    if (g.vertex_count() != 6 || g.edge_count() != 9) return false;
    for (int v = 0; v < 6; ++v)
        if (g.degree(v) != 3) return false;
    Graph prism = reference_prism();
    std::vector<int> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < 6 && ok; ++u)
            for (int v = u + 1; v < 6 && ok; ++v)
                if (g.has_edge(u, v) != prism.has_edge(perm[u], perm[v])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace

GraphClass classify_exception(const Graph& g) {
    const int n = g.vertex_count();
    if (n >= 1 && is_complete_graph(g)) return GraphClass::complete;
    if (isomorphic_to_prism(g)) return GraphClass::triangular_prism;
    if (n >= 3 && n % 2 == 1 && g.min_degree() == 2 && g.max_degree() == 2 && is_connected(g))
        return GraphClass::odd_cycle;
    return GraphClass::none;
}

const char* graph_class_name(GraphClass c) {
    switch (c) {
        case GraphClass::complete: return "complete";
        case GraphClass::triangular_prism: return "triangular_prism";
        case GraphClass::odd_cycle: return "odd_cycle";
        case GraphClass::none: return "none";
    }
    return "none";
}

VertexOrder spanning_order(const Graph& g, int root, std::optional<int> pinned_first) {
    const int n = g.vertex_count();
    if (root < 0 || root >= n) throw std::invalid_argument("spanning_order: root out of range");
    if (pinned_first && (*pinned_first < 0 || *pinned_first >= n))
        throw std::invalid_argument("spanning_order: pinned vertex out of range");
    if (pinned_first && *pinned_first == root)
        throw std::invalid_argument("spanning_order: pinned vertex equals root");

    auto dist = bfs_distances(g, root);
    for (int v = 0; v < n; ++v)
        if (dist[v] < 0)
            throw std::invalid_argument("spanning_order: vertex " + std::to_string(v) +
                                        " unreachable from root");

    VertexOrder out;
    out.root = root;
    out.pinned_first = pinned_first;
    if (pinned_first) out.order.push_back(*pinned_first);
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
        if (!pinned_first || v != *pinned_first) rest.push_back(v);
    std::stable_sort(rest.begin(), rest.end(),
                     [&](int a, int b) { return dist[a] > dist[b]; });
    out.order.insert(out.order.end(), rest.begin(), rest.end());
    return out;
}

InducedSubgraph remove_vertices(const Graph& g, const std::vector<int>& removed) {
    const int n = g.vertex_count();
    std::vector<char> gone(n, 0);
    for (int v : removed) {
        if (v < 0 || v >= n)
            throw std::invalid_argument("remove_vertices: vertex out of range");
        gone[v] = 1;
    }
    InducedSubgraph out;
    out.reduced_index.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        if (!gone[v]) {
            out.reduced_index[v] = static_cast<int>(out.original_vertex.size());
            out.original_vertex.push_back(v);
        }
    }
    out.graph = Graph(static_cast<int>(out.original_vertex.size()));
    for (int v : out.original_vertex)
        for (int w : g.neighbors(v))
            if (!gone[w] && v < w) out.graph.add_edge(out.reduced_index[v], out.reduced_index[w]);
    return out;
}

}  // namespace kempe
