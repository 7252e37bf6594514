#ifndef KEMPE_TEST_SUPPORT_HPP
#define KEMPE_TEST_SUPPORT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "kempe/graph.hpp"
#include "kempe/kempe.hpp"
#include "kempe/list_coloring.hpp"

// Shared fixtures and independent brute-force oracles. Everything here is
// deliberately naive and separate from the library's implementation paths.
namespace support {

kempe::Graph path_graph(int n);
kempe::Graph cycle_graph(int n);
kempe::Graph complete_graph(int n);
kempe::Graph complete_bipartite(int a, int b);
kempe::Graph star_graph(int leaves);
kempe::Graph prism_graph();
kempe::Graph octahedron_graph();            // K_{2,2,2}
kempe::Graph two_triangles_shared_vertex(); // bowtie
kempe::Graph cube_graph();                  // Q3
kempe::Graph circulant(int n, const std::vector<int>& offsets);

/// All connected graphs on exactly n vertices, one per isomorphism class
/// (canonical form = minimal adjacency bit string over all permutations).
std::vector<kempe::Graph> connected_graphs_up_to_iso(int n);

/// Odometer over the list product, filtered by properness. Independent of
/// the library's backtracking enumerator.
std::vector<kempe::Coloring> naive_all_L_colorings(const kempe::Graph& g,
                                                   const kempe::ListAssignment& L);

/// Whether c2 arises from c1 by exactly one L-valid Kempe change, decided
/// from the definition: the difference set must be one maximal two-colored
/// component with swapped colors on every vertex.
bool naive_one_move_apart(const kempe::Graph& g, const kempe::ListAssignment& L,
                          const kempe::Coloring& c1, const kempe::Coloring& c2);

/// Kempe class count via pairwise naive_one_move_apart plus union-find.
int naive_class_count(const kempe::Graph& g, const kempe::ListAssignment& L);

/// Deterministic splittable RNG for test instance generation.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed ^ 0x5851F42D4C957F2DULL) {}
    std::uint64_t next();
    /// uniform in [0, bound)
    std::uint64_t below(std::uint64_t bound);
    bool chance(double p);
};

/// Random connected graph on n vertices: random spanning tree plus each
/// remaining edge with probability p.
kempe::Graph random_connected_graph(int n, double p, Rng& rng);

/// Random tight degree-assignment from a palette of `palette` colors.
kempe::ListAssignment random_tight_lists(const kempe::Graph& g, int palette, Rng& rng);

/// All simple cycles (as sorted vertex sets) of a small graph.
std::vector<std::vector<int>> all_simple_cycles(const kempe::Graph& g);

}  // namespace support

#endif
