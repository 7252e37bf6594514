#ifndef KEMPE_KEMPE_HPP
#define KEMPE_KEMPE_HPP

#include <compare>
#include <utility>
#include <vector>

#include "kempe/graph.hpp"
#include "kempe/list_coloring.hpp"

namespace kempe {

/// A Kempe chain: an unordered color pair {a,b} (stored a<b) plus the vertex
/// set of one component of the subgraph induced by the vertices colored a or
/// b. Two moves are equal iff pair and chain set coincide.
struct KempeMove {
    std::pair<int, int> color_pair;  // first < second
    std::vector<int> chain;          // sorted ascending

    auto operator<=>(const KempeMove&) const = default;
};

/// The chain vertices whose lists block the swap, split by graph distance
/// from the chain's anchor vertex.
struct BoundarySets {
    std::vector<int> n1;
    std::vector<int> n2;
    std::vector<int> n3plus;

    bool all_empty() const { return n1.empty() && n2.empty() && n3plus.empty(); }
};

/// The color a chain vertex receives when the move is applied.
int swapped_color(const KempeMove& m, int current);

/// The Kempe chain on colors {c(v), b} containing v. Requires b != c(v).
KempeMove kempe_chain(const Graph& g, const Coloring& c, int v, int b);

/// True iff m is exactly one maximal 2-color component of c.
bool is_genuine_chain(const Graph& g, const Coloring& c, const KempeMove& m);

/// Swap the pair's colors on the chain. Validates the chain against c and g;
/// applying the same move twice restores the input.
Coloring apply_move(const Graph& g, const Coloring& c, const KempeMove& m);

/// True iff every chain vertex's swapped color lies in its list.
/// Assumes m is a genuine chain of c.
bool is_L_valid(const ListAssignment& L, const Coloring& c, const KempeMove& m);

/// All distinct L-valid moves available from c, over color pairs drawn from
/// the full palette, sorted by (pair, chain).
std::vector<KempeMove> valid_moves(const Graph& g, const ListAssignment& L, const Coloring& c);

/// The list-blocked chain vertices of the chain on {c(v), a} at v, split by
/// graph distance (distance measured in g, not in the chain):
///   n1     = chain neighbors u of v with c(v) not in L(u)
///   n2     = chain vertices at distance 2 with a not in L(u)
///   n3plus = chain vertices at distance >= 3 missing one of {c(v), a}
/// Requires a != c(v); a need not lie in L(v).
BoundarySets boundary_sets(const Graph& g, const ListAssignment& L, const Coloring& c,
                           int v, int a);

}  // namespace kempe

#endif
