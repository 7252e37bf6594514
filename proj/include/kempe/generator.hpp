#ifndef KEMPE_GENERATOR_HPP
#define KEMPE_GENERATOR_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "kempe/graph.hpp"
#include "kempe/list_coloring.hpp"

namespace kempe {

/// Sweeps restrict themselves to tight lists (|L(v)| = d(v)): any assignment
/// with surplus at a vertex is all-equivalent anyway, so only tight ones can
/// witness non-swappability.
enum class GenMode { exhaustive_canonical, random };

struct AssignmentGenerator {
    GenMode mode = GenMode::exhaustive_canonical;
    int palette_cap = 0;          // max distinct colors (exhaustive) / raw palette size (random)
    std::uint64_t seed = 0;       // random mode
    std::size_t samples = 0;      // random mode: number of assignments
};

/// Rename colors by first appearance scanning vertices in index order and
/// each list ascending, so every new color is the smallest unused positive
/// integer. Idempotent; invariant under color renaming of the input.
ListAssignment canonicalize_assignment(const ListAssignment& L);

bool is_canonical_assignment(const ListAssignment& L);

/// Stream degree-assignments for g one at a time into `visit`; stop early if
/// visit returns false.
///   exhaustive_canonical: every canonical tight assignment with at most
///     palette_cap distinct colors, exactly once, in lexicographic order.
///   random: `samples` canonicalized random tight assignments, reproducible
///     from the seed (split per assignment index).
/// Throws std::invalid_argument when palette_cap < max degree.
void enumerate_canonical_degree_assignments(
    const Graph& g, const AssignmentGenerator& gen,
    const std::function<bool(std::size_t index, const ListAssignment& L)>& visit);

/// Convenience: materialize the whole stream.
std::vector<ListAssignment> collect_canonical_degree_assignments(const Graph& g,
                                                                 const AssignmentGenerator& gen);

/// One random tight assignment (canonicalized), deterministic in the seed.
ListAssignment random_tight_assignment(const Graph& g, int palette_cap, std::uint64_t seed);

/// SplitMix64 step; the project-wide seed splitter.
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace kempe

#endif
