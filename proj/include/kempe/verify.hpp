#ifndef KEMPE_VERIFY_HPP
#define KEMPE_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "kempe/generator.hpp"
#include "kempe/reconfig.hpp"

namespace kempe {

/// A tested assignment whose Kempe class count came out above 1 (or, for the
/// prism boundary case, below the expected 2).
struct Violation {
    std::size_t assignment_index = 0;
    ListAssignment lists;
    int class_count = 0;
    std::vector<int> class_sizes;
    std::string note;
};

struct VerificationReport {
    std::string graph_id;  // canonical graph6
    std::string mode;
    int palette_cap = 0;
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    std::size_t assignments_tested = 0;
    std::size_t colorable_count = 0;
    std::vector<Violation> violations;
    double wall_clock_seconds = 0.0;

    bool ok() const { return violations.empty(); }
};

/// Theorem-boundary probe: the identical assignment {1..Delta}. Expects a
/// single class unless g is complete or the triangular prism; for the prism
/// expects at least 2 classes. Requires Delta >= 3.
VerificationReport verify_theorem1_boundary(const Graph& g,
                                            std::size_t node_cap = kDefaultNodeCap);

/// Sweep tight degree-assignments on a 4-connected non-complete graph; every
/// L-colorable one must have exactly one Kempe class. Violations are
/// recorded and the sweep continues.
VerificationReport verify_theorem2(const Graph& g, const AssignmentGenerator& gen,
                                   std::size_t node_cap = kDefaultNodeCap);

/// Same sweep on a 3-connected host (not complete, not the prism).
/// Violations here are findings, not failures: one would refute the
/// conjecture under test.
VerificationReport search_conjecture(const Graph& g, const AssignmentGenerator& gen,
                                     std::size_t node_cap = kDefaultNodeCap);

}  // namespace kempe

#endif
