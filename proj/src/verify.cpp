#include "kempe/verify.hpp"

#include <chrono>
#include <stdexcept>

#include "kempe/graph6.hpp"

namespace kempe {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

VerificationReport sweep_tight_assignments(const Graph& g, const AssignmentGenerator& gen,
                                           std::size_t node_cap, const char* mode_prefix) {
    auto start = Clock::now();
    VerificationReport report;
    report.graph_id = encode_graph6(g);
    report.mode = std::string(mode_prefix) +
                  (gen.mode == GenMode::exhaustive_canonical ? "/exhaustive-canonical" : "/random");
    report.palette_cap = gen.palette_cap;
    report.seed = gen.mode == GenMode::random ? gen.seed : 0;
    report.samples = gen.mode == GenMode::random ? gen.samples : 0;

    enumerate_canonical_degree_assignments(
        g, gen, [&](std::size_t index, const ListAssignment& L) {
            ++report.assignments_tested;
            ReconfigGraph rg = build_reconfig_graph(g, L, node_cap);
            if (!rg.nodes.empty()) ++report.colorable_count;
            if (rg.nodes.size() > 1) {
                auto classes = kempe_classes(rg);
                if (classes.class_count > 1) {
                    Violation v;
                    v.assignment_index = index;
                    v.lists = L;
                    v.class_count = classes.class_count;
                    v.class_sizes = classes.class_sizes;
                    v.note = "multiple Kempe classes under a tight degree-assignment";
                    report.violations.push_back(std::move(v));
                }
            }
            return true;  // violations never abort the sweep
        });

    report.wall_clock_seconds = seconds_since(start);
    return report;
}

}  // namespace

VerificationReport verify_theorem1_boundary(const Graph& g, std::size_t node_cap) {
    if (!is_connected(g))
        throw std::invalid_argument("verify_theorem1_boundary: graph must be connected");
    if (g.max_degree() < 3)
        throw std::invalid_argument("verify_theorem1_boundary: maximum degree must be at least 3");

    auto start = Clock::now();
    VerificationReport report;
    report.graph_id = encode_graph6(g);
    report.mode = "theorem1-boundary";
    report.palette_cap = g.max_degree();
    report.assignments_tested = 1;

    ListAssignment L = ListAssignment::identical_range(g.vertex_count(), g.max_degree());
    ReconfigGraph rg = build_reconfig_graph(g, L, node_cap);
    if (!rg.nodes.empty()) report.colorable_count = 1;
    auto classes = kempe_classes(rg);

    GraphClass kind = classify_exception(g);
    if (kind == GraphClass::triangular_prism) {
        if (classes.class_count < 2) {
            Violation v;
            v.lists = L;
            v.class_count = classes.class_count;
            v.class_sizes = classes.class_sizes;
            v.note = "prism expected at least 2 Kempe classes";
            report.violations.push_back(std::move(v));
        }
    } else if (kind != GraphClass::complete) {
        if (classes.class_count > 1) {
            Violation v;
            v.lists = L;
            v.class_count = classes.class_count;
            v.class_sizes = classes.class_sizes;
            v.note = "non-exceptional graph expected a single Kempe class";
            report.violations.push_back(std::move(v));
        }
    }
    report.wall_clock_seconds = seconds_since(start);
    return report;
}

VerificationReport verify_theorem2(const Graph& g, const AssignmentGenerator& gen,
                                   std::size_t node_cap) {
    if (g.vertex_count() < 2 || vertex_connectivity(g) < 4)
        throw std::invalid_argument("verify_theorem2: graph is not 4-connected");
    if (classify_exception(g) == GraphClass::complete)
        throw std::invalid_argument("verify_theorem2: graph is complete");
    return sweep_tight_assignments(g, gen, node_cap, "theorem2");
}

VerificationReport search_conjecture(const Graph& g, const AssignmentGenerator& gen,
                                     std::size_t node_cap) {
    if (g.vertex_count() < 2 || vertex_connectivity(g) != 3)
        throw std::invalid_argument("search_conjecture: vertex connectivity must be exactly 3");
    GraphClass kind = classify_exception(g);
    if (kind == GraphClass::complete)
        throw std::invalid_argument("search_conjecture: graph is complete");
    if (kind == GraphClass::triangular_prism)
        throw std::invalid_argument("search_conjecture: the triangular prism is excluded");
    return sweep_tight_assignments(g, gen, node_cap, "conjecture");
}

}  // namespace kempe
