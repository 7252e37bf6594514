#include "kempe/generator.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace kempe {

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index) {
    // SplitMix64 on (seed + index * golden gamma)
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

namespace {

// Deterministic bounded sampler; avoids distribution implementation drift.
std::uint64_t rand_below(std::uint64_t& state, std::uint64_t bound) {
    state = split_seed(state, 0);
    return (static_cast<unsigned __int128>(state) * bound) >> 64;
}

}  // namespace

ListAssignment canonicalize_assignment(const ListAssignment& L) {
    std::map<int, int> rename;
    for (const auto& list : L.lists)
        for (int c : list)
            if (!rename.count(c)) rename[c] = static_cast<int>(rename.size()) + 1;
    ListAssignment out;
    out.lists.resize(L.lists.size());
    for (std::size_t v = 0; v < L.lists.size(); ++v) {
        for (int c : L.lists[v]) out.lists[v].push_back(rename[c]);
        std::sort(out.lists[v].begin(), out.lists[v].end());
    }
    return out;
}

bool is_canonical_assignment(const ListAssignment& L) {
    int used = 0;
    for (const auto& list : L.lists) {
        for (int c : list) {
            if (c <= 0) return false;
            if (c > used) {
                if (c != used + 1) return false;
                used = c;
            }
        }
    }
    return true;
}

namespace {

// Valid lists for the next vertex: d-subsets of colors where any new colors
// extend the used range consecutively, in lexicographic order.
std::vector<std::vector<int>> vertex_list_choices(int degree, int used, int palette_cap) {
    std::vector<std::vector<int>> out;
    const int max_new = std::min(degree, palette_cap - used);
    if (max_new < 0) return out;
    const int top = used + max_new;

    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == degree) {
            out.push_back(cur);
            return;
        }
        for (int c = start; c <= top; ++c) {
            if (top - c + 1 < degree - static_cast<int>(cur.size())) break;
            // colors above `used` must be taken consecutively from used+1
            if (c > used) {
                int prev = cur.empty() ? used : std::max(cur.back(), used);
                if (c != prev + 1) continue;
            }
            cur.push_back(c);
            rec(c + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

}  // namespace

void enumerate_canonical_degree_assignments(
    const Graph& g, const AssignmentGenerator& gen,
    const std::function<bool(std::size_t, const ListAssignment&)>& visit) {
    const int n = g.vertex_count();
    if (gen.palette_cap < g.max_degree())
        throw std::invalid_argument(
            "assignment generator: palette cap below maximum degree, no tight list fits");

    if (gen.mode == GenMode::random) {
        for (std::size_t i = 0; i < gen.samples; ++i) {
            ListAssignment L =
                random_tight_assignment(g, gen.palette_cap, split_seed(gen.seed, i));
            if (!visit(i, L)) return;
        }
        return;
    }

    std::size_t count = 0;
    ListAssignment partial;
    partial.lists.resize(n);
    bool stop = false;
    std::function<void(int, int)> rec = [&](int v, int used) {
        if (stop) return;
        if (v == n) {
            stop = !visit(count++, partial);
            return;
        }
        for (auto& choice : vertex_list_choices(g.degree(v), used, gen.palette_cap)) {
            int new_used = used;
            for (int c : choice) new_used = std::max(new_used, c);
            partial.lists[v] = choice;
            rec(v + 1, new_used);
            if (stop) return;
        }
        partial.lists[v].clear();
    };
    rec(0, 0);
}

std::vector<ListAssignment> collect_canonical_degree_assignments(const Graph& g,
                                                                 const AssignmentGenerator& gen) {
    std::vector<ListAssignment> out;
    enumerate_canonical_degree_assignments(g, gen, [&](std::size_t, const ListAssignment& L) {
        out.push_back(L);
        return true;
    });
    return out;
}

ListAssignment random_tight_assignment(const Graph& g, int palette_cap, std::uint64_t seed) {
    if (palette_cap < g.max_degree())
        throw std::invalid_argument(
            "random_tight_assignment: palette cap below maximum degree");
    std::uint64_t state = seed;
    ListAssignment L;
    L.lists.resize(g.vertex_count());
    std::vector<int> pool(palette_cap);
    for (int v = 0; v < g.vertex_count(); ++v) {
        // partial Fisher-Yates: first d(v) entries of a shuffled palette
        for (int i = 0; i < palette_cap; ++i) pool[i] = i + 1;
        const int d = g.degree(v);
        for (int i = 0; i < d; ++i) {
            int j = i + static_cast<int>(rand_below(state, palette_cap - i));
            std::swap(pool[i], pool[j]);
        }
        L.lists[v].assign(pool.begin(), pool.begin() + d);
        std::sort(L.lists[v].begin(), L.lists[v].end());
    }
    return canonicalize_assignment(L);
}

}  // namespace kempe
