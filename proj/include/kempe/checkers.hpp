#ifndef KEMPE_CHECKERS_HPP
#define KEMPE_CHECKERS_HPP

#include <string>

#include "kempe/list_coloring.hpp"
#include "kempe/reconfig.hpp"

namespace kempe {

enum class VerdictStatus { pass, fail, skipped };

/// Outcome of one lemma/claim check. `pass` is only emitted when the
/// hypothesis held and the conclusion was verified against the oracle;
/// a failed hypothesis yields `skipped` with the reason.
struct Verdict {
    std::string check;
    VerdictStatus status = VerdictStatus::skipped;
    bool hypothesis_held = false;
    std::string detail;

    bool passed() const { return status == VerdictStatus::pass; }
    bool skipped() const { return status == VerdictStatus::skipped; }
};

const char* verdict_status_name(VerdictStatus s);

/// Colorability characterization agrees with enumeration.
Verdict check_lemma3(const Graph& g, const ListAssignment& L,
                     std::size_t node_cap = kDefaultNodeCap);

/// Surplus at some vertex forces a single Kempe class.
Verdict check_lemma4(const Graph& g, const ListAssignment& L,
                     std::size_t node_cap = kDefaultNodeCap);

/// 2-connected, a special for x: all colorings with x colored a are in one
/// class.
Verdict check_lemma5(const Graph& g, const ListAssignment& L, int x, int a,
                     std::size_t node_cap = kDefaultNodeCap);

/// 3-connected, non-adjacent specials x,y with special colors a,b (possibly
/// a=b): the colorings assigning a to x or b to y form one class. Also
/// replays the constructive route (reduced assignment on g-{x,y}, greedy by
/// decreasing distance from a special neighbor of x) and checks it lands in
/// both sets.
Verdict check_lemma6(const Graph& g, const ListAssignment& L, int x, int y, int a, int b,
                     std::size_t node_cap = kDefaultNodeCap);

/// psi's class contains a coloring phi with phi(x) = psi(x) and no
/// list-blocked chain neighbor of x on colors {psi(x), c}.
Verdict check_claim1(const Graph& g, const ListAssignment& L, const Coloring& psi,
                     int x, int c, std::size_t node_cap = kDefaultNodeCap);

/// With the distance-1 boundary empty and the distance-2 boundary nonempty,
/// either phi's class clears both boundaries at v, or two non-adjacent
/// special vertices share the special color a.
Verdict check_claim2(const Graph& g, const ListAssignment& L, const Coloring& phi,
                     int v, int a, std::size_t node_cap = kDefaultNodeCap);

/// Non-adjacent specials sharing a special color force one Kempe class.
Verdict check_claim3(const Graph& g, const ListAssignment& L, int x, int y, int c,
                     std::size_t node_cap = kDefaultNodeCap);

}  // namespace kempe

#endif
