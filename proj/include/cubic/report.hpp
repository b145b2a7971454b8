#pragma once

#include <optional>
#include <string>

#include "cubic/canonical.hpp"
#include "cubic/coloring.hpp"
#include "cubic/counting.hpp"
#include "cubic/graph.hpp"
#include "cubic/int128.hpp"
#include "cubic/sequences.hpp"

namespace cubic {

struct BoundCheck {
    i128 lhs = 0;
    i128 rhs = 0;
    bool holds = false;
    bool equality = false;
};

inline BoundCheck make_bound_check(i128 lhs, i128 rhs) {
    return {lhs, rhs, lhs <= rhs, lhs == rhs};
}

/// Per-graph record of computed counts and bound comparisons. Fields are
/// optional because not every counter applies to every input (cycles need a
/// connected graph, the coloring formula needs a small cubic one).
struct CountReport {
    std::string canonical_g6;
    std::optional<i128> pm_count;
    std::optional<i128> two_factor_count;
    std::optional<i128> cycle_count;
    std::optional<i128> coloring_formula_count;
    std::optional<BoundCheck> bound_6_pow;  // pm^3 <= 6^n, order 2n
    std::optional<BoundCheck> bound_m_n;    // pm <= m_n, connected cubic only
};

inline CountReport count_report(const Graph& g) {
    CountReport report;
    report.canonical_g6 = canonical_form(g).bytes;
    Classification c = classify(g);
    report.pm_count = count_perfect_matchings(g);
    report.two_factor_count = count_two_factors(g);
    if (c.is_connected && g.num_edges() - g.num_vertices + 1 <= 30)
        report.cycle_count = count_cycles(g);
    if (c.is_cubic && g.num_edges() <= 30)
        report.coloring_formula_count = coloring_formula_count(g);
    if (c.is_cubic && g.num_vertices % 2 == 0) {
        int n = g.num_vertices / 2;
        i128 pm = *report.pm_count;
        report.bound_6_pow = make_bound_check(pm * pm * pm, ipow(6, n));
        if (c.is_connected) report.bound_m_n = make_bound_check(pm, m_value(n));
    }
    return report;
}

/// One census row: an isomorphism class, its counts, and whether it attains
/// the maximum perfect-matching count for its order.
struct CensusRecord {
    CanonicalForm canon;
    int num_vertices = 0;
    bool bipartite = false;
    CountReport report;
    bool extremal = false;
};

}  // namespace cubic
