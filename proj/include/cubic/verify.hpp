#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "cubic/canonical.hpp"
#include "cubic/coloring.hpp"
#include "cubic/counting.hpp"
#include "cubic/families.hpp"
#include "cubic/generate.hpp"
#include "cubic/parallel.hpp"
#include "cubic/report.hpp"
#include "cubic/sequences.hpp"

namespace cubic {

struct ExtremalReport {
    i128 max_count = 0;
    std::vector<CanonicalForm> extremal_forms;  // sorted ascending
    bool matches_m_graph = false;
    bool unique = false;
};

/// Maximum perfect-matching count over the census on `num_vertices` vertices,
/// with the list of maximizing isomorphism classes.
inline ExtremalReport extremal_report(int num_vertices, bool bipartite_only, int jobs = 1) {
    std::vector<Graph> census = generate_connected_cubic(num_vertices, bipartite_only, jobs);
    ExtremalReport report;
    std::vector<i128> counts(census.size());
    detail::run_indexed(jobs, census.size(), [&](std::size_t i) {
        counts[i] = count_perfect_matchings(census[i]);
    });
    for (std::size_t i = 0; i < census.size(); ++i) {
        if (counts[i] > report.max_count) {
            report.max_count = counts[i];
            report.extremal_forms.clear();
        }
        if (counts[i] == report.max_count) report.extremal_forms.push_back(canonical_form(census[i]));
    }
    std::sort(report.extremal_forms.begin(), report.extremal_forms.end());
    report.unique = report.extremal_forms.size() == 1;
    report.matches_m_graph =
        report.unique && report.extremal_forms[0] == canonical_form(m_graph(num_vertices / 2));
    return report;
}

/// One verification row: an assertion family with pass/fail tallies.
struct AssertionSummary {
    std::string name;
    long long checked = 0;
    long long passed = 0;
    long long failed = 0;
    std::vector<std::string> failures;  // first few failure descriptions

    void tally(bool ok, const std::string& what) {
        ++checked;
        if (ok) {
            ++passed;
        } else {
            ++failed;
            if (failures.size() < 16) failures.push_back(what);
        }
    }
};

struct TheoremSummary {
    std::vector<AssertionSummary> rows;

    bool all_passed() const {
        for (const auto& row : rows)
            if (row.failed > 0) return false;
        return true;
    }
    long long total_failed() const {
        long long total = 0;
        for (const auto& row : rows) total += row.failed;
        return total;
    }
};

namespace detail {

// Census for all even orders 2n with n in [n_lo, n_hi].
inline std::vector<Graph> cumulative_census(int n_lo, int n_hi, bool bipartite_only, int jobs) {
    std::vector<Graph> all;
    for (int n = n_lo; n <= n_hi; ++n) {
        auto part = generate_connected_cubic(2 * n, bipartite_only, jobs);
        for (auto& g : part) all.push_back(std::move(g));
    }
    return all;
}

}  // namespace detail

/// Extremality check used by the aa suite, factored out so the test
/// harness can feed it a deliberately wrong claim as a negative control.
inline AssertionSummary check_extremal_claim(const std::vector<Graph>& census, int n,
                                             i128 claimed_max, const CanonicalForm& claimed_form,
                                             int jobs = 1) {
    AssertionSummary row;
    row.name = "max pm over census(2n=" + std::to_string(2 * n) + ") = m_n, unique at claimed form";
    std::vector<i128> counts(census.size());
    detail::run_indexed(jobs, census.size(), [&](std::size_t i) {
        counts[i] = count_perfect_matchings(census[i]);
    });
    i128 max_count = 0;
    for (auto c : counts) max_count = std::max(max_count, c);
    row.tally(max_count == claimed_max,
              "max pm = " + to_string(max_count) + ", claimed " + to_string(claimed_max));
    int maximizers = 0;
    bool claimed_is_max = false;
    for (std::size_t i = 0; i < census.size(); ++i) {
        if (counts[i] != max_count) continue;
        ++maximizers;
        if (canonical_form(census[i]) == claimed_form) claimed_is_max = true;
    }
    row.tally(maximizers == 1 && claimed_is_max,
              "expected a unique maximizer matching the claimed form; found " +
                  std::to_string(maximizers));
    return row;
}

/// Extremal maxima at desk scale: census maxima equal m_n with m_graph(n) as the
/// unique extremal class, plus the bipartite census cardinalities.
inline TheoremSummary verify_aa(int n_max, int jobs = 1) {
    TheoremSummary summary;
    for (int n = 2; n <= n_max; ++n) {
        auto census = generate_connected_cubic(2 * n, false, jobs);
        summary.rows.push_back(
            check_extremal_claim(census, n, m_value(n), canonical_form(m_graph(n)), jobs));
    }
    if (n_max >= 6) {
        AssertionSummary row;
        row.name = "bipartite census cardinalities (9 classes <= 12 vertices, 60 <= 16)";
        auto bip12 = detail::cumulative_census(3, 6, true, jobs);
        row.tally(bip12.size() == 9, "got " + std::to_string(bip12.size()) + " classes <= 12 vertices");
        if (n_max >= 8) {
            auto bip16 = detail::cumulative_census(3, 8, true, jobs);
            row.tally(bip16.size() == 60, "got " + std::to_string(bip16.size()) + " classes <= 16 vertices");
        }
        summary.rows.push_back(std::move(row));
    }
    return summary;
}

/// Counting identities: the coloring formula and both tensor
/// contractions agree with the matching counters, on the census up to 2*n_max
/// vertices and on m_graph(2..8).
inline TheoremSummary verify_bb(int n_max, int jobs = 1) {
    TheoremSummary summary;
    AssertionSummary formula_row{"coloring_formula_count = pm_count", 0, 0, 0, {}};
    AssertionSummary tensor_row{"tensor contraction (computational) = 2-factor count", 0, 0, 0, {}};
    AssertionSummary tensor_xy_row{"tensor contraction (xy, rescaled) = pm_count", 0, 0, 0, {}};

    std::vector<Graph> corpus = detail::cumulative_census(2, n_max, false, jobs);
    for (int n = 2; n <= 8; ++n) corpus.push_back(m_graph(n));

    struct Verdict {
        bool formula_ok, tensor_ok, tensor_xy_ok;
        std::string label;
    };
    std::vector<Verdict> verdicts(corpus.size());
    detail::run_indexed(jobs, corpus.size(), [&](std::size_t i) {
        const Graph& g = corpus[i];
        i128 pm = count_perfect_matchings(g);
        i128 tf = count_two_factors(g);
        verdicts[i].formula_ok = coloring_formula_count(g) == pm;
        verdicts[i].tensor_ok = tensor_contraction_count(g, TensorBasis::Computational) == tf;
        verdicts[i].tensor_xy_ok = tensor_contraction_count(g, TensorBasis::XY) == pm;
        verdicts[i].label = encode_graph6(g);
    });
    for (auto& v : verdicts) {
        formula_row.tally(v.formula_ok, "mismatch on " + v.label);
        tensor_row.tally(v.tensor_ok, "mismatch on " + v.label);
        tensor_xy_row.tally(v.tensor_xy_ok, "mismatch on " + v.label);
    }
    summary.rows.push_back(std::move(formula_row));
    summary.rows.push_back(std::move(tensor_row));
    summary.rows.push_back(std::move(tensor_xy_row));
    return summary;
}

/// Alon-Friedland bound and the doubling lemma over the census up to 2*n_max
/// vertices, with the two known equality cases of the latter.
inline TheoremSummary verify_af(int n_max, int jobs = 1) {
    TheoremSummary summary;
    AssertionSummary bound_row{"pm^3 <= 6^n", 0, 0, 0, {}};
    AssertionSummary doubling_row{"pm(g)^2 <= pm(double_cover(g))", 0, 0, 0, {}};

    std::vector<Graph> corpus = detail::cumulative_census(2, n_max, false, jobs);
    struct Verdict {
        bool bound_ok, doubling_ok;
        std::string label;
    };
    std::vector<Verdict> verdicts(corpus.size());
    detail::run_indexed(jobs, corpus.size(), [&](std::size_t i) {
        const Graph& g = corpus[i];
        i128 pm = count_perfect_matchings(g);
        verdicts[i].bound_ok = pm * pm * pm <= ipow(6, g.num_vertices / 2);
        verdicts[i].doubling_ok = pm * pm <= count_perfect_matchings(double_cover(g));
        verdicts[i].label = encode_graph6(g);
    });
    for (auto& v : verdicts) {
        bound_row.tally(v.bound_ok, "bound fails on " + v.label);
        doubling_row.tally(v.doubling_ok, "doubling fails on " + v.label);
    }
    summary.rows.push_back(std::move(bound_row));
    summary.rows.push_back(std::move(doubling_row));

    AssertionSummary equality_row{"doubling equality at K4 and K_{3,3}", 0, 0, 0, {}};
    for (FamilyKind kind : {FamilyKind::K4, FamilyKind::K33}) {
        Graph g = named_graph({kind, 0});
        i128 pm = count_perfect_matchings(g);
        equality_row.tally(pm * pm == count_perfect_matchings(double_cover(g)),
                           "expected equality for pm^2 = pm(double)");
    }
    summary.rows.push_back(std::move(equality_row));
    return summary;
}

/// Structure of the bipartite census: no bridges, and deleting any edge's
/// endpoints leaves at most two components.
inline TheoremSummary verify_bipartite_structure(int n_max, int jobs = 1) {
    TheoremSummary summary;
    AssertionSummary bridge_row{"bipartite census graphs are bridgeless", 0, 0, 0, {}};
    AssertionSummary component_row{"<= 2 components after deleting any edge's endpoints", 0, 0, 0, {}};
    std::vector<Graph> corpus = detail::cumulative_census(3, n_max, true, jobs);
    for (const Graph& g : corpus) {
        bridge_row.tally(find_bridges(g).empty(), "bridge found in " + encode_graph6(g));
        bool ok = true;
        for (auto [u, v] : g.edges)
            if (induced_without(g, {u, v}).component_count > 2) ok = false;
        component_row.tally(ok, "more than two components in " + encode_graph6(g));
    }
    summary.rows.push_back(std::move(bridge_row));
    summary.rows.push_back(std::move(component_row));
    return summary;
}

/// The m_n table: all eight inequality clauses up to n_max, and the unique equality
/// case of clause (iii) at n = 8.
inline TheoremSummary verify_lemma1(int n_max = 40) {
    TheoremSummary summary;
    AssertionSummary row{"m_n inequality clauses up to n_max=" + std::to_string(n_max), 0, 0, 0, {}};
    auto violations = check_m_inequalities(n_max);
    row.tally(violations.empty(), violations.empty() ? "" : violations.front().clause + " violated");
    AssertionSummary equality_row{"clause (iii) equality exactly at n = 8", 0, 0, 0, {}};
    for (int n = 8; n <= n_max; ++n) {
        bool equal = 4 * m_value(n - 3) == m_value(n);
        equality_row.tally(equal == (n == 8), "clause (iii) equality at n = " + std::to_string(n));
    }
    summary.rows.push_back(std::move(row));
    summary.rows.push_back(std::move(equality_row));
    return summary;
}

/// Section-5 cycle counts: the closed form against the cycle-space counter on
/// MC_k, the Psi(r) table identity, and the enclosing bounds.
inline TheoremSummary verify_cc(int k_max = 14, int jobs = 1) {
    TheoremSummary summary;
    AssertionSummary formula_row{"count_cycles(MC_k) = closed form, k = 3..k_max", 0, 0, 0, {}};
    std::vector<i128> counted(k_max + 1, 0);
    std::vector<std::size_t> ks;
    for (int k = 3; k <= k_max; ++k) ks.push_back(k);
    detail::run_indexed(jobs, ks.size(), [&](std::size_t i) {
        int k = static_cast<int>(ks[i]);
        counted[k] = count_cycles(mc_graph(k));
    });
    for (int k = 3; k <= k_max; ++k)
        formula_row.tally(counted[k] == mc_cycle_formula(k),
                          "k=" + std::to_string(k) + ": counted " + to_string(counted[k]) +
                              ", formula " + to_string(mc_cycle_formula(k)));
    summary.rows.push_back(std::move(formula_row));

    AssertionSummary psi_row{"psi_lower_bound(r) = count_cycles(MC_{r-1})", 0, 0, 0, {}};
    AssertionSummary bounds_row{"2^{r-1} < psi bound < (15/16) 2^r", 0, 0, 0, {}};
    for (int r = 4; r <= k_max + 1; ++r) {
        psi_row.tally(psi_lower_bound(r) == counted[r - 1], "r=" + std::to_string(r));
        i128 psi = psi_lower_bound(r);
        bool below = 16 * psi < 15 * ipow(2, r);
        bool above = r < 6 || psi > ipow(2, r - 1);
        bounds_row.tally(below && above, "r=" + std::to_string(r));
    }
    summary.rows.push_back(std::move(psi_row));
    summary.rows.push_back(std::move(bounds_row));

    AssertionSummary space_row{"count_cycles(MC_k) <= 2^{r} - 1", 0, 0, 0, {}};
    for (int k = 3; k <= k_max; ++k)
        space_row.tally(counted[k] <= ipow(2, k + 1) - 1, "k=" + std::to_string(k));
    summary.rows.push_back(std::move(space_row));
    return summary;
}

/// The combined per-census verification: extremal
/// maxima, the Alon-Friedland bound, the coloring formula, the doubling
/// lemma, and the bridgeless property of bipartite members.
inline TheoremSummary verify_theorems(int n_max, int jobs = 1) {
    if (n_max < 2 || n_max > 8)
        fail(ErrorKind::ParameterOutOfRange, "verify_theorems supports 2 <= n_max <= 8");
    TheoremSummary summary;
    for (auto& part : {verify_aa(n_max, jobs), verify_bb(std::min(n_max, 6), jobs),
                       verify_af(n_max, jobs), verify_bipartite_structure(n_max, jobs)})
        for (const auto& row : part.rows) summary.rows.push_back(row);
    return summary;
}

}  // namespace cubic
