#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "cubic/error.hpp"
#include "cubic/graph.hpp"
#include "cubic/int128.hpp"

namespace cubic {

/// One of two states per edge, in the Graph's sorted edge order. Bit e set
/// means edge e carries state 1 (or y, depending on basis).
struct EdgeColoring {
    int num_edges = 0;
    std::uint32_t bits = 0;

    bool state(int edge) const { return (bits >> edge) & 1; }
};

/// Vertices whose three incident edges share one state under c.
inline int homogeneous_vertex_count(const Graph& g, const EdgeColoring& c) {
    if (c.num_edges != g.num_edges()) fail(ErrorKind::PreconditionViolated, "coloring length mismatch");
    int count = 0;
    for (int v = 0; v < g.num_vertices; ++v) {
        int ones = 0, total = 0;
        for (int eid = 0; eid < g.num_edges(); ++eid) {
            auto [a, b] = g.edges[eid];
            if (a != v && b != v) continue;
            ++total;
            ones += c.state(eid);
        }
        if (total == 3 && (ones == 0 || ones == 3)) ++count;
    }
    return count;
}

namespace detail {

inline void require_small_cubic(const Graph& g, const char* who) {
    for (int v = 0; v < g.num_vertices; ++v)
        if (g.degree(v) != 3) fail(ErrorKind::NotCubic, std::string(who) + " is defined for cubic graphs");
    if (g.num_edges() > 30)
        fail(ErrorKind::EdgeCountTooLarge, std::string(who) + " supports at most 30 edges");
}

}  // namespace detail

/// The 2-coloring counting identity: over all 2^{3n} edge 2-colorings c of a
/// cubic graph of order 2n, sum (-3)^{m_c} with m_c the number of homogeneous
/// vertices; the sum is exactly 2^{3n} times the number of perfect matchings.
///
/// The colorings are walked in Gray-code order so each step flips one edge
/// and touches only its two endpoints.
inline i128 coloring_formula_count(const Graph& g) {
    detail::require_small_cubic(g, "coloring_formula_count");
    int m = g.num_edges();
    int n2 = g.num_vertices;  // 2n
    std::vector<i128> pow3(n2 + 1);
    pow3[0] = 1;
    for (int i = 1; i <= n2; ++i) pow3[i] = pow3[i - 1] * -3;

    std::vector<int> ones(n2, 0);
    int homogeneous = n2;  // the all-zero coloring is homogeneous everywhere
    i128 sum = pow3[homogeneous];
    std::uint64_t limit = std::uint64_t{1} << m;
    for (std::uint64_t i = 1; i < limit; ++i) {
        int eid = std::countr_zero(i);
        // Gray code g(i) = i ^ (i >> 1) flips exactly edge ctz(i) at step i.
        bool now_one = ((i ^ (i >> 1)) >> eid) & 1;
        auto [u, v] = g.edges[eid];
        for (int w : {u, v}) {
            homogeneous -= (ones[w] == 0 || ones[w] == 3);
            ones[w] += now_one ? 1 : -1;
            homogeneous += (ones[w] == 0 || ones[w] == 3);
        }
        sum += pow3[homogeneous];
    }
    if (sum < 0 || (static_cast<u128>(sum) & (limit - 1)) != 0)
        fail(ErrorKind::NotDivisible, "coloring sum not divisible by 2^|E|");
    return sum >> m;
}

enum class TensorBasis { Computational, XY };

/// Per-vertex contraction weights, indexed by how many of the three incident
/// edges carry state 0. XY-basis entries are scaled by 2*sqrt(2) per vertex,
/// which turns 3/(2 sqrt 2) and -1/(2 sqrt 2) into the integers 3 and -1; the
/// accumulated denominator (2 sqrt 2)^|V| = 2^{3n} is divided out exactly at
/// the end.
struct VertexTensor {
    std::array<i128, 4> weight_by_zero_count;
};

inline VertexTensor vertex_tensor(TensorBasis basis) {
    if (basis == TensorBasis::Computational) return {{0, 0, 1, 0}};
    return {{3, -1, -1, 3}};
}

/// Contracts the edge/vertex tensor network by summing, over all 2^|E| edge
/// state assignments, the product of vertex weights. In the computational
/// basis the result equals the number of 2-factors; in the xy basis it equals
/// the number of perfect matchings after exact rescaling.
inline i128 tensor_contraction_count(const Graph& g, TensorBasis basis) {
    detail::require_small_cubic(g, "tensor_contraction_count");
    int m = g.num_edges();
    int n2 = g.num_vertices;
    VertexTensor tensor = vertex_tensor(basis);

    std::vector<int> zeros(n2, 3);  // all edges start in state 0
    int zero_weight_vertices = 0;
    i128 nonzero_product = 1;
    for (int v = 0; v < n2; ++v) {
        i128 w = tensor.weight_by_zero_count[3];
        if (w == 0)
            ++zero_weight_vertices;
        else
            nonzero_product *= w;
    }
    i128 sum = zero_weight_vertices == 0 ? nonzero_product : 0;

    std::uint64_t limit = std::uint64_t{1} << m;
    for (std::uint64_t i = 1; i < limit; ++i) {
        int eid = std::countr_zero(i);
        bool now_one = ((i ^ (i >> 1)) >> eid) & 1;
        auto [u, v] = g.edges[eid];
        for (int w : {u, v}) {
            i128 before = tensor.weight_by_zero_count[zeros[w]];
            zeros[w] += now_one ? -1 : 1;
            i128 after = tensor.weight_by_zero_count[zeros[w]];
            if (before == 0)
                --zero_weight_vertices;
            else
                nonzero_product /= before;
            if (after == 0)
                ++zero_weight_vertices;
            else
                nonzero_product *= after;
        }
        if (zero_weight_vertices == 0) sum += nonzero_product;
    }

    if (basis == TensorBasis::Computational) return sum;
    // Divide out the (2 sqrt 2)^|V| = 2^{3n} scale.
    if (sum < 0 || (static_cast<u128>(sum) & (limit - 1)) != 0)
        fail(ErrorKind::NotDivisible, "xy contraction not divisible by the basis scale");
    return sum >> m;
}

}  // namespace cubic
