#pragma once

#include <string>
#include <vector>

#include "cubic/error.hpp"
#include "cubic/graph.hpp"

namespace cubic {

enum class FamilyKind { Mn, MCk, K4, K33, Cube, Moebius, Prism, Petersen };

struct FamilySpec {
    FamilyKind kind;
    int parameter = 0;  // n for Mn, k for MCk/Prism, vertex count for Moebius
};

namespace detail {

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return build_graph(n, std::move(edges));
}

inline Graph complete_bipartite_33() {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v) edges.emplace_back(u, v);
    return build_graph(6, std::move(edges));
}

// K_{4,4} with the perfect matching i -- 4+i removed.
inline Graph cube_graph() {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v)
            if (u != v) edges.emplace_back(u, 4 + v);
    return build_graph(8, std::move(edges));
}

inline Graph moebius_ladder(int num_vertices) {
    if (num_vertices < 6 || num_vertices % 2 != 0)
        fail(ErrorKind::ParameterOutOfRange, "Moebius ladder needs an even vertex count >= 6");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < num_vertices; ++v) edges.emplace_back(v, (v + 1) % num_vertices);
    for (int v = 0; v < num_vertices / 2; ++v) edges.emplace_back(v, v + num_vertices / 2);
    return build_graph(num_vertices, std::move(edges));
}

inline Graph prism_graph(int k) {
    if (k < 3) fail(ErrorKind::ParameterOutOfRange, "prism needs k >= 3");
    if (2 * k > kMaxVertices) fail(ErrorKind::ParameterOutOfRange, "prism exceeds 64 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < k; ++v) {
        edges.emplace_back(v, (v + 1) % k);
        edges.emplace_back(k + v, k + (v + 1) % k);
        edges.emplace_back(v, k + v);
    }
    return build_graph(2 * k, std::move(edges));
}

inline Graph petersen_graph() {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < 5; ++v) {
        edges.emplace_back(v, (v + 1) % 5);      // outer cycle
        edges.emplace_back(v, 5 + v);            // spokes
        edges.emplace_back(5 + v, 5 + (v + 2) % 5);  // inner pentagram
    }
    return build_graph(10, std::move(edges));
}

}  // namespace detail

/// The extremal family M_n on 2n vertices.
///
/// M_2 = K_4, M_3 = K_{3,3}, M_4 = K_{4,4} minus a perfect matching, M_5 is
/// the Moebius ladder on 10 vertices. For n >= 6 the graph is a rung ladder
/// capped at both ends with a K_{3,3}-minus-an-edge gadget; each cap attaches
/// to the rails through the two endpoints of its deleted edge. Vertex
/// numbering is fixed: left cap 0..5 with attach pair (0, 1), rung i occupies
/// (6+2i, 7+2i), right cap 2n-6..2n-1 with attach pair (2n-6, 2n-5).
inline Graph m_graph(int n) {
    if (n < 2) fail(ErrorKind::ParameterOutOfRange, "m_graph needs n >= 2");
    if (2 * n > kMaxVertices) fail(ErrorKind::ParameterOutOfRange, "m_graph exceeds 64 vertices");
    if (n == 2) return detail::complete_graph(4);
    if (n == 3) return detail::complete_bipartite_33();
    if (n == 4) return detail::cube_graph();
    if (n == 5) return detail::moebius_ladder(10);

    int total = 2 * n;
    std::vector<std::pair<int, int>> edges;
    // Cap gadget: attach pair (a, b) are the endpoints of the deleted edge of
    // a K_{3,3} on parts {a, p0, p1} and {b, q0, q1}.
    auto add_cap = [&edges](int a, int b, int p0, int p1, int q0, int q1) {
        edges.emplace_back(a, q0);
        edges.emplace_back(a, q1);
        edges.emplace_back(b, p0);
        edges.emplace_back(b, p1);
        edges.emplace_back(p0, q0);
        edges.emplace_back(p0, q1);
        edges.emplace_back(p1, q0);
        edges.emplace_back(p1, q1);
    };
    add_cap(0, 1, 2, 3, 4, 5);
    add_cap(total - 6, total - 5, total - 4, total - 3, total - 2, total - 1);
    int rungs = n - 6;
    for (int i = 0; i < rungs; ++i) edges.emplace_back(6 + 2 * i, 7 + 2 * i);
    // Rails: top 0 - t_0 - ... - t_{rungs-1} - (2n-6), bottom mirrors on odd ids.
    int prev_top = 0, prev_bottom = 1;
    for (int i = 0; i < rungs; ++i) {
        edges.emplace_back(prev_top, 6 + 2 * i);
        edges.emplace_back(prev_bottom, 7 + 2 * i);
        prev_top = 6 + 2 * i;
        prev_bottom = 7 + 2 * i;
    }
    edges.emplace_back(prev_top, total - 6);
    edges.emplace_back(prev_bottom, total - 5);
    return build_graph(total, std::move(edges));
}

/// The cycle-rich family MC_k on 2k vertices: two k-cycles on x_1..x_k and
/// y_1..y_k plus crossed rungs x_{2i-1} y_{2i}, x_{2i} y_{2i-1}; odd k adds
/// the straight rung x_k y_k. Vertex x_i is i-1 and y_i is k+i-1.
inline Graph mc_graph(int k) {
    if (k < 3) fail(ErrorKind::ParameterOutOfRange, "mc_graph needs k >= 3");
    if (2 * k > kMaxVertices) fail(ErrorKind::ParameterOutOfRange, "mc_graph exceeds 64 vertices");
    auto x = [](int i) { return i - 1; };
    auto y = [k](int i) { return k + i - 1; };
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= k; ++i) {
        int j = i % k + 1;
        edges.emplace_back(x(i), x(j));
        edges.emplace_back(y(i), y(j));
    }
    for (int i = 1; 2 * i <= k; ++i) {
        edges.emplace_back(x(2 * i - 1), y(2 * i));
        edges.emplace_back(x(2 * i), y(2 * i - 1));
    }
    if (k % 2 == 1) edges.emplace_back(x(k), y(k));
    return build_graph(2 * k, std::move(edges));
}

inline Graph named_graph(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::Mn: return m_graph(spec.parameter);
        case FamilyKind::MCk: return mc_graph(spec.parameter);
        case FamilyKind::K4: return detail::complete_graph(4);
        case FamilyKind::K33: return detail::complete_bipartite_33();
        case FamilyKind::Cube: return detail::cube_graph();
        case FamilyKind::Moebius: return detail::moebius_ladder(spec.parameter);
        case FamilyKind::Prism: return detail::prism_graph(spec.parameter);
        case FamilyKind::Petersen: return detail::petersen_graph();
    }
    fail(ErrorKind::ParameterOutOfRange, "unknown family kind");
}

}  // namespace cubic
