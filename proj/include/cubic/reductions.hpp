#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "cubic/error.hpp"
#include "cubic/graph.hpp"

namespace cubic {

/// Labeled surroundings of a ladder-bridge xy: a, b are the non-y neighbors
/// of x and c, d the non-x neighbors of y, with a, c in component A of
/// G - {x, y} and b, d in component B. The side holding the smallest of the
/// four neighbors is A, which makes the transforms deterministic.
struct LadderBridgeContext {
    int edge_id = -1;
    int x = -1, y = -1;
    int a = -1, b = -1, c = -1, d = -1;
    std::uint64_t side_a = 0, side_b = 0;
};

/// Exchanges the two sides (A and B swap roles, so a<->b and c<->d).
inline LadderBridgeContext swap_sides(const LadderBridgeContext& ctx) {
    LadderBridgeContext out = ctx;
    std::swap(out.a, out.b);
    std::swap(out.c, out.d);
    std::swap(out.side_a, out.side_b);
    return out;
}

inline LadderBridgeContext locate_context(const Graph& g, int edge_id) {
    Classification cls = classify(g);
    if (!cls.is_cubic || !cls.is_connected || !cls.is_bipartite)
        fail(ErrorKind::PreconditionViolated, "ladder-bridge context needs a connected bipartite cubic graph");
    if (edge_id < 0 || edge_id >= g.num_edges())
        fail(ErrorKind::PreconditionViolated, "edge id out of range");
    LadderBridgeContext ctx;
    ctx.edge_id = edge_id;
    ctx.x = g.edges[edge_id].first;
    ctx.y = g.edges[edge_id].second;
    std::uint64_t rest = g.vertex_mask() & ~(std::uint64_t{1} << ctx.x) & ~(std::uint64_t{1} << ctx.y);
    std::uint64_t comp_first = detail::component_mask(g, std::countr_zero(rest), rest);
    if (comp_first == rest) fail(ErrorKind::NotLadderBridge, "deleting the endpoints leaves one component");
    std::uint64_t comp_second = rest & ~comp_first;
    if (detail::count_components(g, comp_second) != 1)
        fail(ErrorKind::NotLadderBridge, "deleting the endpoints leaves more than two components");

    // One neighbor of x and one of y on each side; the side holding the
    // smallest neighbor becomes A.
    std::uint64_t x_nbrs = g.adj[ctx.x] & rest;
    std::uint64_t y_nbrs = g.adj[ctx.y] & rest;
    std::uint64_t four = x_nbrs | y_nbrs;
    int smallest = std::countr_zero(four);
    ctx.side_a = (comp_first >> smallest) & 1 ? comp_first : comp_second;
    ctx.side_b = (comp_first >> smallest) & 1 ? comp_second : comp_first;
    if (!(x_nbrs & ctx.side_a) || !(x_nbrs & ctx.side_b) || !(y_nbrs & ctx.side_a) || !(y_nbrs & ctx.side_b))
        fail(ErrorKind::NotLadderBridge, "bridge-like split: x or y has both outer neighbors on one side");
    ctx.a = std::countr_zero(x_nbrs & ctx.side_a);
    ctx.b = std::countr_zero(x_nbrs & ctx.side_b);
    ctx.c = std::countr_zero(y_nbrs & ctx.side_a);
    ctx.d = std::countr_zero(y_nbrs & ctx.side_b);
    return ctx;
}

namespace detail {

// Removes `dropped` vertices, adds `extra` edges, compacts labels.
inline Graph rebuild_without(const Graph& g, std::vector<int> dropped,
                             const std::vector<std::pair<int, int>>& extra) {
    std::uint64_t drop_mask = 0;
    for (int v : dropped) drop_mask |= std::uint64_t{1} << v;
    std::vector<int> new_label(g.num_vertices, -1);
    int next = 0;
    for (int v = 0; v < g.num_vertices; ++v)
        if (!((drop_mask >> v) & 1)) new_label[v] = next++;
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges)
        if (new_label[u] >= 0 && new_label[v] >= 0) edges.emplace_back(new_label[u], new_label[v]);
    for (auto [u, v] : extra) edges.emplace_back(new_label[u], new_label[v]);
    return build_graph(next, std::move(edges));
}

inline void require_bipartite_cubic(const Graph& g, bool connected_required, const char* what) {
    Classification c = classify(g);
    bool ok = c.is_cubic && c.is_bipartite && (!connected_required || c.is_connected);
    if (!ok) throw std::logic_error(std::string(what) + ": transform postcondition failed");
}

}  // namespace detail

/// Split transform at a ladder-bridge xy whose B-side neighbors b, d
/// are adjacent: G' drops x, y and connects ad, cb; G'' additionally drops
/// b, d and connects ae, cf, where e, f are the third neighbors of b and d.
/// Perfect-matching counts satisfy Fac(G) = Fac(G') + Fac(G'').
inline std::pair<Graph, Graph> split_adjacent_ladder_bridges(const Graph& g,
                                                             const LadderBridgeContext& ctx) {
    if (!g.adjacent(ctx.b, ctx.d))
        fail(ErrorKind::PreconditionViolated, "the B-side neighbors b, d must be adjacent");
    if (g.adjacent(ctx.a, ctx.d) || g.adjacent(ctx.c, ctx.b))
        fail(ErrorKind::PreconditionViolated, "an edge to be added already exists");
    std::uint64_t b_rest = g.adj[ctx.b] & ~(std::uint64_t{1} << ctx.x) & ~(std::uint64_t{1} << ctx.d);
    std::uint64_t d_rest = g.adj[ctx.d] & ~(std::uint64_t{1} << ctx.y) & ~(std::uint64_t{1} << ctx.b);
    int e = std::countr_zero(b_rest);
    int f = std::countr_zero(d_rest);
    if (g.adjacent(ctx.a, e) || g.adjacent(ctx.c, f))
        fail(ErrorKind::PreconditionViolated, "an edge to be added already exists");
    Graph first = detail::rebuild_without(g, {ctx.x, ctx.y}, {{ctx.a, ctx.d}, {ctx.c, ctx.b}});
    Graph second = detail::rebuild_without(g, {ctx.x, ctx.y, ctx.b, ctx.d}, {{ctx.a, e}, {ctx.c, f}});
    detail::require_bipartite_cubic(first, true, "split G'");
    detail::require_bipartite_cubic(second, true, "split G''");
    return {std::move(first), std::move(second)};
}

/// Contraction transform at an isolated ladder-bridge (no ac or bd edge):
/// drops x, y and connects ac and bd. The result is simple bipartite cubic
/// with exactly two components, and Fac(G) <= Fac(G').
inline Graph contract_isolated_ladder_bridge(const Graph& g, const LadderBridgeContext& ctx) {
    if (g.adjacent(ctx.a, ctx.c) || g.adjacent(ctx.b, ctx.d))
        fail(ErrorKind::PreconditionViolated, "requires no edge inside {a,c} nor {b,d}");
    Graph out = detail::rebuild_without(g, {ctx.x, ctx.y}, {{ctx.a, ctx.c}, {ctx.b, ctx.d}});
    detail::require_bipartite_cubic(out, false, "contract G'");
    if (detail::count_components(out, out.vertex_mask()) != 2)
        throw std::logic_error("contract G': expected exactly two components");
    return out;
}

}  // namespace cubic
