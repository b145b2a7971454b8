#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cubic/error.hpp"

namespace cubic {

// Hard cap on graph order. A single 64-bit word per vertex then covers the
// whole neighborhood, which keeps adjacency tests and component scans in the
// enumeration loops branch-free.
constexpr int kMaxVertices = 64;

/// Simple undirected graph on at most 64 vertices.
///
/// `adj[v]` is the neighbor bitmask of v and `edges` is the lexicographically
/// sorted list of (u, v) pairs with u < v; the index of a pair in `edges` is
/// its edge id. Both views are kept consistent by construction, so values of
/// this type can be treated as immutable.
struct Graph {
    int num_vertices = 0;
    std::vector<std::uint64_t> adj;
    std::vector<std::pair<int, int>> edges;

    bool adjacent(int u, int v) const { return (adj[u] >> v) & 1; }
    int degree(int v) const { return std::popcount(adj[v]); }
    int num_edges() const { return static_cast<int>(edges.size()); }

    std::uint64_t vertex_mask() const {
        return num_vertices == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << num_vertices) - 1;
    }

    /// Edge id of (u, v), or -1 when the edge is absent.
    int edge_id(int u, int v) const {
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
        if (it == edges.end() || *it != std::make_pair(u, v)) return -1;
        return static_cast<int>(it - edges.begin());
    }

    bool operator==(const Graph& other) const {
        return num_vertices == other.num_vertices && edges == other.edges;
    }
};

/// Validates and normalizes an edge list into a Graph.
inline Graph build_graph(int num_vertices, std::vector<std::pair<int, int>> edge_list) {
    if (num_vertices < 0 || num_vertices > kMaxVertices)
        fail(ErrorKind::TooManyVertices,
             "num_vertices must be between 0 and 64, got " + std::to_string(num_vertices));
    Graph g;
    g.num_vertices = num_vertices;
    g.adj.assign(num_vertices, 0);
    for (auto& [u, v] : edge_list) {
        if (u < 0 || u >= num_vertices || v < 0 || v >= num_vertices)
            fail(ErrorKind::VertexOutOfRange,
                 "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        if (u == v) fail(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if ((g.adj[u] >> v) & 1)
            fail(ErrorKind::DuplicateEdge,
                 "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        g.adj[u] |= std::uint64_t{1} << v;
        g.adj[v] |= std::uint64_t{1} << u;
    }
    std::sort(edge_list.begin(), edge_list.end());
    g.edges = std::move(edge_list);
    return g;
}

namespace detail {

// Mask of the component of `start` inside `allowed` (start must be in allowed).
inline std::uint64_t component_mask(const Graph& g, int start, std::uint64_t allowed) {
    std::uint64_t seen = std::uint64_t{1} << start;
    std::uint64_t frontier = seen;
    while (frontier) {
        std::uint64_t next = 0;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= g.adj[v] & allowed;
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen & allowed;
}

inline int count_components(const Graph& g, std::uint64_t allowed) {
    int components = 0;
    while (allowed) {
        int v = std::countr_zero(allowed);
        allowed &= ~component_mask(g, v, allowed);
        ++components;
    }
    return components;
}

}  // namespace detail

struct Classification {
    bool is_cubic = false;
    bool is_connected = false;
    bool is_bipartite = false;
    // Present iff bipartite: the two vertex sides as bitmasks. In every
    // component the side holding its smallest vertex goes into `first`.
    std::optional<std::pair<std::uint64_t, std::uint64_t>> bipartition;
};

inline Classification classify(const Graph& g) {
    Classification c;
    c.is_cubic = g.num_vertices > 0;
    for (int v = 0; v < g.num_vertices; ++v)
        if (g.degree(v) != 3) c.is_cubic = false;

    std::uint64_t all = g.vertex_mask();
    c.is_connected = g.num_vertices == 0 || detail::component_mask(g, 0, all) == all;

    // 2-color component by component; any conflicting edge kills bipartiteness.
    std::uint64_t side0 = 0, side1 = 0, seen = 0;
    bool ok = true;
    for (int s = 0; s < g.num_vertices && ok; ++s) {
        if ((seen >> s) & 1) continue;
        std::uint64_t frontier = std::uint64_t{1} << s;
        side0 |= frontier;
        seen |= frontier;
        bool parity = false;
        while (frontier && ok) {
            std::uint64_t next = 0;
            std::uint64_t f = frontier;
            while (f) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= g.adj[v];
            }
            std::uint64_t& same = parity ? side1 : side0;
            if (next & same) ok = false;  // edge inside one side
            frontier = next & ~seen;
            seen |= frontier;
            (parity ? side0 : side1) |= frontier;
            parity = !parity;
        }
    }
    c.is_bipartite = ok;
    if (ok) c.bipartition = std::make_pair(side0, side1);
    return c;
}

/// r(G) = |E| - |V| + 1 for connected G.
inline int cyclomatic_number(const Graph& g) {
    if (!classify(g).is_connected) fail(ErrorKind::NotConnected, "cyclomatic number needs a connected graph");
    return g.num_edges() - g.num_vertices + 1;
}

/// Edge ids whose removal increases the number of components (low-link scan).
inline std::vector<int> find_bridges(const Graph& g) {
    int n = g.num_vertices;
    std::vector<int> tin(n, -1), low(n, 0);
    std::vector<int> bridges;
    int timer = 0;
    // Depth is bounded by 64, so plain recursion is fine.
    auto dfs = [&](auto&& self, int v, int parent_edge) -> void {
        tin[v] = low[v] = timer++;
        std::uint64_t nbrs = g.adj[v];
        while (nbrs) {
            int to = std::countr_zero(nbrs);
            nbrs &= nbrs - 1;
            int eid = g.edge_id(v, to);
            if (eid == parent_edge) continue;
            if (tin[to] != -1) {
                low[v] = std::min(low[v], tin[to]);
            } else {
                self(self, to, eid);
                low[v] = std::min(low[v], low[to]);
                if (low[to] > tin[v]) bridges.push_back(eid);
            }
        }
    };
    for (int v = 0; v < n; ++v)
        if (tin[v] == -1) dfs(dfs, v, -1);
    std::sort(bridges.begin(), bridges.end());
    return bridges;
}

/// Ladder-bridges of a connected bipartite cubic graph: edges uv such that the
/// induced subgraph on V \ {u, v} is disconnected. Checked by the literal
/// definition; the graphs are tiny.
inline std::vector<int> find_ladder_bridges(const Graph& g) {
    Classification c = classify(g);
    if (!c.is_cubic || !c.is_connected || !c.is_bipartite)
        fail(ErrorKind::PreconditionViolated, "ladder-bridges are defined on connected bipartite cubic graphs");
    std::vector<int> result;
    std::uint64_t all = g.vertex_mask();
    for (int eid = 0; eid < g.num_edges(); ++eid) {
        auto [u, v] = g.edges[eid];
        std::uint64_t rest = all & ~(std::uint64_t{1} << u) & ~(std::uint64_t{1} << v);
        if (rest && detail::count_components(g, rest) >= 2) result.push_back(eid);
    }
    return result;
}

struct InducedResult {
    Graph graph;
    int component_count = 0;
};

/// Induced subgraph on V minus `removed`, labels compacted keeping relative
/// order, plus the component count of the result.
inline InducedResult induced_without(const Graph& g, const std::vector<int>& removed) {
    std::uint64_t removed_mask = 0;
    for (int v : removed) {
        if (v < 0 || v >= g.num_vertices) fail(ErrorKind::VertexOutOfRange, "removed vertex out of range");
        removed_mask |= std::uint64_t{1} << v;
    }
    std::uint64_t keep = g.vertex_mask() & ~removed_mask;
    std::vector<int> new_label(g.num_vertices, -1);
    int next = 0;
    for (int v = 0; v < g.num_vertices; ++v)
        if ((keep >> v) & 1) new_label[v] = next++;
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges)
        if (new_label[u] >= 0 && new_label[v] >= 0) edges.emplace_back(new_label[u], new_label[v]);
    InducedResult res;
    res.graph = build_graph(next, std::move(edges));
    res.component_count = detail::count_components(g, keep);
    return res;
}

/// Bipartite double D(G): vertex set V x {1,2}, edges (v,1)(w,2) for vw in E.
/// Side s of vertex v maps to v + s*|V|.
inline Graph double_cover(const Graph& g) {
    if (!classify(g).is_cubic) fail(ErrorKind::NotCubic, "double cover is defined for cubic graphs here");
    if (g.num_vertices * 2 > kMaxVertices)
        fail(ErrorKind::TooManyVertices, "double cover would exceed 64 vertices");
    int n = g.num_vertices;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(2 * g.edges.size());
    for (auto [u, v] : g.edges) {
        edges.emplace_back(u, v + n);
        edges.emplace_back(v, u + n);
    }
    Graph d = build_graph(2 * n, std::move(edges));
    Classification c = classify(d);
    if (!c.is_cubic || !c.is_bipartite)
        throw std::logic_error("double_cover postcondition failed");
    return d;
}

}  // namespace cubic
