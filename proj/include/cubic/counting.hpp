#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "cubic/error.hpp"
#include "cubic/graph.hpp"
#include "cubic/int128.hpp"

namespace cubic {

/// Number of perfect matchings, counted by branching on the lowest-index
/// uncovered vertex with memoization on the covered-vertex bitmask. Returns 0
/// for odd orders.
inline i128 count_perfect_matchings(const Graph& g) {
    if (g.num_vertices == 0) return 1;  // empty product
    if (g.num_vertices % 2 != 0) return 0;
    std::uint64_t all = g.vertex_mask();
    std::unordered_map<std::uint64_t, i128> memo;
    auto rec = [&](auto&& self, std::uint64_t covered) -> i128 {
        if (covered == all) return 1;
        auto it = memo.find(covered);
        if (it != memo.end()) return it->second;
        int v = std::countr_zero(~covered);
        i128 total = 0;
        std::uint64_t partners = g.adj[v] & ~covered;
        while (partners) {
            int w = std::countr_zero(partners);
            partners &= partners - 1;
            total += self(self, covered | (std::uint64_t{1} << v) | (std::uint64_t{1} << w));
        }
        memo.emplace(covered, total);
        return total;
    };
    return rec(rec, 0);
}

/// Number of spanning subgraphs with every degree exactly 2, by backtracking
/// over edges with degree bounds. Deliberately shares nothing with
/// count_perfect_matchings so the complement identity on cubic graphs is a
/// real cross-check.
inline i128 count_two_factors(const Graph& g) {
    int n = g.num_vertices;
    int m = g.num_edges();
    if (n == 0) return 1;
    std::vector<int> chosen(n, 0), undecided(n, 0);
    for (auto [u, v] : g.edges) {
        ++undecided[u];
        ++undecided[v];
    }
    for (int v = 0; v < n; ++v)
        if (undecided[v] < 2) return 0;
    auto rec = [&](auto&& self, int i) -> i128 {
        if (i == m) return 1;  // degree bounds force chosen[v] == 2 everywhere
        auto [u, v] = g.edges[i];
        --undecided[u];
        --undecided[v];
        i128 total = 0;
        if (chosen[u] < 2 && chosen[v] < 2) {
            ++chosen[u];
            ++chosen[v];
            if (chosen[u] + undecided[u] >= 2 && chosen[v] + undecided[v] >= 2) total += self(self, i + 1);
            --chosen[u];
            --chosen[v];
        }
        if (chosen[u] + undecided[u] >= 2 && chosen[v] + undecided[v] >= 2) total += self(self, i + 1);
        ++undecided[u];
        ++undecided[v];
        return total;
    };
    return rec(rec, 0);
}

namespace detail {

// Fundamental cycles of a BFS spanning tree, as edge-id lists.
inline std::vector<std::vector<int>> fundamental_cycles(const Graph& g) {
    int n = g.num_vertices;
    std::vector<int> parent(n, -1), parent_edge(n, -1), depth(n, 0), order;
    std::vector<bool> visited(n, false);
    order.push_back(0);
    visited[0] = true;
    for (std::size_t qi = 0; qi < order.size(); ++qi) {
        int v = order[qi];
        std::uint64_t nbrs = g.adj[v];
        while (nbrs) {
            int w = std::countr_zero(nbrs);
            nbrs &= nbrs - 1;
            if (visited[w]) continue;
            visited[w] = true;
            parent[w] = v;
            parent_edge[w] = g.edge_id(v, w);
            depth[w] = depth[v] + 1;
            order.push_back(w);
        }
    }
    std::vector<bool> is_tree_edge(g.num_edges(), false);
    for (int v = 0; v < n; ++v)
        if (parent_edge[v] >= 0) is_tree_edge[parent_edge[v]] = true;
    std::vector<std::vector<int>> cycles;
    for (int eid = 0; eid < g.num_edges(); ++eid) {
        if (is_tree_edge[eid]) continue;
        auto [u, v] = g.edges[eid];
        std::vector<int> cycle{eid};
        while (u != v) {
            if (depth[u] < depth[v]) std::swap(u, v);
            cycle.push_back(parent_edge[u]);
            u = parent[u];
        }
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

}  // namespace detail

/// Exact number of simple cycles via the cycle space: fix a spanning tree,
/// XOR together every nonempty subset of fundamental cycles (Gray-code order,
/// incremental degree bookkeeping), and count the elements that form a single
/// connected 2-regular subgraph.
inline i128 count_cycles(const Graph& g) {
    if (!classify(g).is_connected) fail(ErrorKind::NotConnected, "count_cycles needs a connected graph");
    int r = g.num_edges() - g.num_vertices + 1;
    if (r > 30) fail(ErrorKind::CyclomaticTooLarge, "cyclomatic number " + std::to_string(r) + " exceeds 30");
    if (r <= 0) return 0;
    auto cycles = detail::fundamental_cycles(g);

    std::vector<std::uint64_t> active_adj(g.num_vertices, 0);  // neighbors via active edges
    std::vector<int> degree(g.num_vertices, 0);
    std::vector<bool> active(g.num_edges(), false);
    int bad = 0, num_active = 0;
    auto toggle = [&](int eid) {
        auto [u, v] = g.edges[eid];
        int delta = active[eid] ? -1 : 1;
        active[eid] = !active[eid];
        num_active += delta;
        for (int w : {u, v}) {
            bool was_ok = degree[w] == 0 || degree[w] == 2;
            degree[w] += delta;
            bool now_ok = degree[w] == 0 || degree[w] == 2;
            bad += static_cast<int>(was_ok) - static_cast<int>(now_ok);
        }
        active_adj[u] ^= std::uint64_t{1} << v;
        active_adj[v] ^= std::uint64_t{1} << u;
    };

    i128 count = 0;
    std::uint64_t limit = std::uint64_t{1} << r;
    for (std::uint64_t i = 1; i < limit; ++i) {
        for (int eid : cycles[std::countr_zero(i)]) toggle(eid);
        if (bad != 0) continue;
        // All degrees are 0 or 2; a single cycle means one closed walk covers
        // every active edge.
        int start = -1;
        for (int eid = 0; eid < g.num_edges(); ++eid)
            if (active[eid]) {
                start = g.edges[eid].first;
                break;
            }
        int prev = -1, cur = start, length = 0;
        do {
            std::uint64_t nxt = active_adj[cur];
            if (prev >= 0) nxt &= ~(std::uint64_t{1} << prev);
            prev = cur;
            cur = std::countr_zero(nxt);
            ++length;
        } while (cur != start);
        if (length == num_active) ++count;
    }
    return count;
}

/// Independent cycle counter: depth-first enumeration of simple paths. Each
/// cycle is counted once at its smallest vertex, walking toward its smaller
/// second endpoint first. Exponential in general; meant for small graphs as
/// an oracle for count_cycles.
inline i128 count_cycles_dfs(const Graph& g) {
    i128 count = 0;
    int n = g.num_vertices;
    std::uint64_t on_path = 0;
    auto rec = [&](auto&& self, int start, int second, int v, int length) -> void {
        std::uint64_t nbrs = g.adj[v] & ~on_path;
        if (length >= 3 && g.adjacent(v, start) && second < v) ++count;
        while (nbrs) {
            int w = std::countr_zero(nbrs);
            nbrs &= nbrs - 1;
            if (w <= start) continue;
            on_path |= std::uint64_t{1} << w;
            self(self, start, second == -1 ? w : second, w, length + 1);
            on_path &= ~(std::uint64_t{1} << w);
        }
    };
    for (int s = 0; s < n; ++s) {
        on_path = std::uint64_t{1} << s;
        rec(rec, s, -1, s, 1);
    }
    return count;
}

}  // namespace cubic
