#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "cubic/canonical.hpp"
#include "cubic/error.hpp"
#include "cubic/graph.hpp"
#include "cubic/parallel.hpp"

namespace cubic {

namespace detail {

// Orderly generation of simple graphs with max degree <= 3 on a fixed vertex
// count. Edges live at column-order positions pos(u,v) = v(v-1)/2 + u and are
// added in strictly increasing position order; a partial graph survives only
// if its code is the lex-max over relabelings (see MaxCodeTest). Connectivity
// and 3-regularity are checked at full edge count.
class CubicGenerator {
  public:
    CubicGenerator(int num_vertices, bool bipartite_only)
        : n_(num_vertices), bipartite_only_(bipartite_only), target_(3 * num_vertices / 2) {
        for (int v = 1; v < n_; ++v)
            for (int u = 0; u < v; ++u) position_pair_.emplace_back(u, v);
        g_.num_vertices = n_;
        g_.adj.assign(n_, 0);
        deg_.assign(n_, 0);
    }

    // Expands everything below the current partial graph. `emit` receives
    // completed connected cubic graphs in their generation labeling.
    template <typename Emit>
    void run(int last_pos, int num_edges, Emit&& emit) {
        dfs(last_pos, num_edges, emit);
    }

    // Collects the surviving partial states at `depth` edges instead of
    // recursing past them; completions reached earlier are emitted as usual.
    struct Task {
        std::vector<std::pair<int, int>> edges;
        int last_pos;
    };
    template <typename Emit>
    std::vector<Task> collect_tasks(int depth, Emit&& emit) {
        std::vector<Task> tasks;
        auto sink = [&](int last_pos, int num_edges) -> bool {
            if (num_edges < depth || num_edges == target_) return false;
            std::vector<std::pair<int, int>> edges;
            for (int v = 0; v < n_; ++v) {
                std::uint64_t higher = g_.adj[v] >> (v + 1) << (v + 1);
                while (higher) {
                    int w = std::countr_zero(higher);
                    higher &= higher - 1;
                    edges.emplace_back(v, w);
                }
            }
            tasks.push_back({std::move(edges), last_pos});
            return true;  // do not recurse further
        };
        dfs_with_cutoff(-1, 0, emit, sink);
        return tasks;
    }

    void load(const Task& task) {
        for (auto [u, v] : task.edges) add_edge(u, v);
    }

  private:
    template <typename Emit>
    void dfs(int last_pos, int num_edges, Emit& emit) {
        auto no_cutoff = [](int, int) { return false; };
        dfs_with_cutoff(last_pos, num_edges, emit, no_cutoff);
    }

    template <typename Emit, typename Cutoff>
    void dfs_with_cutoff(int last_pos, int num_edges, Emit& emit, Cutoff& cutoff) {
        if (num_edges == target_) {
            if (connected()) emit(g_);
            return;
        }
        if (cutoff(last_pos, num_edges)) return;
        int total_positions = static_cast<int>(position_pair_.size());
        for (int p = last_pos + 1; p < total_positions; ++p) {
            if (total_positions - p < target_ - num_edges) break;
            auto [u, v] = position_pair_[p];
            if (deg_[u] == 3 || deg_[v] == 3 || g_.adjacent(u, v)) continue;
            if (bipartite_only_ && creates_odd_cycle(u, v)) continue;
            add_edge(u, v);
            if (completable(p) && !stranded_component(u) && is_generation_canonical(g_))
                dfs_with_cutoff(p, num_edges + 1, emit, cutoff);
            remove_edge(u, v);
        }
    }

    void add_edge(int u, int v) {
        g_.adj[u] |= std::uint64_t{1} << v;
        g_.adj[v] |= std::uint64_t{1} << u;
        ++deg_[u];
        ++deg_[v];
    }

    void remove_edge(int u, int v) {
        g_.adj[u] &= ~(std::uint64_t{1} << v);
        g_.adj[v] &= ~(std::uint64_t{1} << u);
        --deg_[u];
        --deg_[v];
    }

    bool connected() const {
        return component_mask(g_, 0, g_.vertex_mask()) == g_.vertex_mask();
    }

    // Would edge (u, v) close an odd cycle in the current partial graph?
    bool creates_odd_cycle(int u, int v) const {
        std::uint64_t even = std::uint64_t{1} << u, odd = 0, seen = even;
        std::uint64_t frontier = even;
        bool parity = false;
        while (frontier) {
            std::uint64_t next = 0, f = frontier;
            while (f) {
                int w = std::countr_zero(f);
                f &= f - 1;
                next |= g_.adj[w];
            }
            frontier = next & ~seen;
            seen |= frontier;
            parity = !parity;
            (parity ? odd : even) |= frontier;
        }
        return (even >> v) & 1;  // same color as u
    }

    // Every deficient vertex must still reach degree 3 using positions > p.
    bool completable(int p) const {
        auto [r, c] = position_pair_[p];
        std::uint64_t vmask = g_.vertex_mask();
        std::uint64_t not_full = 0;
        for (int w = 0; w < n_; ++w)
            if (deg_[w] < 3) not_full |= std::uint64_t{1} << w;
        std::uint64_t above_c = c + 1 >= 64 ? 0 : (vmask & ~((std::uint64_t{2} << c) - 1));
        std::uint64_t above_r = vmask & ~((std::uint64_t{2} << r) - 1);
        std::uint64_t scan = not_full;
        while (scan) {
            int w = std::countr_zero(scan);
            scan &= scan - 1;
            std::uint64_t reachable;
            if (w > c)
                reachable = vmask;
            else if (w == c)
                reachable = above_r & ~(std::uint64_t{1} << c);
            else
                reachable = above_c | (w > r ? (std::uint64_t{1} << c) : 0);
            reachable &= not_full & ~g_.adj[w] & ~(std::uint64_t{1} << w);
            if (std::popcount(reachable) < 3 - deg_[w]) return false;
        }
        return true;
    }

    // A component whose vertices are all at degree 3 can never grow; prune
    // unless it already spans everything (i.e. the graph is complete here).
    bool stranded_component(int u) const {
        if (deg_[u] != 3) return false;
        std::uint64_t comp = component_mask(g_, u, g_.vertex_mask());
        if (comp == g_.vertex_mask()) return false;
        std::uint64_t scan = comp;
        while (scan) {
            int w = std::countr_zero(scan);
            scan &= scan - 1;
            if (deg_[w] < 3) return false;
        }
        return true;
    }

    int n_;
    bool bipartite_only_;
    int target_;
    std::vector<std::pair<int, int>> position_pair_;
    Graph g_;  // edges field unused while generating
    std::vector<int> deg_;
};

inline Graph relabel_canonical(const Graph& g) {
    return decode_graph6(canonical_form(g).bytes);
}

}  // namespace detail

/// Exactly one representative per isomorphism class of simple connected cubic
/// (optionally bipartite) graphs on `num_vertices` vertices, in ascending
/// canonical-form order. The search tree is split at a fixed depth into
/// independent subtree tasks when jobs > 1; the output does not depend on the
/// schedule.
inline std::vector<Graph> generate_connected_cubic(int num_vertices, bool bipartite_only,
                                                   int jobs = 1) {
    if (num_vertices < 4 || num_vertices > 16 || num_vertices % 2 != 0)
        fail(ErrorKind::ParameterOutOfRange, "census generation supports even 4 <= V <= 16");
    constexpr int kSplitDepth = 6;

    std::vector<Graph> found;
    auto emit_seed = [&](const Graph& g) {
        Graph copy = g;
        std::vector<std::pair<int, int>> edges;
        for (int v = 0; v < copy.num_vertices; ++v) {
            std::uint64_t higher = copy.adj[v] >> (v + 1) << (v + 1);
            while (higher) {
                int w = std::countr_zero(higher);
                higher &= higher - 1;
                edges.emplace_back(v, w);
            }
        }
        copy.edges = std::move(edges);
        found.push_back(std::move(copy));
    };

    detail::CubicGenerator root(num_vertices, bipartite_only);
    auto tasks = root.collect_tasks(kSplitDepth, emit_seed);

    std::vector<std::vector<Graph>> per_task(tasks.size());
    detail::run_indexed(jobs, tasks.size(), [&](std::size_t i) {
        detail::CubicGenerator worker(num_vertices, bipartite_only);
        worker.load(tasks[i]);
        worker.run(tasks[i].last_pos, static_cast<int>(tasks[i].edges.size()), [&](const Graph& g) {
            Graph copy = g;
            std::vector<std::pair<int, int>> edges;
            for (int v = 0; v < copy.num_vertices; ++v) {
                std::uint64_t higher = copy.adj[v] >> (v + 1) << (v + 1);
                while (higher) {
                    int w = std::countr_zero(higher);
                    higher &= higher - 1;
                    edges.emplace_back(v, w);
                }
            }
            copy.edges = std::move(edges);
            per_task[i].push_back(std::move(copy));
        });
    });
    for (auto& bucket : per_task)
        for (auto& g : bucket) found.push_back(std::move(g));

    std::vector<Graph> out(found.size());
    detail::run_indexed(jobs, found.size(), [&](std::size_t i) {
        out[i] = detail::relabel_canonical(found[i]);
    });
    std::sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
        return encode_graph6(a) < encode_graph6(b);
    });
    return out;
}

}  // namespace cubic
