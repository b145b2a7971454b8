#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubic/graph.hpp"
#include "cubic/io.hpp"

namespace cubic {

/// Isomorphism-class certificate: two graphs have equal CanonicalForm bytes
/// if and only if they are isomorphic.
struct CanonicalForm {
    std::string bytes;  // graph6 of the canonically relabeled graph
    std::optional<std::uint64_t> orbit_size;  // |Aut(G)|, filled on request

    bool operator==(const CanonicalForm& other) const { return bytes == other.bytes; }
    bool operator!=(const CanonicalForm& other) const { return bytes != other.bytes; }
    bool operator<(const CanonicalForm& other) const { return bytes < other.bytes; }
};

namespace detail {

// Upper-triangle code of a labeling, in graph6 column order, one word per
// column. Column k holds the k adjacency bits toward earlier positions,
// most-significant first, so whole columns compare as integers.
inline std::vector<std::uint64_t> code_of_labeling(const Graph& g, const std::vector<int>& seq) {
    int n = g.num_vertices;
    std::vector<std::uint64_t> code(n == 0 ? 0 : n - 1, 0);
    for (int k = 1; k < n; ++k) {
        std::uint64_t word = 0;
        for (int i = 0; i < k; ++i) word = (word << 1) | ((g.adj[seq[i]] >> seq[k]) & 1);
        code[k - 1] = word;
    }
    return code;
}

// Union-find used for automorphism orbit pruning.
struct OrbitPartition {
    std::vector<int> parent;
    explicit OrbitPartition(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

constexpr std::size_t kMaxStoredAutomorphisms = 512;

// Refinement-based canonical labeling: iterative neighborhood refinement
// (starting from the degree partition) followed by backtracking over the
// remaining cells, taking the lexicographically smallest adjacency encoding.
// Discovered automorphisms prune equivalent branches unless an exact
// automorphism count was requested.
class CanonicalSearch {
  public:
    CanonicalSearch(const Graph& g, bool count_automorphisms)
        : g_(g), n_(g.num_vertices), counting_(count_automorphisms) {}

    void run() {
        std::vector<std::vector<int>> cells;
        if (n_ > 0) {
            cells.emplace_back(n_);
            for (int v = 0; v < n_; ++v) cells[0][v] = v;
        }
        descend(cells, {});
    }

    const std::vector<int>& best_labeling() const { return best_seq_; }
    std::uint64_t automorphism_count() const { return aut_count_; }

  private:
    void refine(std::vector<std::vector<int>>& cells) const {
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<int> cell_of(n_);
            for (std::size_t i = 0; i < cells.size(); ++i)
                for (int v : cells[i]) cell_of[v] = static_cast<int>(i);
            std::vector<std::vector<int>> next;
            next.reserve(cells.size());
            for (auto& cell : cells) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                // Group members by their neighbor profile over the current
                // cells; map order makes the subcell order label-independent.
                std::map<std::vector<int>, std::vector<int>> groups;
                for (int v : cell) {
                    std::vector<int> sig(cells.size(), 0);
                    std::uint64_t nbrs = g_.adj[v];
                    while (nbrs) {
                        int w = std::countr_zero(nbrs);
                        nbrs &= nbrs - 1;
                        ++sig[cell_of[w]];
                    }
                    groups[sig].push_back(v);
                }
                if (groups.size() > 1) changed = true;
                for (auto& [sig, members] : groups) next.push_back(std::move(members));
            }
            cells = std::move(next);
        }
    }

    void descend(std::vector<std::vector<int>> cells, std::vector<int> individualized) {
        refine(cells);
        int target = -1;
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i].size() > 1) {
                target = static_cast<int>(i);
                break;
            }
        if (target < 0) {
            std::vector<int> seq;
            seq.reserve(n_);
            for (auto& cell : cells) seq.push_back(cell[0]);
            visit_leaf(seq);
            return;
        }
        std::vector<int> candidates = cells[target];
        std::sort(candidates.begin(), candidates.end());
        OrbitPartition orbits(n_);
        if (!counting_) {
            for (const auto& gamma : generators_) {
                bool fixes_prefix = true;
                for (int v : individualized)
                    if (gamma[v] != v) {
                        fixes_prefix = false;
                        break;
                    }
                if (!fixes_prefix) continue;
                for (int v = 0; v < n_; ++v) orbits.unite(v, gamma[v]);
            }
        }
        std::vector<bool> seen_root(n_, false);
        for (int v : candidates) {
            if (!counting_) {
                int root = orbits.find(v);
                if (seen_root[root]) continue;
                seen_root[root] = true;
            }
            std::vector<std::vector<int>> child;
            child.reserve(cells.size() + 1);
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (static_cast<int>(i) != target) {
                    child.push_back(cells[i]);
                    continue;
                }
                child.push_back({v});
                std::vector<int> rest;
                for (int w : cells[i])
                    if (w != v) rest.push_back(w);
                child.push_back(std::move(rest));
            }
            std::vector<int> next_prefix = individualized;
            next_prefix.push_back(v);
            descend(std::move(child), std::move(next_prefix));
        }
    }

    void visit_leaf(const std::vector<int>& seq) {
        std::vector<std::uint64_t> code = code_of_labeling(g_, seq);
        if (best_seq_.empty() && n_ > 0) {
            best_seq_ = seq;
            best_code_ = std::move(code);
            aut_count_ = 1;
            return;
        }
        if (code < best_code_) {
            best_seq_ = seq;
            best_code_ = std::move(code);
            aut_count_ = 1;
        } else if (code == best_code_) {
            ++aut_count_;
            if (generators_.size() < kMaxStoredAutomorphisms) {
                std::vector<int> gamma(n_);
                for (int i = 0; i < n_; ++i) gamma[best_seq_[i]] = seq[i];
                generators_.push_back(std::move(gamma));
            }
        }
    }

    const Graph& g_;
    int n_;
    bool counting_;
    std::vector<int> best_seq_;
    std::vector<std::uint64_t> best_code_;
    std::uint64_t aut_count_ = 0;
    std::vector<std::vector<int>> generators_;
};

}  // namespace detail

/// Canonical form of g. With `with_orbit_size` the automorphism count is
/// computed as well, which disables branch pruning; intended for small
/// graphs.
inline CanonicalForm canonical_form(const Graph& g, bool with_orbit_size = false) {
    CanonicalForm form;
    if (g.num_vertices == 0) {
        form.bytes = encode_graph6(g);
        if (with_orbit_size) form.orbit_size = 1;
        return form;
    }
    detail::CanonicalSearch search(g, with_orbit_size);
    search.run();
    const std::vector<int>& seq = search.best_labeling();
    std::vector<int> position(g.num_vertices);
    for (int k = 0; k < g.num_vertices; ++k) position[seq[k]] = k;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges.size());
    for (auto [u, v] : g.edges) edges.emplace_back(position[u], position[v]);
    form.bytes = encode_graph6(build_graph(g.num_vertices, std::move(edges)));
    if (with_orbit_size) form.orbit_size = search.automorphism_count();
    return form;
}

inline bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.num_vertices != b.num_vertices || a.edges.size() != b.edges.size()) return false;
    return canonical_form(a).bytes == canonical_form(b).bytes;
}

namespace detail {

// ---------------------------------------------------------------------------
// Lex-max code test for orderly generation.
//
// A labeled graph is "generation-canonical" when its column-order adjacency
// code is the maximum over all relabelings. Removing the edge at the last set
// bit of a maximal code leaves a maximal code, so the generator may grow
// graphs one edge at a time (positions strictly increasing) and keep exactly
// the extensions that pass this test: every isomorphism class is reached on
// exactly one path.
// ---------------------------------------------------------------------------
class MaxCodeTest {
  public:
    explicit MaxCodeTest(const Graph& g) : g_(g), n_(g.num_vertices) {}

    bool identity_is_max() {
        if (n_ <= 1) return true;
        ident_col_.assign(n_, 0);
        for (int k = 1; k < n_; ++k) {
            std::uint64_t word = 0;
            for (int i = 0; i < k; ++i) word = (word << 1) | ((g_.adj[i] >> k) & 1);
            ident_col_[k] = word;
        }
        // Quick reject: swapping adjacent labels k, k+1 must not help.
        for (int k = 1; k + 1 < n_; ++k)
            if (ident_col_[k] < (ident_col_[k + 1] >> 1)) return false;

        ident_suffix_zero_.assign(n_ + 1, true);
        for (int k = n_ - 1; k >= 1; --k)
            ident_suffix_zero_[k] = ident_suffix_zero_[k + 1] && ident_col_[k] == 0;

        prefix_adj_.assign(n_, 0);
        seq_.clear();
        used_ = 0;
        generators_.clear();
        return !improves(0);
    }

  private:
    // Returns true if some labeling extending seq_ beats the identity code.
    bool improves(int k) {
        if (k == n_) {
            record_automorphism();
            return false;
        }
        std::uint64_t unused = ~used_ & ((n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1));
        // Globally isolated vertices can always be placed last; if only they
        // remain, the rest of this branch's code is all zero.
        std::uint64_t live = 0;
        std::uint64_t scan = unused;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            if (g_.adj[v]) live |= std::uint64_t{1} << v;
        }
        if (!live) {
            if (ident_suffix_zero_[k]) record_automorphism();
            return false;
        }

        std::uint64_t best = 0;
        scan = live;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            best = std::max(best, prefix_adj_[v]);
        }
        if (best > ident_col_[k]) return true;
        if (best < ident_col_[k]) return false;

        OrbitPartition orbits(n_);
        for (const auto& gamma : generators_) {
            bool fixes = true;
            for (int i = 0; i < k; ++i)
                if (gamma[seq_[i]] != seq_[i]) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int v = 0; v < n_; ++v) orbits.unite(v, gamma[v]);
        }
        std::uint64_t seen = 0;
        scan = live;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            if (prefix_adj_[v] != best) continue;
            int root = orbits.find(v);
            if ((seen >> root) & 1) continue;
            seen |= std::uint64_t{1} << root;
            push(v);
            bool found = improves(k + 1);
            pop(v);
            if (found) return true;
        }
        return false;
    }

    void push(int v) {
        seq_.push_back(v);
        used_ |= std::uint64_t{1} << v;
        for (int w = 0; w < n_; ++w) prefix_adj_[w] = (prefix_adj_[w] << 1) | ((g_.adj[v] >> w) & 1);
    }

    void pop(int v) {
        seq_.pop_back();
        used_ &= ~(std::uint64_t{1} << v);
        for (int w = 0; w < n_; ++w) prefix_adj_[w] >>= 1;
    }

    void record_automorphism() {
        if (generators_.size() >= kMaxStoredAutomorphisms) return;
        std::vector<int> gamma(n_);
        std::size_t idx = 0;
        for (int i = 0; i < static_cast<int>(seq_.size()); ++i) gamma[i] = seq_[i];
        for (int v = 0; v < n_ && static_cast<int>(seq_.size()) + static_cast<int>(idx) < n_; ++v)
            if (!((used_ >> v) & 1)) gamma[seq_.size() + idx++] = v;
        generators_.push_back(std::move(gamma));
    }

    const Graph& g_;
    int n_;
    std::vector<std::uint64_t> ident_col_;
    std::vector<bool> ident_suffix_zero_;
    std::vector<std::uint64_t> prefix_adj_;
    std::vector<int> seq_;
    std::uint64_t used_ = 0;
    std::vector<std::vector<int>> generators_;
};

inline bool is_generation_canonical(const Graph& g) {
    return MaxCodeTest(g).identity_is_max();
}

}  // namespace detail

}  // namespace cubic
