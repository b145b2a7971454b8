#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "cubic/error.hpp"
#include "cubic/graph.hpp"

namespace cubic {

/// Standard short-form graph6: byte n+63, then the upper-triangle adjacency
/// bits in column order, packed 6 per byte, each byte offset by 63.
inline std::string encode_graph6(const Graph& g) {
    if (g.num_vertices > 62)
        fail(ErrorKind::ParameterOutOfRange, "short graph6 supports at most 62 vertices");
    std::string out;
    out.push_back(static_cast<char>(g.num_vertices + 63));
    int bit = 5;
    int current = 0;
    for (int v = 1; v < g.num_vertices; ++v) {
        for (int u = 0; u < v; ++u) {
            if (g.adjacent(u, v)) current |= 1 << bit;
            if (--bit < 0) {
                out.push_back(static_cast<char>(current + 63));
                bit = 5;
                current = 0;
            }
        }
    }
    if (bit != 5) out.push_back(static_cast<char>(current + 63));
    return out;
}

inline Graph decode_graph6(const std::string& line) {
    if (line.empty()) fail(ErrorKind::MalformedInput, "empty graph6 line");
    int first = static_cast<unsigned char>(line[0]);
    if (first == 126) fail(ErrorKind::MalformedInput, "long-form graph6 is not supported");
    if (first < 63 || first > 125) fail(ErrorKind::MalformedInput, "bad graph6 size byte");
    int n = first - 63;
    int nbits = n * (n - 1) / 2;
    int nbytes = (nbits + 5) / 6;
    if (static_cast<int>(line.size()) != 1 + nbytes)
        fail(ErrorKind::MalformedInput, "graph6 line has wrong length for " + std::to_string(n) + " vertices");
    std::vector<std::pair<int, int>> edges;
    int idx = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++idx) {
            int byte = static_cast<unsigned char>(line[1 + idx / 6]);
            if (byte < 63 || byte > 126) fail(ErrorKind::MalformedInput, "graph6 byte out of range");
            if ((byte - 63) >> (5 - idx % 6) & 1) edges.emplace_back(u, v);
        }
    }
    // Padding bits beyond the triangle must be zero.
    for (int i = nbits; i < nbytes * 6; ++i) {
        int byte = static_cast<unsigned char>(line[1 + i / 6]);
        if (byte < 63 || byte > 126) fail(ErrorKind::MalformedInput, "graph6 byte out of range");
        if ((byte - 63) >> (5 - i % 6) & 1) fail(ErrorKind::MalformedInput, "nonzero graph6 padding bits");
    }
    return build_graph(n, std::move(edges));
}

/// Plain text edge list: first line "<num_vertices> <num_edges>", then one
/// "u v" pair per line, 0-based.
inline std::string encode_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.num_vertices << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
    return out.str();
}

inline Graph decode_edge_list(const std::string& text) {
    std::istringstream in(text);
    long long n = -1, m = -1;
    if (!(in >> n >> m)) fail(ErrorKind::MalformedInput, "missing \"<num_vertices> <num_edges>\" header");
    if (n < 0 || m < 0) fail(ErrorKind::MalformedInput, "negative counts in edge-list header");
    std::vector<std::pair<int, int>> edges;
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        if (!(in >> u >> v))
            fail(ErrorKind::MalformedInput, "expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    std::string trailing;
    if (in >> trailing) fail(ErrorKind::MalformedInput, "trailing data after edge list");
    if (n > kMaxVertices) fail(ErrorKind::TooManyVertices, "edge list declares more than 64 vertices");
    return build_graph(static_cast<int>(n), std::move(edges));
}

}  // namespace cubic
