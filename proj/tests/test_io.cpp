#include <random>

#include "cubic/families.hpp"
#include "cubic/io.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace cubic;

TEST_CASE("graph6 encodes K4 as C~") {
    CHECK(encode_graph6(named_graph({FamilyKind::K4, 0})) == "C~");
    Graph k4 = decode_graph6("C~");
    CHECK(k4.num_vertices == 4);
    CHECK(k4.num_edges() == 6);
}

TEST_CASE("graph6 round trip is the identity") {
    Graph m7 = m_graph(7);
    CHECK(decode_graph6(encode_graph6(m7)) == m7);

    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 20);
        Graph g = testutil::random_graph(n, 0.4, rng);
        Graph back = decode_graph6(encode_graph6(g));
        CHECK(back == g);
    }
}

TEST_CASE("graph6 malformed inputs") {
    auto kind_of = [](const std::string& line) {
        try {
            decode_graph6(line);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::SelfLoop;  // sentinel: no error raised
    };
    CHECK(kind_of("") == ErrorKind::MalformedInput);
    CHECK(kind_of("C") == ErrorKind::MalformedInput);        // missing adjacency bytes
    CHECK(kind_of("C~~") == ErrorKind::MalformedInput);      // extra bytes
    CHECK(kind_of("~??") == ErrorKind::MalformedInput);      // long form unsupported
    CHECK(kind_of(std::string(1, char(30))) == ErrorKind::MalformedInput);
    CHECK(kind_of("D~~") == ErrorKind::MalformedInput);      // nonzero padding bits
}

TEST_CASE("edge list format") {
    Graph k4 = decode_edge_list("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    CHECK(k4 == named_graph({FamilyKind::K4, 0}));

    Graph m6 = m_graph(6);
    CHECK(decode_edge_list(encode_edge_list(m6)) == m6);

    auto kind_of = [](const std::string& text) {
        try {
            decode_edge_list(text);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::DuplicateEdge;  // sentinel
    };
    CHECK(kind_of("2 1\n0 0\n") == ErrorKind::SelfLoop);
    CHECK(kind_of("4 2\n") == ErrorKind::MalformedInput);        // missing edges
    CHECK(kind_of("") == ErrorKind::MalformedInput);
    CHECK(kind_of("4 1\n0 1\n7\n") == ErrorKind::MalformedInput);  // trailing data
    CHECK(kind_of("100 0\n") == ErrorKind::TooManyVertices);
}

TEST_CASE("edge ids are stable across serialization round trips") {
    Graph g = m_graph(8);
    Graph via_g6 = decode_graph6(encode_graph6(g));
    Graph via_edges = decode_edge_list(encode_edge_list(g));
    CHECK(via_g6.edges == g.edges);
    CHECK(via_edges.edges == g.edges);
}
