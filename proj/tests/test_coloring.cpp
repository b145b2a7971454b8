#include "cubic/coloring.hpp"
#include "cubic/counting.hpp"
#include "cubic/families.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace cubic;

namespace {

// Direct evaluation of the coloring sum, one coloring at a time, through the
// public homogeneous-vertex counter. Independent of the Gray-code path.
i128 slow_coloring_sum(const Graph& g) {
    int m = g.num_edges();
    i128 sum = 0;
    for (std::uint32_t bits = 0; bits < (1u << m); ++bits) {
        EdgeColoring c{m, bits};
        int hom = homogeneous_vertex_count(g, c);
        i128 term = 1;
        for (int i = 0; i < hom; ++i) term *= -3;
        sum += term;
    }
    return sum;
}

}  // namespace

TEST_CASE("homogeneous vertex counting") {
    Graph k4 = named_graph({FamilyKind::K4, 0});
    CHECK(homogeneous_vertex_count(k4, {6, 0}) == 4);        // all edges one color
    CHECK(homogeneous_vertex_count(k4, {6, 0b111111}) == 4);
    // Color the three edges at vertex 0 with state 1: vertex 0 homogeneous,
    // the others see a mix. Edges of K4 sorted: 01,02,03,12,13,23.
    CHECK(homogeneous_vertex_count(k4, {6, 0b000111}) == 1);
}

TEST_CASE("coloring formula reproduces matching counts on small cubic graphs") {
    CHECK(coloring_formula_count(named_graph({FamilyKind::K4, 0})) == 3);
    CHECK(coloring_formula_count(named_graph({FamilyKind::K33, 0})) == 6);
    CHECK(coloring_formula_count(m_graph(4)) == 9);
    CHECK(coloring_formula_count(named_graph({FamilyKind::Prism, 3})) == 4);
    CHECK(coloring_formula_count(m_graph(5)) == 13);
}

TEST_CASE("gray-code sum equals the per-coloring sum") {
    for (FamilySpec spec : {FamilySpec{FamilyKind::K4, 0}, FamilySpec{FamilyKind::K33, 0},
                            FamilySpec{FamilyKind::Prism, 3}}) {
        Graph g = named_graph(spec);
        i128 direct = slow_coloring_sum(g);
        CHECK(direct == coloring_formula_count(g) * ipow(2, g.num_edges()));
    }
}

TEST_CASE("coloring formula guards") {
    Graph path = build_graph(3, {{0, 1}, {1, 2}});
    CHECK_THROWS_AS(coloring_formula_count(path), Error);
    try {
        coloring_formula_count(path);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotCubic);
    }
    try {
        coloring_formula_count(m_graph(11));  // 33 edges
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::EdgeCountTooLarge);
    }
}

TEST_CASE("tensor contraction in the computational basis counts 2-factors") {
    for (int n = 2; n <= 7; ++n) {
        Graph g = m_graph(n);
        CHECK(tensor_contraction_count(g, TensorBasis::Computational) == count_two_factors(g));
    }
    Graph petersen = named_graph({FamilyKind::Petersen, 0});
    CHECK(tensor_contraction_count(petersen, TensorBasis::Computational) == count_two_factors(petersen));
}

TEST_CASE("tensor contraction in the xy basis rescales to the matching count") {
    CHECK(tensor_contraction_count(named_graph({FamilyKind::K4, 0}), TensorBasis::XY) == 3);
    for (int n = 2; n <= 7; ++n) {
        Graph g = m_graph(n);
        CHECK(tensor_contraction_count(g, TensorBasis::XY) == count_perfect_matchings(g));
    }
    for (int k = 3; k <= 6; ++k) {
        Graph g = mc_graph(k);
        CHECK(tensor_contraction_count(g, TensorBasis::XY) == count_perfect_matchings(g));
    }
}

TEST_CASE("tensor contraction guards") {
    Graph path = build_graph(3, {{0, 1}, {1, 2}});
    try {
        tensor_contraction_count(path, TensorBasis::XY);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotCubic);
    }
    try {
        tensor_contraction_count(m_graph(11), TensorBasis::Computational);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::EdgeCountTooLarge);
    }
}

TEST_CASE("vertex tensor tables") {
    VertexTensor comp = vertex_tensor(TensorBasis::Computational);
    CHECK(comp.weight_by_zero_count == std::array<i128, 4>{0, 0, 1, 0});
    VertexTensor xy = vertex_tensor(TensorBasis::XY);
    CHECK(xy.weight_by_zero_count == std::array<i128, 4>{3, -1, -1, 3});
}
