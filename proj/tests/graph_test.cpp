#include <doctest.h>

#include <set>

#include "frcodes/errors.hpp"
#include "frcodes/graph.hpp"
#include "test_support.hpp"

using namespace fr;

TEST_CASE("RegularGraph rejects loops, duplicates and bad vertices") {
    RegularGraph g(3);
    g.add_edge(1, 2);
    CHECK_THROWS_AS(g.add_edge(1, 1), InvalidArgumentError);
    CHECK_THROWS_AS(g.add_edge(2, 1), InvalidArgumentError);
    CHECK_THROWS_AS(g.add_edge(0, 2), InvalidArgumentError);
    CHECK_THROWS_AS(g.add_edge(1, 4), InvalidArgumentError);
    CHECK(g.edge_count() == 1);
}

TEST_CASE("build_regular_graph_split produces the 4-cycle for (4,2)") {
    const RegularGraph g = build_regular_graph_split(4, 2);
    CHECK(g.is_regular(2));
    CHECK(g.edge_count() == 4);
    // 2-regular and simple on 4 vertices means a single 4-cycle.
    const auto edges = g.edges();
    const std::vector<std::pair<int, int>> expected = {{1, 2}, {1, 3}, {2, 4}, {3, 4}};
    CHECK(edges == expected);
}

TEST_CASE("build_regular_graph_split reference sizes") {
    SUBCASE("(8,4): 16 edges, 4-regular") {
        const RegularGraph g = build_regular_graph_split(8, 4);
        CHECK(g.is_regular(4));
        CHECK(g.edge_count() == 16);
    }

    SUBCASE("(6,3): 9 edges, 3-regular") {
        const RegularGraph g = build_regular_graph_split(6, 3);
        CHECK(g.is_regular(3));
        CHECK(g.edge_count() == 9);
    }

    SUBCASE("(16,8): 64 edges, 8-regular") {
        const RegularGraph g = build_regular_graph_split(16, 8);
        CHECK(g.is_regular(8));
        CHECK(g.edge_count() == 64);
    }
}

TEST_CASE("build_regular_graph_split covers every feasible (n,d) up to n=20") {
    for (int n = 4; n <= 20; ++n) {
        for (int d = 2; d < n - 1; ++d) {
            if ((n * d) % 2 != 0) continue;
            CAPTURE(n);
            CAPTURE(d);
            const RegularGraph g = build_regular_graph_split(n, d);
            CHECK(g.is_regular(d));
            CHECK(g.edge_count() == n * d / 2);
        }
    }
}

TEST_CASE("build_regular_graph_split is deterministic") {
    CHECK(build_regular_graph_split(9, 4) == build_regular_graph_split(9, 4));
}

TEST_CASE("build_regular_graph_split rejects out-of-contract input") {
    CHECK_THROWS_AS(build_regular_graph_split(5, 3), InvalidArgumentError);  // nd odd
    CHECK_THROWS_AS(build_regular_graph_split(4, 3), InvalidArgumentError);  // d = n-1
    CHECK_THROWS_AS(build_regular_graph_split(6, 1), InvalidArgumentError);  // d < 2
}

TEST_CASE("circulant_graph") {
    SUBCASE("(5,2) is the pentagon") {
        const RegularGraph g = circulant_graph(5, 2);
        CHECK(g.is_regular(2));
        const std::vector<std::pair<int, int>> expected = {
            {1, 2}, {1, 5}, {2, 3}, {3, 4}, {4, 5}};
        CHECK(g.edges() == expected);
    }

    SUBCASE("(4,2) is the 4-cycle") {
        const RegularGraph g = circulant_graph(4, 2);
        CHECK(g.is_regular(2));
        CHECK(g.edge_count() == 4);
    }

    SUBCASE("(6,3) has 9 edges from offsets {1} plus the diameter matching") {
        const RegularGraph g = circulant_graph(6, 3);
        CHECK(g.is_regular(3));
        CHECK(g.edge_count() == 9);
        CHECK(g.has_edge(1, 4));
        CHECK(g.has_edge(2, 5));
        CHECK(g.has_edge(3, 6));
    }

    SUBCASE("always d-regular across the feasible range") {
        for (int n = 2; n <= 24; ++n)
            for (int d = 1; d < n; ++d) {
                if ((n * d) % 2 != 0) continue;
                CAPTURE(n);
                CAPTURE(d);
                CHECK(circulant_graph(n, d).is_regular(d));
            }
    }
}

TEST_CASE("graph_to_fr labels edges as packets") {
    SUBCASE("4-cycle gives (4,4,2,2) with pairwise intersections <= 1") {
        const FrCode code = graph_to_fr(frtest::four_cycle());
        CHECK(code.params == FrParams{4, 4, 2, 2});
        for (int size : intersection_profile(code)) CHECK(size <= 1);
    }

    SUBCASE("split (8,4) gives (8,16,4,2)") {
        const FrCode code = graph_to_fr(build_regular_graph_split(8, 4));
        CHECK(code.params == FrParams{8, 16, 4, 2});
        CHECK(validate(code).valid());
    }

    SUBCASE("single edge gives (2,1,1,2)") {
        RegularGraph g(2);
        g.add_edge(1, 2);
        CHECK(graph_to_fr(g).params == FrParams{2, 1, 1, 2});
    }

    SUBCASE("non-regular graph rejected") {
        RegularGraph g(3);
        g.add_edge(1, 2);
        CHECK_THROWS_AS(graph_to_fr(g), InvalidArgumentError);
    }
}

TEST_CASE("fr_to_graph inverts graph_to_fr") {
    const RegularGraph g = build_regular_graph_split(8, 4);
    CHECK(fr_to_graph(graph_to_fr(g)) == g);

    SUBCASE("the reference (5,10,4,2) code is the K5 edge labeling") {
        const RegularGraph k5 = fr_to_graph(frtest::table1_code());
        CHECK(k5.is_regular(4));
        CHECK(k5.edge_count() == 10);
    }

    SUBCASE("rho != 2 rejected") {
        const FrParams params{6, 8, 4, 3};
        const FrCode code = matrix_to_code(
            IncidenceMatrix::from_text(frtest::example_6x8_text()), params);
        CHECK_THROWS_AS(fr_to_graph(code), InvalidArgumentError);
    }
}

TEST_CASE("to_dot emits vertices and lexicographic edges") {
    const std::string dot = to_dot(frtest::four_cycle());
    CHECK(dot ==
          "graph G {\n"
          "  v1;\n"
          "  v2;\n"
          "  v3;\n"
          "  v4;\n"
          "  v1 -- v2;\n"
          "  v1 -- v4;\n"
          "  v2 -- v3;\n"
          "  v3 -- v4;\n"
          "}\n");
}
