#include <doctest.h>

#include "frcodes/catalog.hpp"
#include "frcodes/construct.hpp"
#include "frcodes/errors.hpp"
#include "frcodes/graph.hpp"
#include "frcodes/repair.hpp"
#include "test_support.hpp"

using namespace fr;

TEST_CASE("repair_plan on the reference (5,10,4,2) code") {
    const FrCode table1 = frtest::table1_code();
    const RepairPlan plan = repair_plan(table1, 1);
    const std::vector<std::pair<int, int>> expected = {{1, 2}, {2, 3}, {3, 4}, {4, 5}};
    CHECK(plan.assignments == expected);

    const RepairReport report = simulate_failure(table1, 1);
    CHECK(report.helpers_contacted == 4);
    CHECK(report.packets_downloaded == 4);
    CHECK(report.bandwidth == 4);

    SUBCASE("every failed node contacts 4 distinct helpers") {
        for (int node = 1; node <= 5; ++node) {
            const RepairReport r = simulate_failure(table1, node);
            CHECK(r.helpers_contacted == 4);
            CHECK(r.packets_downloaded == 4);
        }
    }
}

TEST_CASE("repair_plan rejects unrepairable codes and bad nodes") {
    SUBCASE("rho = 1 has no surviving replica") {
        FrCode solo;
        solo.params = FrParams{2, 4, 2, 1};
        solo.nodes = {{1, 2}, {3, 4}};
        CHECK_THROWS_AS(repair_plan(solo, 1), NoReplicaError);
    }

    SUBCASE("failed node out of range") {
        CHECK_THROWS_AS(repair_plan(frtest::table1_code(), 0), InvalidArgumentError);
        CHECK_THROWS_AS(repair_plan(frtest::table1_code(), 6), InvalidArgumentError);
    }
}

TEST_CASE("4-cycle repair contacts the two neighbours") {
    const FrCode cycle = graph_to_fr(frtest::four_cycle());
    for (int node = 1; node <= 4; ++node) {
        const RepairReport report = simulate_failure(cycle, node);
        CHECK(report.helpers_contacted == 2);
        CHECK(report.packets_downloaded == 2);
    }

    SUBCASE("beta scales bandwidth") {
        CHECK(simulate_failure(cycle, 1, 2).bandwidth == 4);
        CHECK_THROWS_AS(simulate_failure(cycle, 1, 0), InvalidArgumentError);
    }
}

TEST_CASE("bandwidth equals d for beta = 1") {
    const FrParams params{6, 8, 4, 3};
    const FrCode code = matrix_to_code(fill_incidence(params), params);
    for (int node = 1; node <= 6; ++node)
        CHECK(simulate_failure(code, node).bandwidth == 4);
}

TEST_CASE("repair succeeds with exactly d downloads across the n <= 8 catalog") {
    for (int n = 3; n <= 8; ++n)
        for (const CatalogEntry& entry : generate_catalog(n, FilterPolicy{false})) {
            REQUIRE(entry.valid);
            for (int node = 1; node <= n; ++node) {
                const RepairReport report = simulate_failure(*entry.code, node);
                CHECK(report.packets_downloaded == entry.params.d);
                CHECK(report.helpers_contacted <= entry.params.d);
            }
        }
}

TEST_CASE("graph-derived codes always reach d distinct helpers") {
    for (int n = 4; n <= 12; ++n)
        for (int d = 2; d < n - 1; ++d) {
            if ((n * d) % 2 != 0) continue;
            const FrCode code = graph_to_fr(build_regular_graph_split(n, d));
            for (int node = 1; node <= n; ++node) {
                CAPTURE(n);
                CAPTURE(d);
                CHECK(simulate_failure(code, node).helpers_contacted == d);
            }
        }
}

TEST_CASE("supported_file_size matches the independent oracle") {
    const FrCode table1 = frtest::table1_code();
    CHECK(supported_file_size(table1, 4) == 10);
    CHECK(frtest::oracle_min_union(table1, 4) == 10);

    const FrCode cycle = graph_to_fr(frtest::four_cycle());
    CHECK(supported_file_size(cycle, 2) == 3);
    CHECK(frtest::oracle_min_union(cycle, 2) == 3);

    SUBCASE("k = 1 gives d and k = n gives theta") {
        CHECK(supported_file_size(table1, 1) == 4);
        CHECK(supported_file_size(table1, 5) == 10);
        CHECK(supported_file_size(cycle, 1) == 2);
        CHECK(supported_file_size(cycle, 4) == 4);
    }

    SUBCASE("full sweep against the oracle for assorted codes") {
        const FrParams params{6, 8, 4, 3};
        const FrCode code = matrix_to_code(fill_incidence(params), params);
        for (int k = 1; k <= 6; ++k)
            CHECK(supported_file_size(code, k) == frtest::oracle_min_union(code, k));
    }

    SUBCASE("M(k) is non-decreasing in k") {
        long long prev = 0;
        for (int k = 1; k <= 5; ++k) {
            const long long m = supported_file_size(table1, k);
            CHECK(m >= prev);
            prev = m;
        }
    }

    SUBCASE("k out of range rejected") {
        CHECK_THROWS_AS(supported_file_size(table1, 0), InvalidArgumentError);
        CHECK_THROWS_AS(supported_file_size(table1, 6), InvalidArgumentError);
    }

    SUBCASE("tiny budget raises BudgetExceededError") {
        SubsetBudget budget;
        budget.max_subsets = 1;
        CHECK_THROWS_AS(supported_file_size(table1, 3, budget), BudgetExceededError);
    }
}

TEST_CASE("mds_check compares the file size against M(k)") {
    const FrCode table1 = frtest::table1_code();
    CHECK(mds_check(table1, 4, 9));
    CHECK(mds_check(table1, 4, 10));
    CHECK_FALSE(mds_check(table1, 4, 11));

    const FrCode cycle = graph_to_fr(frtest::four_cycle());
    CHECK(mds_check(cycle, 2, 3));
    CHECK_FALSE(mds_check(cycle, 2, 4));

    SUBCASE("monotone in B") {
        for (long long b = 1; b <= 9; ++b)
            CHECK(mds_check(table1, 4, b));
    }

    SUBCASE("B must be positive") {
        CHECK_THROWS_AS(mds_check(table1, 4, 0), InvalidArgumentError);
    }
}
