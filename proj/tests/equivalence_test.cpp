#include <doctest.h>

#include <random>

#include "frcodes/catalog.hpp"
#include "frcodes/construct.hpp"
#include "frcodes/equivalence.hpp"
#include "frcodes/errors.hpp"
#include "test_support.hpp"

using namespace fr;

namespace {

FrCode alg1_5x10_code() {
    const FrParams params{5, 10, 4, 2};
    return matrix_to_code(fill_incidence(params), params, "algorithm1");
}

}  // namespace

TEST_CASE("invariant_fingerprint profiles") {
    SUBCASE("reference (5,10,4,2) code has all pairwise intersections equal to 1") {
        const Fingerprint fp = invariant_fingerprint(frtest::table1_code());
        CHECK(fp.pair_profile == std::vector<int>(10, 1));
    }

    SUBCASE("constructed (5,10,4,2) code has intersections 0..3") {
        const Fingerprint fp = invariant_fingerprint(alg1_5x10_code());
        CHECK(fp.pair_profile == std::vector<int>{0, 0, 0, 0, 1, 1, 1, 2, 2, 3});
    }

    SUBCASE("equal for a code and its shuffle") {
        std::mt19937 rng(11);
        const FrCode code = alg1_5x10_code();
        for (int i = 0; i < 20; ++i)
            CHECK(invariant_fingerprint(frtest::shuffle_code(code, rng)) ==
                  invariant_fingerprint(code));
    }
}

TEST_CASE("canonical_form is invariant under relabeling and idempotent") {
    std::mt19937 rng(42);
    const std::vector<FrCode> samples = {
        frtest::table1_code(),
        alg1_5x10_code(),
        graph_to_fr(frtest::four_cycle()),
        matrix_to_code(fill_incidence(FrParams{6, 8, 4, 3}), FrParams{6, 8, 4, 3}),
    };
    for (const FrCode& code : samples) {
        const IncidenceMatrix canonical = canonical_form(code);
        CHECK(validate(canonical, code.params).valid());
        for (int i = 0; i < 20; ++i)
            CHECK(canonical_form(frtest::shuffle_code(code, rng)) == canonical);
        // Idempotent: canonicalizing the canonical form changes nothing.
        CHECK(canonical_form(matrix_to_code(canonical, code.params)) == canonical);
    }
}

TEST_CASE("are_equivalent separates the reference and constructed (5,10,4,2) codes") {
    const FrCode table1 = frtest::table1_code();
    const FrCode alg1 = alg1_5x10_code();
    CHECK_FALSE(are_equivalent(table1, alg1));
    CHECK(canonical_form(table1) != canonical_form(alg1));

    std::mt19937 rng(3);
    CHECK(are_equivalent(table1, frtest::shuffle_code(table1, rng)));

    SUBCASE("different parameters are never equivalent") {
        const FrCode a = matrix_to_code(fill_incidence(FrParams{6, 8, 4, 3}),
                                        FrParams{6, 8, 4, 3});
        const FrCode b = matrix_to_code(fill_incidence(FrParams{6, 12, 4, 2}),
                                        FrParams{6, 12, 4, 2});
        CHECK_FALSE(are_equivalent(a, b));
    }
}

TEST_CASE("are_equivalent is reflexive and symmetric") {
    const FrCode a = frtest::table1_code();
    const FrCode b = alg1_5x10_code();
    CHECK(are_equivalent(a, a));
    CHECK(are_equivalent(b, b));
    CHECK(are_equivalent(a, b) == are_equivalent(b, a));
}

TEST_CASE("brute_force_equivalent agrees with are_equivalent at oracle scale") {
    const FrCode triangle = matrix_to_code(fill_incidence(FrParams{3, 3, 2, 2}),
                                           FrParams{3, 3, 2, 2});
    std::mt19937 rng(5);
    CHECK(brute_force_equivalent(triangle, frtest::shuffle_code(triangle, rng)));

    SUBCASE("4-cycle code vs its transpose dual") {
        const FrCode cycle = graph_to_fr(frtest::four_cycle());
        const FrCode dual = transpose_dual(cycle);
        CHECK(brute_force_equivalent(cycle, dual));
        CHECK(are_equivalent(cycle, dual));
    }

    SUBCASE("different dimensions are inequivalent without search") {
        const FrCode cycle = graph_to_fr(frtest::four_cycle());
        CHECK_FALSE(brute_force_equivalent(triangle, cycle));
    }

    SUBCASE("cross-check over all n, theta <= 6 catalog codes") {
        std::vector<FrCode> small;
        for (int n = 3; n <= 6; ++n)
            for (const CatalogEntry& entry : generate_catalog(n, FilterPolicy{false}))
                if (entry.valid && entry.params.theta <= 6) small.push_back(*entry.code);
        REQUIRE(!small.empty());
        for (std::size_t i = 0; i < small.size(); ++i)
            for (std::size_t j = i; j < small.size(); ++j) {
                CAPTURE(i);
                CAPTURE(j);
                CHECK(brute_force_equivalent(small[i], small[j]) ==
                      are_equivalent(small[i], small[j]));
            }
    }

    SUBCASE("oversize input raises SizeTooLargeError") {
        const FrCode big = frtest::table1_code();  // 5! * 10! is over the bound
        CHECK_THROWS_AS(brute_force_equivalent(big, big), SizeTooLargeError);
    }
}

TEST_CASE("canonical search respects its node budget") {
    const FrCode code = alg1_5x10_code();
    CanonicalOptions tiny;
    tiny.node_budget = 2;
    CHECK_THROWS_AS(canonical_form(code, tiny), SearchBudgetError);
}

TEST_CASE("canonical_digest is stable and distinguishes inequivalent codes") {
    const std::string a = canonical_digest(frtest::table1_code());
    const std::string b = canonical_digest(alg1_5x10_code());
    CHECK(a.size() == 64);
    CHECK(a != b);
    std::mt19937 rng(9);
    CHECK(canonical_digest(frtest::shuffle_code(frtest::table1_code(), rng)) == a);
}
