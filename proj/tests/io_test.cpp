#include <doctest.h>

#include <sstream>

#include "frcodes/errors.hpp"
#include "frcodes/io.hpp"
#include "frcodes/repair.hpp"
#include "test_support.hpp"

using namespace fr;

TEST_CASE("code JSON matches the documented shape byte-for-byte") {
    const std::string json = code_to_json(frtest::table1_code());
    CHECK(json ==
          R"({"n":5,"theta":10,"d":4,"rho":2,)"
          R"("nodes":[[1,2,3,4],[1,5,6,7],[2,5,8,9],[3,6,8,10],[4,7,9,10]],)"
          R"("provenance":"table1"})");
}

TEST_CASE("code JSON round-trips") {
    const FrCode code = frtest::table1_code();
    const FrCode back = code_from_json(code_to_json(code));
    CHECK(back == code);

    SUBCASE("unsorted node sets are normalized on load") {
        const std::string json =
            R"({"n":2,"theta":2,"d":1,"rho":1,"nodes":[[1],[2]],"provenance":""})";
        CHECK(code_from_json(json).nodes == std::vector<std::vector<int>>{{1}, {2}});
    }

    SUBCASE("malformed JSON rejected") {
        CHECK_THROWS_AS(code_from_json("{"), InvalidArgumentError);
        CHECK_THROWS_AS(code_from_json(R"({"n":1})"), InvalidArgumentError);
    }

    SUBCASE("invalid codes rejected on load") {
        const std::string json =
            R"({"n":2,"theta":2,"d":1,"rho":1,"nodes":[[1],[1]],"provenance":""})";
        CHECK_THROWS_AS(code_from_json(json), InvalidArgumentError);
    }
}

TEST_CASE("repair report JSON matches the documented shape") {
    const FrCode table1 = frtest::table1_code();
    const RepairPlan plan = repair_plan(table1, 1);
    const RepairReport report = simulate_failure(table1, 1);
    CHECK(repair_to_json(plan, report) ==
          R"({"failed":1,"assignments":[[1,2],[2,3],[3,4],[4,5]],)"
          R"("helpers":4,"packets":4,"bandwidth":4})");
}

TEST_CASE("catalog JSON lines") {
    auto entries = generate_catalog(3);
    REQUIRE(entries.size() == 1);

    SUBCASE("valid entry carries code fields and the valid flag") {
        CHECK(catalog_entry_to_json(entries[0]) ==
              R"({"n":3,"theta":3,"d":2,"rho":2,"nodes":[[1,2],[1,3],[2,3]],)"
              R"("provenance":"algorithm1","valid":true})");
    }

    SUBCASE("digest appears after dedupe") {
        dedupe_catalog(entries);
        const std::string line = catalog_entry_to_json(entries[0]);
        CHECK(line.find("canonical_digest") != std::string::npos);
    }

    SUBCASE("failed entry carries the error") {
        CatalogEntry failed;
        failed.params = FrParams{5, 10, 4, 2};
        failed.valid = false;
        failed.error = "stalled";
        const std::string line = catalog_entry_to_json(failed);
        CHECK(line ==
              R"({"n":5,"theta":10,"d":4,"rho":2,"provenance":"algorithm1",)"
              R"("valid":false,"error":"stalled"})");
    }

    SUBCASE("write_catalog emits one line per entry") {
        std::ostringstream out;
        write_catalog(out, entries);
        const std::string text = out.str();
        CHECK(std::count(text.begin(), text.end(), '\n') == 1);
        CHECK(text.back() == '\n');
    }
}

TEST_CASE("count table CSV") {
    std::vector<CountRowWithClasses> rows(1);
    rows[0].counts = CountRow{3, 1, 1};
    rows[0].classes = 1;
    CHECK(count_table_to_csv(rows) == "n,admissible,constructed,classes\n3,1,1,1\n");

    SUBCASE("unknown classes leave the field empty") {
        rows[0].classes = -1;
        CHECK(count_table_to_csv(rows) == "n,admissible,constructed,classes\n3,1,1,\n");
    }
}
