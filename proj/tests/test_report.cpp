#include <gtest/gtest.h>

#include <filesystem>

#include "permseq/report.hpp"

using namespace permseq;

TEST(Csv, RoundTrip) {
    auto t = count_table(parse_basis("1324,2413"), 7, 9, 1);
    auto csv = to_csv(t);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "n\\k,0,1,2,3,4,5,6,7,8,9");
    EXPECT_EQ(parse_count_csv(csv, t.basis), t);
    auto d = row_differences(t);
    EXPECT_EQ(parse_signed_csv(to_csv(d)), d);
    EXPECT_THROW(parse_count_csv("x,0\n1,1\n", t.basis), std::invalid_argument);
}

TEST(Json, RoundTrip) {
    auto t = count_table(parse_basis("1324,1342"), 6, 8, 1);
    auto j = to_json(t);
    EXPECT_TRUE(j["rows"][0][1].is_null());
    EXPECT_EQ(count_table_from_json(j), t);
}

TEST(Golden, LoadsAll) {
    auto bases = golden_bases();
    ASSERT_EQ(bases.size(), 11u);
    for (auto& b : bases) {
        auto c = load_golden(b, GoldenKind::counts);
        auto d = load_golden(b, GoldenKind::diffs);
        EXPECT_EQ(c.cells.last_n(), 15);
        EXPECT_EQ(d.cells.last_n(), 14);
        EXPECT_EQ(c.cells.k_max, 15);
        // the difference table is the row difference of the count table
        auto counts = parse_count_csv(to_csv(c.cells), b);
        EXPECT_TRUE(compare_tables(d.cells, row_differences(counts)).empty()) << to_string(b);
    }
}

TEST(Golden, DetectsAnOffByOne) {
    auto b = golden_bases()[0];
    auto g = load_golden(b, GoldenKind::counts);
    auto t = count_table(b, 15, 15);
    EXPECT_TRUE(compare_tables(g.cells, as_signed_table(t)).empty());
    t.rows[9][7] += 1;
    auto mm = compare_tables(g.cells, as_signed_table(t));
    ASSERT_EQ(mm.size(), 1u);
    EXPECT_EQ(mm[0].n, 10);
    EXPECT_EQ(mm[0].k, 7);
}

TEST(Cache, StoresAndReloads) {
    auto dir = std::filesystem::temp_directory_path() / "permseq-cache-test";
    std::filesystem::remove_all(dir);
    TableCache c(dir);
    auto b = parse_basis("1324,4321");
    EXPECT_FALSE(c.load(b, 8, 8));
    auto t = c.get(b, 8, 8, 1);
    auto again = c.load(b, 8, 8);
    ASSERT_TRUE(again);
    EXPECT_EQ(*again, t);
    // a stale engine version is ignored
    auto p = c.path_for(b, 8, 8);
    auto j = nlohmann::json::parse(read_file(p));
    j["engine_version"] = "old";
    std::ofstream(p) << j.dump();
    EXPECT_FALSE(c.load(b, 8, 8));
    for (auto& e : std::filesystem::directory_iterator(dir)) EXPECT_EQ(e.path().extension(), ".json");
    std::filesystem::remove_all(dir);
}
