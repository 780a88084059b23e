#include <gtest/gtest.h>

#include "oracles.hpp"
#include "permseq/enumerate.hpp"

using namespace permseq;

namespace {

const std::vector<std::string> bases = {"1324",      "1324,231",  "1324,1243", "1324,2143", "1324,1342",
                                        "1324,1432", "1324,4231", "1324,4321", "1324,2341", "1324,2413",
                                        "1324,2431", "1324,3412", "1324,3421", "132,2341",  "1243,2134",
                                        "12",        "1",         "321"};

}  // namespace

TEST(Generate, MatchesBruteForce) {
    for (auto& s : bases) {
        auto b = parse_basis(s);
        for (int n = 0; n <= 7; ++n) {
            int k_max = static_cast<int>(max_inversions(n));
            auto got = generate_avoiders(b, n, k_max);
            auto want = oracle::avoiders(b.patterns(), n, k_max);
            EXPECT_EQ(got, want) << s << " n=" << n;
        }
    }
}

TEST(Generate, InversionBudgetAndOrder) {
    auto b = parse_basis("1324");
    auto v = generate_avoiders(b, 7, 6);
    EXPECT_TRUE(std::is_sorted(v.begin(), v.end()));
    for (auto& p : v) EXPECT_LE(inversions(p), 6);
    EXPECT_EQ(generate_avoiders(b, 7, 6, 4), v);
    EXPECT_EQ(generate_avoiders(b, 5, -1).size(), 0u);
    EXPECT_THROW(generate_avoiders(b, 65, 0), std::invalid_argument);
}

TEST(Generate, SpecExamples) {
    auto b = parse_basis("1324,231");
    auto v = generate_avoiders_exact(b, 3, 1);
    EXPECT_EQ(v, (std::vector<Permutation>{parse_permutation("132"), parse_permutation("213")}));
    EXPECT_EQ(generate_avoiders(parse_basis("12"), 4, 6), (std::vector<Permutation>{parse_permutation("4321")}));
    EXPECT_EQ(generate_avoiders(b, 0, 0), (std::vector<Permutation>{Permutation{}}));
}

TEST(CountTable, ExactValues) {
    auto t = count_table(parse_basis("1324,321"), 11, 15);
    EXPECT_EQ(t.at(10, 15), 60u);
    EXPECT_EQ(t.at(11, 15), 52u);
    auto one = count_table(parse_basis("1324,1342"), 8, 9);
    EXPECT_EQ(one.at(8, 9), 134u);
}

TEST(CountTable, ThreadCountDoesNotMatter) {
    auto b = parse_basis("1324,2413");
    EXPECT_EQ(count_table(b, 10, 12, 1), count_table(b, 10, 12, 3));
}

TEST(CountTable, SymmetricBasesAgree) {
    for (auto& p : oracle::all_perms(4)) {
        auto a = count_table(PatternBasis{p}, 8, 10, 1);
        EXPECT_EQ(a.rows, count_table(PatternBasis{inverse(p)}, 8, 10, 1).rows) << to_string(p);
        EXPECT_EQ(a.rows, count_table(PatternBasis{reverse_complement(p)}, 8, 10, 1).rows) << to_string(p);
    }
}

TEST(Differences, RowAndSecond) {
    auto t = count_table(parse_basis("1324,1243"), 8, 8, 1);
    auto d = row_differences(t);
    EXPECT_EQ(d.last_n(), 7);
    for (int n = 1; n <= 7; ++n)
        for (int k = 0; k <= 8; ++k) {
            EXPECT_EQ(d.has(n, k), k <= n * (n + 1) / 2);
            if (d.has(n, k))
                EXPECT_EQ(d.at(n, k), static_cast<std::int64_t>(t.at(n + 1, k)) - static_cast<std::int64_t>(t.at(n, k)));
        }
    auto b = second_differences(t);
    for (int n = 1; n + 2 <= 8; ++n)
        for (int k = 0; k + 1 <= 8; ++k)
            if (b.has(n, k)) EXPECT_EQ(b.at(n, k), d.at(n + 1, k + 1) + d.at(n, k));
}

TEST(Monotonicity, Scan) {
    auto v = monotonicity_scan(count_table(parse_basis("1324,1243"), 6, 4, 1));
    ASSERT_FALSE(v.empty());
    EXPECT_EQ(v.front(), (MonotonicityViolation{3, 1, 2, 1}));
    EXPECT_TRUE(monotonicity_scan(count_table(parse_basis("1324,231"), 10, 10, 1)).empty());
    // {1243, 2134}: the rows die once n >= k+4
    auto t = count_table(parse_basis("1243,2134"), 10, 5, 1);
    for (int k = 1; k <= 5; ++k)
        for (int n = k + 4; n <= 10; ++n) EXPECT_EQ(t.at(n, k), 0u);
}

TEST(Limits, Report) {
    auto t = count_table(parse_basis("1324,1243"), 15, 6, 1);
    auto r = limit_report(t);
    std::vector<std::uint64_t> want{1, 1, 2, 3, 5, 7, 11};
    for (int k = 0; k <= 6; ++k) {
        EXPECT_EQ(r[k].value, want[k]);
        EXPECT_EQ(r[k].status, LimitStatus::stabilized);
        EXPECT_LE(r[k].threshold, k + 3);
    }
    // no pattern with at most one inversion: nothing is certified
    auto u = limit_report(count_table(parse_basis("321"), 8, 3, 1));
    EXPECT_EQ(u[1].status, LimitStatus::unstable_within_range);
    EXPECT_EQ(u[1].value, 7u);
}

TEST(Limits, Diagonal) {
    SignedTable z;
    z.k_max = 5;
    for (int n = 1; n <= 6; ++n) {
        z.rows.push_back(std::vector<std::int64_t>(6, 0));
        z.present.push_back(std::vector<char>(6, 1));
    }
    for (auto x : diagonal_limit(z).sequence()) EXPECT_EQ(x, 0);

    auto t = count_table(parse_basis("1324,1342"), 14, 19);
    auto s = diagonal_limit(row_differences(t)).sequence();
    std::vector<std::int64_t> want{2, 6, 12, 24, 44, 76, 128};
    ASSERT_GE(s.size(), want.size());
    EXPECT_EQ(std::vector<std::int64_t>(s.begin(), s.begin() + 7), want);
}

TEST(Symmetry, Representatives) {
    struct Row {
        const char* p;
        Symmetry s;
        const char* img;
    };
    // the 2314 row composes two symmetries
    std::vector<Row> rows = {{"1423", Symmetry::inverse, "1342"},           {"2134", Symmetry::reverse_complement, "1243"},
                             {"2314", Symmetry::inverse_then_rc, "1342"},  {"3124", Symmetry::reverse_complement, "1342"},
                             {"3142", Symmetry::inverse, "2413"},          {"3214", Symmetry::reverse_complement, "1432"},
                             {"3241", Symmetry::inverse_then_rc, "2431"},  {"4123", Symmetry::inverse, "2341"},
                             {"4132", Symmetry::inverse, "2431"},          {"4213", Symmetry::reverse_complement, "2431"},
                             {"4312", Symmetry::inverse, "3421"}};
    for (auto& r : rows) {
        auto img = symmetry_representative(parse_permutation(r.p));
        EXPECT_EQ(img.symmetry, r.s) << r.p;
        EXPECT_EQ(img.representative, parse_permutation(r.img)) << r.p;
    }
    EXPECT_THROW(symmetry_representative(parse_permutation("1324")), std::invalid_argument);
    // every length-4 pattern lands on a representative with the same counts
    for (auto& p : oracle::all_perms(4)) {
        if (p == parse_permutation("1324")) continue;
        auto img = symmetry_representative(p);
        auto a = count_table(PatternBasis{parse_permutation("1324"), p}, 7, 8, 1);
        auto b = count_table(PatternBasis{parse_permutation("1324"), img.representative}, 7, 8, 1);
        EXPECT_EQ(a.rows, b.rows) << to_string(p);
    }
}
