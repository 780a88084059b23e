#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "permseq/permutation.hpp"

using namespace permseq;

TEST(Permutation, ParsesBothForms) {
    EXPECT_EQ(parse_permutation("34152"), (Permutation{3, 4, 1, 5, 2}));
    EXPECT_EQ(parse_permutation("12,11,10,9,8,5,3,1,2,4,7,6").size(), 12);
    EXPECT_EQ(parse_permutation(""), Permutation{});
    EXPECT_THROW(parse_permutation("1223"), std::invalid_argument);
    EXPECT_THROW(parse_permutation("13"), std::invalid_argument);
    EXPECT_THROW(Permutation({0, 1}), std::invalid_argument);
}

TEST(Permutation, TextRoundTrip) {
    std::mt19937 rng(7);
    for (int n = 0; n <= 14; ++n) {
        auto p = oracle::random_perm(n, rng);
        EXPECT_EQ(parse_permutation(to_string(p)), p);
    }
    EXPECT_EQ(to_string(parse_permutation("10,9,8,7,6,5,4,3,2,1")), "10,9,8,7,6,5,4,3,2,1");
}

TEST(Permutation, InversionsAndLehmer) {
    EXPECT_EQ(inversions(parse_permutation("34152")), 5);
    EXPECT_EQ(inversions(Permutation{}), 0);
    EXPECT_EQ(lehmer_code(parse_permutation("34152")), (std::vector<int>{2, 2, 0, 1, 0}));
    EXPECT_THROW(from_lehmer({3, 0, 0}), std::invalid_argument);
    for (int n = 0; n <= 6; ++n)
        for (auto& p : oracle::all_perms(n)) {
            auto c = lehmer_code(p);
            EXPECT_EQ(from_lehmer(c), p);
            EXPECT_EQ(std::accumulate(c.begin(), c.end(), 0), oracle::inv(p));
            EXPECT_EQ(inversions(p), oracle::inv(p));
        }
}

TEST(Permutation, Symmetries) {
    auto p = parse_permutation("34152");
    EXPECT_EQ(inverse(p), parse_permutation("35124"));
    EXPECT_EQ(reverse(p), parse_permutation("25143"));
    EXPECT_EQ(complement(p), parse_permutation("32514"));
    EXPECT_EQ(reverse_complement(p), parse_permutation("41523"));
    for (auto& q : oracle::all_perms(6)) {
        EXPECT_EQ(inverse(inverse(q)), q);
        EXPECT_EQ(reverse_complement(reverse_complement(q)), q);
        EXPECT_EQ(inversions(inverse(q)), inversions(q));
        EXPECT_EQ(inversions(reverse_complement(q)), inversions(q));
    }
}

TEST(Permutation, SumsAndComponents) {
    EXPECT_EQ(direct_sum(Permutation{2, 1}, Permutation{1}), parse_permutation("213"));
    EXPECT_EQ(skew_sum(Permutation{1}, Permutation{1, 2}), parse_permutation("312"));
    EXPECT_EQ(component_count(parse_permutation("21354")), 3);
    EXPECT_EQ(component_count(Permutation{}), 0);
    auto cs = components(parse_permutation("21354"));
    ASSERT_EQ(cs.size(), 3u);
    EXPECT_EQ(cs[1], Permutation{1});
    EXPECT_EQ(cs[2], parse_permutation("21"));
    for (auto& q : oracle::all_perms(6)) {
        EXPECT_EQ(is_decomposable(q), oracle::decomposable(q));
        Permutation rebuilt;
        for (auto& c : components(q)) rebuilt = direct_sum(rebuilt, c);
        EXPECT_EQ(rebuilt, q);
    }
}

TEST(Permutation, DeleteAndInsert) {
    EXPECT_EQ(delete_value(parse_permutation("34152"), 2), parse_permutation("2314"));
    EXPECT_EQ(delete_at(parse_permutation("34152"), 0), parse_permutation("3142"));
    EXPECT_EQ(insert_at(parse_permutation("2314"), 4, 3), parse_permutation("24153"));
    EXPECT_THROW(delete_value(Permutation{1, 2}, 5), std::invalid_argument);
}

TEST(Containment, SpecExamples) {
    EXPECT_TRUE(contains(parse_permutation("34152"), parse_permutation("231")));
    EXPECT_FALSE(contains(parse_permutation("34152"), parse_permutation("321")));
    EXPECT_TRUE(contains(parse_permutation("2143"), Permutation{}));
    EXPECT_FALSE(contains(parse_permutation("12"), parse_permutation("123")));
    std::vector<int> pre{1, 3, 2};
    EXPECT_FALSE(contains_ending_at(pre, parse_permutation("1324")));
}

TEST(Containment, MatchesBruteForce) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 400; ++trial) {
        int n = 1 + rng() % 8, m = 1 + rng() % 4;
        auto p = oracle::random_perm(n, rng);
        auto q = oracle::random_perm(m, rng);
        EXPECT_EQ(contains(p, q), oracle::contains(p, q)) << to_string(p) << " " << to_string(q);
        auto pos = CompiledPattern(q).find(p.view());
        if (contains(p, q)) {
            ASSERT_EQ(static_cast<int>(pos.size()), m);
            std::vector<int> sub;
            for (int i : pos) sub.push_back(p[i]);
            EXPECT_EQ(standardize(sub), q);
        }
    }
}

TEST(Containment, EndingAtLast) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + rng() % 8, m = 1 + rng() % 4;
        auto p = oracle::random_perm(n, rng);
        auto q = oracle::random_perm(m, rng);
        bool expect = oracle::contains(p, q) && !oracle::contains(delete_at(p, n - 1), q);
        bool got = contains_ending_at(p.view(), q);
        if (expect) EXPECT_TRUE(got);
        if (!oracle::contains(p, q)) EXPECT_FALSE(got);
    }
}

TEST(Basis, ParseAndDedup) {
    auto b = parse_basis("1324,1342,1324");
    EXPECT_EQ(b.size(), 2u);
    EXPECT_EQ(to_string(b), "1324,1342");
    EXPECT_EQ(b.max_length(), 4);
    EXPECT_THROW(parse_basis("1324,113"), std::invalid_argument);
}
