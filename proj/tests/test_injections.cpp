#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "permseq/enumerate.hpp"
#include "permseq/injections.hpp"

using namespace permseq;

namespace {

std::vector<Permutation> indecomposable_213_231(int n) {
    std::vector<Permutation> out;
    for (auto& p : generate_avoiders(basis_213_231(), n, static_cast<int>(max_inversions(n))))
        if (is_indecomposable(p)) out.push_back(p);
    return out;
}

// every single-point insertion that keeps {213,231}-avoidance
std::set<Permutation> insertions_with(const Permutation& p, int extra) {
    std::set<Permutation> out;
    for (int pos = 0; pos <= p.size(); ++pos)
        for (int v = 1; v <= p.size() + 1; ++v) {
            auto s = insert_at(p, pos, v);
            if (inversions(s) == inversions(p) + extra && basis_213_231().avoided_by(s)) out.insert(s);
        }
    return out;
}

}  // namespace

TEST(InsertDelete, InsertExamples) {
    EXPECT_EQ(lemma_insert(parse_permutation("21"), 1), parse_permutation("312"));
    EXPECT_EQ(lemma_insert(Permutation{1}, 0), parse_permutation("12"));
    EXPECT_EQ(lemma_insert(Permutation{1}, 1), parse_permutation("21"));
    EXPECT_EQ(lemma_insert(parse_permutation("312"), 1), parse_permutation("4123"));
    EXPECT_THROW(lemma_insert(parse_permutation("12"), 0), std::invalid_argument);
    EXPECT_THROW(lemma_insert(parse_permutation("21"), 3), std::invalid_argument);
}

TEST(InsertDelete, InsertIsTheUniqueChoice) {
    for (int n = 1; n <= 7; ++n)
        for (auto& p : indecomposable_213_231(n)) {
            auto arms = arm_profile(p);
            EXPECT_EQ(arms.upper + arms.lower, n);
            for (int r = 0; r <= n; ++r) {
                auto cands = insertions_with(p, r);
                ASSERT_EQ(cands.size(), 1u) << to_string(p) << " r=" << r;
                EXPECT_EQ(lemma_insert(p, r), *cands.begin());
            }
        }
}

TEST(InsertDelete, DeleteIsTheUniqueChoice) {
    // 312 has two inversions: dropping one gives 21, dropping two gives 12
    EXPECT_EQ(lemma_delete(parse_permutation("312"), 1), parse_permutation("21"));
    EXPECT_EQ(lemma_delete(parse_permutation("312"), 2), parse_permutation("12"));
    for (int n = 2; n <= 7; ++n)
        for (auto& p : indecomposable_213_231(n))
            for (int r = 1; r <= n - 1; ++r) {
                std::set<Permutation> cands;
                for (int i = 0; i < n; ++i) {
                    auto t = delete_at(p, i);
                    if (inversions(t) == inversions(p) - r) cands.insert(t);
                }
                ASSERT_LE(cands.size(), 1u) << to_string(p) << " r=" << r;
                if (cands.empty()) EXPECT_THROW(lemma_delete(p, r), std::domain_error);
                else EXPECT_EQ(lemma_delete(p, r), *cands.begin());
            }
    EXPECT_THROW(lemma_delete(parse_permutation("321"), 1), std::domain_error);
}

TEST(InsertDelete, DeleteUndoesInsert) {
    for (int n = 1; n <= 7; ++n)
        for (auto& p : indecomposable_213_231(n))
            for (int r = 1; r <= n; ++r) EXPECT_EQ(lemma_delete(lemma_insert(p, r), r), p) << to_string(p) << " r=" << r;
}

TEST(Shift, Basics) {
    EXPECT_EQ(shift_down(parse_permutation("231"), 3, 1), parse_permutation("321"));
    EXPECT_EQ(shift_up(parse_permutation("321"), 2, 1), parse_permutation("231"));
    EXPECT_THROW(shift_down(parse_permutation("231"), 1, 1), std::invalid_argument);
    std::mt19937 rng(3);
    for (int t = 0; t < 100; ++t) {
        int n = 2 + rng() % 8;
        auto p = oracle::random_perm(n, rng);
        int e = 1 + rng() % n;
        int s = rng() % e;
        auto d = shift_down(p, e, s);
        Permutation step = p;
        for (int i = 0; i < s; ++i) {
            std::vector<int> v(step.values());
            for (int& x : v) x = x == e - i ? e - i - 1 : x == e - i - 1 ? e - i : x;
            step = Permutation(v);
        }
        EXPECT_EQ(d, step);
        EXPECT_EQ(shift_up(d, e - s, s), p);
    }
}

TEST(Inject, TwelveEntryExample) {
    InjectionCertificate c;
    auto img = inject_1324_231(parse_permutation("12,11,10,9,8,5,3,1,2,4,7,6"), &c);
    EXPECT_EQ(img, parse_permutation("13,12,11,7,6,5,3,1,2,4,10,8,9"));
    EXPECT_EQ(c.branch, 3);
    EXPECT_EQ(c.ell, 5);
    EXPECT_EQ(c.m, 2);
    EXPECT_EQ(c.q, 2);
    EXPECT_EQ(c.r, 1);
    EXPECT_EQ(inject_1324_231_inverse(img), parse_permutation("12,11,10,9,8,5,3,1,2,4,7,6"));
}

TEST(Inject, SmallCases) {
    EXPECT_EQ(inject_1324_231(Permutation{}), Permutation{1});
    EXPECT_EQ(inject_1324_231(parse_permutation("321")), parse_permutation("3214"));
    EXPECT_EQ(inject_1324_231(parse_permutation("213")), parse_permutation("2134"));
    EXPECT_THROW(inject_1324_231(parse_permutation("231")), std::invalid_argument);
}

TEST(Inject, InjectiveAndInvertible) {
    auto b = basis_1324_231();
    for (int n = 0; n <= 9; ++n) {
        auto dom = generate_avoiders(b, n, static_cast<int>(max_inversions(n)));
        auto rep = check_injection(dom, [](const Permutation& p) { return inject_1324_231(p); }, b);
        EXPECT_TRUE(rep.ok()) << "n=" << n;
        for (auto& p : dom) EXPECT_EQ(inject_1324_231_inverse(inject_1324_231(p)), p);
    }
    // things outside the image are rejected
    for (auto& s : generate_avoiders(b, 6, 15)) {
        auto pre = inject_1324_231_inverse(s);
        if (pre) EXPECT_EQ(inject_1324_231(*pre), s);
    }
}

TEST(Extend, Bases) {
    auto b = PatternBasis{parse_permutation("213")};
    EXPECT_EQ(basis_extend(b, Direction::left), parse_basis("1324,2314,3214,4213"));
    EXPECT_EQ(basis_extend(b, Direction::right), parse_basis("3241,3142,2143,2134"));
    EXPECT_EQ(basis_extend(b, Direction::up), parse_basis("4213,2413,2143,2134"));
    EXPECT_EQ(basis_extend(b, Direction::down), parse_basis("1324,3124,3214,3241"));
    EXPECT_EQ(basis_extend(PatternBasis{Permutation{1}}, Direction::up), parse_basis("12,21"));
    PatternBasis bi{parse_permutation("213")};
    std::size_t want = 1;
    for (int i = 1; i <= 3; ++i) {
        bi = basis_extend(bi, Direction::left);
        want *= static_cast<std::size_t>(3 + i);
        EXPECT_EQ(bi.size(), want);
    }
}

TEST(Extend, InducedInjections) {
    auto b = PatternBasis{parse_permutation("213")};
    PermMap f = [](const Permutation& p) { return direct_sum(Permutation{1}, p); };
    for (auto dir : {Direction::left, Direction::right, Direction::up, Direction::down}) {
        auto bb = basis_extend(b, dir);
        auto g = induced_injection(f, dir);
        for (int n = 1; n <= 6; ++n) {
            auto dom = generate_avoiders(bb, n, static_cast<int>(max_inversions(n)));
            auto rep = check_injection(dom, g, bb);
            EXPECT_TRUE(rep.ok()) << "dir=" << static_cast<int>(dir) << " n=" << n;
        }
    }
}

TEST(Extend, IteratedBasesStayMonotone) {
    PatternBasis bi{parse_permutation("213")};
    for (int i = 1; i <= 2; ++i) {
        bi = basis_extend(bi, Direction::left);
        std::vector<Permutation> ps(bi.begin(), bi.end());
        ps.push_back(parse_permutation("1324"));
        PatternBasis full(ps);
        auto t = count_table(full, 10, 12);
        EXPECT_TRUE(monotonicity_scan(t).empty()) << "i=" << i;
    }
}
