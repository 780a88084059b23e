#pragma once

// brute force references used to check the fast code paths

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "permseq/permutation.hpp"

namespace oracle {

using permseq::Permutation;

inline std::vector<Permutation> all_perms(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do out.emplace_back(v); while (std::next_permutation(v.begin(), v.end()));
    return out;
}

inline int inv(const Permutation& p) {
    int c = 0;
    for (int i = 0; i < p.size(); ++i)
        for (int j = i + 1; j < p.size(); ++j) c += p[i] > p[j];
    return c;
}

// every index subset of size |q|
inline bool contains(const Permutation& p, const Permutation& q) {
    int n = p.size(), m = q.size();
    if (m > n) return false;
    std::vector<int> pick(n, 0);
    std::fill(pick.end() - m, pick.end(), 1);
    do {
        std::vector<int> sub;
        for (int i = 0; i < n; ++i)
            if (pick[i]) sub.push_back(p[i]);
        bool ok = true;
        for (int a = 0; a < m && ok; ++a)
            for (int b = 0; b < m && ok; ++b)
                if ((sub[a] < sub[b]) != (q[a] < q[b])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(pick.begin(), pick.end()));
    return false;
}

inline bool avoids_all(const Permutation& p, const std::vector<Permutation>& b) {
    for (auto& q : b)
        if (oracle::contains(p, q)) return false;
    return true;
}

inline std::vector<Permutation> avoiders(const std::vector<Permutation>& b, int n, int k_max) {
    std::vector<Permutation> out;
    for (auto& p : all_perms(n))
        if (inv(p) <= k_max && avoids_all(p, b)) out.push_back(p);
    return out;
}

inline std::vector<std::uint64_t> counts(const std::vector<Permutation>& b, int n, int k_max) {
    std::vector<std::uint64_t> c(k_max + 1, 0);
    for (auto& p : avoiders(b, n, k_max)) ++c[inv(p)];
    return c;
}

inline bool decomposable(const Permutation& p) {
    for (int i = 1; i < p.size(); ++i) {
        bool split = true;
        for (int j = 0; j < i; ++j)
            if (p[j] > i) split = false;
        if (split) return true;
    }
    return false;
}

inline Permutation random_perm(int n, std::mt19937& rng) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng);
    return Permutation(v);
}

}  // namespace oracle

namespace permseq {
inline void PrintTo(const Permutation& p, std::ostream* os) { *os << to_string(p); }
}  // namespace permseq
