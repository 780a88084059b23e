#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "enumerate.hpp"
#include "permutation.hpp"
#include "series.hpp"

namespace permseq {

// weakly decreasing positive parts
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : p_(std::move(parts)) {
        for (std::size_t i = 0; i < p_.size(); ++i) {
            if (p_[i] < 1) throw std::invalid_argument("partition parts must be positive");
            if (i && p_[i] > p_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const noexcept { return p_; }
    int length() const noexcept { return static_cast<int>(p_.size()); }
    int size() const { return std::accumulate(p_.begin(), p_.end(), 0); }
    // 1-based, zero past the end
    int part(int i) const { return i >= 1 && i <= length() ? p_[i - 1] : 0; }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.p_ <=> b.p_; }

private:
    std::vector<int> p_;
};

inline std::string to_string(const Partition& l) {
    std::string s = "(";
    for (int i = 0; i < l.length(); ++i) {
        if (i) s += ',';
        s += std::to_string(l.parts()[i]);
    }
    return s + ")";
}

// all partitions of k, largest first part first
inline std::vector<Partition> partitions_of(int k) {
    if (k < 0) throw std::invalid_argument("negative partition size");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int cap) {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int x = std::min(rem, cap); x >= 1; --x) {
            cur.push_back(x);
            rec(rem - x, x);
            cur.pop_back();
        }
    };
    rec(k, k);
    return out;
}

// ---- Lambda: indecomposable 132-avoiders <-> partitions

inline bool is_indecomposable_132_avoider(const Permutation& p) {
    return is_indecomposable(p) && avoids(p, Permutation{1, 3, 2});
}

// Lehmer code with the trailing zeros removed
inline Partition lambda(const Permutation& p) {
    if (!is_indecomposable_132_avoider(p)) throw std::invalid_argument("lambda: expected an indecomposable 132-avoider");
    auto c = lehmer_code(p);
    while (!c.empty() && c.back() == 0) c.pop_back();
    return Partition(c);
}

// pi_i is the (lambda_i + 1)-th smallest unused value; stop once 1..i are used
inline Permutation lambda_inverse(const Partition& l) {
    int n_max = l.size() + 1;
    std::vector<int> unused(n_max);
    std::iota(unused.begin(), unused.end(), 1);
    std::vector<int> v;
    for (int i = 1;; ++i) {
        auto j = static_cast<std::size_t>(l.part(i));
        if (j >= unused.size()) throw std::logic_error("lambda_inverse: ran out of values");
        v.push_back(unused[j]);
        unused.erase(unused.begin() + static_cast<std::ptrdiff_t>(j));
        if (i >= l.length() && (unused.empty() || unused.front() > i)) break;
    }
    return {std::move(v), Permutation::trusted};
}

// ---- families

inline int distinct_part_count(const Partition& l) {
    std::set<int> s(l.parts().begin(), l.parts().end());
    return static_cast<int>(s.size());
}

// no part three times; between two repeated pairs some drop of at least 2
inline bool is_spm(const Partition& l) {
    int n = l.length();
    for (int i = 1; i + 2 <= n; ++i)
        if (l.part(i) == l.part(i + 2)) return false;
    int last_pair = 0;
    bool gap_since = false;
    for (int i = 1; i < n; ++i) {
        if (l.part(i) == l.part(i + 1)) {
            if (last_pair && !gap_since) return false;
            last_pair = i;
            gap_since = false;
        } else if (l.part(i) - l.part(i + 1) >= 2) {
            gap_since = true;
        }
    }
    return true;
}

// closure of (k) under moving one unit from a part to the next
inline std::vector<Partition> spm_generate(int k) {
    if (k < 0) throw std::invalid_argument("negative size");
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> stack;
    std::vector<int> start;
    if (k > 0) start.push_back(k);
    stack.push_back(start);
    seen.insert(start);
    while (!stack.empty()) {
        auto cur = stack.back();
        stack.pop_back();
        for (std::size_t i = 0; i < cur.size(); ++i) {
            int next = i + 1 < cur.size() ? cur[i + 1] : 0;
            if (cur[i] - next < 2) continue;
            auto v = cur;
            --v[i];
            if (i + 1 < v.size()) ++v[i + 1];
            else v.push_back(1);
            if (seen.insert(v).second) stack.push_back(v);
        }
    }
    std::vector<Partition> out;
    for (auto it = seen.rbegin(); it != seen.rend(); ++it) out.emplace_back(*it);
    return out;
}

// each gap between consecutive distinct parts is at least the multiplicity of the smaller
inline bool is_steep(const Partition& l) {
    std::map<int, int, std::greater<>> mult;
    for (int x : l.parts()) ++mult[x];
    for (auto it = mult.begin(); it != mult.end(); ++it) {
        auto nx = std::next(it);
        if (nx == mult.end()) break;
        if (it->first - nx->first < nx->second) return false;
    }
    return true;
}

// no repeated pair followed later by a drop of 2 or more (the last part drops to 0)
inline bool is_convex_penny(const Partition& l) {
    int n = l.length();
    bool pair_seen = false;
    for (int i = 1; i <= n; ++i) {
        if (pair_seen && l.part(i) - l.part(i + 1) >= 2) return false;
        if (i < n && l.part(i) == l.part(i + 1)) pair_seen = true;
    }
    return true;
}

// every part except possibly the smallest occurs once
inline bool is_distinct_except_smallest(const Partition& l) {
    int n = l.length();
    for (int i = 1; i < n; ++i)
        if (l.part(i) == l.part(i + 1) && l.part(i) != l.part(n)) return false;
    return true;
}

// after the first drop of 2 or more the parts are distinct
inline bool is_convex_4231(const Partition& l) {
    int n = l.length();
    for (int i = 1; i <= n; ++i) {
        if (l.part(i) - l.part(i + 1) >= 2) {
            for (int j = i + 1; j < n; ++j)
                if (l.part(j) == l.part(j + 1)) return false;
            return true;
        }
    }
    return true;
}

// ---- overpartitions

struct Overpartition {
    std::vector<std::pair<int, bool>> parts;  // value, overlined
    friend bool operator==(const Overpartition&, const Overpartition&) = default;
    friend auto operator<=>(const Overpartition& a, const Overpartition& b) { return a.parts <=> b.parts; }
};

inline bool is_valid_overpartition(const Overpartition& o) {
    for (std::size_t i = 0; i < o.parts.size(); ++i) {
        auto [v, bar] = o.parts[i];
        if (v < 1) return false;
        if (i) {
            auto [pv, pbar] = o.parts[i - 1];
            if (v > pv) return false;
            if (bar && v == pv) return false;  // overline only the first occurrence
        }
    }
    return true;
}

// overline mu (distinct parts) and merge into lambda
inline Overpartition overpartition_merge(const Partition& l, const Partition& mu) {
    for (int i = 1; i < mu.length(); ++i)
        if (mu.part(i) == mu.part(i + 1)) throw std::invalid_argument("overpartition_merge: mu must have distinct parts");
    Overpartition o;
    std::size_t a = 0, b = 0;
    auto& lp = l.parts();
    auto& mp = mu.parts();
    while (a < lp.size() || b < mp.size()) {
        if (b < mp.size() && (a == lp.size() || mp[b] >= lp[a])) o.parts.push_back({mp[b++], true});
        else o.parts.push_back({lp[a++], false});
    }
    return o;
}

inline std::pair<Partition, Partition> overpartition_split(const Overpartition& o) {
    if (!is_valid_overpartition(o)) throw std::invalid_argument("not an overpartition");
    std::vector<int> l, mu;
    for (auto [v, bar] : o.parts) (bar ? mu : l).push_back(v);
    return {Partition(l), Partition(mu)};
}

// every overpartition of k, by overlining first occurrences of partitions of k
inline std::vector<Overpartition> overpartitions_of(int k) {
    std::vector<Overpartition> out;
    for (auto& l : partitions_of(k)) {
        std::vector<std::size_t> firsts;
        for (int i = 0; i < l.length(); ++i)
            if (i == 0 || l.parts()[i] != l.parts()[i - 1]) firsts.push_back(static_cast<std::size_t>(i));
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << firsts.size()); ++mask) {
            Overpartition o;
            for (int x : l.parts()) o.parts.push_back({x, false});
            for (std::size_t j = 0; j < firsts.size(); ++j)
                if (mask >> j & 1) o.parts[firsts[j]].second = true;
            out.push_back(std::move(o));
        }
    }
    return out;
}

// ---- pattern <-> family checks

using PartitionTest = std::function<bool(const Partition&)>;

struct Family {
    std::string name;
    Permutation pattern;  // I_k(132, pattern)
    PartitionTest test;
};

inline const std::vector<Family>& families() {
    static const std::vector<Family> f = {
        {"sum-of-parts-of-ma", parse_permutation("2341"), is_spm},
        {"steep", parse_permutation("3241"), is_steep},
        {"convex-penny", parse_permutation("3412"), is_convex_penny},
        {"distinct-except-smallest", parse_permutation("3421"), is_distinct_except_smallest},
        {"convex-4231", parse_permutation("4231"), is_convex_4231},
        {"at-most-two-distinct", parse_permutation("4321"), [](const Partition& l) { return distinct_part_count(l) <= 2; }},
    };
    return f;
}

inline const Family& family_for(const Permutation& p) {
    for (auto& f : families())
        if (f.pattern == p) return f;
    throw std::invalid_argument("no partition family for pattern " + to_string(p));
}

// indecomposable avoiders of B with exactly k inversions (length at most k+1)
inline std::vector<Permutation> indecomposable_avoiders(const PatternBasis& b, int k) {
    std::vector<Permutation> out;
    for (int n = 1; n <= k + 1; ++n)
        for (auto& p : generate_avoiders_exact(b, n, k))
            if (is_indecomposable(p)) out.push_back(p);
    return out;
}

struct FamilyCheck {
    int k = 0;
    std::vector<Partition> from_perms;   // Lambda(I_k(132,p))
    std::vector<Partition> from_family;  // partitions of k passing the test
    std::vector<Partition> missing;      // in the family, not hit
    std::vector<Partition> extra;        // hit, not in the family
    bool ok() const { return missing.empty() && extra.empty() && from_perms.size() == from_family.size(); }
};

inline FamilyCheck verify_family(const Family& f, int k) {
    FamilyCheck c;
    c.k = k;
    PatternBasis b{Permutation{1, 3, 2}, f.pattern};
    for (auto& p : indecomposable_avoiders(b, k)) c.from_perms.push_back(lambda(p));
    for (auto& l : partitions_of(k))
        if (f.test(l)) c.from_family.push_back(l);
    std::sort(c.from_perms.begin(), c.from_perms.end());
    std::sort(c.from_family.begin(), c.from_family.end());
    std::set_difference(c.from_family.begin(), c.from_family.end(), c.from_perms.begin(), c.from_perms.end(),
                        std::back_inserter(c.missing));
    std::set_difference(c.from_perms.begin(), c.from_perms.end(), c.from_family.begin(), c.from_family.end(),
                        std::back_inserter(c.extra));
    return c;
}

inline std::vector<std::uint64_t> family_counts(const PartitionTest& t, int K) {
    std::vector<std::uint64_t> c;
    for (int k = 0; k <= K; ++k) {
        std::uint64_t n = 0;
        for (auto& l : partitions_of(k)) n += t(l);
        c.push_back(n);
    }
    return c;
}

inline GfProviders partition_providers() {
    return {[](int K) { return family_counts(is_steep, K); }, [](int K) { return family_counts(is_convex_penny, K); }};
}

}  // namespace permseq
