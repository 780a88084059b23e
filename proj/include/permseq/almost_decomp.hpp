#pragma once

#include <algorithm>
#include <future>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "enumerate.hpp"
#include "permutation.hpp"

namespace permseq {

inline const Permutation& pattern_1324() {
    static const Permutation p{1, 3, 2, 4};
    return p;
}

// sigma + id_m + tau with sigma, tau the first and last components
struct DecompForm {
    Permutation sigma;
    int m = 0;
    Permutation tau;
};

inline DecompForm decompose_1324(const Permutation& p) {
    if (!is_decomposable(p)) throw std::invalid_argument("decompose_1324: input is not decomposable");
    if (contains(p, pattern_1324())) throw std::invalid_argument("decompose_1324: input contains 1324");
    auto comps = components(p);
    for (std::size_t i = 1; i + 1 < comps.size(); ++i)
        if (comps[i].size() != 1) throw std::logic_error("decompose_1324: middle component is not a point");
    return {comps.front(), static_cast<int>(comps.size()) - 2, comps.back()};
}

inline Permutation f_tilde(const Permutation& p) {
    auto d = decompose_1324(p);
    return direct_sum(direct_sum(d.sigma, Permutation::identity(d.m + 1)), d.tau);
}

enum class FCase {
    decomposable,
    remove_first,  // p minus p_1 decomposable
    remove_one,    // p minus 1 decomposable
    remove_last,   // p minus p_n decomposable
    remove_max,    // p minus n decomposable
};

inline const char* fcase_name(FCase c) {
    switch (c) {
        case FCase::decomposable: return "decomposable";
        case FCase::remove_first: return "F1";
        case FCase::remove_one: return "F2";
        case FCase::remove_last: return "F3";
        case FCase::remove_max: return "F4";
    }
    return "?";
}

enum class FPriority { paper, alternate };

// case used by f, or nullopt if p is neither decomposable nor almost decomposable
inline std::optional<FCase> almost_decomposable(const Permutation& p, FPriority pr = FPriority::paper) {
    if (p.empty()) return std::nullopt;
    if (is_decomposable(p)) return FCase::decomposable;
    int n = p.size();
    if (n < 2) return std::nullopt;
    bool c1 = is_decomposable(delete_at(p, 0));
    bool c2 = is_decomposable(delete_value(p, 1));
    bool c3 = is_decomposable(delete_at(p, n - 1));
    bool c4 = is_decomposable(delete_value(p, n));
    if (pr == FPriority::paper) {
        if (c1) return FCase::remove_first;
        if (c2) return FCase::remove_one;
        if (c3) return FCase::remove_last;
        if (c4) return FCase::remove_max;
    } else {
        if (c3) return FCase::remove_last;
        if (c4) return FCase::remove_max;
        if (c1) return FCase::remove_first;
        if (c2) return FCase::remove_one;
    }
    return std::nullopt;
}

inline bool is_almost_decomposable(const Permutation& p) {
    auto c = almost_decomposable(p);
    return c && *c != FCase::decomposable;
}

namespace detail {

inline Permutation f_first(const Permutation& p) { return insert_at(f_tilde(delete_at(p, 0)), 0, p[0]); }

inline Permutation f_one(const Permutation& p) { return inverse(f_first(inverse(p))); }

}  // namespace detail

// injection Av_n^k(1324) -> Av_{n+1}^k(1324) on decomposable and almost decomposable inputs
inline Permutation f_map(const Permutation& p, FPriority pr = FPriority::paper, FCase* used = nullptr) {
    if (contains(p, pattern_1324())) throw std::invalid_argument("f_map: input contains 1324");
    auto c = almost_decomposable(p, pr);
    if (!c) throw std::invalid_argument("f_map: input is not (almost) decomposable: " + to_string(p));
    if (used) *used = *c;
    if (*c == FCase::remove_first || *c == FCase::remove_one) {
        if (p.size() <= 10 && is_decomposable(delete_at(p, 0)) && is_decomposable(delete_value(p, 1)))
            throw std::logic_error("f_map: first-entry and minimum cases overlap");
    }
    switch (*c) {
        case FCase::decomposable: return f_tilde(p);
        case FCase::remove_first: return detail::f_first(p);
        case FCase::remove_one: return detail::f_one(p);
        case FCase::remove_last: return reverse_complement(detail::f_first(reverse_complement(p)));
        case FCase::remove_max: return reverse_complement(detail::f_one(reverse_complement(p)));
    }
    throw std::logic_error("f_map: bad case");
}

// ---- theorem scan: small inversion number forces almost decomposability

struct AlmostDecompReport {
    int n = 0;
    std::size_t checked = 0;     // avoiders with inv <= 2n-7
    std::size_t failures = 0;    // of those, neither decomposable nor almost decomposable
    std::optional<std::int64_t> min_inv_outside;  // over all of Av_n(1324)
};

inline AlmostDecompReport almost_decomp_scan(int n) {
    AlmostDecompReport r;
    r.n = n;
    PatternBasis b{pattern_1324()};
    for (auto& p : generate_avoiders(b, n, static_cast<int>(max_inversions(n)))) {
        auto inv = inversions(p);
        bool ok = almost_decomposable(p).has_value();
        if (inv <= 2 * n - 7) {
            ++r.checked;
            if (!ok) ++r.failures;
        }
        if (!ok && (!r.min_inv_outside || inv < *r.min_inv_outside)) r.min_inv_outside = inv;
    }
    return r;
}

// ---- compatibility of f with a pattern

namespace detail {

inline bool incompat_conditions(const Permutation& p, bool sufficient) {
    int n = p.size();
    struct V {
        Permutation q;
        bool rc_side;
    };
    auto prc = reverse_complement(p);
    V vs[] = {{p, false}, {inverse(p), false}, {prc, true}, {inverse(prc), true}};
    for (auto& [q, rc] : vs) {
        int comp = component_count(q);
        int q1 = q[0];
        bool extra = !sufficient || !rc || q1 < n - 1;
        if (comp >= 3) return true;
        auto tail = delete_at(q, 0);
        bool b = component_count(tail) > comp;
        if (sufficient) b = b && q1 < n;
        if (b && extra) return true;
        if (q1 > 1 && comp == 2) {
            auto first = components(q).front();
            bool c = first[0] == first.size();
            if (rc) c = c && q[n - 1] < n;
            if (c && extra) return true;
        }
        // on the rc side q_n < n applies here too; without it 132 is flagged at length 3
        bool d = q1 > 1 && q1 < n && avoids(tail, Permutation{2, 1, 3});
        if (rc && !sufficient) d = d && q[n - 1] < n;
        if (d && extra) return true;
    }
    return false;
}

}  // namespace detail

// true unless the theorem proves f compatible with p
inline bool classify_necessary(const Permutation& p) { return detail::incompat_conditions(p, false); }

// true when the theorem proves f incompatible with p
inline bool classify_sufficient(const Permutation& p) { return detail::incompat_conditions(p, true); }

enum class Verdict { compatible_by_theorem, incompatible_by_theorem, incompatible_by_witness, unknown };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::compatible_by_theorem: return "compatible-by-theorem";
        case Verdict::incompatible_by_theorem: return "incompatible-by-theorem";
        case Verdict::incompatible_by_witness: return "incompatible-by-witness";
        case Verdict::unknown: return "unknown";
    }
    return "?";
}

struct Witness {
    Permutation pi, image;
    std::vector<int> occurrence;  // 0-based positions in image
};

struct CompatResult {
    Permutation pattern;
    bool necessary = true;
    bool sufficient = false;
    std::optional<Witness> witness;
    Verdict verdict = Verdict::unknown;
};

// all (almost-)decomposable 1324-avoiders of length m with their f-images
class FImageCache {
public:
    explicit FImageCache(FPriority pr = FPriority::paper) : pr_(pr) {}

    const std::vector<std::pair<Permutation, Permutation>>& at(int m) {
        auto it = data_.find(m);
        if (it != data_.end()) return it->second;
        std::vector<std::pair<Permutation, Permutation>> v;
        PatternBasis b{pattern_1324()};
        for (auto& p : generate_avoiders(b, m, static_cast<int>(max_inversions(m))))
            if (almost_decomposable(p, pr_)) v.emplace_back(p, f_map(p, pr_));
        return data_.emplace(m, std::move(v)).first->second;
    }

private:
    FPriority pr_;
    std::map<int, std::vector<std::pair<Permutation, Permutation>>> data_;
};

// pi in Av_m(1324, p), n-1 <= m <= n+2, with f(pi) containing p
inline std::optional<Witness> compat_search(const Permutation& p, FImageCache& cache) {
    CompiledPattern cp(p);
    for (int m = std::max(p.size() - 1, 1); m <= p.size() + 2; ++m) {
        for (auto& [pi, img] : cache.at(m)) {
            if (cp.occurs_in(pi.view())) continue;
            if (cp.occurs_in(img.view())) return Witness{pi, img, cp.find(img.view())};
        }
    }
    return std::nullopt;
}

inline CompatResult classify_pattern(const Permutation& p, FImageCache& cache) {
    CompatResult r;
    r.pattern = p;
    r.necessary = classify_necessary(p);
    r.sufficient = classify_sufficient(p);
    r.witness = compat_search(p, cache);
    if (r.sufficient) r.verdict = Verdict::incompatible_by_theorem;
    else if (r.witness) r.verdict = Verdict::incompatible_by_witness;
    else if (!r.necessary) r.verdict = Verdict::compatible_by_theorem;
    else r.verdict = Verdict::unknown;
    return r;
}

struct CompatSummary {
    int n = 0;
    std::size_t total = 0;
    std::size_t sufficient_incompatible = 0;
    std::size_t computed_lower = 0;  // patterns with a witness
    std::size_t necessary_incompatible = 0;
    std::size_t necessary_compatible = 0;
    std::size_t computed_upper = 0;  // patterns without a witness
    std::size_t sufficient_compatible = 0;
    std::vector<CompatResult> results;
};

inline CompatSummary compat_table(int n, unsigned threads = default_threads(), FPriority pr = FPriority::paper) {
    CompatSummary s;
    s.n = n;
    PatternBasis b{pattern_1324()};
    auto pats = generate_avoiders(b, n, static_cast<int>(max_inversions(n)));
    FImageCache cache(pr);
    for (int m = std::max(n - 1, 1); m <= n + 2; ++m) cache.at(m);
    s.results.resize(pats.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < pats.size();) s.results[i] = classify_pattern(pats[i], cache);
    };
    std::vector<std::future<void>> fs;
    for (unsigned t = 0; t < std::max(threads, 1u); ++t) fs.push_back(std::async(std::launch::async, worker));
    for (auto& f : fs) f.get();
    s.total = pats.size();
    for (auto& r : s.results) {
        s.sufficient_incompatible += r.sufficient;
        s.computed_lower += r.witness.has_value();
        s.necessary_incompatible += r.necessary;
    }
    s.necessary_compatible = s.total - s.necessary_incompatible;
    s.computed_upper = s.total - s.computed_lower;
    s.sufficient_compatible = s.total - s.sufficient_incompatible;
    return s;
}

// p_1 = n and p_n = 1, or p = 1 + tau with tau, tau minus its last entry, tau minus its max indecomposable
inline bool corollary_family(const Permutation& p) {
    int n = p.size();
    if (n >= 2 && p[0] == n && p[n - 1] == 1) return true;
    if (n >= 4 && p[0] == 1) {
        std::vector<int> t(p.begin() + 1, p.end());
        auto tau = standardize(t);
        return is_indecomposable(tau) && is_indecomposable(delete_at(tau, tau.size() - 1)) &&
               is_indecomposable(delete_value(tau, tau.size()));
    }
    return false;
}

// ---- 1342

inline const Permutation& pattern_1342() {
    static const Permutation p{1, 3, 4, 2};
    return p;
}

struct Bound1342Report {
    int n = 0;
    std::size_t checked = 0;
    std::vector<Permutation> counterexamples;  // pi avoids 1342, f(pi) does not
    std::optional<std::int64_t> min_inv;
    bool lemma_ok = true;  // pi contains 1342 implies f(pi) contains 1342
};

inline Bound1342Report check_1342_bound(int n) {
    Bound1342Report r;
    r.n = n;
    PatternBasis b{pattern_1324()};
    CompiledPattern cp(pattern_1342());
    for (auto& p : generate_avoiders(b, n, static_cast<int>(max_inversions(n)))) {
        if (!almost_decomposable(p)) continue;
        ++r.checked;
        auto img = f_map(p);
        bool in = cp.occurs_in(p.view()), out = cp.occurs_in(img.view());
        if (in && !out) r.lemma_ok = false;
        if (!in && out) {
            r.counterexamples.push_back(p);
            auto inv = inversions(p);
            if (!r.min_inv || inv < *r.min_inv) r.min_inv = inv;
        }
    }
    return r;
}

// Av_{n+1}^k(1324,1342) split into the three families missed by f
struct DifferenceSets {
    std::vector<Permutation> r1, r2, r3, rest;
    bool overlap = false;
};

namespace detail {

// t_1 = l+1 and t_{n+1} = l+2, l the first component length of the decomposable t minus {t_1, t_{n+1}}
inline bool in_r3_form(const Permutation& t) {
    int n1 = t.size();
    if (n1 < 3) return false;
    auto mid = delete_values(t, {t[0], t[n1 - 1]});
    if (!is_decomposable(mid)) return false;
    int ell = component_ends(mid).front();
    return t[0] == ell + 1 && t[n1 - 1] == ell + 2;
}

}  // namespace detail

inline DifferenceSets difference_sets(int n, int k) {
    DifferenceSets d;
    PatternBasis b{pattern_1324(), pattern_1342()};
    for (auto& s : generate_avoiders_exact(b, n + 1, k)) {
        int m = s.size();
        bool a = s[0] == m || s[m - 1] == 1;
        bool c = (m >= 2 && s[1] == m) || s[m - 1] == 2;
        bool e = detail::in_r3_form(s) || detail::in_r3_form(inverse(s));
        if (a + c + e > 1) d.overlap = true;
        if (a) d.r1.push_back(s);
        else if (c) d.r2.push_back(s);
        else if (e) d.r3.push_back(s);
        else d.rest.push_back(s);
    }
    return d;
}

}  // namespace permseq
