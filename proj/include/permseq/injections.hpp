#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "permutation.hpp"

namespace permseq {

// ---- {213,231}-avoiders
// an indecomposable one starts with n; entries above the last entry form a
// decreasing upper arm, the rest (last entry included) an increasing lower arm

struct ArmProfile {
    int upper = 0;  // a
    int lower = 0;  // b
};

inline const PatternBasis& basis_213_231() {
    static const PatternBasis b{parse_permutation("213"), parse_permutation("231")};
    return b;
}

inline ArmProfile arm_profile(const Permutation& p) {
    if (!is_indecomposable(p) || !basis_213_231().avoided_by(p))
        throw std::invalid_argument("expected an indecomposable {213,231}-avoider");
    int last = p[p.size() - 1];
    return {p.size() - last, last};
}

// unique sigma avoiding {213,231} with sigma minus one entry = p and r more inversions
inline Permutation lemma_insert(const Permutation& p, int r) {
    auto arms = arm_profile(p);
    int n = p.size();
    if (r < 0 || r > n) throw std::invalid_argument("lemma_insert: r out of range");
    int last = p[n - 1];
    if (r <= arms.upper) {
        // lower point right after the r-th upper point
        int pos = 0, seen = 0, lows = 0;
        if (r > 0) {
            for (int i = 0; i < n; ++i) {
                if (p[i] > last) {
                    if (++seen == r) {
                        pos = i + 1;
                        break;
                    }
                } else ++lows;
            }
        }
        return insert_at(p, pos, lows + 1);
    }
    // upper point just before the r'-th lower point from the right
    int rr = r - arms.upper, seen = 0, pos = -1, ups_left = 0;
    for (int i = n - 1; i >= 0; --i)
        if (p[i] <= last && ++seen == rr) {
            pos = i;
            break;
        }
    for (int i = 0; i < pos; ++i) ups_left += p[i] > last;
    return insert_at(p, pos, n + 1 - ups_left);
}

// the tau with p minus one entry = tau and r fewer inversions, 1 <= r <= n-1
// unique when it exists; 321 with r = 1 has none
inline Permutation lemma_delete(const Permutation& p, int r) {
    arm_profile(p);
    int n = p.size();
    if (r < 1 || r > n - 1) throw std::invalid_argument("lemma_delete: r out of range");
    for (int i = 0; i < n; ++i) {
        int c = 0;
        for (int j = 0; j < n; ++j)
            if (j != i) c += (j < i) ? p[j] > p[i] : p[j] < p[i];
        if (c == r) return delete_at(p, i);
    }
    throw std::domain_error("lemma_delete: no entry removes exactly r inversions");
}

// ---- value shifts

// (e e-1) applied `steps` times along the chain: e ends at e-steps
inline Permutation shift_down(const Permutation& p, int e, int steps) {
    if (e - steps < 1 || e > p.size() || steps < 0) throw std::invalid_argument("shift_down out of range");
    std::vector<int> v(p.values());
    for (int& x : v) {
        if (x == e) x = e - steps;
        else if (x >= e - steps && x < e) ++x;
    }
    return {std::move(v), Permutation::trusted};
}

inline Permutation shift_up(const Permutation& p, int e, int steps) {
    if (e + steps > p.size() || e < 1 || steps < 0) throw std::invalid_argument("shift_up out of range");
    std::vector<int> v(p.values());
    for (int& x : v) {
        if (x == e) x = e + steps;
        else if (x > e && x <= e + steps) --x;
    }
    return {std::move(v), Permutation::trusted};
}

// shift the entries at the given positions, smallest value first
inline Permutation shift_down_positions(Permutation p, std::vector<int> pos, int steps) {
    std::sort(pos.begin(), pos.end(), [&](int a, int b) { return p[a] < p[b]; });
    for (int i : pos) p = shift_down(p, p[i], steps);
    return p;
}

// largest value first
inline Permutation shift_up_positions(Permutation p, std::vector<int> pos, int steps) {
    std::sort(pos.begin(), pos.end(), [&](int a, int b) { return p[a] > p[b]; });
    for (int i : pos) p = shift_up(p, p[i], steps);
    return p;
}

// ---- the injection Av_n^k(1324,231) -> Av_{n+1}^k(1324,231)

struct InjectionCertificate {
    int branch = 0;  // 0: empty, 1: decreasing, 2: decomposable, 3: general
    int ell = 0, m = 0, q = 0, r = 0;
};

inline const PatternBasis& basis_1324_231() {
    static const PatternBasis b{parse_permutation("1324"), parse_permutation("231")};
    return b;
}

inline Permutation inject_1324_231(const Permutation& p, InjectionCertificate* cert = nullptr) {
    InjectionCertificate c;
    int n = p.size();
    if (!basis_1324_231().avoided_by(p)) throw std::invalid_argument("input must avoid 1324 and 231");
    Permutation out;
    if (n == 0) {
        out = Permutation{1};
    } else if (p == Permutation::decreasing(n)) {
        c.branch = 1;
        out = direct_sum(p, Permutation{1});
    } else if (is_decomposable(p)) {
        c.branch = 2;
        auto ends = component_ends(p);
        int cut = ends[ends.size() - 2];
        std::vector<int> v(p.begin(), p.begin() + cut);
        v.push_back(cut + 1);
        for (int i = cut; i < n; ++i) v.push_back(p[i] + 1);
        out = Permutation(std::move(v), Permutation::trusted);
    } else {
        c.branch = 3;
        int ell = 0;
        while (ell < n && p[ell] == n - ell) ++ell;
        std::vector<int> rest(p.begin() + ell, p.end());
        auto d = standardize(rest);
        if (!is_decomposable(d)) throw std::logic_error("inject: remainder is not decomposable");
        auto ends = component_ends(d);
        int cstart = ends[ends.size() - 2];
        int m = d.size() - cstart;
        std::vector<int> cv;
        for (int i = cstart; i < d.size(); ++i) cv.push_back(d[i] - cstart);
        Permutation cc(std::move(cv), Permutation::trusted);
        int q = (ell + m) / (m + 1);
        int r = q * (m + 1) - ell;
        auto c2 = lemma_insert(cc, r);
        std::vector<int> v;
        for (int i = 0; i < ell; ++i) v.push_back(n + 1 - i);
        for (int i = 0; i < cstart; ++i) v.push_back(d[i]);
        for (int x : c2) v.push_back(x + cstart);
        Permutation s(std::move(v), Permutation::trusted);
        std::vector<int> pos;
        for (int i = ell - q; i < ell; ++i) pos.push_back(i);
        out = shift_down_positions(s, pos, m + 1);
        c.ell = ell;
        c.m = m;
        c.q = q;
        c.r = r;
    }
    if (cert) *cert = c;
    return out;
}

// preimage under inject_1324_231, nullopt when s is not an image
inline std::optional<Permutation> inject_1324_231_inverse(const Permutation& s) {
    int n = s.size() - 1;
    if (n < 0 || !basis_1324_231().avoided_by(s)) return std::nullopt;
    if (n == 0) return Permutation{};
    auto dec = Permutation::decreasing(n);
    if (s == direct_sum(dec, Permutation{1})) return dec;
    auto k = inversions(s);
    auto accept = [&](const Permutation& pre) {
        return inversions(pre) == k && basis_1324_231().avoided_by(pre) && inject_1324_231(pre) == s;
    };
    if (component_count(s) >= 3) {
        auto ends = component_ends(s);
        auto pre = delete_at(s, ends[ends.size() - 3]);
        if (accept(pre)) return pre;
    }
    // branch 3: q is forced by (l, m); undo the shift, then remove one of the last m+1 entries
    for (int ell = 1; ell < n; ++ell)
        for (int m = 1; ell + m <= n; ++m) {
            int q = (ell + m) / (m + 1);
            std::vector<int> pos;
            for (int i = ell - q; i < ell; ++i) pos.push_back(i);
            Permutation sp;
            try {
                sp = shift_up_positions(s, pos, m + 1);
            } catch (const std::invalid_argument&) {
                continue;
            }
            for (int i = 0; i < ell; ++i)
                if (sp[i] != n + 1 - i) goto next;
            for (int i = n - m; i <= n; ++i) {
                auto pre = delete_at(sp, i);
                if (accept(pre)) return pre;
            }
        next:;
        }
    return std::nullopt;
}

// ---- generic injection checks

struct InjectionReport {
    std::size_t checked = 0;
    bool injective = true;
    bool length_ok = true;
    bool inversions_ok = true;
    bool codomain_ok = true;
    std::optional<Permutation> first_failure;
    bool ok() const { return injective && length_ok && inversions_ok && codomain_ok; }
};

// f must map length n to length n+1, keep inversions, and land in Av(codomain)
inline InjectionReport check_injection(const std::vector<Permutation>& domain,
                                       const std::function<Permutation(const Permutation&)>& f,
                                       const PatternBasis& codomain) {
    InjectionReport rep;
    std::unordered_map<Permutation, Permutation> seen;
    auto fail = [&](const Permutation& p) {
        if (!rep.first_failure) rep.first_failure = p;
    };
    for (auto& p : domain) {
        auto img = f(p);
        ++rep.checked;
        if (img.size() != p.size() + 1) rep.length_ok = false, fail(p);
        if (inversions(img) != inversions(p)) rep.inversions_ok = false, fail(p);
        if (!codomain.avoided_by(img)) rep.codomain_ok = false, fail(p);
        auto [it, fresh] = seen.emplace(img, p);
        if (!fresh && it->second != p) rep.injective = false, fail(p);
    }
    return rep;
}

// ---- basis extension

enum class Direction { left, right, up, down };

// B^l = {p : p minus p_1 in B}, and the analogues for the last entry, the maximum, the minimum
inline PatternBasis basis_extend(const PatternBasis& b, Direction dir) {
    std::vector<Permutation> out;
    for (auto& q : b) {
        int m = q.size();
        for (int j = 0; j <= m; ++j) {
            switch (dir) {
                case Direction::left: out.push_back(insert_at(q, 0, j + 1)); break;
                case Direction::right: out.push_back(insert_at(q, m, j + 1)); break;
                case Direction::up: out.push_back(insert_at(q, j, m + 1)); break;
                case Direction::down: out.push_back(insert_at(q, j, 1)); break;
            }
        }
    }
    return PatternBasis(std::move(out));
}

using PermMap = std::function<Permutation(const Permutation&)>;

// from f: Av(B) -> Av(B), the injection on Av(B^dir) that fixes the extra entry
inline PermMap induced_injection(PermMap f, Direction dir) {
    switch (dir) {
        case Direction::left:
            return [f](const Permutation& p) {
                if (p.empty()) throw std::invalid_argument("induced injection needs a nonempty input");
                return insert_at(f(delete_at(p, 0)), 0, p[0]);
            };
        case Direction::right:
            return [f](const Permutation& p) {
                if (p.empty()) throw std::invalid_argument("induced injection needs a nonempty input");
                int n = p.size();
                auto img = f(delete_at(p, n - 1));
                return insert_at(img, img.size(), p[n - 1] + 1);
            };
        case Direction::down:
            return [f](const Permutation& p) {
                auto g = induced_injection([f](const Permutation& x) { return inverse(f(inverse(x))); }, Direction::left);
                return inverse(g(inverse(p)));
            };
        case Direction::up:
            return [f](const Permutation& p) {
                auto g = induced_injection([f](const Permutation& x) { return inverse(f(inverse(x))); }, Direction::right);
                return inverse(g(inverse(p)));
            };
    }
    throw std::logic_error("bad direction");
}

}  // namespace permseq
