#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace permseq {

class Permutation {
public:
    struct trusted_t {};
    static constexpr trusted_t trusted{};

    Permutation() = default;

    explicit Permutation(std::vector<int> v) : v_(std::move(v)) { validate(); }
    Permutation(std::initializer_list<int> v) : v_(v) { validate(); }
    // caller guarantees v is a permutation of 1..n
    Permutation(std::vector<int> v, trusted_t) : v_(std::move(v)) {}

    static Permutation identity(int n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), 1);
        return {std::move(v), trusted};
    }
    static Permutation decreasing(int n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) v[i] = n - i;
        return {std::move(v), trusted};
    }

    int size() const noexcept { return static_cast<int>(v_.size()); }
    bool empty() const noexcept { return v_.empty(); }
    // 0-based position, values 1..n
    int operator[](int i) const { return v_[static_cast<std::size_t>(i)]; }
    int at(int i) const {
        if (i < 0 || i >= size()) throw std::out_of_range("permutation index");
        return v_[static_cast<std::size_t>(i)];
    }
    const std::vector<int>& values() const noexcept { return v_; }
    std::span<const int> view() const noexcept { return v_; }
    auto begin() const noexcept { return v_.begin(); }
    auto end() const noexcept { return v_.end(); }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) {
        return a.v_ <=> b.v_;
    }

private:
    void validate() const {
        std::vector<char> seen(v_.size() + 1, 0);
        for (int x : v_) {
            if (x < 1 || x > static_cast<int>(v_.size()) || seen[x])
                throw std::invalid_argument("not a permutation of 1..n");
            seen[x] = 1;
        }
    }
    std::vector<int> v_;
};

// relabel distinct integers to 1..m keeping relative order
inline Permutation standardize(std::span<const int> seq) {
    std::vector<int> idx(seq.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return seq[a] < seq[b]; });
    std::vector<int> out(seq.size());
    for (std::size_t r = 0; r < idx.size(); ++r) out[idx[r]] = static_cast<int>(r) + 1;
    return {std::move(out), Permutation::trusted};
}

inline Permutation parse_permutation(std::string_view s) {
    std::vector<int> v;
    if (s == "e" || s.empty()) return {};
    if (s.find(',') == std::string_view::npos) {
        for (char c : s) {
            if (c == ' ') continue;
            if (c < '1' || c > '9') throw std::invalid_argument("bad permutation text: " + std::string(s));
            v.push_back(c - '0');
        }
    } else {
        std::size_t pos = 0;
        while (pos <= s.size()) {
            auto next = s.find(',', pos);
            if (next == std::string_view::npos) next = s.size();
            auto tok = s.substr(pos, next - pos);
            while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
            while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
            if (tok.empty()) throw std::invalid_argument("bad permutation text: " + std::string(s));
            int x = 0;
            for (char c : tok) {
                if (c < '0' || c > '9') throw std::invalid_argument("bad permutation text: " + std::string(s));
                x = x * 10 + (c - '0');
            }
            v.push_back(x);
            pos = next + 1;
        }
    }
    return Permutation(std::move(v));
}

// digits when n <= 9, comma separated otherwise
inline std::string to_string(const Permutation& p) {
    std::string out;
    bool commas = p.size() > 9;
    for (int i = 0; i < p.size(); ++i) {
        if (commas && i) out += ',';
        out += std::to_string(p[i]);
    }
    return out;
}

// ---- statistics

inline std::int64_t inversions(const Permutation& p) {
    std::int64_t c = 0;
    for (int i = 0; i < p.size(); ++i)
        for (int j = i + 1; j < p.size(); ++j) c += p[i] > p[j];
    return c;
}

inline std::vector<int> lehmer_code(const Permutation& p) {
    std::vector<int> code(static_cast<std::size_t>(p.size()), 0);
    for (int i = 0; i < p.size(); ++i)
        for (int j = i + 1; j < p.size(); ++j) code[i] += p[j] < p[i];
    return code;
}

inline Permutation from_lehmer(const std::vector<int>& code) {
    int n = static_cast<int>(code.size());
    std::vector<int> avail(static_cast<std::size_t>(n));
    std::iota(avail.begin(), avail.end(), 1);
    std::vector<int> out;
    out.reserve(code.size());
    for (int i = 0; i < n; ++i) {
        if (code[i] < 0 || code[i] > n - 1 - i) throw std::invalid_argument("invalid Lehmer code");
        out.push_back(avail[code[i]]);
        avail.erase(avail.begin() + code[i]);
    }
    return {std::move(out), Permutation::trusted};
}

// ---- symmetries

inline Permutation inverse(const Permutation& p) {
    std::vector<int> out(static_cast<std::size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i) out[p[i] - 1] = i + 1;
    return {std::move(out), Permutation::trusted};
}

inline Permutation reverse(const Permutation& p) {
    std::vector<int> out(p.values().rbegin(), p.values().rend());
    return {std::move(out), Permutation::trusted};
}

inline Permutation complement(const Permutation& p) {
    std::vector<int> out(p.values());
    for (int& x : out) x = p.size() + 1 - x;
    return {std::move(out), Permutation::trusted};
}

inline Permutation reverse_complement(const Permutation& p) { return complement(reverse(p)); }

// ---- sums and components

inline Permutation direct_sum(const Permutation& a, const Permutation& b) {
    std::vector<int> out(a.values());
    for (int x : b) out.push_back(x + a.size());
    return {std::move(out), Permutation::trusted};
}

inline Permutation skew_sum(const Permutation& a, const Permutation& b) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(a.size() + b.size()));
    for (int x : a) out.push_back(x + b.size());
    for (int x : b) out.push_back(x);
    return {std::move(out), Permutation::trusted};
}

// end positions (exclusive) of the sum components
inline std::vector<int> component_ends(const Permutation& p) {
    std::vector<int> ends;
    int mx = 0;
    for (int i = 0; i < p.size(); ++i) {
        mx = std::max(mx, p[i]);
        if (mx == i + 1) ends.push_back(i + 1);
    }
    return ends;
}

inline int component_count(const Permutation& p) {
    return static_cast<int>(component_ends(p).size());
}

inline bool is_decomposable(const Permutation& p) {
    int mx = 0;
    for (int i = 0; i + 1 < p.size(); ++i) {
        mx = std::max(mx, p[i]);
        if (mx == i + 1) return true;
    }
    return false;
}

inline bool is_indecomposable(const Permutation& p) { return !p.empty() && !is_decomposable(p); }

inline std::vector<Permutation> components(const Permutation& p) {
    std::vector<Permutation> out;
    int start = 0;
    for (int e : component_ends(p)) {
        std::vector<int> part;
        for (int i = start; i < e; ++i) part.push_back(p[i] - start);
        out.emplace_back(std::move(part), Permutation::trusted);
        start = e;
    }
    return out;
}

// remove the given values and standardize
inline Permutation delete_values(const Permutation& p, std::initializer_list<int> vals) {
    std::vector<int> kept;
    for (int x : p)
        if (std::find(vals.begin(), vals.end(), x) == vals.end()) kept.push_back(x);
    if (static_cast<int>(kept.size()) + static_cast<int>(vals.size()) != p.size())
        throw std::invalid_argument("delete_values: value not present");
    return standardize(kept);
}

inline Permutation delete_value(const Permutation& p, int value) { return delete_values(p, {value}); }

// remove the entry at a 0-based position and standardize
inline Permutation delete_at(const Permutation& p, int pos) { return delete_value(p, p.at(pos)); }

// insert `value` at 0-based position; existing values >= value move up
inline Permutation insert_at(const Permutation& p, int pos, int value) {
    if (pos < 0 || pos > p.size() || value < 1 || value > p.size() + 1)
        throw std::invalid_argument("insert_at out of range");
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(p.size() + 1));
    for (int i = 0; i <= p.size(); ++i) {
        if (i == pos) out.push_back(value);
        if (i < p.size()) out.push_back(p[i] >= value ? p[i] + 1 : p[i]);
    }
    return {std::move(out), Permutation::trusted};
}

// ---- containment

// pattern compiled for the subsequence matcher: each entry gets the nearest
// earlier entries just below / just above it in value
class CompiledPattern {
public:
    explicit CompiledPattern(const Permutation& q) : q_(q) {
        int m = q.size();
        lower_.assign(m, -1);
        upper_.assign(m, -1);
        below_last_.assign(m, 0);
        for (int j = 0; j < m; ++j) {
            for (int i = 0; i < j; ++i) {
                if (q[i] < q[j] && (lower_[j] < 0 || q[i] > q[lower_[j]])) lower_[j] = i;
                if (q[i] > q[j] && (upper_[j] < 0 || q[i] < q[upper_[j]])) upper_[j] = i;
            }
            if (m) below_last_[j] = q[j] < q[m - 1];
        }
    }

    const Permutation& pattern() const noexcept { return q_; }
    int size() const noexcept { return q_.size(); }

    bool occurs_in(std::span<const int> t) const {
        if (q_.size() > static_cast<int>(t.size())) return false;
        if (q_.empty()) return true;
        int chosen[64];
        return match(t, 0, 0, static_cast<int>(t.size()), chosen, nullptr);
    }

    // occurrence that uses the last entry of t
    bool occurs_ending_at_last(std::span<const int> t) const {
        int n = static_cast<int>(t.size());
        int m = q_.size();
        if (m == 0 || m > n) return false;
        if (m == 1) return true;
        int chosen[64];
        int last = t[n - 1];
        return match(t, 0, 0, n - 1, chosen, &last);
    }

    // positions (0-based) of the first occurrence, empty when none
    std::vector<int> find(std::span<const int> t) const {
        std::vector<int> pos;
        if (q_.size() > static_cast<int>(t.size())) return pos;
        std::vector<int> cur;
        if (find_rec(t, 0, 0, cur, pos)) return pos;
        return {};
    }

private:
    bool fits(int j, int v, const int* chosen) const {
        if (lower_[j] >= 0 && v < chosen[lower_[j]]) return false;
        if (upper_[j] >= 0 && v > chosen[upper_[j]]) return false;
        return true;
    }

    bool match(std::span<const int> t, int j, int start, int limit, int* chosen, const int* last) const {
        int m = last ? q_.size() - 1 : q_.size();
        if (j == m) return true;
        for (int i = start; i <= limit - (m - j); ++i) {
            int v = t[i];
            if (!fits(j, v, chosen)) continue;
            if (last && ((v < *last) != static_cast<bool>(below_last_[j]))) continue;
            chosen[j] = v;
            if (match(t, j + 1, i + 1, limit, chosen, last)) return true;
        }
        return false;
    }

    bool find_rec(std::span<const int> t, int j, int start, std::vector<int>& cur, std::vector<int>& out) const {
        if (j == q_.size()) {
            out = cur;
            return true;
        }
        int n = static_cast<int>(t.size());
        for (int i = start; i <= n - (q_.size() - j); ++i) {
            bool ok = true;
            if (lower_[j] >= 0 && t[i] < t[cur[lower_[j]]]) ok = false;
            if (upper_[j] >= 0 && t[i] > t[cur[upper_[j]]]) ok = false;
            if (!ok) continue;
            cur.push_back(i);
            if (find_rec(t, j + 1, i + 1, cur, out)) return true;
            cur.pop_back();
        }
        return false;
    }

    Permutation q_;
    std::vector<int> lower_, upper_;
    std::vector<char> below_last_;
};

inline bool contains(const Permutation& p, const Permutation& q) {
    if (q.size() > 64) throw std::invalid_argument("pattern too long");
    return CompiledPattern(q).occurs_in(p.view());
}

inline bool avoids(const Permutation& p, const Permutation& q) { return !contains(p, q); }

// does the prefix contain q through an occurrence using its last entry
inline bool contains_ending_at(std::span<const int> prefix, const Permutation& q) {
    return CompiledPattern(q).occurs_ending_at_last(prefix);
}

// ---- bases

class PatternBasis {
public:
    PatternBasis() = default;
    PatternBasis(std::initializer_list<Permutation> ps) : ps_(ps) { normalize(); }
    explicit PatternBasis(std::vector<Permutation> ps) : ps_(std::move(ps)) { normalize(); }

    const std::vector<Permutation>& patterns() const noexcept { return ps_; }
    std::size_t size() const noexcept { return ps_.size(); }
    bool empty() const noexcept { return ps_.empty(); }
    auto begin() const noexcept { return ps_.begin(); }
    auto end() const noexcept { return ps_.end(); }

    int max_length() const {
        int m = 0;
        for (auto& p : ps_) m = std::max(m, p.size());
        return m;
    }

    bool avoided_by(const Permutation& p) const {
        for (auto& q : ps_)
            if (contains(p, q)) return false;
        return true;
    }

    friend bool operator==(const PatternBasis&, const PatternBasis&) = default;
    friend auto operator<=>(const PatternBasis& a, const PatternBasis& b) { return a.ps_ <=> b.ps_; }

private:
    void normalize() {
        for (auto& p : ps_)
            if (p.empty()) throw std::invalid_argument("empty pattern in basis");
        std::sort(ps_.begin(), ps_.end());
        ps_.erase(std::unique(ps_.begin(), ps_.end()), ps_.end());
    }
    std::vector<Permutation> ps_;
};

// "1324,1342" or "1324 1342"; each pattern may itself use the digit form only
inline PatternBasis parse_basis(std::string_view s) {
    std::vector<Permutation> ps;
    std::string tok;
    auto flush = [&] {
        if (!tok.empty()) ps.push_back(parse_permutation(tok));
        tok.clear();
    };
    for (char c : s) {
        if (c == ',' || c == ' ' || c == ';' || c == '{' || c == '}') flush();
        else tok += c;
    }
    flush();
    return PatternBasis(std::move(ps));
}

inline std::string to_string(const PatternBasis& b) {
    std::string out;
    for (auto& p : b) {
        if (!out.empty()) out += ',';
        out += to_string(p);
    }
    return out;
}

}  // namespace permseq

template <>
struct std::hash<permseq::Permutation> {
    std::size_t operator()(const permseq::Permutation& p) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int x : p) {
            h ^= static_cast<std::size_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};
