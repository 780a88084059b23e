#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <functional>
#include <future>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "permutation.hpp"

namespace permseq {

inline unsigned default_threads() {
    unsigned t = std::thread::hardware_concurrency();
    return t ? t : 1;
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    if (a > std::numeric_limits<std::uint64_t>::max() - b) throw std::overflow_error("count overflow");
    return a + b;
}

namespace detail {

// left-to-right DFS over the Lehmer code. placing value v adds the number of
// still unused smaller values, so the running sum is exact and monotone.
template <class Leaf>
class AvoiderSearch {
public:
    AvoiderSearch(const PatternBasis& b, int n, int k_max, Leaf& leaf)
        : n_(n), k_max_(k_max), leaf_(leaf) {
        for (auto& q : b) pats_.emplace_back(q);
        prefix_.reserve(static_cast<std::size_t>(n));
    }

    void run_from(int first_value) {
        if (n_ == 0) {
            if (pats_trivially_avoided()) leaf_(prefix_, 0);
            return;
        }
        place(first_value, 0, 0);
    }

    void run() {
        if (n_ == 0) {
            run_from(0);
            return;
        }
        for (int v = 1; v <= n_; ++v) {
            if (v - 1 > k_max_) break;
            run_from(v);
        }
    }

private:
    bool pats_trivially_avoided() const {
        for (auto& p : pats_)
            if (p.size() == 0) return false;
        return true;
    }

    bool ok_last() const {
        for (auto& p : pats_)
            if (p.occurs_ending_at_last(prefix_)) return false;
        return true;
    }

    void place(int v, std::uint64_t used, int inv) {
        std::uint64_t below = (v == 1) ? 0 : ((~used) & ((std::uint64_t{1} << (v - 1)) - 1));
        int add = std::popcount(below);
        int ninv = inv + add;
        if (ninv > k_max_) return;
        prefix_.push_back(v);
        if (ok_last()) {
            std::uint64_t nused = used | (std::uint64_t{1} << (v - 1));
            if (static_cast<int>(prefix_.size()) == n_) {
                leaf_(prefix_, ninv);
            } else {
                int smaller = 0;  // unused values below w seen so far
                for (int w = 1; w <= n_; ++w) {
                    if (nused >> (w - 1) & 1) continue;
                    if (ninv + smaller > k_max_) break;
                    place(w, nused, ninv);
                    ++smaller;
                }
            }
        }
        prefix_.pop_back();
    }

    int n_, k_max_;
    Leaf& leaf_;
    std::vector<CompiledPattern> pats_;
    std::vector<int> prefix_;
};

inline void check_n(int n) {
    if (n < 0) throw std::invalid_argument("negative length");
    if (n > 64) throw std::invalid_argument("length above 64 is not supported");
}

}  // namespace detail

// Av_n^{<=k_max}(B) in lexicographic order
inline std::vector<Permutation> generate_avoiders(const PatternBasis& b, int n, int k_max,
                                                  unsigned threads = 1) {
    detail::check_n(n);
    if (k_max < 0) return {};
    auto work = [&](int first) {
        std::vector<Permutation> out;
        auto leaf = [&](const std::vector<int>& p, int) { out.emplace_back(p, Permutation::trusted); };
        detail::AvoiderSearch<decltype(leaf)> s(b, n, k_max, leaf);
        if (first == 0) s.run();
        else s.run_from(first);
        return out;
    };
    if (threads <= 1 || n < 2) return work(0);
    std::vector<std::future<std::vector<Permutation>>> fs;
    for (int v = 1; v <= n && v - 1 <= k_max; ++v) fs.push_back(std::async(std::launch::async, work, v));
    std::vector<Permutation> out;
    for (auto& f : fs) {
        auto part = f.get();
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

// exactly k inversions
inline std::vector<Permutation> generate_avoiders_exact(const PatternBasis& b, int n, int k) {
    auto all = generate_avoiders(b, n, k);
    std::erase_if(all, [&](const Permutation& p) { return inversions(p) != k; });
    return all;
}

// counts[k] = av_n^k(B) for k <= k_max
inline std::vector<std::uint64_t> count_by_inversions(const PatternBasis& b, int n, int k_max) {
    detail::check_n(n);
    std::vector<std::uint64_t> c(static_cast<std::size_t>(std::max(k_max + 1, 0)), 0);
    if (k_max < 0) return c;
    auto leaf = [&](const std::vector<int>&, int inv) { c[inv] = checked_add(c[inv], 1); };
    detail::AvoiderSearch<decltype(leaf)> s(b, n, k_max, leaf);
    s.run();
    return c;
}

// ---- count tables

inline std::int64_t max_inversions(int n) { return static_cast<std::int64_t>(n) * (n - 1) / 2; }

struct CountTable {
    PatternBasis basis;
    int n_max = 0;
    int k_max = 0;
    std::vector<std::vector<std::uint64_t>> rows;  // rows[n-1][k]

    std::uint64_t at(int n, int k) const {
        if (n < 1 || n > n_max || k < 0 || k > k_max) throw std::out_of_range("table cell");
        return rows[n - 1][k];
    }
    static bool blank(int n, int k) { return k > max_inversions(n); }
    friend bool operator==(const CountTable&, const CountTable&) = default;
};

// independent rows are spread over threads; the result is identical for any thread count
inline CountTable count_table(const PatternBasis& b, int n_max, int k_max, unsigned threads = default_threads()) {
    detail::check_n(n_max);
    if (k_max < 0) throw std::invalid_argument("negative k_max");
    CountTable t{b, n_max, k_max, std::vector<std::vector<std::uint64_t>>(static_cast<std::size_t>(n_max))};
    if (threads <= 1) {
        for (int n = 1; n <= n_max; ++n) t.rows[n - 1] = count_by_inversions(b, n, k_max);
        return t;
    }
    // largest rows first
    std::vector<std::future<void>> fs;
    std::atomic<int> next{n_max};
    auto worker = [&] {
        for (int n; (n = next.fetch_sub(1)) >= 1;) t.rows[n - 1] = count_by_inversions(b, n, k_max);
    };
    for (unsigned i = 0; i < threads; ++i) fs.push_back(std::async(std::launch::async, worker));
    for (auto& f : fs) f.get();
    return t;
}

// signed matrix with a per-row blank rule; row index i corresponds to n = first_n + i
struct SignedTable {
    int first_n = 1;
    int k_max = 0;
    std::vector<std::vector<std::int64_t>> rows;
    std::vector<std::vector<char>> present;

    int last_n() const { return first_n + static_cast<int>(rows.size()) - 1; }
    bool has(int n, int k) const {
        if (n < first_n || n > last_n() || k < 0 || k > k_max) return false;
        return present[n - first_n][k];
    }
    std::int64_t at(int n, int k) const {
        if (!has(n, k)) throw std::out_of_range("signed table cell");
        return rows[n - first_n][k];
    }
    friend bool operator==(const SignedTable&, const SignedTable&) = default;
};

inline std::int64_t as_signed(std::uint64_t x) {
    if (x > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
        throw std::overflow_error("count does not fit a signed difference");
    return static_cast<std::int64_t>(x);
}

// d(n,k) = a(n+1,k) - a(n,k)
inline SignedTable row_differences(const CountTable& t) {
    SignedTable d;
    d.first_n = 1;
    d.k_max = t.k_max;
    for (int n = 1; n + 1 <= t.n_max; ++n) {
        std::vector<std::int64_t> row(t.k_max + 1, 0);
        std::vector<char> pres(t.k_max + 1, 0);
        for (int k = 0; k <= t.k_max; ++k) {
            if (CountTable::blank(n + 1, k)) continue;
            row[k] = as_signed(t.at(n + 1, k)) - as_signed(t.at(n, k));
            pres[k] = 1;
        }
        d.rows.push_back(std::move(row));
        d.present.push_back(std::move(pres));
    }
    return d;
}

// b(n,k) = d(n+1,k+1) + d(n,k)
inline SignedTable second_differences(const CountTable& t) {
    SignedTable d = row_differences(t);
    SignedTable b;
    b.first_n = 1;
    b.k_max = std::max(t.k_max - 1, 0);
    for (int n = 1; n + 2 <= t.n_max; ++n) {
        std::vector<std::int64_t> row(b.k_max + 1, 0);
        std::vector<char> pres(b.k_max + 1, 0);
        for (int k = 0; k + 1 <= t.k_max; ++k) {
            if (!d.has(n + 1, k + 1) || !d.has(n, k)) continue;
            row[k] = d.at(n + 1, k + 1) + d.at(n, k);
            pres[k] = 1;
        }
        b.rows.push_back(std::move(row));
        b.present.push_back(std::move(pres));
    }
    return b;
}

struct MonotonicityViolation {
    int n, k;
    std::uint64_t a_n, a_next;
    friend bool operator==(const MonotonicityViolation&, const MonotonicityViolation&) = default;
};

// cells with a(n,k) > a(n+1,k), ordered by (k, n)
inline std::vector<MonotonicityViolation> monotonicity_scan(const CountTable& t) {
    std::vector<MonotonicityViolation> out;
    for (int k = 0; k <= t.k_max; ++k)
        for (int n = 1; n + 1 <= t.n_max; ++n)
            if (t.at(n, k) > t.at(n + 1, k)) out.push_back({n, k, t.at(n, k), t.at(n + 1, k)});
    return out;
}

// ---- limits

// n from which av_n^k(B) is provably constant, when some pattern has at most one inversion
// (id_m: zero once n >= k+m; id_a + 21 + id_b: constant once n >= k + a + b + max|q|)
inline std::optional<int> stabilization_offset(const PatternBasis& b) {
    std::optional<int> best;
    int maxlen = b.max_length();
    for (auto& p : b) {
        auto inv = inversions(p);
        int off;
        if (inv == 0) off = p.size();
        else if (inv == 1) off = p.size() - 2 + maxlen;
        else continue;
        if (!best || off < *best) best = off;
    }
    return best;
}

enum class LimitStatus { stabilized, unstable_within_range };

struct LimitEntry {
    int k;
    std::uint64_t value;  // a(n_max, k)
    int threshold;        // smallest n0 with a(n,k) constant on [n0, n_max]
    LimitStatus status;
};

inline std::vector<LimitEntry> limit_report(const CountTable& t, int tail_window = 3) {
    if (tail_window < 1) throw std::invalid_argument("tail_window must be positive");
    auto off = stabilization_offset(t.basis);
    std::vector<LimitEntry> out;
    for (int k = 0; k <= t.k_max; ++k) {
        std::uint64_t last = t.at(t.n_max, k);
        int n0 = t.n_max;
        while (n0 > 1 && t.at(n0 - 1, k) == last) --n0;
        bool tail = t.n_max - n0 + 1 >= tail_window;
        bool certified = off && t.n_max >= k + *off;
        out.push_back({k, last, n0, tail && certified ? LimitStatus::stabilized : LimitStatus::unstable_within_range});
    }
    return out;
}

// values along a diagonal cell(n + i, k + i), indexed by offset k - n
struct DiagonalLimit {
    int first_offset = 0;
    std::vector<std::int64_t> values;
    std::vector<int> thresholds;  // first n of the constant tail
    std::vector<char> stabilized;

    // stabilized prefix after the leading zero diagonals
    std::vector<std::int64_t> sequence() const {
        std::vector<std::int64_t> s;
        std::size_t i = 0;
        while (i < values.size() && values[i] == 0) ++i;
        if (i == values.size()) i = 0;
        for (; i < values.size() && stabilized[i]; ++i) s.push_back(values[i]);
        return s;
    }
};

inline DiagonalLimit diagonal_limit(const SignedTable& m, int tail_window = 3) {
    DiagonalLimit out;
    if (m.rows.empty()) return out;
    int lo = -m.last_n(), hi = m.k_max - m.first_n;
    bool started = false;
    for (int off = lo; off <= hi; ++off) {
        std::vector<std::pair<int, std::int64_t>> cells;
        for (int n = m.first_n; n <= m.last_n(); ++n)
            if (m.has(n, n + off)) cells.push_back({n, m.at(n, n + off)});
        if (cells.empty()) continue;
        if (!started) {
            out.first_offset = off;
            started = true;
        }
        std::size_t j = cells.size() - 1;
        while (j > 0 && cells[j - 1].second == cells.back().second) --j;
        out.values.push_back(cells.back().second);
        out.thresholds.push_back(cells[j].first);
        out.stabilized.push_back(static_cast<int>(cells.size() - j) >= tail_window);
    }
    return out;
}

// ---- symmetry classes of {1324, p}, |p| = 4

enum class Symmetry { identity, inverse, reverse_complement, inverse_then_rc };

inline const char* symmetry_name(Symmetry s) {
    switch (s) {
        case Symmetry::identity: return "id";
        case Symmetry::inverse: return "inv";
        case Symmetry::reverse_complement: return "rc";
        case Symmetry::inverse_then_rc: return "inv,rc";
    }
    return "?";
}

inline Permutation apply_symmetry(Symmetry s, const Permutation& p) {
    switch (s) {
        case Symmetry::identity: return p;
        case Symmetry::inverse: return inverse(p);
        case Symmetry::reverse_complement: return reverse_complement(p);
        case Symmetry::inverse_then_rc: return reverse_complement(inverse(p));
    }
    return p;
}

inline const std::vector<Permutation>& representative_patterns() {
    static const std::vector<Permutation> reps = [] {
        std::vector<Permutation> r;
        for (auto s : {"1234", "1243", "1342", "1432", "2143", "2341", "2413", "2431", "3412", "3421", "4231", "4321"})
            r.push_back(parse_permutation(s));
        return r;
    }();
    return reps;
}

struct SymmetryImage {
    Symmetry symmetry;
    Permutation representative;
};

// all four symmetries fix 1324, so av_n^k(1324,p) = av_n^k(1324, image)
inline SymmetryImage symmetry_representative(const Permutation& p) {
    if (p.size() != 4 || p == parse_permutation("1324"))
        throw std::invalid_argument("expected a length-4 pattern other than 1324");
    auto& reps = representative_patterns();
    for (auto s : {Symmetry::identity, Symmetry::inverse, Symmetry::reverse_complement, Symmetry::inverse_then_rc}) {
        auto img = apply_symmetry(s, p);
        if (std::find(reps.begin(), reps.end(), img) != reps.end()) return {s, img};
    }
    throw std::logic_error("no representative for " + to_string(p));
}

}  // namespace permseq
