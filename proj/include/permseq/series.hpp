#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace permseq {

using BigInt = boost::multiprecision::cpp_int;

// power series known exactly up to x^order
template <class C = BigInt>
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order = 0) : c_(static_cast<std::size_t>(check(order)) + 1, C(0)) {}
    TruncatedSeries(int order, std::vector<C> coeffs) : TruncatedSeries(order) {
        for (std::size_t i = 0; i < coeffs.size() && i < c_.size(); ++i) c_[i] = std::move(coeffs[i]);
    }

    static TruncatedSeries one(int order) { return monomial(order, 0); }
    static TruncatedSeries monomial(int order, int e, C coef = C(1)) {
        TruncatedSeries s(order);
        if (e < 0) throw std::invalid_argument("negative exponent");
        if (e <= order) s.c_[e] = std::move(coef);
        return s;
    }
    // 1/(1 - x^i)
    static TruncatedSeries geometric(int order, int i) {
        if (i < 1) throw std::invalid_argument("geometric needs i >= 1");
        TruncatedSeries s(order);
        for (int e = 0; e <= order; e += i) s.c_[e] = 1;
        return s;
    }

    int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const C& operator[](int e) const { return c_.at(static_cast<std::size_t>(e)); }
    C& operator[](int e) { return c_.at(static_cast<std::size_t>(e)); }
    const std::vector<C>& coefficients() const noexcept { return c_; }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        shrink_to(o.order());
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        shrink_to(o.order());
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    TruncatedSeries& operator*=(const C& s) {
        for (auto& x : c_) x *= s;
        return *this;
    }
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const C& s) { return a *= s; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        int n = std::min(a.order(), b.order());
        TruncatedSeries r(n);
        for (int i = 0; i <= n; ++i) {
            if (a.c_[i] == 0) continue;
            for (int j = 0; i + j <= n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }
    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

    // multiply by x^e
    TruncatedSeries shifted(int e) const {
        TruncatedSeries r(order());
        for (int i = 0; i + e <= order(); ++i) r.c_[i + e] = c_[i];
        return r;
    }
    // divide by (1 - x^i) in place
    TruncatedSeries& divide_one_minus(int i) {
        if (i < 1) throw std::invalid_argument("divide_one_minus needs i >= 1");
        for (int e = i; e <= order(); ++e) c_[e] += c_[e - i];
        return *this;
    }
    // multiply by (1 + x^i) in place
    TruncatedSeries& multiply_one_plus(int i) {
        if (i < 1) throw std::invalid_argument("multiply_one_plus needs i >= 1");
        for (int e = order(); e >= i; --e) c_[e] += c_[e - i];
        return *this;
    }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    static int check(int order) {
        if (order < 0) throw std::invalid_argument("negative series order");
        return order;
    }
    void shrink_to(int o) {
        if (o < order()) c_.resize(static_cast<std::size_t>(o) + 1);
    }
    std::vector<C> c_;
};

using Series = TruncatedSeries<BigInt>;

inline Series square(const Series& s) { return s * s; }

// prod_{i>=1} 1/(1-x^i)
inline Series partition_series(int K) {
    auto s = Series::one(K);
    for (int i = 1; i <= K; ++i) s.divide_one_minus(i);
    return s;
}

// prod_{i>=1} (1+x^i)
inline Series distinct_partition_series(int K) {
    auto s = Series::one(K);
    for (int i = 1; i <= K; ++i) s.multiply_one_plus(i);
    return s;
}

// prod_{i=1}^{a} (1+x^i)
inline Series distinct_partial(int K, int a) {
    auto s = Series::one(K);
    for (int i = 1; i <= std::min(a, K); ++i) s.multiply_one_plus(i);
    return s;
}

inline Series gf_1342(int K) {
    auto s = distinct_partition_series(K);
    for (int i = 1; i <= K; ++i) s.divide_one_minus(i);
    return s;
}

inline Series gf_1432(int K) {
    Series s(K);
    auto p = Series::one(K);
    for (int k = 0; k <= K; ++k) {
        if (k > 0) p.divide_one_minus(k);
        s += p.shifted(k) * BigInt(k + 1);
    }
    return s;
}

// indecomposable {132,4231}-avoiders
inline Series base_4231(int K) {
    auto s = distinct_partition_series(K);
    for (int a = 0; a + 2 <= K; ++a) {
        auto da = distinct_partial(K, a);
        for (int b = 0; (a + 2) * (b + 1) <= K; ++b) s += (da * distinct_partial(K, b)).shifted((a + 2) * (b + 1));
    }
    return s;
}

// indecomposable {132,4321}-avoiders: at most two distinct parts
inline Series base_4321(int K) {
    auto s = Series::one(K);
    for (int k = 1; k <= K; ++k) {
        auto t = Series::monomial(K, k);
        t.divide_one_minus(k);
        s += t;
        for (int i = k + 1; k + i <= K; ++i) {
            auto u = Series::monomial(K, k + i);
            u.divide_one_minus(k).divide_one_minus(i);
            s += u;
        }
    }
    return s;
}

// indecomposable {132,2341}-avoiders (sum of Parts of Ma)
inline Series base_2341(int K) {
    auto s = Series::one(K);
    for (int k = 1; k * (k + 1) / 2 <= K; ++k) {
        auto prod = Series::one(K);
        for (int i = 1; i <= k; ++i) prod *= Series::geometric(K, i) + Series::monomial(K, 1);
        s += prod.shifted(k * (k + 1) / 2);
    }
    return s;
}

// indecomposable {132,3421}-avoiders: distinct parts except the smallest
inline Series base_3421(int K) {
    auto s = Series::one(K);
    for (int k = 1; k <= K; ++k) {
        auto t = Series::monomial(K, k);
        t.divide_one_minus(k);
        for (int i = k + 1; i <= K; ++i) t.multiply_one_plus(i);
        s += t;
    }
    return s;
}

inline Series series_from_counts(int K, const std::vector<std::uint64_t>& c) {
    Series s(K);
    for (int k = 0; k <= K && k < static_cast<int>(c.size()); ++k) s[k] = BigInt(c[k]);
    return s;
}

// count sequences that have no product formula; filled by partitions.hpp
using CountProvider = std::function<std::vector<std::uint64_t>(int K)>;

struct GfProviders {
    CountProvider steep;         // indecomposable {132,3241}-avoiders
    CountProvider convex_penny;  // indecomposable {132,3412}-avoiders
};

inline std::vector<std::string> gf_names() {
    return {"1324",      "1324,1234", "1324,1243", "1324,2143", "1324,1342", "1324,1432",
            "1324,4231", "1324,4321", "1324,2341", "1324,2413", "1324,2431", "1324,3412",
            "1324,3421", "132",       "132,4231",  "132,4321",  "132,2341",  "132,3421",
            "132,3241",  "132,3412"};
}

// generating function sum_k c_k x^k of the limit sequence for the named basis
inline Series named_gf(const std::string& name, int K, const GfProviders& prov = {}) {
    auto need = [&](const CountProvider& f, const char* what) {
        if (!f) throw std::invalid_argument(std::string("named_gf: no enumeration provider for ") + what);
        return series_from_counts(K, f(K));
    };
    // order of patterns in the name does not matter
    auto key = to_string(parse_basis(name));
    auto is = [&](const char* s) { return key == to_string(parse_basis(s)); };
    if (is("132")) return partition_series(K);
    if (is("1324") || is("1324,2413")) return square(partition_series(K));
    if (is("1324,1234")) return Series(K);
    if (is("1324,1243")) return partition_series(K);
    if (is("1324,2143")) return partition_series(K) * BigInt(2) - Series::one(K);
    if (is("1324,1342")) return gf_1342(K);
    if (is("1324,1432")) return gf_1432(K);
    if (is("132,4231")) return base_4231(K);
    if (is("1324,4231")) return square(base_4231(K));
    if (is("132,4321")) return base_4321(K);
    if (is("1324,4321")) return square(base_4321(K));
    if (is("132,2341")) return base_2341(K);
    if (is("1324,2341")) return square(base_2341(K));
    if (is("132,3421")) return base_3421(K);
    if (is("1324,3421")) return square(base_3421(K));
    if (is("132,3241")) return need(prov.steep, "steep partitions");
    if (is("1324,2431")) return partition_series(K) * need(prov.steep, "steep partitions");
    if (is("132,3412")) return need(prov.convex_penny, "convex penny partitions");
    if (is("1324,3412")) return square(need(prov.convex_penny, "convex penny partitions"));
    throw std::invalid_argument("named_gf: unknown name " + name);
}

// av_n^k(1324,1342) for n >= (k+7)/2
inline BigInt av_1324_1342(int n, int k) {
    if (k < 0 || n < 1) throw std::domain_error("av_1324_1342: bad arguments");
    if (2 * n < k + 7) throw std::domain_error("av_1324_1342: needs n >= (k+7)/2");
    auto c = gf_1342(k);
    auto num = Series::one(k) - Series::monomial(k, 1) - Series::monomial(k, n - 1, 2) - Series::monomial(k, n, 2);
    num.divide_one_minus(1);
    return (num * c)[k];
}

// x^{n-1} (2+2x) C_{1324,1342}(x): the row difference a(n+1,.) - a(n,.) in the stable range
inline Series secondary_gf_1342(int n, int K) {
    auto c = gf_1342(K);
    auto t = Series::monomial(K, n - 1, 2) + Series::monomial(K, n, 2);
    return t * c;
}

}  // namespace permseq
