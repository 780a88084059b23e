// permseq: count tables, limits and injection checks for inversion-restricted pattern classes

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "permseq/permseq.hpp"

using namespace permseq;
using nlohmann::json;

namespace {

enum Exit { ok = 0, usage = 1, mismatch = 2 };

struct Common {
    std::string basis = "1324";
    int n = 10;
    int k = 10;
    std::string format = "csv";
    std::string cache_dir;
    unsigned threads = default_threads();
    std::string f_priority = "paper";
};

FPriority priority(const Common& c) { return c.f_priority == "alternate" ? FPriority::alternate : FPriority::paper; }

CountTable load_table(const Common& c, const PatternBasis& b, int n, int k) {
    if (c.cache_dir == "none") return count_table(b, n, k, c.threads);
    TableCache cache(c.cache_dir.empty() ? TableCache::default_dir() : std::filesystem::path(c.cache_dir));
    return cache.get(b, n, k, c.threads);
}

void emit(const Common& c, const CountTable& t) {
    if (c.format == "json") std::cout << to_json(t).dump(2) << "\n";
    else if (c.format == "md") std::cout << to_markdown(t);
    else std::cout << to_csv(t);
}

void emit(const Common& c, const SignedTable& d) {
    if (c.format == "json") std::cout << to_json(d).dump(2) << "\n";
    else if (c.format == "md") std::cout << to_markdown(d);
    else std::cout << to_csv(d);
}

// what the literature says about each limit sequence
const std::map<std::string, std::string>& limit_notes() {
    static const std::map<std::string, std::string> m = {
        {"1243,1324", "partition numbers, valid for n >= k+3"},
        {"1324,2143", "2p(k) for k >= 1, valid for n >= k+2"},
        {"1324,1342", "overpartitions"},
        {"1324,1432", "sum (k+1) x^k prod_{i<=k} 1/(1-x^i)"},
        {"1324,4231", "not in the OEIS"},
        {"1324,4321", "not in the OEIS"},
        {"1324,2341", "not in the OEIS; square of sum of parts of Ma"},
        {"1324,2413", "same as 1324: P(x)^2"},
        {"1324,2431", "not in the OEIS; P(x) times steep partitions"},
        {"1324,3412", "square of convex penny partitions"},
        {"1324,3421", "not in the OEIS"},
    };
    return m;
}

std::string join(const std::vector<std::int64_t>& v) {
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

int cmd_table(const Common& c) {
    emit(c, load_table(c, parse_basis(c.basis), c.n, c.k));
    return ok;
}

int cmd_diff(const Common& c, bool second) {
    auto t = load_table(c, parse_basis(c.basis), c.n, c.k);
    emit(c, second ? second_differences(t) : row_differences(t));
    return ok;
}

int cmd_golden(const Common& c, bool all, const std::string& golden_dir) {
    std::vector<PatternBasis> bases;
    if (all) bases = golden_bases();
    else bases.push_back(parse_basis(c.basis));
    std::filesystem::path dir = golden_dir.empty() ? data_dir() / "golden" : std::filesystem::path(golden_dir);
    int failures = 0;
    for (auto& b : bases) {
        auto t = load_table(c, b, 15, 15);
        for (auto kind : {GoldenKind::counts, GoldenKind::diffs}) {
            auto g = load_golden(b, kind, dir);
            auto mine = kind == GoldenKind::counts ? as_signed_table(t) : row_differences(t);
            auto mm = compare_tables(g.cells, mine);
            std::string label = to_string(b) + (kind == GoldenKind::counts ? " counts" : " diffs");
            if (mm.empty()) {
                std::cout << "ok    " << label << "\n";
                continue;
            }
            ++failures;
            std::cout << "FAIL  " << label << ": " << mm.size() << " cells differ\n";
            for (auto& m : mm) {
                auto show = [](const std::optional<std::int64_t>& x) { return x ? std::to_string(*x) : std::string("blank"); };
                std::cout << "      n=" << m.n << " k=" << m.k << " expected " << show(m.expected) << " got "
                          << show(m.actual) << "\n";
            }
        }
    }
    return failures ? mismatch : ok;
}

// {id_a + 21, 21 + id_b} kills every row with k >= 1 once n >= k + a + b
std::optional<int> zero_row_offset(const PatternBasis& b) {
    std::optional<int> best;
    for (auto& p : b)
        for (auto& q : b) {
            if (inversions(p) != 1 || inversions(q) != 1) continue;
            int m = p.size(), l = q.size();
            if (m < 2 || l < 2) continue;
            if (p[m - 2] != m || p[m - 1] != m - 1) continue;
            if (q[0] != 2 || q[1] != 1) continue;
            int off = (m - 2) + (l - 2);
            if (!best || off < *best) best = off;
        }
    return best;
}

int cmd_monotone(const Common& c) {
    auto b = parse_basis(c.basis);
    auto t = load_table(c, b, c.n, c.k);
    auto v = monotonicity_scan(t);
    if (v.empty()) std::cout << "no violations for n <= " << c.n << ", k <= " << c.k << "\n";
    for (auto& x : v) std::cout << "violation n=" << x.n << " k=" << x.k << ": " << x.a_n << " > " << x.a_next << "\n";
    if (auto off = zero_row_offset(b)) {
        bool holds = true;
        for (int k = 1; k <= c.k; ++k)
            for (int n = k + *off; n <= c.n; ++n) holds = holds && t.at(n, k) == 0;
        std::cout << "certificate: av_n^k = 0 for k >= 1 and n >= k+" << *off << " ("
                  << (holds ? "verified" : "FAILED") << " for n <= " << c.n << ")\n";
        if (!holds) return mismatch;
    }
    return ok;
}

int cmd_limit(const Common& c, int tail) {
    auto b = parse_basis(c.basis);
    auto t = load_table(c, b, c.n, c.k);
    auto rep = limit_report(t, tail);
    std::vector<std::int64_t> vals;
    std::size_t stable = 0;
    while (stable < rep.size() && rep[stable].status == LimitStatus::stabilized) {
        vals.push_back(static_cast<std::int64_t>(rep[stable].value));
        ++stable;
    }
    if (c.format == "json") {
        json j = json::array();
        for (auto& e : rep)
            j.push_back({{"k", e.k}, {"value", e.value}, {"threshold", e.threshold},
                         {"status", e.status == LimitStatus::stabilized ? "stabilized" : "unstable-within-range"}});
        std::cout << json{{"basis", to_string(b)}, {"limit", j}}.dump(2) << "\n";
        return ok;
    }
    std::cout << "limit: " << join(vals) << "\n";
    for (std::size_t k = stable; k < rep.size(); ++k)
        std::cout << "k=" << k << " unstable within range (a(" << c.n << "," << k << ")=" << rep[k].value << ")\n";
    std::cout << "thresholds:";
    for (std::size_t k = 0; k < stable; ++k) std::cout << " " << rep[k].threshold;
    std::cout << "\n";
    auto sec = diagonal_limit(row_differences(t), tail).sequence();
    auto ter = diagonal_limit(second_differences(t), tail).sequence();
    std::cout << "secondary: " << join(sec) << "\n";
    std::cout << "tertiary: " << join(ter) << "\n";
    auto it = limit_notes().find(to_string(b));
    if (it != limit_notes().end()) std::cout << "note: " << it->second << "\n";
    return ok;
}

int cmd_compat(const Common& c, int length, const std::string& out) {
    auto s = compat_table(length, c.threads, priority(c));
    json arr = json::array();
    for (auto& r : s.results) {
        json e{{"pattern", to_string(r.pattern)},
               {"verdict", verdict_name(r.verdict)},
               {"necessary_incompatible", r.necessary},
               {"sufficient_incompatible", r.sufficient}};
        if (r.witness) e["witness"] = {{"pi", to_string(r.witness->pi)}, {"image", to_string(r.witness->image)},
                                       {"occurrence", r.witness->occurrence}};
        arr.push_back(e);
    }
    if (!out.empty()) std::ofstream(out) << arr.dump(2) << "\n";
    std::cout << "| n | Thm suff incompat | CLB | Thm nec incompat | Thm nec compat | CUB | Thm suff compat |\n"
              << "|---|---|---|---|---|---|---|\n"
              << "| " << s.n << " | " << s.sufficient_incompatible << " | " << s.computed_lower << " | "
              << s.necessary_incompatible << " | " << s.necessary_compatible << " | " << s.computed_upper << " | "
              << s.sufficient_compatible << " |\n\ncompatible:";
    for (auto& r : s.results)
        if (r.verdict == Verdict::compatible_by_theorem) std::cout << " " << to_string(r.pattern);
    std::cout << "\nunknown:";
    for (auto& r : s.results)
        if (r.verdict == Verdict::unknown) std::cout << " " << to_string(r.pattern);
    std::cout << "\n";
    return ok;
}

int cmd_gf(const Common& c, const std::string& name, bool compare) {
    auto s = named_gf(name, c.k, partition_providers());
    std::cout << "k,coefficient\n";
    for (int k = 0; k <= c.k; ++k) std::cout << k << "," << s[k] << "\n";
    if (!compare) return ok;
    auto b = parse_basis(name);
    auto off = stabilization_offset(b);
    if (!off) {
        std::cerr << "no certified limit for " << name << "\n";
        return usage;
    }
    int kk = std::min(c.k, 12);
    auto t = load_table(c, b, kk + *off, kk);
    auto rep = limit_report(t);
    int bad = 0;
    for (int k = 0; k <= kk; ++k)
        if (rep[k].status != LimitStatus::stabilized || BigInt(rep[k].value) != s[k]) ++bad;
    std::cout << (bad ? "MISMATCH" : "match") << " against the count table for k <= " << kk << "\n";
    return bad ? mismatch : ok;
}

int cmd_bijection(const Common& c, const std::string& pattern) {
    auto& f = family_for(parse_permutation(pattern));
    int bad = 0;
    for (int k = 0; k <= c.k; ++k) {
        auto r = verify_family(f, k);
        std::cout << "k=" << k << " perms=" << r.from_perms.size() << " family=" << r.from_family.size();
        if (!r.ok()) {
            ++bad;
            std::cout << " missing:";
            for (auto& l : r.missing) std::cout << " " << to_string(l);
            std::cout << " extra:";
            for (auto& l : r.extra) std::cout << " " << to_string(l);
        }
        std::cout << "\n";
    }
    std::cout << f.name << (bad ? ": MISMATCH" : ": match") << "\n";
    return bad ? mismatch : ok;
}

int cmd_inject(const Common& c, const std::string& perm) {
    auto p = parse_permutation(perm);
    auto b = parse_basis(c.basis);
    if (b == basis_1324_231()) {
        InjectionCertificate cert;
        auto img = inject_1324_231(p, &cert);
        std::cout << to_string(img) << "\n";
        std::cout << "branch=" << cert.branch;
        if (cert.branch == 3) std::cout << " l=" << cert.ell << " m=" << cert.m << " q=" << cert.q << " r=" << cert.r;
        std::cout << " inv=" << inversions(p) << "\n";
        return ok;
    }
    if (b == PatternBasis{pattern_1324()}) {
        FCase used;
        auto img = f_map(p, priority(c), &used);
        std::cout << to_string(img) << "\ncase=" << fcase_name(used) << " inv=" << inversions(p) << "\n";
        return ok;
    }
    std::cerr << "inject supports --basis 1324,231 and --basis 1324\n";
    return usage;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"inversion-restricted pattern avoidance tables"};
    app.require_subcommand(1);
    Common c;
    auto common = [&](CLI::App* s) {
        s->add_option("--basis", c.basis, "patterns, e.g. 1324,1342");
        s->add_option("--n", c.n, "largest length");
        s->add_option("--k", c.k, "largest inversion number");
        s->add_option("--format", c.format)->check(CLI::IsMember({"csv", "md", "json"}));
        s->add_option("--cache-dir", c.cache_dir, "table cache (default $PERMSEQ_CACHE_DIR, 'none' disables)");
        s->add_option("--threads", c.threads)->check(CLI::PositiveNumber);
        s->add_option("--f-priority", c.f_priority)->check(CLI::IsMember({"paper", "alternate"}));
    };
    auto* table = app.add_subcommand("table", "count table av_n^k(B)");
    auto* diff = app.add_subcommand("diff", "row differences");
    bool second = false;
    diff->add_flag("--second", second, "second differences instead");
    auto* golden = app.add_subcommand("golden", "compare against the stored tables");
    bool all = false;
    std::string golden_dir;
    golden->add_flag("--all", all, "all stored bases");
    golden->add_option("--golden-dir", golden_dir);
    auto* monotone = app.add_subcommand("monotone", "scan for a(n,k) > a(n+1,k)");
    auto* limit = app.add_subcommand("limit", "limit, secondary and tertiary sequences");
    int tail = 3;
    limit->add_option("--tail", tail);
    auto* compat = app.add_subcommand("compat", "f-compatibility of patterns of one length");
    int length = 4;
    std::string out;
    compat->add_option("--length", length)->check(CLI::Range(1, 8));
    compat->add_option("--out", out, "write verdicts as JSON");
    auto* gf = app.add_subcommand("gf", "generating function coefficients");
    std::string name = "1324";
    bool compare = false;
    gf->add_option("--name", name);
    gf->add_flag("--compare-table", compare);
    auto* bij = app.add_subcommand("bijection", "partition family check");
    std::string pattern = "2341";
    bij->add_option("--pattern", pattern);
    auto* inj = app.add_subcommand("inject", "apply an injection");
    std::string perm;
    inj->add_option("--perm", perm)->required();
    for (auto* s : {table, diff, golden, monotone, limit, compat, gf, bij, inj}) common(s);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? ok : usage;
    }
    try {
        if (*table) return cmd_table(c);
        if (*diff) return cmd_diff(c, second);
        if (*golden) return cmd_golden(c, all, golden_dir);
        if (*monotone) return cmd_monotone(c);
        if (*limit) return cmd_limit(c, tail);
        if (*compat) return cmd_compat(c, length, out);
        if (*gf) return cmd_gf(c, name, compare);
        if (*bij) return cmd_bijection(c, pattern);
        if (*inj) return cmd_inject(c, perm);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    }
    return usage;
}
