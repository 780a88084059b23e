#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "enumerate.hpp"
#include "permutation.hpp"

#ifndef PERMSEQ_DATA_DIR
#define PERMSEQ_DATA_DIR "data"
#endif

namespace permseq {

inline constexpr const char* engine_version = "permseq-1";

// ---- CSV / markdown / JSON for count and difference tables

inline std::string csv_header(int k_max) {
    std::string s = "n\\k";
    for (int k = 0; k <= k_max; ++k) s += "," + std::to_string(k);
    return s + "\n";
}

inline std::string to_csv(const CountTable& t) {
    std::string s = csv_header(t.k_max);
    for (int n = 1; n <= t.n_max; ++n) {
        s += std::to_string(n);
        for (int k = 0; k <= t.k_max; ++k) {
            s += ',';
            if (!CountTable::blank(n, k)) s += std::to_string(t.at(n, k));
        }
        s += '\n';
    }
    return s;
}

inline std::string to_csv(const SignedTable& d) {
    std::string s = csv_header(d.k_max);
    for (int n = d.first_n; n <= d.last_n(); ++n) {
        s += std::to_string(n);
        for (int k = 0; k <= d.k_max; ++k) {
            s += ',';
            if (d.has(n, k)) s += std::to_string(d.at(n, k));
        }
        s += '\n';
    }
    return s;
}

// rows of optional cells; the first column is n
struct CsvGrid {
    int k_max = 0;
    std::vector<int> ns;
    std::vector<std::vector<std::optional<std::int64_t>>> cells;
};

inline CsvGrid parse_csv_grid(const std::string& text) {
    CsvGrid g;
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty csv");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind("n\\k", 0) != 0) throw std::invalid_argument("csv header must start with n\\k");
    int cols = static_cast<int>(std::count(line.begin(), line.end(), ','));
    g.k_max = cols - 1;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::string cur;
        for (char c : line) {
            if (c == ',') f.push_back(cur), cur.clear();
            else cur += c;
        }
        f.push_back(cur);
        if (static_cast<int>(f.size()) != cols + 1) throw std::invalid_argument("csv row has wrong width: " + line);
        g.ns.push_back(std::stoi(f[0]));
        std::vector<std::optional<std::int64_t>> row;
        for (int k = 0; k <= g.k_max; ++k) {
            if (f[k + 1].empty()) row.push_back(std::nullopt);
            else row.push_back(std::stoll(f[k + 1]));
        }
        g.cells.push_back(std::move(row));
    }
    return g;
}

inline CountTable parse_count_csv(const std::string& text, const PatternBasis& b) {
    auto g = parse_csv_grid(text);
    CountTable t{b, static_cast<int>(g.ns.size()), g.k_max, {}};
    for (std::size_t i = 0; i < g.ns.size(); ++i) {
        if (g.ns[i] != static_cast<int>(i) + 1) throw std::invalid_argument("count csv rows must be n = 1, 2, ...");
        std::vector<std::uint64_t> row;
        for (int k = 0; k <= g.k_max; ++k) {
            auto& c = g.cells[i][k];
            if (c.has_value() == CountTable::blank(g.ns[i], k))
                throw std::invalid_argument("count csv blank cell mismatch at n=" + std::to_string(g.ns[i]));
            row.push_back(c ? static_cast<std::uint64_t>(*c) : 0);
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

inline SignedTable parse_signed_csv(const std::string& text) {
    auto g = parse_csv_grid(text);
    SignedTable d;
    d.first_n = g.ns.empty() ? 1 : g.ns.front();
    d.k_max = g.k_max;
    for (std::size_t i = 0; i < g.ns.size(); ++i) {
        if (g.ns[i] != d.first_n + static_cast<int>(i)) throw std::invalid_argument("csv rows must be consecutive");
        std::vector<std::int64_t> row;
        std::vector<char> pres;
        for (auto& c : g.cells[i]) {
            row.push_back(c.value_or(0));
            pres.push_back(c.has_value());
        }
        d.rows.push_back(std::move(row));
        d.present.push_back(std::move(pres));
    }
    return d;
}

inline std::string to_markdown(const CountTable& t) {
    std::string s = "| n\\k |";
    for (int k = 0; k <= t.k_max; ++k) s += " " + std::to_string(k) + " |";
    s += "\n|---|";
    for (int k = 0; k <= t.k_max; ++k) s += "---|";
    s += "\n";
    for (int n = 1; n <= t.n_max; ++n) {
        s += "| " + std::to_string(n) + " |";
        for (int k = 0; k <= t.k_max; ++k) s += " " + (CountTable::blank(n, k) ? std::string() : std::to_string(t.at(n, k))) + " |";
        s += "\n";
    }
    return s;
}

inline std::string to_markdown(const SignedTable& d) {
    std::string s = "| n\\k |";
    for (int k = 0; k <= d.k_max; ++k) s += " " + std::to_string(k) + " |";
    s += "\n|---|";
    for (int k = 0; k <= d.k_max; ++k) s += "---|";
    s += "\n";
    for (int n = d.first_n; n <= d.last_n(); ++n) {
        s += "| " + std::to_string(n) + " |";
        for (int k = 0; k <= d.k_max; ++k) s += " " + (d.has(n, k) ? std::to_string(d.at(n, k)) : std::string()) + " |";
        s += "\n";
    }
    return s;
}

// {basis, n_max, k_max, rows}; blank cells are null
inline nlohmann::json to_json(const CountTable& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (int n = 1; n <= t.n_max; ++n) {
        nlohmann::json r = nlohmann::json::array();
        for (int k = 0; k <= t.k_max; ++k) {
            if (CountTable::blank(n, k)) r.push_back(nullptr);
            else r.push_back(t.at(n, k));
        }
        rows.push_back(r);
    }
    return {{"basis", to_string(t.basis)}, {"n_max", t.n_max}, {"k_max", t.k_max}, {"rows", rows}};
}

inline CountTable count_table_from_json(const nlohmann::json& j) {
    CountTable t{parse_basis(j.at("basis").get<std::string>()), j.at("n_max").get<int>(), j.at("k_max").get<int>(), {}};
    auto& rows = j.at("rows");
    if (static_cast<int>(rows.size()) != t.n_max) throw std::invalid_argument("json table has wrong row count");
    for (int n = 1; n <= t.n_max; ++n) {
        std::vector<std::uint64_t> row;
        for (int k = 0; k <= t.k_max; ++k) {
            auto& c = rows[n - 1].at(k);
            row.push_back(c.is_null() ? 0 : c.get<std::uint64_t>());
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

inline nlohmann::json to_json(const SignedTable& d) {
    nlohmann::json rows = nlohmann::json::array();
    for (int n = d.first_n; n <= d.last_n(); ++n) {
        nlohmann::json r = nlohmann::json::array();
        for (int k = 0; k <= d.k_max; ++k) {
            if (d.has(n, k)) r.push_back(d.at(n, k));
            else r.push_back(nullptr);
        }
        rows.push_back(r);
    }
    return {{"first_n", d.first_n}, {"k_max", d.k_max}, {"rows", rows}};
}

// ---- golden tables

inline std::filesystem::path data_dir() {
    if (const char* e = std::getenv("PERMSEQ_DATA_DIR")) return e;
    return PERMSEQ_DATA_DIR;
}

inline std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string basis_slug(const PatternBasis& b) {
    std::string s = to_string(b);
    std::replace(s.begin(), s.end(), ',', '_');
    return s;
}

enum class GoldenKind { counts, diffs };

struct GoldenTable {
    PatternBasis basis;
    GoldenKind kind;
    SignedTable cells;  // counts are stored with first_n = 1 as well
};

inline std::vector<PatternBasis> golden_bases() {
    std::vector<PatternBasis> out;
    for (auto p : {"1243", "2143", "1342", "1432", "4231", "4321", "2341", "2413", "2431", "3412", "3421"})
        out.push_back(PatternBasis{parse_permutation("1324"), parse_permutation(p)});
    return out;
}

inline GoldenTable load_golden(const PatternBasis& b, GoldenKind kind, const std::filesystem::path& dir = data_dir() / "golden") {
    // stored as 1324_<p> whatever the sort order
    std::string slug = basis_slug(b);
    if (b.size() == 2 && b.patterns()[1] == parse_permutation("1324"))
        slug = "1324_" + to_string(b.patterns()[0]);
    auto file = dir / (slug + (kind == GoldenKind::counts ? ".counts.csv" : ".diffs.csv"));
    return {b, kind, parse_signed_csv(read_file(file))};
}

struct CellMismatch {
    int n, k;
    std::optional<std::int64_t> expected, actual;
};

inline std::vector<CellMismatch> compare_tables(const SignedTable& expected, const SignedTable& actual) {
    std::vector<CellMismatch> out;
    int lo = std::min(expected.first_n, actual.first_n), hi = std::max(expected.last_n(), actual.last_n());
    int km = std::max(expected.k_max, actual.k_max);
    for (int n = lo; n <= hi; ++n)
        for (int k = 0; k <= km; ++k) {
            std::optional<std::int64_t> e, a;
            if (expected.has(n, k)) e = expected.at(n, k);
            if (actual.has(n, k)) a = actual.at(n, k);
            if (e != a) out.push_back({n, k, e, a});
        }
    return out;
}

inline SignedTable as_signed_table(const CountTable& t) {
    SignedTable d;
    d.first_n = 1;
    d.k_max = t.k_max;
    for (int n = 1; n <= t.n_max; ++n) {
        std::vector<std::int64_t> row;
        std::vector<char> pres;
        for (int k = 0; k <= t.k_max; ++k) {
            bool b = CountTable::blank(n, k);
            row.push_back(b ? 0 : as_signed(t.at(n, k)));
            pres.push_back(!b);
        }
        d.rows.push_back(std::move(row));
        d.present.push_back(std::move(pres));
    }
    return d;
}

// ---- on-disk cache, one JSON file per (basis, n_max, k_max)

class TableCache {
public:
    explicit TableCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    static std::filesystem::path default_dir() {
        if (const char* e = std::getenv("PERMSEQ_CACHE_DIR")) return e;
        return ".permseq-cache";
    }

    std::filesystem::path path_for(const PatternBasis& b, int n_max, int k_max) const {
        return dir_ / ("table_" + basis_slug(b) + "_n" + std::to_string(n_max) + "_k" + std::to_string(k_max) + ".json");
    }

    std::optional<CountTable> load(const PatternBasis& b, int n_max, int k_max) const {
        auto p = path_for(b, n_max, k_max);
        if (!std::filesystem::exists(p)) return std::nullopt;
        try {
            auto j = nlohmann::json::parse(read_file(p));
            if (j.value("engine_version", "") != engine_version) return std::nullopt;
            auto t = count_table_from_json(j.at("table"));
            if (!(t.basis == b) || t.n_max != n_max || t.k_max != k_max) return std::nullopt;
            return t;
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }

    // write to a temporary name, then rename over the target
    void store(const CountTable& t) const {
        std::filesystem::create_directories(dir_);
        auto p = path_for(t.basis, t.n_max, t.k_max);
        std::random_device rd;
        auto tmp = p;
        tmp += ".tmp" + std::to_string(rd());
        {
            std::ofstream out(tmp, std::ios::binary);
            if (!out) throw std::runtime_error("cannot write " + tmp.string());
            nlohmann::json j{{"engine_version", engine_version}, {"table", to_json(t)}};
            out << j.dump() << '\n';
        }
        std::filesystem::rename(tmp, p);
    }

    CountTable get(const PatternBasis& b, int n_max, int k_max, unsigned threads = default_threads()) const {
        if (auto t = load(b, n_max, k_max)) return *t;
        auto t = count_table(b, n_max, k_max, threads);
        store(t);
        return t;
    }

private:
    std::filesystem::path dir_;
};

}  // namespace permseq
