#pragma once

#include <fstream>
#include <future>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "mkpow/formula.hpp"
#include "mkpow/reference_table.hpp"

namespace mkpow {

struct TableRow {
    long k = 0;
    Integer a;
    std::string a_factored;
    Integer b;
    std::string b_factored;
    Integer m_over_k;
    Integer m;
    bool corrected = false;  // value differs from the 1976 formula
};

// Factored rendering in the published style: prime powers ascending by prime,
// each printed as its value ("4" for 2^2), "=" appended only for products.
inline std::string format_factored(const Integer& value, const std::map<long, int>& exponents) {
    if (value == 1) return "1";
    std::vector<std::string> parts;
    for (const auto& [p, e] : exponents)
        if (e > 0) parts.push_back(pow_ui(Integer(p), static_cast<unsigned long>(e)).get_str());
    if (parts.size() == 1) return parts[0];
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += "·";
        out += parts[i];
    }
    return out + "=" + value.get_str();
}

inline TableRow build_row(long k, FormulaVariant variant = FormulaVariant::corrected) {
    FactorProfile prof = profile(k, variant);
    TableRow row;
    row.k = k;
    row.a = prof.a;
    row.a_factored = format_factored(prof.a, prof.alpha_exponents);
    row.b = prof.b;
    std::map<long, int> beta_exponents;
    for (const auto& [p, w] : prof.beta_witnesses) {
        (void)w;
        beta_exponents[p] = 1;
    }
    row.b_factored = format_factored(prof.b, beta_exponents);
    row.m_over_k = prof.m_over_k;
    row.m = prof.m;
    row.corrected = variant == FormulaVariant::corrected
                        ? prof.m != profile(k, FormulaVariant::legacy1976).m
                        : prof.m != profile(k, FormulaVariant::corrected).m;
    return row;
}

// Rows are independent pure computations; large ranges are filled in parallel
// with deterministic placement by index.
inline std::vector<TableRow> build_rows(long k_from, long k_to,
                                        FormulaVariant variant = FormulaVariant::corrected) {
    if (k_from < 1 || k_from > k_to)
        throw std::invalid_argument("build_rows requires 1 <= k_from <= k_to");
    const std::size_t count = static_cast<std::size_t>(k_to - k_from + 1);
    std::vector<TableRow> rows(count);
    unsigned workers = std::min<unsigned>(std::thread::hardware_concurrency(), 8);
    if (workers < 2 || count < 64) {
        for (long k = k_from; k <= k_to; ++k)
            rows[static_cast<std::size_t>(k - k_from)] = build_row(k, variant);
        return rows;
    }
    std::vector<std::future<void>> parts;
    for (unsigned w = 0; w < workers; ++w)
        parts.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < count; i += workers)
                rows[i] = build_row(k_from + static_cast<long>(i), variant);
        }));
    for (auto& part : parts) part.get();
    return rows;
}

enum class TableFormat { csv, json, markdown };

inline TableFormat parse_table_format(const std::string& s) {
    if (s == "csv") return TableFormat::csv;
    if (s == "json") return TableFormat::json;
    if (s == "markdown") return TableFormat::markdown;
    throw std::invalid_argument("unknown table format \"" + s + "\" (csv, json, markdown)");
}

inline std::string render(const std::vector<TableRow>& rows, TableFormat format) {
    std::ostringstream os;
    switch (format) {
        case TableFormat::csv: {
            os << "k,a,b,m_over_k,m,corrected\n";
            for (const auto& r : rows)
                os << r.k << ',' << r.a << ',' << r.b << ',' << r.m_over_k << ',' << r.m << ','
                   << (r.corrected ? 1 : 0) << '\n';
            break;
        }
        case TableFormat::json: {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& r : rows)
                arr.push_back(nlohmann::json{{"k", r.k},
                                             {"a", r.a.get_str()},
                                             {"a_factored", r.a_factored},
                                             {"b", r.b.get_str()},
                                             {"b_factored", r.b_factored},
                                             {"m_over_k", r.m_over_k.get_str()},
                                             {"m", r.m.get_str()},
                                             {"corrected", r.corrected}});
            os << arr.dump(2) << '\n';
            break;
        }
        case TableFormat::markdown: {
            os << "| k | a(k) | b(k) | m(k)/k | m(k) |\n";
            os << "|---|------|------|--------|------|\n";
            for (const auto& r : rows) {
                auto cell = [&](const std::string& s) {
                    return r.corrected ? "**" + s + "**" : s;
                };
                os << "| " << cell(std::to_string(r.k)) << " | " << cell(r.a_factored) << " | "
                   << cell(r.b_factored) << " | " << cell(r.m_over_k.get_str()) << " | "
                   << cell(r.m.get_str()) << " |\n";
            }
            break;
        }
    }
    return os.str();
}

// Minimal parser for the csv produced by render(); used by the round-trip test.
inline std::vector<TableRow> parse_csv(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line != "k,a,b,m_over_k,m,corrected")
        throw std::invalid_argument("csv header mismatch");
    std::vector<TableRow> rows;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (fields.size() != 6) throw std::invalid_argument("csv row with wrong field count: " + line);
        TableRow r;
        r.k = std::stol(fields[0]);
        r.a = Integer(fields[1]);
        r.b = Integer(fields[2]);
        r.m_over_k = Integer(fields[3]);
        r.m = Integer(fields[4]);
        r.corrected = fields[5] == "1";
        rows.push_back(std::move(r));
    }
    return rows;
}

// Re-parse a factored string ("4·3=12", "13", "1") to its integer value,
// verifying internal consistency.
inline Integer parse_factored(const std::string& text) {
    std::size_t eq = text.find('=');
    std::string product_part = eq == std::string::npos ? text : text.substr(0, eq);
    Integer product = 1;
    std::string token;
    std::size_t i = 0;
    auto flush = [&]() {
        if (token.empty()) throw std::invalid_argument("empty factor in \"" + text + "\"");
        product *= Integer(token);
        token.clear();
    };
    while (i < product_part.size()) {
        unsigned char ch = static_cast<unsigned char>(product_part[i]);
        if (std::isdigit(ch)) {
            token.push_back(product_part[i]);
            ++i;
        } else if (ch == 0xc2 && i + 1 < product_part.size() &&
                   static_cast<unsigned char>(product_part[i + 1]) == 0xb7) {
            flush();
            i += 2;  // UTF-8 middle dot
        } else {
            throw std::invalid_argument("unexpected character in factored string \"" + text + "\"");
        }
    }
    flush();
    if (eq != std::string::npos && product != Integer(text.substr(eq + 1)))
        throw std::invalid_argument("factored string does not multiply out: \"" + text + "\"");
    return product;
}

struct FixtureReport {
    std::vector<std::string> mismatches;
    std::vector<long> missing_rows;
    bool ok() const { return mismatches.empty() && missing_rows.empty(); }
};

// Cell-by-cell comparison against the embedded 150-row reference table.
inline FixtureReport compare_fixture(const std::vector<TableRow>& rows) {
    FixtureReport report;
    for (const ReferenceRow& ref : kReferenceTable) {
        const TableRow* found = nullptr;
        for (const auto& r : rows)
            if (r.k == ref.k) {
                found = &r;
                break;
            }
        if (!found) {
            report.missing_rows.push_back(ref.k);
            continue;
        }
        auto check = [&](const char* name, const Integer& got, const char* want) {
            if (got != Integer(want))
                report.mismatches.push_back("k=" + std::to_string(ref.k) + " " + name + ": got " +
                                            got.get_str() + ", reference " + want);
        };
        check("a", found->a, ref.a);
        check("b", found->b, ref.b);
        check("m_over_k", found->m_over_k, ref.m_over_k);
        check("m", found->m, ref.m);
    }
    return report;
}

// ---------------------------------------------------------------------------
// OEIS b-files.
// ---------------------------------------------------------------------------

struct BFile {
    std::string id;  // e.g. "A370252"
    std::vector<std::pair<long, Integer>> entries;  // (index, value), contiguous
};

inline BFile parse_bfile(const std::string& id, std::istream& in) {
    BFile out;
    out.id = id;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        std::istringstream ls(line);
        long index;
        std::string value;
        if (!(ls >> index >> value))
            throw std::invalid_argument(id + ": malformed b-file line " + std::to_string(lineno) +
                                        ": \"" + line + "\"");
        Integer v;
        try {
            v = Integer(value);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument(id + ": malformed value on b-file line " +
                                        std::to_string(lineno) + ": \"" + line + "\"");
        }
        if (!out.entries.empty() && index != out.entries.back().first + 1)
            throw std::invalid_argument(id + ": non-contiguous index on b-file line " +
                                        std::to_string(lineno));
        out.entries.emplace_back(index, v);
    }
    return out;
}

inline BFile load_bfile(const std::string& id, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open b-file: " + path);
    return parse_bfile(id, in);
}

// Derives the sequence id from the conventional file name bNNNNNN.txt.
inline BFile load_bfile(const std::string& path) {
    std::string stem = path;
    if (auto slash = stem.find_last_of("/\\"); slash != std::string::npos)
        stem = stem.substr(slash + 1);
    if (auto dot = stem.find('.'); dot != std::string::npos) stem = stem.substr(0, dot);
    std::string id = stem;
    if (!stem.empty() && (stem.front() == 'b' || stem.front() == 'B'))
        id = "A" + stem.substr(1);
    return load_bfile(id, path);
}

enum class TableColumn { a, b, m_over_k, m };

// Published sequence mapping: a -> A005730, b -> A005731, m/k -> A005729, m -> A370252.
inline TableColumn sequence_column(const std::string& id) {
    if (id == "A005730") return TableColumn::a;
    if (id == "A005731") return TableColumn::b;
    if (id == "A005729") return TableColumn::m_over_k;
    if (id == "A370252") return TableColumn::m;
    throw std::invalid_argument("no column mapping for sequence \"" + id + "\"");
}

inline TableColumn parse_table_column(const std::string& s) {
    if (s == "a") return TableColumn::a;
    if (s == "b") return TableColumn::b;
    if (s == "m_over_k") return TableColumn::m_over_k;
    if (s == "m") return TableColumn::m;
    throw std::invalid_argument("unknown column \"" + s + "\" (a, b, m_over_k, m)");
}

struct OeisReport {
    std::string sequence;
    long compared = 0;
    std::vector<std::string> mismatches;
    bool ok() const { return compared > 0 && mismatches.empty(); }
};

inline OeisReport compare_oeis(const std::vector<TableRow>& rows, const BFile& bfile,
                               TableColumn column) {
    OeisReport report;
    report.sequence = bfile.id;
    for (const auto& [index, value] : bfile.entries) {
        const TableRow* found = nullptr;
        for (const auto& r : rows)
            if (r.k == index) {
                found = &r;
                break;
            }
        if (!found) continue;
        const Integer& ours = column == TableColumn::a          ? found->a
                              : column == TableColumn::b        ? found->b
                              : column == TableColumn::m_over_k ? found->m_over_k
                                                                : found->m;
        ++report.compared;
        if (ours != value)
            report.mismatches.push_back("k=" + std::to_string(index) + ": computed " +
                                        ours.get_str() + ", " + bfile.id + " has " +
                                        value.get_str());
    }
    if (report.compared == 0)
        throw std::invalid_argument("no overlap between rows and " + bfile.id);
    return report;
}

}  // namespace mkpow
