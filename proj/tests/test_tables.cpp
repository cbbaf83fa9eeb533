#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mkpow/fetch.hpp"
#include "mkpow/selftest.hpp"
#include "mkpow/tables.hpp"

using namespace mkpow;
using Catch::Matchers::ContainsSubstring;

namespace {
const std::vector<long> kBoldRows = {14, 28, 56, 62, 70, 98, 112, 124, 140};

std::string data_path(const std::string& name) {
    return std::string(MKPOW_DATA_DIR) + "/" + name;
}
}  // namespace

TEST_CASE("representative table rows") {
    TableRow r6 = build_row(6);
    CHECK(r6.a == 12);
    CHECK(r6.a_factored == "4·3=12");
    CHECK(r6.b == 5);
    CHECK(r6.b_factored == "5");
    CHECK(r6.m_over_k == 60);
    CHECK(r6.m == 360);
    CHECK_FALSE(r6.corrected);

    TableRow r14 = build_row(14);
    CHECK(r14.a == 14);
    CHECK(r14.a_factored == "2·7=14");
    CHECK(r14.b == 13);
    CHECK(r14.m_over_k == 182);
    CHECK(r14.m == 2548);
    CHECK(r14.corrected);

    TableRow r150 = build_row(150);
    CHECK(r150.m == 272223000);

    TableRow legacy14 = build_row(14, FormulaVariant::legacy1976);
    CHECK(legacy14.a == 28);
    CHECK(legacy14.m == 5096);
    CHECK(legacy14.corrected);  // still flagged: differs from the corrected value
}

TEST_CASE("factored strings multiply out for all 150 rows") {
    auto rows = build_rows(1, 150);
    REQUIRE(rows.size() == 150);
    for (const auto& r : rows) {
        INFO("k = " << r.k);
        CHECK(parse_factored(r.a_factored) == r.a);
        CHECK(parse_factored(r.b_factored) == r.b);
        CHECK(r.m_over_k == r.a * r.b);
        CHECK(r.m == Integer(r.k) * r.a * r.b);
    }
    CHECK(parse_factored("4·3=12") == 12);
    CHECK(parse_factored("13") == 13);
    CHECK(parse_factored("1") == 1);
    CHECK_THROWS_AS(parse_factored("4·3=13"), std::invalid_argument);
    CHECK_THROWS_AS(parse_factored("4··3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_factored("4*3"), std::invalid_argument);
}

TEST_CASE("csv rendering and round-trip") {
    CHECK(render({}, TableFormat::csv) == "k,a,b,m_over_k,m,corrected\n");

    auto one = render(build_rows(1, 1), TableFormat::csv);
    CHECK(one == "k,a,b,m_over_k,m,corrected\n1,1,1,1,1,0\n");

    auto rows = build_rows(1, 150);
    auto parsed = parse_csv(render(rows, TableFormat::csv));
    REQUIRE(parsed.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(parsed[i].k == rows[i].k);
        CHECK(parsed[i].a == rows[i].a);
        CHECK(parsed[i].b == rows[i].b);
        CHECK(parsed[i].m_over_k == rows[i].m_over_k);
        CHECK(parsed[i].m == rows[i].m);
        CHECK(parsed[i].corrected == rows[i].corrected);
    }

    CHECK_THROWS_AS(parse_csv("wrong header\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_csv("k,a,b,m_over_k,m,corrected\n1,2,3\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_table_format("yaml"), std::invalid_argument);
}

TEST_CASE("markdown rendering bolds corrected rows") {
    auto text = render(build_rows(13, 15), TableFormat::markdown);
    CHECK_THAT(text, ContainsSubstring("| k | a(k) | b(k) | m(k)/k | m(k) |"));
    CHECK_THAT(text, ContainsSubstring("| **14** | **2·7=14** | **13** | **182** | **2548** |"));
    CHECK_THAT(text, ContainsSubstring("| 13 | "));
    CHECK_THAT(text, ContainsSubstring("| 15 | "));

    auto json_text = render(build_rows(14, 14), TableFormat::json);
    auto arr = nlohmann::json::parse(json_text);
    REQUIRE(arr.size() == 1);
    CHECK(arr[0]["k"] == 14);
    CHECK(arr[0]["m"] == "2548");
    CHECK(arr[0]["corrected"] == true);
}

TEST_CASE("fixture comparison is clean for the corrected formula") {
    auto report = compare_fixture(build_rows(1, 150));
    CHECK(report.ok());
    CHECK(report.mismatches.empty());
    CHECK(report.missing_rows.empty());
}

TEST_CASE("fixture comparison pinpoints the legacy disagreements") {
    auto report = compare_fixture(build_rows(1, 150, FormulaVariant::legacy1976));
    CHECK_FALSE(report.ok());
    CHECK(report.missing_rows.empty());

    std::set<long> ks;
    for (const auto& line : report.mismatches) {
        REQUIRE(line.rfind("k=", 0) == 0);
        ks.insert(std::stol(line.substr(2)));
    }
    CHECK(std::vector<long>(ks.begin(), ks.end()) == kBoldRows);
    // a, m_over_k and m differ on each such row; b is unaffected.
    CHECK(report.mismatches.size() == 3 * kBoldRows.size());
    CHECK(std::find(report.mismatches.begin(), report.mismatches.end(),
                    "k=14 m: got 5096, reference 2548") != report.mismatches.end());
}

TEST_CASE("fixture comparison reports missing rows") {
    auto report = compare_fixture(build_rows(1, 100));
    CHECK_FALSE(report.ok());
    CHECK(report.mismatches.empty());
    REQUIRE(report.missing_rows.size() == 50);
    CHECK(report.missing_rows.front() == 101);
    CHECK(report.missing_rows.back() == 150);
}

TEST_CASE("legacy-corrected diff matches the highlighted rows") {
    std::vector<long> diff;
    auto corrected = build_rows(1, 150);
    auto legacy = build_rows(1, 150, FormulaVariant::legacy1976);
    for (std::size_t i = 0; i < corrected.size(); ++i) {
        if (corrected[i].m != legacy[i].m) diff.push_back(corrected[i].k);
        CHECK(corrected[i].corrected == (corrected[i].m != legacy[i].m));
    }
    CHECK(diff == kBoldRows);
    for (long k : kBoldRows) {
        INFO("k = " << k);
        // Every corrected row halves the legacy value: the disagreement is
        // exactly one factor of 2 in a(k).
        CHECK(build_row(k, FormulaVariant::legacy1976).m == 2 * build_row(k).m);
    }
}

TEST_CASE("b-file parsing") {
    std::istringstream good("# comment\n1 1\n2 4\n3 30\n");
    BFile bf = parse_bfile("A005729", good);
    CHECK(bf.id == "A005729");
    REQUIRE(bf.entries.size() == 3);
    CHECK(bf.entries[1] == std::pair<long, Integer>(2, Integer(4)));

    std::istringstream malformed("1 1\nabc\n");
    CHECK_THROWS_WITH(parse_bfile("A005729", malformed),
                      ContainsSubstring("malformed b-file line 2"));

    std::istringstream bad_value("1 1\n2 x4\n");
    CHECK_THROWS_WITH(parse_bfile("A005729", bad_value),
                      ContainsSubstring("malformed value on b-file line 2"));

    std::istringstream gap("1 1\n3 30\n");
    CHECK_THROWS_WITH(parse_bfile("A005729", gap),
                      ContainsSubstring("non-contiguous index on b-file line 2"));
}

TEST_CASE("bundled b-files agree with the computed table") {
    auto rows = build_rows(1, 150);
    const std::pair<const char*, TableColumn> files[] = {
        {"b370252.txt", TableColumn::m},
        {"b005729.txt", TableColumn::m_over_k},
        {"b005730.txt", TableColumn::a},
        {"b005731.txt", TableColumn::b},
    };
    for (const auto& [name, column] : files) {
        BFile bf = load_bfile(data_path(name));
        INFO(bf.id);
        CHECK(sequence_column(bf.id) == column);
        auto report = compare_oeis(rows, bf, column);
        CHECK(report.ok());
        CHECK(report.compared > 0);
        CHECK(report.mismatches.empty());
    }

    BFile m_file = load_bfile("A370252", data_path("b370252.txt"));
    auto at = [&](long k) {
        for (const auto& [index, value] : m_file.entries)
            if (index == k) return value;
        FAIL("index " << k << " missing");
        return Integer(0);
    };
    CHECK(at(14) == 2548);
    BFile ratio_file = load_bfile(data_path("b005729.txt"));
    for (const auto& [index, value] : ratio_file.entries)
        if (index == 6) CHECK(value == 60);

    CHECK_THROWS_AS(sequence_column("A000001"), std::invalid_argument);
    CHECK_THROWS_AS(load_bfile("A370252", data_path("missing.txt")), std::runtime_error);
}

TEST_CASE("shifted b-file values all mismatch") {
    BFile bf = load_bfile(data_path("b370252.txt"));
    BFile shifted;
    shifted.id = bf.id;
    for (std::size_t i = 0; i + 1 < bf.entries.size() && i < 20; ++i)
        shifted.entries.emplace_back(bf.entries[i].first, bf.entries[i + 1].second);
    auto rows = build_rows(1, 150);
    auto report = compare_oeis(rows, shifted, TableColumn::m);
    CHECK_FALSE(report.ok());
    CHECK(report.compared == 20);
    // m is strictly monotone nowhere near constant, so every shifted entry differs.
    CHECK(report.mismatches.size() == 20);
}

TEST_CASE("oeis comparison requires overlap") {
    BFile far;
    far.id = "A370252";
    far.entries.emplace_back(1000, Integer(1));
    CHECK_THROWS_AS(compare_oeis(build_rows(1, 150), far, TableColumn::m),
                    std::invalid_argument);
}

TEST_CASE("selftest passes on a fresh tree") {
    auto checks = run_selftest();
    REQUIRE(checks.size() == 4);
    CHECK(checks[0].name == "binomial-2adic-sweep");
    CHECK(checks[1].name == "finite-field-span");
    CHECK(checks[2].name == "tower-valuation");
    CHECK(checks[3].name == "table-fixture");
    for (const auto& c : checks) {
        INFO(c.name << ": " << c.detail);
        CHECK(c.passed);
    }
}

TEST_CASE("selftest flags the legacy formula against the fixture") {
    SelftestOptions options;
    options.variant = FormulaVariant::legacy1976;
    auto checks = run_selftest(options);
    REQUIRE(checks.size() == 4);
    CHECK(checks[0].passed);
    CHECK(checks[1].passed);
    CHECK(checks[2].passed);
    CHECK_FALSE(checks[3].passed);
    CHECK_THAT(checks[3].detail, ContainsSubstring("k=14 a: got 28, reference 14"));
}

TEST_CASE("selftest treats an over-tight cap as a hard failure") {
    SelftestOptions options;
    options.element_cap = 100;
    auto checks = run_selftest(options);
    REQUIRE(checks.size() == 4);
    CHECK_FALSE(checks[2].passed);
    CHECK_THAT(checks[2].detail, ContainsSubstring("skipped-fatal"));
    CHECK_THAT(checks[2].detail, ContainsSubstring("exceeding the enumeration cap 100"));
}

TEST_CASE("b-file fetch helpers") {
    CHECK(detail::bfile_name("A370252") == "b370252.txt");
    CHECK(detail::bfile_name("A005729") == "b005729.txt");
    CHECK_THROWS_AS(detail::bfile_name("370252"), std::invalid_argument);
    CHECK(detail::substitute("https://x/{id}/{bfile}", "{id}", "A370252") ==
          "https://x/A370252/{bfile}");

    // A cache hit must not touch the network: the endpoint below cannot resolve.
    BFile cached = fetch_bfile("A370252", std::string(MKPOW_DATA_DIR),
                               "http://never-contacted.invalid/{id}/{bfile}");
    CHECK(cached.id == "A370252");
    CHECK(cached.entries.size() >= 150);
}
