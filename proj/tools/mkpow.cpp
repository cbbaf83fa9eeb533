#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mkpow/certify.hpp"
#include "mkpow/fetch.hpp"
#include "mkpow/ring_parse.hpp"
#include "mkpow/selftest.hpp"
#include "mkpow/subgroup.hpp"
#include "mkpow/tables.hpp"

namespace {

// Stable exit codes, documented in the README and asserted by the test suite.
constexpr int kExitOk = 0;        // success / all checks passed
constexpr int kExitMismatch = 1;  // a verification check found a mismatch
constexpr int kExitUsage = 2;     // bad flags, ranges, or ring specs
constexpr int kExitPartial = 3;   // certification completed but not FULL
constexpr int kExitIo = 4;        // file, cap, or network trouble

void legacy_banner() {
    std::cerr << "WARNING: --legacy-1976 reproduces the superseded 1976 rule for the prime 2.\n"
                 "         Nine values of m(k) for k <= 150 come out wrong, the first being\n"
                 "         m(14) = 5096 instead of the correct 2548.\n";
}

std::string human_row(const mkpow::TableRow& r) {
    std::ostringstream os;
    os << "k=" << r.k << "  a(k)=" << r.a_factored << "  b(k)=" << r.b_factored
       << "  m(k)/k=" << r.m_over_k << "  m(k)=" << r.m;
    if (r.corrected) os << "  [corrected]";
    return os.str();
}

int cmd_compute(long k_from, long k_to, bool legacy, bool json) {
    if (legacy) legacy_banner();
    auto variant = legacy ? mkpow::FormulaVariant::legacy1976 : mkpow::FormulaVariant::corrected;
    auto rows = mkpow::build_rows(k_from, k_to == 0 ? k_from : k_to, variant);
    if (json)
        std::cout << mkpow::render(rows, mkpow::TableFormat::json);
    else
        for (const auto& r : rows) std::cout << human_row(r) << '\n';
    return kExitOk;
}

struct TableArgs {
    long from = 1;
    long to = 150;
    std::string format = "csv";
    std::string out;
    bool check_fixture = false;
    std::vector<std::string> oeis;
    bool fetch = false;
    std::string data_dir = "data";
    std::string cache_dir = ".oeis-cache";
    bool legacy = false;
};

int cmd_table(const TableArgs& args) {
    if (args.legacy) legacy_banner();
    auto variant =
        args.legacy ? mkpow::FormulaVariant::legacy1976 : mkpow::FormulaVariant::corrected;
    auto rows = mkpow::build_rows(args.from, args.to, variant);

    bool checking = args.check_fixture || !args.oeis.empty();
    if (!checking) {
        std::string text = mkpow::render(rows, mkpow::parse_table_format(args.format));
        if (args.out.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(args.out);
            if (!out || !(out << text)) {
                std::cerr << "error: cannot write " << args.out << '\n';
                return kExitIo;
            }
        }
        return kExitOk;
    }

    int mismatches = 0;
    if (args.check_fixture) {
        auto report = mkpow::compare_fixture(rows);
        for (const auto& line : report.mismatches) std::cout << "fixture mismatch: " << line << '\n';
        for (long k : report.missing_rows) std::cout << "fixture missing row: k=" << k << '\n';
        mismatches += static_cast<int>(report.mismatches.size() + report.missing_rows.size());
        std::cout << "fixture check: "
                  << (report.ok() ? "all 150 rows match" : "MISMATCH (see above)") << '\n';
    }
    for (const auto& id : args.oeis) {
        mkpow::TableColumn column = mkpow::sequence_column(id);
        mkpow::BFile bfile;
        if (args.fetch) {
            bfile = mkpow::fetch_bfile(id, args.cache_dir);
        } else {
            auto path = std::filesystem::path(args.data_dir) / ("b" + id.substr(1) + ".txt");
            bfile = mkpow::load_bfile(id, path.string());
        }
        auto report = mkpow::compare_oeis(rows, bfile, column);
        for (const auto& line : report.mismatches) std::cout << id << " mismatch: " << line << '\n';
        mismatches += static_cast<int>(report.mismatches.size());
        std::cout << id << " check: " << report.compared << " entries compared, "
                  << (report.ok() ? "all match" : "MISMATCH (see above)") << '\n';
    }
    return mismatches == 0 ? kExitOk : kExitMismatch;
}

struct CertifyArgs {
    long k = 1;
    std::string json_out;
    unsigned long max_ring_size = mkpow::kDefaultElementCap;
    long gen_a = 2;
    long gen_b = -1;
    int max_degree = 3;
};

int cmd_certify(const CertifyArgs& args) {
    mkpow::CertifyOptions options;
    options.element_cap = args.max_ring_size;
    options.lattice.max_leading = args.gen_a;
    options.lattice.max_shift = args.gen_b;
    options.max_escalation_degree = args.max_degree;
    mkpow::CertificateBundle bundle = mkpow::certify(args.k, options);

    if (args.json_out == "-") {
        std::cout << bundle.to_json().dump(2) << '\n';
    } else {
        if (!args.json_out.empty()) {
            std::ofstream out(args.json_out);
            if (!out || !(out << bundle.to_json().dump(2) << '\n')) {
                std::cerr << "error: cannot write " << args.json_out << '\n';
                return kExitIo;
            }
        }
        std::cout << "k = " << bundle.k << '\n';
        std::cout << "m(k) by formula = " << bundle.m_formula << '\n';
        std::cout << "upper bound     = " << bundle.upper.m << " via " << bundle.upper.terms.size()
                  << " terms" << (bundle.upper_exact ? " (exact)" : " (proper multiple)") << '\n';
        std::cout << "x-coefficient fact: k | m(k) certified on a " << bundle.x_fact.samples
                  << "-point grid\n";
        for (const auto& w : bundle.witnesses) {
            std::cout << "witness p=" << w.p << ": ";
            if (w.ring_spec.empty())
                std::cout << "no ring found";
            else
                std::cout << w.ring_spec << ", achieved v=" << w.achieved_valuation << " of target "
                          << w.target_valuation;
            std::cout << (w.success() ? "  [ok]" : "  [FAILED]");
            if (!w.note.empty()) std::cout << "  (" << w.note << ')';
            std::cout << '\n';
        }
        if (bundle.status == mkpow::CertifyStatus::FULL) {
            std::cout << "status: FULL\n";
        } else {
            std::cout << "status: PARTIAL (uncertified primes:";
            for (long p : bundle.uncertified_primes) std::cout << ' ' << p;
            std::cout << ")\n";
        }
    }
    return bundle.status == mkpow::CertifyStatus::FULL ? kExitOk : kExitPartial;
}

int cmd_oracle(const std::string& ring_spec, long k, const std::string& kind, unsigned long cap,
               bool cap_given) {
    mkpow::QuotientRing ring = mkpow::parse_ring(ring_spec);
    // For K the enumeration unit is (g, h) pairs, so an explicit --cap bounds pairs.
    mkpow::SubgroupReport report =
        kind == "K" ? mkpow::span_K(ring, k, cap_given ? cap : mkpow::kDefaultPairCap)
                    : mkpow::span_J(ring, k, cap);
    std::cout << report.to_json().dump(2) << '\n';
    return kExitOk;
}

int cmd_selftest(unsigned long cap, bool legacy) {
    if (legacy) legacy_banner();
    mkpow::SelftestOptions options;
    options.element_cap = cap;
    if (legacy) options.variant = mkpow::FormulaVariant::legacy1976;
    bool all_passed = true;
    for (const auto& check : mkpow::run_selftest(options)) {
        std::cout << (check.passed ? "pass" : "FAIL") << "  " << check.name << ": " << check.detail
                  << '\n';
        all_passed = all_passed && check.passed;
    }
    std::cout << "master invariant: " << mkpow::master_invariant_checks()
              << " (ring, k) divisibility checks, 0 violations\n";
    return all_passed ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"m(k): least m > 0 such that m*x is an integer linear combination of k-th powers "
                 "of integer polynomials"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read options from an INI/TOML file (flags win)");

    std::function<int()> run;
    // Let app-level flags like --config be given after the subcommand too.
    app.fallthrough();

    // compute
    long c_from = 1, c_to = 0;
    bool c_legacy = false, c_json = false;
    auto* compute = app.add_subcommand("compute", "Evaluate the closed-form m(k) for k or a range");
    compute->add_option("k", c_from, "Exponent k (or start of range)")->required();
    compute->add_option("k_to", c_to, "End of range (inclusive)");
    compute->add_flag("--legacy-1976", c_legacy, "Use the superseded 1976 rule (demonstration)");
    compute->add_flag("--json", c_json, "Emit rows as JSON");
    compute->callback([&] { run = [&] { return cmd_compute(c_from, c_to, c_legacy, c_json); }; });

    // table
    TableArgs t;
    auto* table = app.add_subcommand("table", "Generate, render, and cross-check the m(k) table");
    table->add_option("--from", t.from, "First k (default 1)");
    table->add_option("--to", t.to, "Last k (default 150)");
    table->add_option("--format", t.format, "Output format: csv, json, markdown")
        ->check(CLI::IsMember({"csv", "json", "markdown"}));
    table->add_option("--out", t.out, "Write rendered table to this file");
    table->add_flag("--check-fixture", t.check_fixture,
                    "Compare against the embedded 150-row reference table");
    table->add_option("--oeis", t.oeis,
                      "Cross-check a column against a sequence b-file "
                      "(A370252, A005729, A005730, A005731); repeatable");
    table->add_flag("--fetch", t.fetch, "Download the b-file (cached) instead of using data-dir");
    table->add_option("--data-dir", t.data_dir, "Directory with bundled b-files (default data)");
    table->add_option("--cache-dir", t.cache_dir, "Cache directory for fetched b-files");
    table->add_flag("--legacy-1976", t.legacy, "Use the superseded 1976 rule (demonstration)");
    table->callback([&] { run = [&] { return cmd_table(t); }; });

    // certify
    CertifyArgs ce;
    auto* certify = app.add_subcommand(
        "certify", "Certify m(k): lattice upper bound plus per-prime ring witnesses");
    certify->add_option("k", ce.k, "Exponent k")->required()->check(CLI::PositiveNumber);
    certify->add_option("--json", ce.json_out, "Write the certificate bundle as JSON ('-' = stdout)");
    certify->add_option("--max-ring-size", ce.max_ring_size,
                        "Witness ring enumeration cap (elements)");
    certify->add_option("--gen-a", ce.gen_a, "Max leading coefficient of degree-1 generators");
    certify->add_option("--gen-b", ce.gen_b, "Max |shift| of degree-1 generators (-1 = k)");
    certify->add_option("--max-degree", ce.max_degree,
                        "Highest generator degree the upper bound may escalate to");
    certify->callback([&] { run = [&] { return cmd_certify(ce); }; });

    // oracle
    std::string o_ring, o_kind = "J";
    long o_k = 1;
    unsigned long o_cap = mkpow::kDefaultElementCap;
    auto* oracle = app.add_subcommand(
        "oracle", "Enumerate a finite quotient ring and report the subgroup of k-th powers");
    oracle->add_option("--ring", o_ring, "Ring spec, e.g. \"Z/8[x]/(x^2+x+1)\" or \"GF(2^4)\"")
        ->required();
    oracle->add_option("--k", o_k, "Exponent k")->required()->check(CLI::PositiveNumber);
    oracle->add_option("--kind", o_kind, "Subgroup kind: J (k-th powers) or K (char-2 refinement)")
        ->check(CLI::IsMember({"J", "K"}));
    auto* o_cap_opt = oracle->add_option("--cap", o_cap, "Enumeration cap (elements for J, pairs for K)");
    oracle->callback([&, o_cap_opt] {
        run = [&, o_cap_opt] { return cmd_oracle(o_ring, o_k, o_kind, o_cap, o_cap_opt->count() > 0); };
    });

    // selftest
    unsigned long s_cap = mkpow::kDefaultElementCap;
    bool s_legacy = false;
    auto* selftest =
        app.add_subcommand("selftest", "Run the embedded invariant suites; exit 0 iff all pass");
    selftest->add_option("--cap", s_cap, "Enumeration cap (elements)");
    selftest->add_flag("--legacy-1976", s_legacy, "Force the superseded 1976 rule (must fail)");
    selftest->callback([&] { run = [&] { return cmd_selftest(s_cap, s_legacy); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        return run();
    } catch (const mkpow::formula_falsification_error& e) {
        std::cerr << "FORMULA FALSIFICATION: " << e.what() << '\n'
                  << "A finite-ring computation contradicts the closed form; this should be "
                     "impossible.\n";
        return kExitMismatch;
    } catch (const mkpow::enumeration_cap_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const mkpow::fetch_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
}
