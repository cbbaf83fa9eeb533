#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "mkpow/finite_field.hpp"
#include "mkpow/subgroup.hpp"
#include "mkpow/tables.hpp"

namespace mkpow {

struct SelftestCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SelftestOptions {
    unsigned long element_cap = kDefaultElementCap;
    FormulaVariant variant = FormulaVariant::corrected;
};

// Sweep of the 2-adic binomial bound: for even k <= 200 and 1 <= j <= k,
// v2(C(k,j)) >= v2(k) - (j - 1), with equality exactly at j = 1 and j = 2.
inline SelftestCheck check_binomial_2adic_sweep() {
    SelftestCheck check{"binomial-2adic-sweep"};
    long cases = 0;
    for (long k = 2; k <= 200; k += 2) {
        long n = vp(Integer(k), 2);
        for (long j = 1; j <= k; ++j, ++cases) {
            long v = vp(binomial(Integer(k), static_cast<unsigned long>(j)), 2);
            long bound = n - (j - 1);
            if (v < bound) {
                check.detail = "bound violated at k=" + std::to_string(k) +
                               ", j=" + std::to_string(j);
                return check;
            }
            if ((v == bound) != (j == 1 || j == 2)) {
                check.detail = "equality pattern violated at k=" + std::to_string(k) +
                               ", j=" + std::to_string(j);
                return check;
            }
        }
    }
    check.passed = true;
    check.detail = std::to_string(cases) + " (k, j) pairs verified";
    return check;
}

// K(k, F_{2^j}) is the whole field for j <= 6 whenever 3 does not divide k,
// and h + h^2 = c is solvable in F_{2^j} exactly when c has trace 0 (j <= 8).
inline SelftestCheck check_finite_field_span() {
    SelftestCheck check{"finite-field-span"};
    for (int j = 1; j <= 6; ++j) {
        FiniteField field = FiniteField::make(2, j);
        for (long k = 1; k <= 24; ++k) {
            if (k % 3 == 0) continue;
            SubgroupReport report = span_K(field, k);
            if (!report.is_full) {
                check.detail = "K(" + std::to_string(k) + ", " + field.spec_string() +
                               ") is a proper subgroup";
                return check;
            }
        }
    }
    for (int j = 1; j <= 8; ++j) {
        FiniteField field = FiniteField::make(2, j);
        bool ok = true;
        field.for_each_element([&](const RingElement& c) {
            auto h = field.artin_schreier_solve(c);
            bool solvable = h.has_value();
            if (solvable != (field.trace_value(c) == 0)) ok = false;
            if (solvable && !(field.add(*h, field.mul(*h, *h)) == c)) ok = false;
        });
        if (!ok) {
            check.detail = "trace criterion failed in " + field.spec_string();
            return check;
        }
    }
    check.passed = true;
    check.detail = "K spans for j <= 6, 3 not dividing k <= 24; trace criterion holds for j <= 8";
    return check;
}

// Tower of rings (Z/2^{s+3})[x]/(x^2+x+1), s in {0, 1, 2}: every (6*2^s)-th
// power has x-coefficient 0, and m(6*2^s, R) has 2-adic valuation exactly s+3.
// An enumeration cap too small to run this check is a fatal failure, not a skip.
inline SelftestCheck check_tower_valuation(unsigned long element_cap = kDefaultElementCap) {
    SelftestCheck check{"tower-valuation"};
    for (long s = 0; s <= 2; ++s) {
        long k = 6 << s;
        Integer q = pow_ui(Integer(2), static_cast<unsigned long>(s + 3));
        QuotientRing ring(q, parse_polynomial("x^2+x+1"));
        try {
            bool coeff_ok = true;
            ring.for_each_element(
                [&](const RingElement& g) {
                    if (ring.pow(g, Integer(k)).coeff(1) != 0) coeff_ok = false;
                },
                element_cap);
            if (!coeff_ok) {
                check.detail = "a " + std::to_string(k) + "-th power in " + ring.spec_string() +
                               " has nonzero x-coefficient";
                return check;
            }
            Integer mkr = m_k_R(ring, k, element_cap);
            if (vp(mkr, 2) != s + 3 || mkr != q) {
                check.detail = "m(" + std::to_string(k) + ", " + ring.spec_string() + ") = " +
                               mkr.get_str() + ", expected " + q.get_str();
                return check;
            }
        } catch (const enumeration_cap_error& e) {
            check.detail = std::string("skipped-fatal: ") + e.what();
            return check;
        }
    }
    check.passed = true;
    check.detail = "valuations s+3 confirmed for s in {0, 1, 2}";
    return check;
}

// The generated 150-row table must match the embedded reference fixture
// cell by cell.
inline SelftestCheck check_table_fixture(FormulaVariant variant = FormulaVariant::corrected) {
    SelftestCheck check{"table-fixture"};
    FixtureReport report = compare_fixture(build_rows(1, 150, variant));
    if (report.ok()) {
        check.passed = true;
        check.detail = "all 150 rows match the reference fixture";
        return check;
    }
    std::ostringstream detail;
    detail << report.mismatches.size() << " mismatches, " << report.missing_rows.size()
           << " missing rows";
    if (!report.mismatches.empty()) detail << "; first: " << report.mismatches.front();
    check.detail = detail.str();
    return check;
}

inline std::vector<SelftestCheck> run_selftest(const SelftestOptions& options = {}) {
    return {
        check_binomial_2adic_sweep(),
        check_finite_field_span(),
        check_tower_valuation(options.element_cap),
        check_table_fixture(options.variant),
    };
}

}  // namespace mkpow
