#pragma once

#include <algorithm>
#include <atomic>
#include <string>
#include <vector>

#include <json.hpp>

#include "mkpow/formula.hpp"
#include "mkpow/hnf.hpp"
#include "mkpow/quotient_ring.hpp"

namespace mkpow {

inline constexpr unsigned long kDefaultPairCap = 1UL << 24;

// Raised when a computation contradicts the closed-form factorization of m(k)
// (e.g. a finite ring whose m(k, R) fails to divide the predicted m(k)).
// This is the deepest self-check in the artifact: it can only fire on a bug.
struct formula_falsification_error : std::logic_error {
    using std::logic_error::logic_error;
};

// (Z/q)^d for q >= 2, or Z^d when q = 0.
struct AmbientGroup {
    std::size_t d = 0;
    Integer q;
};

struct HnfBasis {
    AmbientGroup ambient;
    std::vector<std::vector<Integer>> rows;
    std::vector<std::size_t> pivot_cols;
};

namespace detail {

inline void add_relation_rows(HnfBuilder& builder, const AmbientGroup& ambient) {
    if (ambient.q == 0) return;
    for (std::size_t i = 0; i < ambient.d; ++i) {
        std::vector<Integer> rel(ambient.d, Integer(0));
        rel[i] = ambient.q;
        builder.add(std::move(rel));
    }
}

inline HnfBasis basis_from_builder(const AmbientGroup& ambient, const HnfBuilder& builder) {
    return HnfBasis{ambient, builder.basis(), builder.pivot_columns()};
}

// Full ambient group reached: rank d with all pivots 1.
inline bool spans_everything(const HnfBuilder& builder) {
    if (builder.rank() != builder.dimension()) return false;
    for (std::size_t r = 0; r < builder.rank(); ++r)
        if (builder.basis()[r][builder.pivot_columns()[r]] != 1) return false;
    return true;
}

}  // namespace detail

// Canonical HNF basis of the subgroup generated by `generators`
// (plus the relation vectors q*e_i when the ambient group is (Z/q)^d).
inline HnfBasis hnf(const AmbientGroup& ambient,
                    const std::vector<std::vector<Integer>>& generators) {
    HnfBuilder builder(ambient.d);
    detail::add_relation_rows(builder, ambient);
    for (const auto& g : generators) builder.add(g);
    return detail::basis_from_builder(ambient, builder);
}

// Exact membership of v in the span described by the basis.
inline bool contains(const HnfBasis& basis, const std::vector<Integer>& v) {
    if (v.size() != basis.ambient.d)
        throw std::invalid_argument("contains: vector has wrong dimension");
    std::vector<Integer> w = v;
    for (std::size_t r = 0; r < basis.rows.size(); ++r) {
        std::size_t col = basis.pivot_cols[r];
        if (w[col] == 0) continue;
        if (!divides(basis.rows[r][col], w[col])) return false;
        Integer c = w[col] / basis.rows[r][col];
        for (std::size_t j = col; j < basis.ambient.d; ++j) w[j] -= c * basis.rows[r][j];
    }
    for (const auto& x : w)
        if (x != 0) return false;
    return true;
}

// Least t >= 1 with t*v in the span; always a divisor of q.
inline Integer element_order_mod(const HnfBasis& basis, const std::vector<Integer>& v) {
    if (basis.ambient.q == 0)
        throw std::invalid_argument("element_order_mod requires a (Z/q)^d ambient group");
    for (const Integer& t : divisors(basis.ambient.q)) {
        std::vector<Integer> w(v.size());
        for (std::size_t j = 0; j < v.size(); ++j) w[j] = t * v[j];
        if (contains(basis, w)) return t;
    }
    throw std::logic_error("element_order_mod: q*v escaped the span (relations missing?)");
}

enum class SubgroupKind { J, K };

inline const char* to_string(SubgroupKind kind) { return kind == SubgroupKind::J ? "J" : "K"; }

struct SubgroupReport {
    std::string ring_spec;
    long k = 0;
    SubgroupKind kind = SubgroupKind::J;
    HnfBasis basis;
    Integer m_k_R;
    bool is_full = false;

    nlohmann::json to_json() const {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : basis.rows) {
            nlohmann::json r = nlohmann::json::array();
            for (const auto& x : row) r.push_back(x.get_str());
            rows.push_back(std::move(r));
        }
        return nlohmann::json{{"ring", ring_spec}, {"k", k},      {"kind", to_string(kind)},
                              {"rows", rows},      {"m_k_R", m_k_R.get_str()},
                              {"is_full", is_full}};
    }
};

// Running count of (ring, k) pairs that have passed the master divisibility
// self-check m(k, R) | m(k) in this process; a violation throws instead.
inline std::atomic<long>& master_invariant_checks() {
    static std::atomic<long> count{0};
    return count;
}

namespace detail {

inline SubgroupReport finish_report(const QuotientRing& ring, long k, SubgroupKind kind,
                                    const HnfBuilder& builder) {
    AmbientGroup ambient{static_cast<std::size_t>(ring.degree()), ring.modulus()};
    SubgroupReport report;
    report.ring_spec = ring.spec_string();
    report.k = k;
    report.kind = kind;
    report.basis = basis_from_builder(ambient, builder);
    report.m_k_R = 1;
    for (std::size_t i = 0; i < ambient.d; ++i) {
        std::vector<Integer> ei(ambient.d, Integer(0));
        ei[i] = 1;
        report.m_k_R = lcm(report.m_k_R, element_order_mod(report.basis, ei));
    }
    report.is_full = report.m_k_R == 1;
    // Master self-check: m(k, R) divides m(k) for every ring R.
    Integer predicted = profile(k).m;
    if (!divides(report.m_k_R, predicted))
        throw formula_falsification_error(
            "m(k, R) = " + report.m_k_R.get_str() + " does not divide m(" + std::to_string(k) +
            ") = " + predicted.get_str() + " for R = " + report.ring_spec);
    ++master_invariant_checks();
    return report;
}

}  // namespace detail

// J(k, R): additive subgroup generated by all k-th powers.
inline SubgroupReport span_J(const QuotientRing& ring, long k,
                             unsigned long element_cap = kDefaultElementCap) {
    if (k < 1) throw std::invalid_argument("span_J requires k >= 1");
    ring.check_enumerable(element_cap);
    HnfBuilder builder(static_cast<std::size_t>(ring.degree()));
    AmbientGroup ambient{static_cast<std::size_t>(ring.degree()), ring.modulus()};
    detail::add_relation_rows(builder, ambient);
    ring.for_each_element([&](const RingElement& g) {
        if (detail::spans_everything(builder)) return;
        builder.add(ring.pow(g, Integer(k)).coeffs());
    }, element_cap);
    return detail::finish_report(ring, k, SubgroupKind::J, builder);
}

// K(k, R) for F_2-algebras: generated by g^k and g^k*(h + h^2).
inline SubgroupReport span_K(const QuotientRing& ring, long k,
                             unsigned long pair_cap = kDefaultPairCap) {
    if (k < 1) throw std::invalid_argument("span_K requires k >= 1");
    if (ring.modulus() != 2)
        throw std::invalid_argument("span_K is defined over rings of modulus 2");
    Integer pairs = ring.cardinality() * ring.cardinality();
    if (pairs > pair_cap)
        throw enumeration_cap_error("span_K generator pairs (" + pairs.get_str() +
                                    ") exceed the cap " + std::to_string(pair_cap));
    std::vector<RingElement> powers;   // g^k for all g, deduplicated
    std::vector<RingElement> ah_image; // h + h^2 for all h, deduplicated
    ring.for_each_element([&](const RingElement& g) {
        RingElement gk = ring.pow(g, Integer(k));
        if (std::find(powers.begin(), powers.end(), gk) == powers.end())
            powers.push_back(gk);
        RingElement hh = ring.add(g, ring.mul(g, g));
        if (std::find(ah_image.begin(), ah_image.end(), hh) == ah_image.end())
            ah_image.push_back(hh);
    });
    HnfBuilder builder(static_cast<std::size_t>(ring.degree()));
    AmbientGroup ambient{static_cast<std::size_t>(ring.degree()), ring.modulus()};
    detail::add_relation_rows(builder, ambient);
    for (const RingElement& gk : powers) {
        if (detail::spans_everything(builder)) break;
        builder.add(gk.coeffs());
        for (const RingElement& hh : ah_image) {
            if (detail::spans_everything(builder)) break;
            builder.add(ring.mul(gk, hh).coeffs());
        }
    }
    return detail::finish_report(ring, k, SubgroupKind::K, builder);
}

// The headline quantity: exponent of R / J(k, R).
inline Integer m_k_R(const QuotientRing& ring, long k,
                     unsigned long element_cap = kDefaultElementCap) {
    return span_J(ring, k, element_cap).m_k_R;
}

}  // namespace mkpow
