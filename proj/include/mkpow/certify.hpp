#pragma once

#include <algorithm>
#include <future>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mkpow/finite_field.hpp"
#include "mkpow/formula.hpp"
#include "mkpow/hnf.hpp"
#include "mkpow/poly.hpp"
#include "mkpow/subgroup.hpp"

namespace mkpow {

// ---------------------------------------------------------------------------
// Upper bounds: explicit combinations  sum_i a_i * g_i(x)^k = m*x + c.
// ---------------------------------------------------------------------------

struct UpperCertificate {
    long k = 0;
    std::vector<std::pair<Integer, Polynomial>> terms;  // (a_i, g_i)
    Integer m;
    Integer c;

    nlohmann::json to_json() const {
        nlohmann::json ts = nlohmann::json::array();
        for (const auto& [a, g] : terms) {
            nlohmann::json coeffs = nlohmann::json::array();
            for (const auto& x : g.coeffs()) coeffs.push_back(x.get_str());
            ts.push_back(nlohmann::json::array({a.get_str(), coeffs}));
        }
        return nlohmann::json{
            {"k", k}, {"m", m.get_str()}, {"c", c.get_str()}, {"terms", ts}};
    }
};

// Re-expansion with arithmetic independent of the construction path (naive
// repeated multiplication instead of binary powering), plus the divisibility
// sanity check m(k) | m.
inline bool verify_upper(const UpperCertificate& cert) {
    if (cert.k < 1 || cert.m < 1) return false;
    Polynomial total;
    for (const auto& [a, g] : cert.terms) {
        Polynomial power = Polynomial::constant(1);
        for (long i = 0; i < cert.k; ++i) power = power * g;
        total = total + Polynomial::constant(a) * power;
    }
    Polynomial expected = Polynomial({cert.c, cert.m});
    if (!(total == expected)) return false;
    return divides(profile(cert.k).m, cert.m);
}

// The classical finite-difference identity:
//   sum_{i=0}^{k-1} (-1)^i C(k-1, i) (x - i)^k = k! x + c.
inline UpperCertificate finite_difference_certificate(long k) {
    if (k < 1) throw std::invalid_argument("finite_difference_certificate requires k >= 1");
    UpperCertificate cert;
    cert.k = k;
    cert.m = factorial(static_cast<unsigned long>(k));
    Polynomial total;
    for (long i = 0; i < k; ++i) {
        Integer a = binomial(Integer(k - 1), static_cast<unsigned long>(i));
        if (i % 2 == 1) a = -a;
        Polynomial g({Integer(-i), Integer(1)});
        cert.terms.emplace_back(a, g);
        total = total + Polynomial::constant(a) * expand_power(g, static_cast<unsigned long>(k));
    }
    if (total.degree() > 1 || total.coeff(1) != cert.m)
        throw std::logic_error("finite-difference identity failed to telescope");
    cert.c = total.coeff(0);
    return cert;
}

// Generator family for the coefficient lattice.  The degree-1 core is the
// constant 1, the shifts (x - i) for 0 <= i <= k, and (a*x + b) for
// 1 <= a <= max_leading, |b| <= max_shift.  Degrees 2 and 3 add all monic
// polynomials of that degree with lower coefficients in {-1, 0, 1}.
struct GeneratorConfig {
    long max_leading = 2;
    long max_shift = -1;  // -1 means k
    int max_degree = 1;   // 1, 2 or 3
};

inline std::vector<Polynomial> lattice_generators(long k, const GeneratorConfig& config) {
    long B = config.max_shift < 0 ? k : config.max_shift;
    std::vector<Polynomial> gens;
    gens.push_back(Polynomial::constant(1));
    for (long i = 0; i <= k; ++i) gens.push_back(Polynomial({Integer(-i), Integer(1)}));
    for (long a = 1; a <= config.max_leading; ++a)
        for (long b = -B; b <= B; ++b) gens.push_back(Polynomial({Integer(b), Integer(a)}));
    for (int d = 2; d <= config.max_degree; ++d) {
        // odometer over lower coefficients, c_0 fastest, each in {-1, 0, 1}
        std::vector<int> digits(static_cast<std::size_t>(d), 0);
        while (true) {
            std::vector<Integer> coeffs;
            for (int v : digits) coeffs.emplace_back(v - 1);
            coeffs.emplace_back(1);
            gens.push_back(Polynomial(coeffs));
            std::size_t pos = 0;
            while (pos < digits.size() && digits[pos] == 2) digits[pos++] = 0;
            if (pos == digits.size()) break;
            ++digits[pos];
        }
    }
    return gens;
}

// Least m >= 1 with m*x in the sublattice of J(k, Z[x]) spanned by the
// configured generators' coefficient vectors (constants are absorbed since
// the constant polynomial 1 is itself a generator).  The combination is read
// off the HNF transformation record.
inline UpperCertificate lattice_upper(long k, const GeneratorConfig& config = {}) {
    if (k < 1) throw std::invalid_argument("lattice_upper requires k >= 1");
    std::vector<Polynomial> gens = lattice_generators(k, config);
    std::size_t dim = static_cast<std::size_t>(config.max_degree) * static_cast<std::size_t>(k) + 1;
    HnfBuilder builder(dim, /*track_transform=*/true);
    for (const auto& g : gens) {
        Polynomial gk = expand_power(g, static_cast<unsigned long>(k));
        std::vector<Integer> row(dim, Integer(0));
        for (long i = 0; i <= gk.degree(); ++i) row[static_cast<std::size_t>(i)] = gk.coeff(i);
        builder.add(std::move(row));
    }

    // Rational back-substitution: express e_1 over the basis rows; the lcm of
    // the denominators is the minimal m.
    const auto& rows = builder.basis();
    const auto& pivots = builder.pivot_columns();
    std::vector<mpq_class> y(rows.size(), mpq_class(0));
    std::vector<mpq_class> residual(dim, mpq_class(0));
    residual[1] = 1;  // e_1, the coefficient vector of x
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::size_t col = pivots[r];
        if (residual[col] == 0) continue;
        y[r] = residual[col] / mpq_class(rows[r][col]);
        for (std::size_t j = col; j < dim; ++j) residual[j] -= y[r] * mpq_class(rows[r][j]);
    }
    for (const auto& x : residual)
        if (x != 0) throw std::logic_error("x is not in the rational span of the lattice generators");
    Integer m0 = 1;
    for (const auto& yr : y) m0 = lcm(m0, Integer(yr.get_den()));

    // Integer combination over the basis rows, then over the generators.
    const auto& transform = builder.transform();
    std::vector<Integer> over_gens(gens.size(), Integer(0));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        mpq_class scaled = y[r] * mpq_class(m0);
        Integer cr(scaled.get_num());
        if (cr == 0) continue;
        for (std::size_t g = 0; g < gens.size(); ++g) over_gens[g] += cr * transform[r][g];
    }

    UpperCertificate cert;
    cert.k = k;
    cert.m = m0;
    Polynomial total;
    for (std::size_t g = 0; g < gens.size(); ++g) {
        if (over_gens[g] == 0) continue;
        cert.terms.emplace_back(over_gens[g], gens[g]);
        total = total +
                Polynomial::constant(over_gens[g]) * expand_power(gens[g], static_cast<unsigned long>(k));
    }
    if (total.degree() > 1 || total.coeff(1) != m0)
        throw std::logic_error("lattice combination does not collapse to m*x + c");
    cert.c = total.coeff(0);
    if (!divides(profile(k).m, cert.m))
        throw formula_falsification_error("lattice upper bound " + cert.m.get_str() +
                                          " is not a multiple of the predicted m(" +
                                          std::to_string(k) + ")");
    return cert;
}

// ---------------------------------------------------------------------------
// Lower bounds: finite-ring witnesses per prime.
// ---------------------------------------------------------------------------

struct LowerWitness {
    long p = 0;
    long target_valuation = 0;
    std::string ring_spec;           // ring achieving achieved_valuation ("" if none ran)
    long achieved_valuation = -1;    // -1: no ring was evaluated
    std::string note;                // skip/failure detail for PARTIAL reports

    bool success() const { return achieved_valuation == target_valuation; }

    nlohmann::json to_json() const {
        return nlohmann::json{{"p", p},
                              {"target_valuation", target_valuation},
                              {"ring", ring_spec},
                              {"achieved_valuation", achieved_valuation},
                              {"success", success()},
                              {"note", note}};
    }
};

namespace detail {

// Evaluate v_p(m(k, ring)), guarding the formula-falsification invariant.
inline long witness_valuation(const QuotientRing& ring, long k, long p, long target) {
    Integer mkr = m_k_R(ring, k);
    long achieved = mkr == 0 ? 0 : vp(mkr, p);
    if (achieved > target)
        throw formula_falsification_error(
            "ring " + ring.spec_string() + " achieves v_" + std::to_string(p) + " = " +
            std::to_string(achieved) + " > predicted " + std::to_string(target) +
            " for k = " + std::to_string(k));
    return achieved;
}

// Try candidate quotient polynomials over Z/q in order; stop at the first
// ring meeting the target, else record the best achieved valuation.
inline LowerWitness search_family(long k, long p, long target, const Integer& q,
                                  const std::vector<Polynomial>& candidates,
                                  unsigned long element_cap) {
    LowerWitness w;
    w.p = p;
    w.target_valuation = target;
    std::vector<std::string> skipped;
    for (const auto& f : candidates) {
        QuotientRing ring(q, f);
        if (ring.cardinality() > element_cap) {
            skipped.push_back(ring.spec_string());
            continue;
        }
        long achieved = witness_valuation(ring, k, p, target);
        if (achieved > w.achieved_valuation) {
            w.achieved_valuation = achieved;
            w.ring_spec = ring.spec_string();
        }
        if (achieved == target) return w;
    }
    w.note = "search family exhausted without meeting the target";
    if (!skipped.empty()) {
        w.note += "; skipped over enumeration cap:";
        for (const auto& s : skipped) w.note += " " + s;
    }
    return w;
}

}  // namespace detail

// Witness for beta_k(p) = 1: the repunit witness (r, m_exp) determines the
// field F_{p^(m_exp * r)}, whose k-th powers span only the prime subfield.
inline LowerWitness witness_beta(long k, long p,
                                 unsigned long element_cap = kDefaultElementCap) {
    BetaResult res = beta(k, p);
    if (res.exponent != 1)
        throw std::invalid_argument("witness_beta requires beta_k(p) = 1");
    LowerWitness w;
    w.p = p;
    w.target_valuation = 1;
    long j = res.witness->m_exp * res.witness->r;
    Integer field_size = pow_ui(Integer(p), static_cast<unsigned long>(j));
    if (field_size > element_cap) {
        w.note = "field F_{" + std::to_string(p) + "^" + std::to_string(j) +
                 "} exceeds the enumeration cap";
        return w;
    }
    FiniteField field = FiniteField::make(p, static_cast<int>(j));
    w.ring_spec = field.spec_string();
    w.achieved_valuation = detail::witness_valuation(field, k, p, w.target_valuation);
    return w;
}

// Witness for the power of 2.  Multiples of 6 use the ring (Z/2^(n+2))[x]/(x^2+x+1)
// directly; other even k search a fixed family over the same modulus.
inline LowerWitness witness_alpha2(long k, unsigned long element_cap = kDefaultElementCap) {
    if (k <= 2 || k % 2 != 0)
        throw std::invalid_argument("witness_alpha2 requires even k > 2");
    long n = vp(Integer(k), 2);
    long target = vp(profile(k).m, 2);
    Integer q = pow_ui(Integer(2), static_cast<unsigned long>(n + 2));
    if (k % 6 == 0) {
        LowerWitness w;
        w.p = 2;
        w.target_valuation = target;
        QuotientRing ring(q, parse_polynomial("x^2+x+1"));
        w.ring_spec = ring.spec_string();
        w.achieved_valuation = detail::witness_valuation(ring, k, 2, target);
        return w;
    }
    std::vector<Polynomial> family;
    for (const char* text : {"x", "x+1", "x^2", "x^2+x+1", "x^3", "x^3+x+1", "x^3+x^2+1"})
        family.push_back(parse_polynomial(text));
    return detail::search_family(k, 2, target, q, family, element_cap);
}

// Witness for an odd prime p | k with p < k: search quotients of Z/p^(v+1),
// cheapest first, ending with the degree-(p-1) cyclotomic quotient.
inline LowerWitness witness_alpha_odd(long k, long p,
                                      unsigned long element_cap = kDefaultElementCap) {
    if (p < 3 || !is_prime(p) || k % p != 0 || k <= p)
        throw std::invalid_argument("witness_alpha_odd requires an odd prime p | k with p < k");
    long v = vp(Integer(k), p);
    long target = vp(profile(k).m, p);
    Integer q = pow_ui(Integer(p), static_cast<unsigned long>(v + 1));
    std::vector<Polynomial> family;
    family.push_back(parse_polynomial("x^2"));
    family.push_back(Polynomial({Integer(-p), Integer(0), Integer(1)}));  // x^2 - p
    family.push_back(parse_polynomial("x^2+x+1"));
    family.push_back(parse_polynomial("x^3"));
    std::vector<Integer> cyclo(static_cast<std::size_t>(p), Integer(1));  // 1 + x + ... + x^(p-1)
    Polynomial phi(cyclo);
    if (std::find(family.begin(), family.end(), phi) == family.end()) family.push_back(phi);
    return detail::search_family(k, p, target, q, family, element_cap);
}

// ---------------------------------------------------------------------------
// The x-coefficient fact: for g = a + b*x + c*x^2 + d*x^3, the x-coefficient
// of g^k is k * a^(k-1) * b, so it is always divisible by k.
// ---------------------------------------------------------------------------

struct XCoefficientRecord {
    long k = 0;
    long samples = 0;
    bool verified = false;
    std::string claim;

    nlohmann::json to_json() const {
        return nlohmann::json{
            {"k", k}, {"samples", samples}, {"verified", verified}, {"claim", claim}};
    }
};

// Sampling proof: the x-coefficient of g^k is weighted-homogeneous of weight 1
// when coeff(x^i) carries weight i (substitute x -> t*x), so as a polynomial
// in (a, b, c, d) it is linear in each of b, c, d and of degree < k in a.
// A grid with k+1 values of a and 3 values of each of b, c, d therefore
// determines it completely.
inline XCoefficientRecord x_coefficient_fact(long k) {
    if (k < 1) throw std::invalid_argument("x_coefficient_fact requires k >= 1");
    XCoefficientRecord rec;
    rec.k = k;
    rec.claim = "x-coefficient of (a+bx+cx^2+dx^3)^" + std::to_string(k) + " equals " +
                std::to_string(k) + "*a^" + std::to_string(k - 1) + "*b";
    for (long a = 0; a <= k; ++a)
        for (long b = -1; b <= 1; ++b)
            for (long c = -1; c <= 1; ++c)
                for (long d = -1; d <= 1; ++d) {
                    Polynomial g({Integer(a), Integer(b), Integer(c), Integer(d)});
                    Polynomial gk = expand_power(g, static_cast<unsigned long>(k));
                    Integer expected = Integer(k) *
                                       pow_ui(Integer(a), static_cast<unsigned long>(k - 1)) *
                                       Integer(b);
                    if (gk.coeff(1) != expected) {
                        rec.verified = false;
                        return rec;
                    }
                    ++rec.samples;
                }
    rec.verified = true;
    return rec;
}

// ---------------------------------------------------------------------------
// Bundles.
// ---------------------------------------------------------------------------

enum class CertifyStatus { FULL, PARTIAL };

struct CertificateBundle {
    long k = 0;
    Integer m_formula;
    UpperCertificate upper;
    bool upper_exact = false;  // upper.m == m_formula
    XCoefficientRecord x_fact;
    std::vector<LowerWitness> witnesses;   // primes whose target exceeds v_p(k)
    std::vector<long> uncertified_primes;  // witnesses that missed their target
    CertifyStatus status = CertifyStatus::PARTIAL;

    nlohmann::json to_json() const {
        nlohmann::json ws = nlohmann::json::array();
        for (const auto& w : witnesses) ws.push_back(w.to_json());
        return nlohmann::json{{"schema", "mk-cert/1"},
                              {"k", k},
                              {"m", m_formula.get_str()},
                              {"upper", upper.to_json()},
                              {"upper_exact", upper_exact},
                              {"x_coefficient", x_fact.to_json()},
                              {"witnesses", ws},
                              {"uncertified_primes", uncertified_primes},
                              {"status", status == CertifyStatus::FULL ? "FULL" : "PARTIAL"}};
    }
};

struct CertifyOptions {
    GeneratorConfig lattice;
    int max_escalation_degree = 3;  // raise generator degree until the upper bound is exact
    unsigned long element_cap = kDefaultElementCap;
};

inline CertificateBundle certify(long k, const CertifyOptions& options = {}) {
    if (k < 1) throw std::invalid_argument("certify requires k >= 1");
    CertificateBundle bundle;
    bundle.k = k;
    FactorProfile prof = profile(k);
    bundle.m_formula = prof.m;

    // One target per prime dividing m_formula: v_p(k) + alpha for p | k,
    // 1 for the beta primes.
    std::vector<std::pair<long, long>> targets;
    for (const auto& [p, e] : factor(k))
        targets.emplace_back(p, e + prof.alpha_exponents.at(p));
    for (const auto& [p, w] : prof.beta_witnesses) {
        (void)w;
        targets.emplace_back(p, 1);
    }

    // Independent witnesses run concurrently; each sub-computation is pure.
    std::vector<std::pair<long, std::future<LowerWitness>>> pending;
    for (const auto& [p, target] : targets) {
        long vk = k % p == 0 ? vp(Integer(k), p) : 0;
        if (target == vk) continue;  // fully covered by the x-coefficient fact
        unsigned long cap = options.element_cap;
        if (k % p == 0 && p == 2)
            pending.emplace_back(p, std::async(std::launch::async,
                                               [k, cap] { return witness_alpha2(k, cap); }));
        else if (k % p == 0)
            pending.emplace_back(p, std::async(std::launch::async, [k, p, cap] {
                                     return witness_alpha_odd(k, p, cap);
                                 }));
        else
            pending.emplace_back(p, std::async(std::launch::async, [k, p, cap] {
                                     return witness_beta(k, p, cap);
                                 }));
    }

    // Upper bound: escalate the generator degree until the bound is exact.
    GeneratorConfig config = options.lattice;
    while (true) {
        bundle.upper = lattice_upper(k, config);
        if (bundle.upper.m == prof.m || config.max_degree >= options.max_escalation_degree)
            break;
        ++config.max_degree;
    }
    bundle.upper_exact = bundle.upper.m == prof.m;

    bundle.x_fact = x_coefficient_fact(k);
    if (!bundle.x_fact.verified)
        throw formula_falsification_error("x-coefficient divisibility failed for k = " +
                                          std::to_string(k));

    for (auto& [p, fut] : pending) bundle.witnesses.push_back(fut.get());
    std::sort(bundle.witnesses.begin(), bundle.witnesses.end(),
              [](const LowerWitness& a, const LowerWitness& b) { return a.p < b.p; });
    for (const auto& w : bundle.witnesses)
        if (!w.success()) bundle.uncertified_primes.push_back(w.p);
    // An inexact upper bound leaves every prime with surplus valuation unpinned;
    // upper.m divides k!, so all its primes are at most k.
    if (!bundle.upper_exact)
        for (long p : primes_below(k + 1))
            if (vp(bundle.upper.m, p) > vp(prof.m, p)) bundle.uncertified_primes.push_back(p);
    std::sort(bundle.uncertified_primes.begin(), bundle.uncertified_primes.end());
    bundle.uncertified_primes.erase(
        std::unique(bundle.uncertified_primes.begin(), bundle.uncertified_primes.end()),
        bundle.uncertified_primes.end());

    bundle.status = bundle.upper_exact && bundle.uncertified_primes.empty()
                        ? CertifyStatus::FULL
                        : CertifyStatus::PARTIAL;
    return bundle;
}

}  // namespace mkpow
