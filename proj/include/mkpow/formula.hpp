#pragma once

#include <map>
#include <optional>
#include <stdexcept>

#include "mkpow/integer.hpp"

namespace mkpow {

// m(k) factors as  k * prod_{p | k} p^alpha_k(p) * prod_{p < k, p !| k} p^beta_k(p).
// The corrected rule for alpha_k(2) differs from the 1976 one, which is kept
// selectable so the historically published values can be regenerated.
enum class FormulaVariant { corrected, legacy1976 };

// Witness that beta_k(p) = 1: the base-p^r repunit of length m_exp divides k.
struct RepunitWitness {
    long r = 0;
    long m_exp = 0;
    Integer value;  // (p^(m_exp*r) - 1) / (p^r - 1)
};

struct BetaResult {
    int exponent = 0;
    std::optional<RepunitWitness> witness;
};

inline int alpha(long k, long p, FormulaVariant variant = FormulaVariant::corrected) {
    if (k < 1 || p < 2 || !is_prime(p) || k % p != 0)
        throw std::invalid_argument("alpha(k, p) requires a prime p dividing k");
    if (p == 2) {
        if (k == 2) return 0;
        if (variant == FormulaVariant::legacy1976) {
            // 1976 rule: alpha = 2 when some 2^j - 1 (j >= 2) divides k.
            for (long j = 2; (1L << j) - 1 <= k; ++j)
                if (k % ((1L << j) - 1) == 0) return 2;
            return 1;
        }
        return k % 6 == 0 ? 2 : 1;
    }
    return k > p ? 1 : 0;
}

// Least witness (r, m_exp) in lexicographic order, if any repunit
// (p^(m_exp*r) - 1)/(p^r - 1) with m_exp >= 2 divides k.
inline BetaResult beta(long k, long p) {
    if (k < 1 || p < 2 || p >= k || !is_prime(p) || k % p == 0)
        throw std::invalid_argument("beta(k, p) requires a prime p < k not dividing k");
    for (long r = 1; pow_ui(Integer(p), r) + 1 <= k; ++r) {
        Integer pr = pow_ui(Integer(p), r);
        Integer value = pr + 1;  // repunit of length 2 in base p^r
        for (long m_exp = 2; value <= k; ++m_exp) {
            if (divides(value, Integer(k)))
                return BetaResult{1, RepunitWitness{r, m_exp, value}};
            value = value * pr + 1;
        }
    }
    return BetaResult{0, std::nullopt};
}

struct FactorProfile {
    long k = 0;
    FormulaVariant variant = FormulaVariant::corrected;
    std::map<long, int> alpha_exponents;          // p | k  ->  alpha_k(p)
    std::map<long, RepunitWitness> beta_witnesses;  // p < k, p !| k with beta_k(p) = 1
    Integer a;         // prod p^alpha_k(p)
    Integer b;         // prod p^beta_k(p)
    Integer m_over_k;  // a * b
    Integer m;         // k * a * b
};

inline FactorProfile profile(long k, FormulaVariant variant = FormulaVariant::corrected) {
    if (k < 1) throw std::invalid_argument("profile(k) requires k >= 1");
    FactorProfile out;
    out.k = k;
    out.variant = variant;
    out.a = 1;
    out.b = 1;
    for (const auto& [p, e] : factor(k)) {
        (void)e;
        int exp = alpha(k, p, variant);
        out.alpha_exponents[p] = exp;
        out.a *= pow_ui(Integer(p), exp);
    }
    for (long p : primes_below(k)) {
        if (k % p == 0) continue;
        BetaResult res = beta(k, p);
        if (res.exponent == 1) {
            out.beta_witnesses[p] = *res.witness;
            out.b *= p;
        }
    }
    out.m_over_k = out.a * out.b;
    out.m = Integer(k) * out.m_over_k;
    return out;
}

}  // namespace mkpow
