#pragma once

#include <optional>
#include <vector>

#include "mkpow/quotient_ring.hpp"

namespace mkpow {

namespace detail {

// Small mod-p polynomial helpers used only for irreducibility testing.
// Coefficient vectors of long, index = degree, no trailing-zero guarantee.
inline std::vector<long> fp_mod(std::vector<long> a, const std::vector<long>& g, long p) {
    // g monic of degree dg
    int dg = static_cast<int>(g.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= dg; --i) {
        long c = a[static_cast<size_t>(i)] % p;
        if (c == 0) continue;
        for (int j = 0; j <= dg; ++j) {
            size_t t = static_cast<size_t>(i - dg + j);
            a[t] = ((a[t] - c * g[static_cast<size_t>(j)]) % p + p) % p;
        }
    }
    a.resize(static_cast<size_t>(dg));
    return a;
}

inline bool fp_is_zero(const std::vector<long>& a) {
    for (long v : a)
        if (v != 0) return false;
    return true;
}

// Trial division by every monic polynomial of degree 1..deg(f)/2. The fields
// in play are tiny, so this beats cleverness.
inline bool fp_irreducible(const std::vector<long>& f, long p) {
    int df = static_cast<int>(f.size()) - 1;
    if (df < 1) return false;
    for (int dg = 1; dg <= df / 2; ++dg) {
        std::vector<long> g(static_cast<size_t>(dg) + 1, 0);
        g.back() = 1;
        // odometer over the dg lower coefficients
        while (true) {
            if (fp_is_zero(fp_mod(f, g, p))) return false;
            int i = 0;
            for (; i < dg; ++i) {
                if (++g[static_cast<size_t>(i)] < p) break;
                g[static_cast<size_t>(i)] = 0;
            }
            if (i == dg) break;
        }
    }
    return true;
}

}  // namespace detail

// The finite field F_{p^j} realized as (Z/p)[x]/(irreducible). The
// irreducibility of the modulus is verified at construction.
class FiniteField : public QuotientRing {
   public:
    FiniteField(long p, Polynomial irreducible)
        : QuotientRing(Integer(p), irreducible), p_(p), j_(static_cast<int>(irreducible.degree())) {
        if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
        std::vector<long> f;
        for (const auto& c : quotient_poly().coeffs()) f.push_back(c.get_si());
        if (!detail::fp_irreducible(f, p))
            throw std::invalid_argument("polynomial is not irreducible over F_" + std::to_string(p) + ": " +
                                        irreducible.to_string());
    }

    static FiniteField make(long p, int j) { return FiniteField(p, default_irreducible(p, j)); }

    long characteristic() const { return p_; }
    int extension_degree() const { return j_; }

    // Lexicographically least monic irreducible of degree j over F_p, where
    // polynomials compare as their base-p numeric value (leading digit 1).
    static Polynomial default_irreducible(long p, int j) {
        if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
        if (j < 1) throw std::invalid_argument("extension degree must be >= 1");
        std::vector<long> f(static_cast<size_t>(j) + 1, 0);
        f.back() = 1;
        while (true) {
            if (detail::fp_irreducible(f, p)) {
                std::vector<Integer> c(f.begin(), f.end());
                return Polynomial(std::move(c));
            }
            int i = 0;
            for (; i < j; ++i) {
                if (++f[static_cast<size_t>(i)] < p) break;
                f[static_cast<size_t>(i)] = 0;
            }
            if (i == j) throw std::logic_error("no irreducible polynomial found");  // cannot happen
        }
    }

    // Absolute trace over F_p: Tr(u) = sum_{i=0}^{j-1} u^{p^i}, an element of
    // the prime subfield.
    RingElement trace(const RingElement& u) const {
        RingElement acc = u;
        RingElement t = u;
        for (int i = 1; i < j_; ++i) {
            t = pow(t, Integer(p_));
            acc = add(acc, t);
        }
        for (size_t i = 1; i < acc.coeffs().size(); ++i)
            if (acc.coeff(i) != 0) throw std::logic_error("trace did not land in the prime subfield");
        return acc;
    }

    Integer trace_value(const RingElement& u) const { return trace(u).coeff(0); }

    // Solves h + h^2 = c over F_{2^j}. A solution exists iff Tr(c) = 0; the
    // first solution in enumeration order is returned, or nullopt.
    std::optional<RingElement> artin_schreier_solve(const RingElement& c) const {
        if (p_ != 2) throw std::invalid_argument("artin_schreier_solve requires characteristic 2");
        std::optional<RingElement> found;
        for_each_element([&](const RingElement& h) {
            if (found) return;
            if (add(h, mul(h, h)) == c) found = h;
        });
        return found;
    }

   private:
    long p_;
    int j_;
};

}  // namespace mkpow
