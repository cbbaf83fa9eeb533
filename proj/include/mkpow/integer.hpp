#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace mkpow {

// Exact arbitrary-precision signed integer. All arithmetic in this project
// is exact; there is no floating point anywhere.
using Integer = mpz_class;

inline Integer factorial(unsigned long k) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), k);
    return r;
}

// Binomial coefficient C(n, j); 0 when j > n.
inline Integer binomial(const Integer& n, unsigned long j) {
    if (n < 0) throw std::invalid_argument("binomial: n must be >= 0");
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), j);
    return r;
}

// p-adic valuation: largest e with p^e | n. Undefined for n = 0.
inline long vp(const Integer& n, const Integer& p) {
    if (n == 0) throw std::invalid_argument("vp: valuation of 0 is undefined");
    if (p < 2) throw std::invalid_argument("vp: p must be >= 2");
    Integer rest;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

inline long vp(const Integer& n, long p) { return vp(n, Integer(p)); }

inline bool divides(const Integer& d, const Integer& n) {
    if (d == 0) return n == 0;
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer pow_ui(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Trial division, adequate for the supported k range (<= ~10^7).
inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<long> primes_below(long n) {
    std::vector<long> ps;
    if (n <= 2) return ps;
    std::vector<bool> sieve(static_cast<size_t>(n), true);
    for (long i = 2; i < n; ++i) {
        if (!sieve[static_cast<size_t>(i)]) continue;
        ps.push_back(i);
        for (long j = 2 * i; j < n; j += i) sieve[static_cast<size_t>(j)] = false;
    }
    return ps;
}

// Exact factorization by trial division; n >= 1.
inline std::map<long, int> factor(long n) {
    if (n < 1) throw std::invalid_argument("factor: n must be >= 1");
    std::map<long, int> f;
    for (long d = 2; d * d <= n; ++d) {
        while (n % d == 0) {
            ++f[d];
            n /= d;
        }
    }
    if (n > 1) ++f[n];
    return f;
}

// All positive divisors of n, ascending.
inline std::vector<Integer> divisors(const Integer& n) {
    if (n < 1) throw std::invalid_argument("divisors: n must be >= 1");
    std::vector<Integer> ds;
    Integer i = 1;
    for (; i * i <= n; ++i) {
        if (divides(i, n)) {
            ds.push_back(i);
            if (i * i != n) ds.push_back(n / i);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

inline std::string to_string(const Integer& n) { return n.get_str(); }

}  // namespace mkpow
