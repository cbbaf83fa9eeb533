#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "mkpow/finite_field.hpp"
#include "mkpow/poly.hpp"
#include "mkpow/quotient_ring.hpp"
#include "mkpow/ring_parse.hpp"

using namespace mkpow;

namespace {

RingElement random_element(const QuotientRing& ring, std::mt19937_64& rng) {
    std::vector<Integer> coeffs;
    for (long i = 0; i < ring.degree(); ++i)
        coeffs.push_back(Integer(static_cast<unsigned long>(rng())) % ring.modulus());
    return ring.element(std::move(coeffs));
}

std::vector<QuotientRing> rings_under_test() {
    return {
        QuotientRing(Integer(8), parse_polynomial("x^2+x+1")),
        QuotientRing(Integer(9), parse_polynomial("x^2")),
        QuotientRing(Integer(12), parse_polynomial("x^3+x+1")),
        FiniteField::make(2, 4),
        FiniteField::make(5, 2),
    };
}

}  // namespace

TEST_CASE("integer helpers") {
    CHECK(vp(Integer(360), 2) == 3);
    CHECK(vp(Integer(360), 3) == 2);
    CHECK(vp(Integer(1), 7) == 0);
    CHECK_THROWS_AS(vp(Integer(0), 2), std::invalid_argument);

    CHECK(binomial(Integer(6), 2) == 15);
    CHECK(binomial(Integer(14), 0) == 1);
    CHECK(binomial(Integer(14), 7) == 3432);
    CHECK(binomial(Integer(3), 5) == 0);

    CHECK(factorial(5) == 120);
    CHECK(divides(Integer(6), Integer(360)));
    CHECK_FALSE(divides(Integer(7), Integer(360)));
    CHECK(is_prime(13));
    CHECK_FALSE(is_prime(1));
    CHECK(primes_below(12) == std::vector<long>{2, 3, 5, 7, 11});
    CHECK(divisors(Integer(12)) ==
          std::vector<Integer>{Integer(1), Integer(2), Integer(3), Integer(4), Integer(6),
                               Integer(12)});
}

TEST_CASE("polynomial arithmetic and parsing") {
    Polynomial x = Polynomial::x();
    Polynomial g = x - Polynomial::constant(Integer(1));
    CHECK(expand_power(g, 2) == parse_polynomial("x^2-2x+1"));
    CHECK(expand_power(x - Polynomial::constant(Integer(2)), 3) ==
          parse_polynomial("x^3-6x^2+12x-8"));

    // The zero polynomial has an empty coefficient sequence and degree -1.
    CHECK((g - g).degree() == -1);
    CHECK(g.coeff(57) == 0);

    CHECK(parse_polynomial("x^2 + x + 1").to_string() == "x^2+x+1");
    CHECK(parse_polynomial("2*x^3 - 7") == Polynomial{Integer(-7), Integer(0), Integer(0), Integer(2)});
    CHECK_THROWS_AS(parse_polynomial("x^"), std::invalid_argument);
    CHECK_THROWS_AS(parse_polynomial(""), std::invalid_argument);
}

TEST_CASE("expand_power agrees with pointwise powers") {
    std::mt19937_64 rng(20240814);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Integer> coeffs;
        long deg = static_cast<long>(rng() % 4);
        for (long i = 0; i <= deg; ++i)
            coeffs.push_back(Integer(static_cast<long>(rng() % 11) - 5));
        Polynomial g(std::move(coeffs));
        unsigned long k = 1 + rng() % 7;
        Polynomial gk = expand_power(g, k);
        for (long t = -3; t <= 3; ++t) {
            Integer lhs = gk.eval(Integer(t));
            Integer rhs = 1;
            for (unsigned long i = 0; i < k; ++i) rhs *= g.eval(Integer(t));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("sextic expansion of (a + bx)^6") {
    // x-coefficient 6a^5 b and constant term a^6, checked on a grid of sample
    // points wide enough to determine polynomials of degree 6 in (a, b).
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b) {
            Polynomial g{Integer(a), Integer(b)};
            Polynomial g6 = expand_power(g, 6);
            Integer a5 = pow_ui(Integer(a), 5);
            CHECK(g6.coeff(1) == 6 * a5 * b);
            CHECK(g6.coeff(0) == pow_ui(Integer(a), 6));
        }
}

TEST_CASE("quotient ring construction validates its inputs") {
    CHECK_THROWS_AS(QuotientRing(Integer(1), parse_polynomial("x")), std::invalid_argument);
    CHECK_THROWS_AS(QuotientRing(Integer(8), Polynomial::constant(Integer(3))),
                    std::invalid_argument);
    // Non-monic quotient polynomial (2x^2 + 1 stays non-monic mod 8).
    CHECK_THROWS_AS(QuotientRing(Integer(8), parse_polynomial("2*x^2+1")), std::invalid_argument);

    QuotientRing ring(Integer(8), parse_polynomial("x^2+x+1"));
    CHECK(ring.degree() == 2);
    CHECK(ring.cardinality() == 64);
    CHECK(ring.spec_string() == "Z/8[x]/(x^2+x+1)");
}

TEST_CASE("ring_mul matches hand-reduced products") {
    QuotientRing ring(Integer(8), parse_polynomial("x^2+x+1"));
    RingElement x = ring.basis_element(1);
    // x * x = x^2 = -x - 1 = 7x + 7 mod 8.
    CHECK(ring.mul(x, x) == ring.element({Integer(7), Integer(7)}));

    QuotientRing nil(Integer(9), parse_polynomial("x^2"));
    RingElement u = nil.element({Integer(1), Integer(1)});
    CHECK(nil.mul(u, u) == nil.element({Integer(1), Integer(2)}));

    std::mt19937_64 rng(1);
    for (const QuotientRing& r : rings_under_test()) {
        RingElement v = random_element(r, rng);
        CHECK(r.mul(r.one(), v) == v);
    }

    QuotientRing other(Integer(8), parse_polynomial("x^2"));
    CHECK_THROWS_AS(ring.mul(x, other.one()), std::invalid_argument);
}

TEST_CASE("ring_mul is commutative, associative, and distributive") {
    std::mt19937_64 rng(42);
    for (const QuotientRing& ring : rings_under_test()) {
        for (int trial = 0; trial < 1000; ++trial) {
            RingElement u = random_element(ring, rng);
            RingElement v = random_element(ring, rng);
            RingElement w = random_element(ring, rng);
            REQUIRE(ring.mul(u, v) == ring.mul(v, u));
            REQUIRE(ring.mul(ring.mul(u, v), w) == ring.mul(u, ring.mul(v, w)));
            REQUIRE(ring.mul(u, ring.add(v, w)) == ring.add(ring.mul(u, v), ring.mul(u, w)));
        }
    }
}

TEST_CASE("ring_pow basics and exponent additivity") {
    QuotientRing ring(Integer(8), parse_polynomial("x^2+x+1"));
    RingElement u = ring.element({Integer(1), Integer(1)});
    // (1 + x)^6 has x-coefficient 0 mod 8: the sextic identity's x-coefficient
    // 6a^5b - 15a^4b^2 + 15a^2b^4 - 6ab^5 vanishes at a = b = 1.
    CHECK(ring.pow(u, Integer(6)).coeff(1) == 0);
    CHECK(ring.pow(u, Integer(0)) == ring.one());
    CHECK(ring.pow(u, Integer(1)) == u);
    CHECK_THROWS_AS(ring.pow(u, Integer(-2)), std::invalid_argument);

    std::mt19937_64 rng(7);
    for (const QuotientRing& r : rings_under_test()) {
        for (int trial = 0; trial < 200; ++trial) {
            RingElement g = random_element(r, rng);
            Integer e1(static_cast<unsigned long>(rng() % 65));
            Integer e2(static_cast<unsigned long>(rng() % 65));
            REQUIRE(r.pow(g, e1 + e2) == r.mul(r.pow(g, e1), r.pow(g, e2)));
        }
    }
}

TEST_CASE("ring enumeration is exhaustive, deterministic, and capped") {
    QuotientRing tiny(Integer(2), parse_polynomial("x+1"));
    auto elems = tiny.elements();
    REQUIRE(elems.size() == 2);
    CHECK(elems[0] == tiny.zero());
    CHECK(elems[1] == tiny.one());

    QuotientRing ring(Integer(8), parse_polynomial("x^2+x+1"));
    auto all = ring.elements();
    REQUIRE(all.size() == 64);
    // Lexicographic order on (coeff_1, coeff_0): constants first, then x + c.
    CHECK(all[1] == ring.one());
    CHECK(all[8] == ring.basis_element(1));
    std::set<std::vector<Integer>> seen;
    for (const auto& e : all) seen.insert(e.coeffs());
    CHECK(seen.size() == 64);

    QuotientRing f9(Integer(3), parse_polynomial("x^2+1"));
    CHECK(f9.elements().size() == 9);

    CHECK_THROWS_AS(ring.elements(63), enumeration_cap_error);
}

TEST_CASE("field trace lands in the prime subfield") {
    FiniteField f4 = FiniteField::make(2, 2);
    RingElement omega = f4.basis_element(1);
    CHECK(f4.trace_value(f4.zero()) == 0);
    CHECK(f4.trace_value(f4.one()) == 0);
    CHECK(f4.trace_value(omega) == 1);

    FiniteField f2 = FiniteField::make(2, 1);
    CHECK(f2.trace_value(f2.one()) == 1);

    // F_p-linearity and Frobenius invariance in every field with <= 4096 elements.
    for (long p : {2L, 3L, 5L, 7L, 13L}) {
        for (int j = 1; pow_ui(Integer(p), static_cast<unsigned long>(j)) <= 4096; ++j) {
            FiniteField field = FiniteField::make(p, j);
            auto all = field.elements();
            for (const auto& u : all)
                REQUIRE(field.trace_value(field.pow(u, Integer(p))) == field.trace_value(u));
            std::mt19937_64 rng(100 * p + j);
            for (int trial = 0; trial < 500; ++trial) {
                const auto& u = all[rng() % all.size()];
                const auto& v = all[rng() % all.size()];
                REQUIRE((field.trace_value(field.add(u, v)) - field.trace_value(u) -
                         field.trace_value(v)) % p == 0);
            }
        }
    }
}

TEST_CASE("Artin-Schreier solvability is exactly the trace-zero criterion") {
    FiniteField f4 = FiniteField::make(2, 2);
    CHECK(f4.artin_schreier_solve(f4.zero()).value() == f4.zero());
    CHECK_FALSE(f4.artin_schreier_solve(f4.basis_element(1)).has_value());

    FiniteField f2 = FiniteField::make(2, 1);
    CHECK_FALSE(f2.artin_schreier_solve(f2.one()).has_value());

    for (int j = 1; j <= 8; ++j) {
        FiniteField field = FiniteField::make(2, j);
        field.for_each_element([&](const RingElement& c) {
            auto h = field.artin_schreier_solve(c);
            REQUIRE(h.has_value() == (field.trace_value(c) == 0));
            if (h) REQUIRE(field.add(*h, field.mul(*h, *h)) == c);
        });
    }
}

TEST_CASE("finite field construction checks irreducibility") {
    CHECK_THROWS_AS(FiniteField(2, parse_polynomial("x^2+1")), std::invalid_argument);
    CHECK_THROWS_AS(FiniteField(4, parse_polynomial("x^2+x+1")), std::invalid_argument);
    CHECK(FiniteField::make(2, 2).quotient_poly() == parse_polynomial("x^2+x+1"));
    CHECK(FiniteField::make(3, 1).cardinality() == 3);
}

TEST_CASE("ring spec grammar round-trips") {
    QuotientRing ring = parse_ring("Z/8[x]/(x^2+x+1)");
    CHECK(ring.spec_string() == "Z/8[x]/(x^2+x+1)");
    CHECK(parse_ring(" Z/27 [x] / (x^3) ").cardinality() == 27 * 27 * 27);

    QuotientRing f16 = parse_ring("GF(2^4)");
    CHECK(f16.modulus() == 2);
    CHECK(f16.degree() == 4);
    CHECK(parse_ring("GF(7)").cardinality() == 7);

    CHECK_THROWS_AS(parse_ring("garbage"), std::invalid_argument);
    CHECK_THROWS_AS(parse_ring("Z/8[x]/(2*x^2+1)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_ring("GF(6^2)"), std::invalid_argument);
}
