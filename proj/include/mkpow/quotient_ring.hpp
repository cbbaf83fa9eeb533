#pragma once

#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mkpow/integer.hpp"
#include "mkpow/poly.hpp"

namespace mkpow {

// Thrown when an exhaustive enumeration would exceed the configured cap.
class enumeration_cap_error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

constexpr unsigned long kDefaultElementCap = 1'000'000;

class QuotientRing;

// Element of (Z/q)[x]/(f): a length-d coefficient vector, always reduced
// (every coefficient in [0, q), polynomial part reduced mod f).
class RingElement {
   public:
    RingElement() : ring_(nullptr) {}
    RingElement(const QuotientRing* ring, std::vector<Integer> coeffs)
        : ring_(ring), c_(std::move(coeffs)) {}

    const QuotientRing& ring() const {
        if (!ring_) throw std::invalid_argument("uninitialized ring element");
        return *ring_;
    }
    const std::vector<Integer>& coeffs() const { return c_; }
    const Integer& coeff(size_t i) const { return c_[i]; }

    bool is_zero() const {
        for (const auto& v : c_)
            if (v != 0) return false;
        return true;
    }

    Polynomial to_poly() const { return Polynomial(c_); }

    bool operator==(const RingElement& o) const { return c_ == o.c_; }
    bool operator!=(const RingElement& o) const { return c_ != o.c_; }

    // Arithmetic operators are defined after QuotientRing below.
    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const;
    RingElement operator*(const RingElement& o) const;
    RingElement operator-() const;

   private:
    const QuotientRing* ring_;
    std::vector<Integer> c_;
};

// The finite commutative ring (Z/q)[x]/(f) with f monic of degree d >= 1.
// q need not be prime; the additive group is always (Z/q)^d with basis
// 1, x, ..., x^{d-1}. Immutable after construction.
class QuotientRing {
   public:
    QuotientRing(Integer q, Polynomial f) : q_(std::move(q)) {
        if (q_ < 2) throw std::invalid_argument("ring modulus q must be >= 2");
        if (f.degree() < 1) throw std::invalid_argument("quotient polynomial must have degree >= 1");
        d_ = static_cast<int>(f.degree());
        std::vector<Integer> fc(f.coeffs());
        for (auto& v : fc) v = mod_q(v);
        if (fc.back() != 1)
            throw std::invalid_argument("quotient polynomial must be monic (mod q): " + f.to_string());
        f_ = Polynomial(fc);
        flow_.assign(fc.begin(), fc.end() - 1);
    }

    const Integer& modulus() const { return q_; }
    const Polynomial& quotient_poly() const { return f_; }
    int degree() const { return d_; }

    Integer cardinality() const { return pow_ui(q_, static_cast<unsigned long>(d_)); }

    bool same_ring(const QuotientRing& o) const { return q_ == o.q_ && f_ == o.f_; }

    // Canonical text form, e.g. "Z/8[x]/(x^2+x+1)".
    std::string spec_string() const {
        std::ostringstream os;
        os << "Z/" << q_.get_str() << "[x]/(" << f_.to_string() << ")";
        return os.str();
    }

    // --- element construction -------------------------------------------

    RingElement element(std::vector<Integer> coeffs) const {
        if (static_cast<int>(coeffs.size()) > d_)
            throw std::invalid_argument("coefficient vector longer than ring degree");
        coeffs.resize(static_cast<size_t>(d_), Integer(0));
        for (auto& v : coeffs) v = mod_q(v);
        return RingElement(this, std::move(coeffs));
    }

    // Image of an arbitrary integer polynomial: reduce mod f, then mod q.
    RingElement from_poly(const Polynomial& p) const {
        std::vector<Integer> t(p.coeffs());
        for (auto& v : t) v = mod_q(v);
        reduce_mod_f(t);
        t.resize(static_cast<size_t>(d_), Integer(0));
        return RingElement(this, std::move(t));
    }

    RingElement zero() const { return element({}); }
    RingElement one() const { return element({Integer(1)}); }
    // x^i, the i-th additive basis element.
    RingElement basis_element(int i) const {
        if (i < 0 || i >= d_) throw std::invalid_argument("basis index out of range");
        std::vector<Integer> c(static_cast<size_t>(d_), Integer(0));
        c[static_cast<size_t>(i)] = 1;
        return RingElement(this, std::move(c));
    }

    // --- arithmetic ------------------------------------------------------

    RingElement add(const RingElement& u, const RingElement& v) const {
        check_pair(u, v);
        std::vector<Integer> c(static_cast<size_t>(d_));
        for (int i = 0; i < d_; ++i)
            c[static_cast<size_t>(i)] = mod_q(u.coeff(static_cast<size_t>(i)) + v.coeff(static_cast<size_t>(i)));
        return RingElement(this, std::move(c));
    }

    RingElement sub(const RingElement& u, const RingElement& v) const {
        check_pair(u, v);
        std::vector<Integer> c(static_cast<size_t>(d_));
        for (int i = 0; i < d_; ++i)
            c[static_cast<size_t>(i)] = mod_q(u.coeff(static_cast<size_t>(i)) - v.coeff(static_cast<size_t>(i)));
        return RingElement(this, std::move(c));
    }

    RingElement neg(const RingElement& u) const {
        check_one(u);
        std::vector<Integer> c(static_cast<size_t>(d_));
        for (int i = 0; i < d_; ++i) c[static_cast<size_t>(i)] = mod_q(-u.coeff(static_cast<size_t>(i)));
        return RingElement(this, std::move(c));
    }

    RingElement mul(const RingElement& u, const RingElement& v) const {
        check_pair(u, v);
        std::vector<Integer> t(static_cast<size_t>(2 * d_ - 1), Integer(0));
        for (int i = 0; i < d_; ++i) {
            const Integer& a = u.coeff(static_cast<size_t>(i));
            if (a == 0) continue;
            for (int j = 0; j < d_; ++j) {
                const Integer& b = v.coeff(static_cast<size_t>(j));
                if (b == 0) continue;
                size_t ij = static_cast<size_t>(i + j);
                t[ij] = mod_q(t[ij] + a * b);
            }
        }
        reduce_mod_f(t);
        t.resize(static_cast<size_t>(d_), Integer(0));
        return RingElement(this, std::move(t));
    }

    // u^e by square-and-multiply; u^0 = 1. e must be >= 0.
    RingElement pow(const RingElement& u, const Integer& e) const {
        check_one(u);
        if (e < 0) throw std::invalid_argument("ring_pow: negative exponent");
        RingElement r = one();
        RingElement base = u;
        Integer n = e;
        while (n > 0) {
            if (mpz_odd_p(n.get_mpz_t())) r = mul(r, base);
            n >>= 1;
            if (n > 0) base = mul(base, base);
        }
        return r;
    }

    // --- enumeration ------------------------------------------------------

    // Yields each of the q^d elements exactly once, in lexicographic order on
    // (coeff_{d-1}, ..., coeff_0), i.e. coeff_0 varies fastest. Throws
    // enumeration_cap_error if q^d exceeds the cap.
    void for_each_element(const std::function<void(const RingElement&)>& fn,
                          unsigned long cap = kDefaultElementCap) const {
        check_enumerable(cap);
        std::vector<Integer> c(static_cast<size_t>(d_), Integer(0));
        while (true) {
            fn(RingElement(this, c));
            int i = 0;
            for (; i < d_; ++i) {
                c[static_cast<size_t>(i)] += 1;
                if (c[static_cast<size_t>(i)] < q_) break;
                c[static_cast<size_t>(i)] = 0;
            }
            if (i == d_) break;
        }
    }

    std::vector<RingElement> elements(unsigned long cap = kDefaultElementCap) const {
        std::vector<RingElement> out;
        for_each_element([&](const RingElement& e) { out.push_back(e); }, cap);
        return out;
    }

    void check_enumerable(unsigned long cap) const {
        if (cardinality() > Integer(cap)) {
            throw enumeration_cap_error("ring " + spec_string() + " has " + cardinality().get_str() +
                                        " elements, exceeding the enumeration cap " + std::to_string(cap));
        }
    }

   private:
    Integer mod_q(const Integer& v) const {
        Integer r;
        mpz_mod(r.get_mpz_t(), v.get_mpz_t(), q_.get_mpz_t());
        return r;
    }

    // In-place reduction of a coefficient vector by the monic f:
    // x^d == -(f_0 + f_1 x + ... + f_{d-1} x^{d-1}).
    void reduce_mod_f(std::vector<Integer>& t) const {
        for (size_t i = t.size(); i-- > static_cast<size_t>(d_);) {
            Integer c = t[i];
            if (c == 0) continue;
            t[i] = 0;
            for (int j = 0; j < d_; ++j) {
                size_t tgt = i - static_cast<size_t>(d_) + static_cast<size_t>(j);
                t[tgt] = mod_q(t[tgt] - c * flow_[static_cast<size_t>(j)]);
            }
        }
    }

    void check_one(const RingElement& u) const {
        if (!same_ring(u.ring())) throw std::invalid_argument("ring mismatch");
    }
    void check_pair(const RingElement& u, const RingElement& v) const {
        check_one(u);
        check_one(v);
    }

    Integer q_;
    Polynomial f_;
    std::vector<Integer> flow_;  // f_0..f_{d-1}
    int d_ = 0;
};

inline RingElement RingElement::operator+(const RingElement& o) const { return ring().add(*this, o); }
inline RingElement RingElement::operator-(const RingElement& o) const { return ring().sub(*this, o); }
inline RingElement RingElement::operator*(const RingElement& o) const { return ring().mul(*this, o); }
inline RingElement RingElement::operator-() const { return ring().neg(*this); }

}  // namespace mkpow
