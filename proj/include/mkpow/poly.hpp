#pragma once

#include <cctype>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mkpow/integer.hpp"

namespace mkpow {

// Dense univariate polynomial over Integer. Coefficient i is the coefficient
// of x^i; trailing zeros are trimmed, so the zero polynomial has an empty
// coefficient vector and degree() == -1.
class Polynomial {
   public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Integer> coeffs) : c_(coeffs) { trim(); }

    static Polynomial constant(Integer v) { return Polynomial{std::move(v)}; }
    static Polynomial x() { return Polynomial{Integer(0), Integer(1)}; }
    // c * x^e
    static Polynomial monomial(Integer coeff, size_t e) {
        std::vector<Integer> v(e + 1, Integer(0));
        v[e] = std::move(coeff);
        return Polynomial(std::move(v));
    }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Integer>& coeffs() const { return c_; }

    // Coefficient of x^i; zero beyond the degree.
    const Integer& coeff(size_t i) const {
        static const Integer kZero(0);
        return i < c_.size() ? c_[i] : kZero;
    }

    const Integer& leading() const {
        if (c_.empty()) throw std::invalid_argument("leading coefficient of zero polynomial");
        return c_.back();
    }

    bool operator==(const Polynomial& o) const { return c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return c_ != o.c_; }

    Polynomial operator-() const {
        std::vector<Integer> v(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
        return Polynomial(std::move(v));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Integer> v(std::max(a.c_.size(), b.c_.size()), Integer(0));
        for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
        return Polynomial(std::move(v));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<Integer> v(std::max(a.c_.size(), b.c_.size()), Integer(0));
        for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
        return Polynomial(std::move(v));
    }

    // Schoolbook multiplication; entirely adequate at this scale.
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<Integer> v(a.c_.size() + b.c_.size() - 1, Integer(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(v));
    }

    friend Polynomial operator*(const Integer& s, const Polynomial& a) {
        std::vector<Integer> v(a.c_.size());
        for (size_t i = 0; i < a.c_.size(); ++i) v[i] = s * a.c_[i];
        return Polynomial(std::move(v));
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Integer eval(const Integer& t) const {
        Integer r(0);
        for (size_t i = c_.size(); i-- > 0;) r = r * t + c_[i];
        return r;
    }

    // Sparse text form: "x^2+x+1", "2x^3-6x+1", "-5". Degree-descending.
    std::string to_string() const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (size_t i = c_.size(); i-- > 0;) {
            const Integer& a = c_[i];
            if (a == 0) continue;
            Integer mag = abs(a);
            if (first) {
                if (a < 0) os << "-";
                first = false;
            } else {
                os << (a < 0 ? "-" : "+");
            }
            if (i == 0) {
                os << mag.get_str();
            } else {
                if (mag != 1) os << mag.get_str();
                os << "x";
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

   private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Integer> c_;
};

// Exact integer-coefficient expansion of g^k via binary powering.
inline Polynomial expand_power(const Polynomial& g, unsigned long k) {
    Polynomial r = Polynomial::constant(1);
    Polynomial base = g;
    unsigned long e = k;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// Parses the sparse text form used by the ring-spec grammar and certificate
// files: a sum of terms "[coeff][x[^exp]]" joined by '+'/'-', e.g.
// "x^2+x+1", "2x^3-6x+1", "-x+7". Whitespace is ignored.
inline Polynomial parse_polynomial(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw std::invalid_argument("empty polynomial");

    std::vector<Integer> coeffs;
    auto bump = [&](size_t e, const Integer& v) {
        if (coeffs.size() <= e) coeffs.resize(e + 1, Integer(0));
        coeffs[e] += v;
    };

    size_t i = 0;
    bool any = false;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            if (!any && s[i] == '+')
                throw std::invalid_argument("polynomial may not start with '+': " + text);
            sign = (s[i] == '-') ? -1 : 1;
            ++i;
        }
        std::string digits;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits.push_back(s[i++]);
        if (i < s.size() && s[i] == '*') {
            if (digits.empty()) throw std::invalid_argument("stray '*' in polynomial: " + text);
            ++i;
        }
        Integer coeff = digits.empty() ? Integer(1) : Integer(digits);
        size_t exp = 0;
        if (i < s.size() && s[i] == 'x') {
            ++i;
            exp = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string ed;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ed.push_back(s[i++]);
                if (ed.empty()) throw std::invalid_argument("missing exponent in polynomial: " + text);
                exp = std::stoul(ed);
            }
        } else if (digits.empty()) {
            throw std::invalid_argument("cannot parse polynomial: " + text);
        }
        bump(exp, sign * coeff);
        any = true;
    }
    return Polynomial(std::move(coeffs));
}

}  // namespace mkpow
