#pragma once

#include <cctype>
#include <string>

#include "mkpow/finite_field.hpp"
#include "mkpow/quotient_ring.hpp"

namespace mkpow {

// Ring-spec grammar shared by the CLI and certificate files:
//   Z/<q>[x]/(<poly>)   e.g. Z/8[x]/(x^2+x+1)
//   GF(<p>^<j>)         e.g. GF(2^4)  (deterministic default irreducible)
//   GF(<p>)             shorthand for GF(<p>^1)
inline QuotientRing parse_ring(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);

    auto fail = [&](const std::string& why) -> QuotientRing {
        throw std::invalid_argument("cannot parse ring spec \"" + text + "\": " + why);
    };

    if (s.rfind("GF(", 0) == 0) {
        if (s.back() != ')') return fail("expected closing ')'");
        std::string body = s.substr(3, s.size() - 4);
        size_t caret = body.find('^');
        std::string ps = caret == std::string::npos ? body : body.substr(0, caret);
        std::string js = caret == std::string::npos ? "1" : body.substr(caret + 1);
        if (ps.empty() || js.empty()) return fail("expected GF(<p>^<j>)");
        for (char ch : ps + js)
            if (!std::isdigit(static_cast<unsigned char>(ch))) return fail("expected GF(<p>^<j>)");
        long p = std::stol(ps);
        int j = std::stoi(js);
        return FiniteField(p, FiniteField::default_irreducible(p, j));
    }

    if (s.rfind("Z/", 0) == 0) {
        size_t bracket = s.find("[x]/(", 2);
        if (bracket == std::string::npos) return fail("expected Z/<q>[x]/(<poly>)");
        std::string qs = s.substr(2, bracket - 2);
        if (qs.empty()) return fail("missing modulus");
        for (char ch : qs)
            if (!std::isdigit(static_cast<unsigned char>(ch))) return fail("modulus must be a positive integer");
        if (s.back() != ')') return fail("expected closing ')'");
        std::string poly = s.substr(bracket + 5, s.size() - bracket - 6);
        if (poly.empty()) return fail("missing quotient polynomial");
        return QuotientRing(Integer(qs), parse_polynomial(poly));
    }

    return fail("expected Z/<q>[x]/(<poly>) or GF(<p>^<j>)");
}

}  // namespace mkpow
