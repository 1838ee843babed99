#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

#include "ifsdyn/errors.hpp"

namespace ifsdyn {

// Exact rational coordinate type. GMP keeps it canonical (lowest terms,
// positive denominator), which makes equality and ordering exact; that
// exactness is what lets itineraries be computed without drift.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw DomainError("rational with zero denominator");
    return Rational(num, den);
}

// Parses "num/den" or "num". Whitespace is not accepted.
inline Rational parse_rational(std::string_view text) {
    const std::string s(text);
    if (s.empty()) throw ParseError("empty rational literal");
    try {
        const auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(Integer(s));
        const std::string num = s.substr(0, slash);
        const std::string den = s.substr(slash + 1);
        if (num.empty() || den.empty()) throw ParseError("malformed rational: " + s);
        Integer d(den);
        if (d == 0) throw ParseError("zero denominator: " + s);
        return Rational(Integer(num), d);
    } catch (const std::runtime_error&) {
        throw ParseError("malformed rational: " + s);
    }
}

inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline bool in_unit_interval(const Rational& x) {
    return x >= 0 && x <= 1;
}

// floor(x + 1/2); deterministic nearest-index rounding for sampling grids.
inline Integer round_half_up(const Rational& x) {
    const Rational shifted = x + Rational(1, 2);
    Integer q = numerator(shifted) / denominator(shifted);
    if (shifted < 0 && q * denominator(shifted) != numerator(shifted)) --q;
    return q;
}

}  // namespace ifsdyn
