#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "morikawa/errors.hpp"

namespace morikawa {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, kept canonical (gcd 1, positive denominator)
// by the backend.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// Parses "a" or "a/b" with optional sign; b must be nonzero.
inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(BigInt(text));
        }
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw DomainError("rational with zero denominator: " + text);
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw DomainError("cannot parse rational: " + text);
    }
}

inline std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace morikawa
