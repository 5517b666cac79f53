#pragma once

#include <boost/functional/hash.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <string_view>

#include "g6h/errors.hpp"

namespace g6h {

using BigInt = boost::multiprecision::cpp_int;

// Always gcd-reduced with positive denominator; zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

/// Builds p/q, normalizing the sign into the numerator.
inline Rational make_rational(BigInt num, BigInt den) {
    if (den == 0) throw Error("rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

/// Renders as "p" when the denominator is 1, else "p/q".
inline std::string rational_to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += '/';
        s += denominator(r).str();
    }
    return s;
}

/// Parses "p" or "p/q" (q may be negative; the result is canonical).
inline Rational rational_from_string(std::string_view text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(BigInt(std::string(text)));
        }
        BigInt num{std::string(text.substr(0, slash))};
        BigInt den{std::string(text.substr(slash + 1))};
        return make_rational(std::move(num), std::move(den));
    } catch (const std::exception& e) {
        throw ParseError("bad rational '" + std::string(text) + "': " + e.what());
    }
}

inline std::size_t hash_value(const Rational& r) {
    std::size_t seed = 0;
    boost::hash_combine(seed, numerator(r));
    boost::hash_combine(seed, denominator(r));
    return seed;
}

} // namespace g6h
