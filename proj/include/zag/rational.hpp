#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace zag {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always stored fully reduced with a
// positive denominator (the backend canonicalizes on every operation).
using Rational = boost::multiprecision::cpp_rational;

/// base^exp for integer exp of either sign; base must be nonzero when exp < 0.
inline Rational rational_pow(const Rational& base, std::int64_t exp) {
    if (exp == 0) {
        return Rational(1);
    }
    if (base == 0 && exp < 0) {
        throw std::domain_error("rational_pow: zero base with negative exponent");
    }
    const auto mag = static_cast<unsigned>(exp < 0 ? -exp : exp);
    BigInt num = boost::multiprecision::pow(boost::multiprecision::numerator(base), mag);
    BigInt den = boost::multiprecision::pow(boost::multiprecision::denominator(base), mag);
    if (exp < 0) {
        num.swap(den);
    }
    return Rational(num, den);
}

/// Canonical text form: "p/q", or bare "p" when the value is an integer.
inline std::string format_rational(const Rational& value) {
    const BigInt& num = boost::multiprecision::numerator(value);
    const BigInt& den = boost::multiprecision::denominator(value);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

}  // namespace zag
