#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <string>

#include "zonalkit/errors.hpp"

namespace zonalkit {

// All arithmetic in this library is exact; there is no floating-point mode.
using BigInt   = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline BigInt to_bigint(const Rational& r) {
    if (!is_integer(r)) {
        std::ostringstream os;
        os << "expected an integer value, got " << r;
        throw validation_error(os.str());
    }
    return numerator(r);
}

// Serialized as "a" for integers, "a/b" otherwise.
inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

inline std::string to_string(const BigInt& n) {
    std::ostringstream os;
    os << n;
    return os.str();
}

inline Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw validation_error("empty rational literal");
    try {
        Rational r(s);
        return r;
    } catch (const std::exception&) {
        throw validation_error("malformed rational literal: '" + s + "'");
    }
}

inline BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// (2k-1)!! = 1*3*5*...*(2k-1); the number of pair-partitions of [2k].
inline BigInt odd_double_factorial(int k) {
    BigInt f = 1;
    for (int i = 3; i <= 2 * k - 1; i += 2) f *= i;
    return f;
}

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt b = 1;
    for (int i = 0; i < k; ++i) {
        b *= n - i;
        b /= i + 1;
    }
    return b;
}

inline BigInt pow_bigint(const BigInt& base, int e) {
    BigInt r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

// base^e for integer e of either sign; base must be nonzero when e < 0.
inline Rational pow_rational(const Rational& base, int e) {
    if (e < 0) {
        if (base == 0) throw validation_error("zero base with negative exponent");
        return 1 / pow_rational(base, -e);
    }
    Rational r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

} // namespace zonalkit
