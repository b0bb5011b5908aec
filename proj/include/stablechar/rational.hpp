#pragma once

#include <gmpxx.h>

#include <string>

#include "stablechar/errors.hpp"

namespace stablechar {

// Every core computation is exact. Rational is an arbitrary-precision
// rational in canonical form, Integer an arbitrary-precision integer.
using Rational = mpq_class;
using Integer = mpz_class;

// gmpxx has no long long constructor; all machine integers in this
// library are desk scale, so a checked narrowing adapter suffices.
inline Integer integer(long long v) { return Integer(static_cast<long>(v)); }

// mpq_class(num, den) does not canonicalize on its own; route all
// fraction construction through here.
inline Rational rational(long num, long den = 1) {
    if (den == 0) throw invalid_input_error("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rational(const Integer& num, const Integer& den) {
    if (den == 0) throw invalid_input_error("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Falling factorial (n)_s = n(n-1)...(n-s+1), with (n)_0 = 1.
inline Integer pochhammer(long long n, int s) {
    if (s < 0) throw invalid_input_error("pochhammer: negative length");
    Integer result = 1;
    for (int i = 0; i < s; ++i) result *= Integer(static_cast<long>(n - i));
    return result;
}

// Always prints an explicit denominator, e.g. "3/1", "-1/12".
inline std::string fraction_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational parse_fraction(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            Rational r(Integer(text), 1);
            r.canonicalize();
            return r;
        }
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        return rational(num, den);
    } catch (const std::invalid_argument&) {
        throw invalid_input_error("parse_fraction: bad rational '" + text + "'");
    }
}

// Exact conversion to a machine integer; throws if the value is not an
// integer or does not fit. Used where a result is provably integral.
inline long long to_integer(const Rational& r, const char* context) {
    if (r.get_den() != 1)
        throw internal_consistency_error(std::string(context) +
                                         ": expected exact integer, got " + fraction_string(r));
    if (!r.get_num().fits_slong_p())
        throw resource_limit_error(std::string(context) + ": integer out of machine range");
    return r.get_num().get_si();
}

} // namespace stablechar
