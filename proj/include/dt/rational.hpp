#pragma once

#include <gmpxx.h>

#include <string>

#include "dt/errors.hpp"

namespace dt {

/// Exact rational number. All arithmetic in this library is exact; no
/// floating point appears anywhere.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parse a rational from a string such as "3", "-352" or "5/2".
/// Throws Error on malformed input or a zero denominator.
inline Rational parse_rational(const std::string& text) {
    mpq_t raw;
    mpq_init(raw);
    if (mpq_set_str(raw, text.c_str(), 10) != 0) {
        mpq_clear(raw);
        throw Error("cannot parse rational: '" + text + "'");
    }
    if (mpz_sgn(mpq_denref(raw)) == 0) {
        mpq_clear(raw);
        throw Error("zero denominator in rational: '" + text + "'");
    }
    Rational out(raw);
    mpq_clear(raw);
    out.canonicalize();
    return out;
}

/// Canonical "p/q" (or plain "p") rendering.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Extract an exact integer; throws IntegralityViolation otherwise.
inline Integer to_integer(const Rational& q) {
    if (!is_integer(q)) throw IntegralityViolation("not an integer: " + q.get_str());
    return q.get_num();
}

} // namespace dt
