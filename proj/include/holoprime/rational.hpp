#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace holoprime {

/// Exact rational scalar. mpq_class keeps values in lowest terms with a
/// positive denominator once canonicalized; every constructor path below
/// canonicalizes, so Rational values satisfy that invariant throughout.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parse "p", "-p" or "p/q". Throws std::invalid_argument on malformed input.
inline Rational rat_parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rational r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator in: " + s);
    r.canonicalize();
    return r;
}

/// Canonical text form: "p" when the denominator is 1, else "p/q".
inline std::string rat_str(const Rational& r) { return r.get_str(); }

inline int sign_of(const Rational& r) { return sgn(r); }

}  // namespace holoprime
