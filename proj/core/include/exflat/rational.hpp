#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace exflat {

// Arbitrary-precision integers and rationals. mpq_class keeps every value
// canonical: gcd(|num|, den) = 1, den > 0, zero stored as 0/1.
using Int = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts exactly the canonical forms written by rational_to_string:
// "p" or "p/q" with p an optionally signed integer without leading zeros,
// q a positive integer without leading zeros, and gcd(|p|, q) = 1.
Rational parse_rational(const std::string& text);

std::string rational_to_string(const Rational& q);

inline bool fits_long(const Int& z) { return z.fits_slong_p(); }

}  // namespace exflat
