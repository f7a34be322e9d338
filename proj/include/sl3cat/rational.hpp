#pragma once

#include <gmpxx.h>
#include <string>

namespace sl3cat {

using Rational = mpq_class;
using BigInt = mpz_class;

// Exact decimal-free string form: "p" or "p/q".
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational parse_rational(const std::string& s) {
    Rational r(s);
    r.canonicalize();
    return r;
}

// Reduce r into the half-open interval [0, 2).  Central-charge exponents
// live in R/2Z since exp(pi*i*x) has period 2.
inline Rational mod2(Rational r) {
    Rational two(2);
    Rational q = r / two;
    BigInt fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r - two * Rational(fl);
}

} // namespace sl3cat
