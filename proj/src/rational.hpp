#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <string>

#include "errors.hpp"

namespace latpoly {

using Int = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) raise(ErrorKind::DenominatorZero, "rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) raise(ErrorKind::DenominatorZero, "rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Int floor_int(const Rational& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Int ceil_int(const Rational& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Rational pow_rational(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    Rational num, out;
    unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(num.get_num_mpz_t(), base.get_num_mpz_t(), ae);
    mpz_pow_ui(num.get_den_mpz_t(), base.get_den_mpz_t(), ae);
    if (e < 0) {
        if (base == 0) raise(ErrorKind::DenominatorZero, "negative power of zero");
        out = Rational(num.get_den(), num.get_num());
    } else {
        out = num;
    }
    out.canonicalize();
    return out;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int factorial_int(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int binomial_int(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Int& n) { return n.get_str(); }

// Parses "p", "p/q" or a decimal like "-3.25" into an exact rational.
Rational parse_rational(const std::string& text);

} // namespace latpoly
